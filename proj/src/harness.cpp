#include <eigspace/harness.hpp>

#include <eigspace/degeneration.hpp>
#include <eigspace/error.hpp>
#include <eigspace/exact.hpp>
#include <eigspace/identities.hpp>
#include <eigspace/spectral.hpp>

#include <algorithm>
#include <optional>
#include <string>

namespace eigspace {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

Json params_json(const ExtremalParams& p) { return Json{{"n", p.n}, {"k", p.k}, {"p", p.p}}; }

Check pass(std::string name, Json summary = Json::object()) {
  return {std::move(name), CheckStatus::Pass, std::move(summary)};
}

Check fail(std::string name, Json witness) { return {std::move(name), CheckStatus::Fail, std::move(witness)}; }

template <class F>
void for_each_extremal(std::size_t lo_n, std::size_t hi_n, F&& f) {
  for (std::size_t n = lo_n; n <= hi_n; ++n)
    for (std::size_t k = 1; k < n; ++k)
      for (std::size_t p = 0; p <= n - k + 1; ++p) f(ExtremalParams{n, k, p});
}

// Returns the first member with more than k distinct eigenvalues, if any.
std::optional<QMatrix> find_budget_violation(const MatrixSubspace& v, std::size_t k, std::size_t samples, Rng& rng) {
  for (std::size_t s = 0; s < samples; ++s) {
    QMatrix m = random_member(v, rng);
    if (count_distinct_eigenvalues(m) > k) return m;
  }
  return std::nullopt;
}

// Mix of generic matrices and conjugated upper triangular ones with repeated
// small eigenvalues and sparse nilpotent parts, so both outcomes of every
// predicate occur.
QMatrix oracle_test_matrix(Rng& rng, std::size_t n, std::size_t index) {
  if (index % 3 == 0) return rng.matrix(n, n);
  QMatrix u(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    u(i, i) = rng.uniform_int(-1, 1);
    for (std::size_t j = i + 1; j < n; ++j)
      if (rng.uniform_int(0, 1) == 1) u(i, j) = rng.uniform_int(-2, 2);
  }
  const QMatrix p = rng.invertible(n, 5);
  return p * u * inverse(p);
}

}  // namespace

std::string_view to_string(CheckStatus s) {
  switch (s) {
    case CheckStatus::Pass: return "pass";
    case CheckStatus::Fail: return "fail";
    case CheckStatus::Inconclusive: return "inconclusive";
    case CheckStatus::Vacuous: return "vacuous";
  }
  return "unknown";
}

bool VerificationReport::passed() const {
  return std::none_of(checks.begin(), checks.end(), [](const Check& c) { return c.status == CheckStatus::Fail; });
}

Json VerificationReport::to_json(bool include_elapsed) const {
  Json arr = Json::array();
  for (const auto& c : checks) arr.push_back(Json{{"name", c.name}, {"status", to_string(c.status)}, {"witness", c.witness}});
  Json out{{"target", target}, {"seed", seed}, {"passed", passed()}, {"checks", std::move(arr)}};
  if (include_elapsed) out["elapsed_ms"] = elapsed.count();
  return out;
}

std::uint64_t derive_seed(std::uint64_t seed, std::initializer_list<std::uint64_t> tags) {
  std::uint64_t h = splitmix64(seed);
  for (auto t : tags) h = splitmix64(h ^ t);
  return h;
}

QMatrix random_member(const MatrixSubspace& v, Rng& rng) {
  std::vector<Rational> coeffs(v.dim());
  for (auto& c : coeffs) c = rng.rational();
  return v.combine(coeffs);
}

VerificationReport verify_extremal(const ExtremalParams& params, std::size_t samples, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  validate(params);
  const std::size_t n = params.n, k = params.k;
  VerificationReport rep;
  rep.target = "extremal space n=" + std::to_string(n) + " k=" + std::to_string(k) + " p=" + std::to_string(params.p);
  rep.seed = seed;
  Rng rng(derive_seed(seed, {n, k, params.p}));

  const MatrixSubspace v = extremal_basis(params);
  const std::size_t expected = max_dimension(n, k);
  Json dims{{"expected", expected}, {"actual", v.dim()}};
  rep.checks.push_back(v.dim() == expected ? pass("dimension", dims) : fail("dimension", dims));

  if (auto bad = find_budget_violation(v, k, samples, rng))
    rep.checks.push_back(fail("eigenvalue_budget", Json{{"params", params_json(params)}, {"matrix", to_json(*bad)}}));
  else
    rep.checks.push_back(pass("eigenvalue_budget", Json{{"samples", samples}}));

  rep.checks.push_back(is_borel_invariant(v) ? pass("borel_invariant")
                                             : fail("borel_invariant", Json{{"space", to_json(v)}}));
  try {
    const auto violations = check_eij_implications(v);
    if (violations.empty()) {
      rep.checks.push_back(pass("eij_implications"));
    } else {
      Json arr = Json::array();
      for (const auto& x : violations)
        arr.push_back(Json{{"rule", to_string(x.rule)}, {"i", x.i}, {"j", x.j}, {"basis_index", x.basis_index}});
      rep.checks.push_back(fail("eij_implications", Json{{"violations", std::move(arr)}, {"space", to_json(v)}}));
    }
  } catch (const Error& e) {
    rep.checks.push_back(fail("eij_implications", Json{{"error", e.what()}}));
  }

  const WeightVector w = standard_weights(n);
  const long wn = static_cast<long>(n);
  const auto forms = {std::pair<std::string, MatrixSubspace>{"", v},
                      std::pair<std::string, MatrixSubspace>{"swapped_", swapped_extremal_basis(params)}};
  for (const auto& [prefix, space] : forms) {
    const auto comps = weight_decomposition(space, w);
    Json support = Json::array();
    bool ok = true;
    for (const auto& c : comps) {
      support.push_back(c.j);
      ok = ok && (c.j == 0 || c.j == wn || c.j == -wn);
    }
    rep.checks.push_back(ok ? pass(prefix + "weight_support", Json{{"support", support}})
                            : fail(prefix + "weight_support", Json{{"support", support}, {"space", to_json(space)}}));
    if (k < 2) {
      rep.checks.push_back({prefix + "border_bounds", CheckStatus::Vacuous, Json{{"reason", "needs k >= 2"}}});
      continue;
    }
    const auto bd = border_dimensions(space, k);
    Json dj{{"dim_pos", bd.dim_pos}, {"dim_neg", bd.dim_neg}, {"dim_pos_primed", bd.dim_pos_primed},
            {"dim_neg_primed", bd.dim_neg_primed}};
    if (bd.primed_bound_holds() && bd.total_bound_holds())
      rep.checks.push_back(pass(prefix + "border_bounds", dj));
    else
      rep.checks.push_back(fail(prefix + "border_bounds", Json{{"dims", dj}, {"space", to_json(space)}}));
  }

  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return rep;
}

VerificationReport maximality_probe(const ExtremalParams& params, std::size_t trials, std::uint64_t seed) {
  const auto start = std::chrono::steady_clock::now();
  validate(params);
  const std::size_t n = params.n, k = params.k;
  VerificationReport rep;
  rep.target = "maximality n=" + std::to_string(n) + " k=" + std::to_string(k) + " p=" + std::to_string(params.p);
  rep.seed = seed;
  const MatrixSubspace v = extremal_basis(params);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const std::string name = "unit(" + std::to_string(i) + "," + std::to_string(j) + ")";
      const QMatrix e = QMatrix::unit(n, i, j);
      if (v.contains(e)) {
        rep.checks.push_back({name, CheckStatus::Vacuous, Json{{"reason", "unit lies in the space"}}});
        continue;
      }
      Rng rng(derive_seed(seed, {n, k, params.p, i, j}));
      bool found = false;
      for (std::size_t t = 0; t < trials && !found; ++t) {
        QMatrix m = random_member(v, rng) + e * rng.nonzero_rational();
        const std::size_t distinct = count_distinct_eigenvalues(m);
        if (distinct > k) {
          rep.checks.push_back(pass(name, Json{{"trial", t}, {"distinct", distinct}, {"matrix", to_json(m)}}));
          found = true;
        }
      }
      if (!found) rep.checks.push_back({name, CheckStatus::Inconclusive, Json{{"trials", trials}}});
    }
  }
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return rep;
}

Check check_degeneration(const MatrixSubspace& v, std::size_t k, const QMatrix& t, std::size_t samples, Rng& rng) {
  const std::size_t n = v.n();
  const MatrixSubspace conj = conjugate(v, t);
  const WeightVector w = standard_weights(n);
  const MatrixSubspace lim = degenerate(conj, w);
  auto witness = [&](const char* why) {
    return Json{{"reason", why}, {"k", k}, {"space", to_json(v)}, {"conjugator", to_json(t)}};
  };
  if (lim.dim() != v.dim()) return fail("degeneration", witness("limit dimension changed"));
  if (!is_phi_stable(lim, w)) return fail("degeneration", witness("limit is not stable"));
  const long wn = static_cast<long>(n);
  for (const auto& c : weight_decomposition(lim, w))
    if (c.j != 0 && c.j != wn && c.j != -wn) return fail("degeneration", witness("weight outside {-n, 0, n}"));
  Json summary{{"limit_dim", lim.dim()}};
  if (k >= 2 && k < n) {
    const auto bd = border_dimensions(lim, k);
    if (!bd.primed_bound_holds()) return fail("degeneration", witness("primed border bound violated"));
    if (!bd.total_bound_holds()) return fail("degeneration", witness("border bound violated"));
    summary["dim_pos"] = bd.dim_pos;
    summary["dim_neg"] = bd.dim_neg;
  }
  if (auto bad = find_budget_violation(lim, k, samples, rng)) {
    Json wj = witness("limit member exceeds the eigenvalue budget");
    wj["matrix"] = to_json(*bad);
    return fail("degeneration", wj);
  }
  return pass("degeneration", summary);
}

Check check_dimension_formula(std::size_t max_n) {
  std::size_t cells = 0;
  std::optional<Json> bad;
  for_each_extremal(4, std::min<std::size_t>(max_n, 8), [&](const ExtremalParams& p) {
    ++cells;
    const std::size_t d = extremal_basis(p).dim();
    if (!bad && d != max_dimension(p.n, p.k)) bad = Json{{"params", params_json(p)}, {"dim", d}};
  });
  return bad ? fail("dimension_formula", *bad) : pass("dimension_formula", Json{{"cells", cells}});
}

Check check_eigenvalue_budget(std::size_t max_n, std::size_t samples, std::uint64_t seed) {
  std::size_t cells = 0, attained = 0;
  std::optional<Json> bad;
  for_each_extremal(4, std::min<std::size_t>(max_n, 8), [&](const ExtremalParams& p) {
    if (bad) return;
    ++cells;
    Rng rng(derive_seed(seed, {2, p.n, p.k, p.p}));
    const MatrixSubspace v = extremal_basis(p);
    std::size_t most = 0;
    for (std::size_t s = 0; s < samples && !bad; ++s) {
      const QMatrix m = random_member(v, rng);
      const std::size_t d = count_distinct_eigenvalues(m);
      most = std::max(most, d);
      if (d > p.k) bad = Json{{"params", params_json(p)}, {"matrix", to_json(m)}};
    }
    attained += most == p.k;
  });
  return bad ? fail("eigenvalue_budget", *bad)
             : pass("eigenvalue_budget", Json{{"cells", cells}, {"samples_per_cell", samples}, {"cells_reaching_k", attained}});
}

Check check_config_bound(std::size_t max_n) {
  std::size_t cells = 0;
  for (std::size_t n = 2; n <= std::min<std::size_t>(max_n, 12); ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      ++cells;
      const auto e = enumerate_configs(n, k);
      bool ok = e.max_value == max_dimension(n, k);
      if (k >= 3) ok = ok && e.argmax == std::vector<Config>{Config{n, 1, {k - 1}}};
      if (k == 2) {
        ok = ok && e.argmax.size() == 2 &&
             std::find(e.argmax.begin(), e.argmax.end(), Config{n, 1, {1}}) != e.argmax.end() &&
             std::find(e.argmax.begin(), e.argmax.end(), Config{n, 2, {}}) != e.argmax.end();
      }
      if (!ok) {
        Json arg = Json::array();
        for (const auto& c : e.argmax) arg.push_back(to_json(c));
        return fail("config_bound", Json{{"n", n}, {"k", k}, {"max", e.max_value}, {"argmax", arg}});
      }
    }
  }
  return pass("config_bound", Json{{"cells", cells}});
}

Check check_char_poly_identity(std::size_t max_n, std::size_t trials, std::uint64_t seed) {
  std::size_t cells = 0;
  for (std::size_t n = 4; n <= std::min<std::size_t>(max_n, 7); ++n) {
    for (std::size_t k = 3; k < n; ++k) {
      ++cells;
      Rng rng(derive_seed(seed, {4, n, k}));
      for (std::size_t t = 0; t < trials; ++t) {
        const auto inst = random_two_zeros_instance(rng, n, k);
        const Rational mu = rng.rational();
        const UniPoly closed = char_poly_closed_form(inst, mu);
        const UniPoly direct = to_det_a_minus_t(char_poly(bordered_witness(inst.bordered(mu))));
        if (closed != direct)
          return fail("char_poly_identity", Json{{"instance", to_json(inst)}, {"mu", to_json(mu)},
                                                 {"closed_form", to_json(closed)}, {"determinant", to_json(direct)}});
      }
    }
  }
  return pass("char_poly_identity", Json{{"cells", cells}, {"trials_per_cell", trials}});
}

Check check_resultant_identity(std::size_t max_n, std::size_t trials, std::uint64_t seed) {
  std::size_t cells = 0;
  for (std::size_t gap = 1; gap <= 4 && gap + 3 <= max_n; ++gap) {
    ++cells;
    Rng rng(derive_seed(seed, {5, gap}));
    for (std::size_t t = 0; t < trials; ++t) {
      const std::size_t k = 3 + t % 2;
      const auto inst = random_two_zeros_instance(rng, k + gap, k);
      const auto rep = two_zeros_resultant_check(inst);
      if (!rep.pass()) return fail("resultant_identity", Json{{"instance", to_json(inst)}, {"report", to_json(rep)}});
    }
  }
  return pass("resultant_identity", Json{{"gaps", cells}, {"trials_per_gap", trials}});
}

Check check_discriminant_identity(std::size_t trials, std::uint64_t seed) {
  for (bool with_e : {true, false}) {
    Rng rng(derive_seed(seed, {6, with_e ? 1u : 0u}));
    for (std::size_t t = 0; t < trials; ++t) {
      const auto inst = random_discriminant_instance(rng, with_e);
      const auto rep = quartic_discriminant_check(inst);
      if (!rep.pass()) return fail("discriminant_identity", Json{{"instance", to_json(inst)}, {"report", to_json(rep)}});
    }
  }
  return pass("discriminant_identity", Json{{"variants", 2}, {"trials_per_variant", trials}});
}

Check check_degeneration_suite(std::size_t max_n, std::size_t conjugates, std::size_t samples, std::uint64_t seed) {
  std::size_t limits = 0;
  std::optional<Check> bad;
  for_each_extremal(4, std::min<std::size_t>(max_n, 6), [&](const ExtremalParams& p) {
    if (bad) return;
    const MatrixSubspace forms[] = {extremal_basis(p), swapped_extremal_basis(p)};
    for (std::size_t f = 0; f < 2 && !bad; ++f) {
      Rng rng(derive_seed(seed, {7, p.n, p.k, p.p, f}));
      for (std::size_t c = 0; c < conjugates && !bad; ++c) {
        ++limits;
        Check r = check_degeneration(forms[f], p.k, rng.invertible_upper(p.n), samples, rng);
        if (r.status == CheckStatus::Fail) {
          r.name = "degeneration_suite";
          bad = r;
        }
      }
    }
  });
  return bad ? *bad : pass("degeneration_suite", Json{{"limits", limits}, {"samples_per_limit", samples}});
}

Check check_spectral_oracles(std::size_t max_n, std::size_t count, std::uint64_t seed) {
  Rng rng(derive_seed(seed, {8}));
  std::size_t regular = 0, derogatory = 0;
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + i % std::min<std::size_t>(max_n, 5);
    const QMatrix a = oracle_test_matrix(rng, n, i);
    const bool reg = is_regular(a);
    (reg ? regular : derogatory)++;
    if (reg != (minimal_polynomial_degree(a) == n))
      return fail("spectral_oracles", Json{{"route", "regularity"}, {"matrix", to_json(a)}});
  }
  for (std::size_t i = 0; i < count; ++i) {
    const std::size_t n = 1 + i % std::min<std::size_t>(max_n, 6);
    const QMatrix a = oracle_test_matrix(rng, n, i);
    if (count_distinct_eigenvalues(a) != count_distinct_eigenvalues_sylvester(a))
      return fail("spectral_oracles", Json{{"route", "distinct_count"}, {"matrix", to_json(a)}});
  }
  return pass("spectral_oracles", Json{{"matrices", 2 * count}, {"regular", regular}, {"derogatory", derogatory}});
}

Check check_maximality(std::size_t max_n, std::size_t trials, std::uint64_t seed) {
  std::size_t units = 0;
  for (std::size_t n = 4; n <= std::min<std::size_t>(max_n, 6); ++n) {
    for (std::size_t p = 0; p <= n - 2; ++p) {
      const ExtremalParams params{n, 3, p};
      const auto rep = maximality_probe(params, trials, derive_seed(seed, {9}));
      for (const auto& c : rep.checks) {
        if (c.status == CheckStatus::Vacuous) continue;
        ++units;
        if (c.status != CheckStatus::Pass)
          return fail("maximality", Json{{"params", params_json(params)}, {"unit", c.name}, {"status", to_string(c.status)}});
      }
    }
  }
  return pass("maximality", Json{{"units", units}, {"trials", trials}});
}

Check check_borel_structure(std::size_t max_n) {
  std::size_t cells = 0;
  std::optional<Json> bad;
  for_each_extremal(4, std::min<std::size_t>(max_n, 8), [&](const ExtremalParams& p) {
    if (bad) return;
    ++cells;
    const MatrixSubspace v = extremal_basis(p);
    if (!is_borel_invariant(v) || !check_eij_implications(v).empty()) bad = Json{{"params", params_json(p)}};
  });
  return bad ? fail("borel_structure", *bad) : pass("borel_structure", Json{{"cells", cells}});
}

VerificationReport run_full_suite(std::size_t max_n, std::uint64_t seed) {
  if (max_n < 4) throw Error(ErrorCode::BadBudget, "the suite needs max_n >= 4");
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.target = "full suite max_n=" + std::to_string(max_n);
  rep.seed = seed;
  rep.checks.push_back(check_dimension_formula(max_n));
  rep.checks.push_back(check_eigenvalue_budget(max_n, 100, seed));
  rep.checks.push_back(check_config_bound(max_n));
  rep.checks.push_back(check_char_poly_identity(max_n, 25, seed));
  rep.checks.push_back(check_resultant_identity(max_n, 25, seed));
  rep.checks.push_back(check_discriminant_identity(25, seed));
  rep.checks.push_back(check_degeneration_suite(max_n, 10, 50, seed));
  rep.checks.push_back(check_spectral_oracles(max_n, 200, seed));
  rep.checks.push_back(check_maximality(max_n, 1000, seed));
  rep.checks.push_back(check_borel_structure(max_n));
  rep.elapsed = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start);
  return rep;
}

}  // namespace eigspace
