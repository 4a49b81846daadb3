#include <doctest.h>

#include "oracles.hpp"

#include <eigspace/constructors.hpp>
#include <eigspace/degeneration.hpp>
#include <eigspace/error.hpp>
#include <eigspace/random.hpp>
#include <eigspace/spectral.hpp>

#include <algorithm>
#include <numeric>

using namespace eigspace;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an eigspace::Error");
  return ErrorCode::ParseError;
}

MatrixSubspace span_of(std::size_t n, std::vector<QMatrix> gens) { return canonicalize(n, gens); }

LaurentMatrix laurent(std::initializer_list<std::pair<long, QMatrix>> terms) {
  LaurentMatrix m;
  for (const auto& [e, c] : terms) m.terms.emplace(e, c);
  return m;
}

// The limit is spanned by the lowest-weight parts of all members. Echelon
// form with coordinates sorted by weight gives a basis whose lowest-weight
// parts are independent.
MatrixSubspace initial_space(const MatrixSubspace& v, const WeightVector& w) {
  const std::size_t n = v.n(), len = n * n;
  std::vector<std::size_t> order(len);
  std::iota(order.begin(), order.end(), 0);
  auto weight = [&](std::size_t e) { return w.entry_weight(e / n, e % n); };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return weight(a) < weight(b); });

  std::vector<std::vector<Rational>> rows;
  for (const auto& b : v.basis()) {
    std::vector<Rational> r(len);
    for (std::size_t c = 0; c < len; ++c) r[c] = b.entries()[order[c]];
    rows.push_back(std::move(r));
  }
  std::vector<QMatrix> initial;
  std::size_t r = 0;
  for (std::size_t c = 0; c < len && r < rows.size(); ++c) {
    std::size_t piv = r;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[r]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      const Rational f = rows[i][c] / rows[r][c];
      for (std::size_t j = c; j < len; ++j) rows[i][j] -= f * rows[r][j];
    }
    QMatrix lead(n, n);
    for (std::size_t j = c; j < len; ++j)
      if (weight(order[j]) == weight(order[c])) lead(order[j] / n, order[j] % n) = rows[r][j];
    initial.push_back(lead);
    ++r;
  }
  return canonicalize(n, initial);
}

}  // namespace

TEST_CASE("one-parameter families") {
  const MatrixSubspace v = span_of(2, {QMatrix{{0, 1}, {1, 0}}});
  const TFamily fam = one_param_family(v, WeightVector{{1, 0}});
  REQUIRE(fam.basis.size() == 1);
  const auto& terms = fam.basis[0].terms;
  REQUIRE(terms.size() == 2);
  CHECK(terms.at(1) == QMatrix::unit(2, 0, 1));
  CHECK(terms.at(-1) == QMatrix::unit(2, 1, 0));
  CHECK(code_of([&] { one_param_family(v, WeightVector{{1, 0, 0}}); }) == ErrorCode::SizeMismatch);

  Rng rng(1);
  std::vector<QMatrix> gens;
  for (int i = 0; i < 4; ++i) gens.push_back(rng.matrix(3, 3));
  const MatrixSubspace r = canonicalize(3, gens);
  CHECK(degenerate(r, WeightVector{{5, 5, 5}}) == r);
  const MatrixSubspace diag = span_of(3, {QMatrix::unit(3, 0, 0), QMatrix::unit(3, 1, 1) + QMatrix::unit(3, 2, 2)});
  CHECK(degenerate(diag, WeightVector{{2, -7, 1}}) == diag);
}

TEST_CASE("Grassmannian limits on small families") {
  TFamily one{2, {laurent({{1, QMatrix::unit(2, 0, 1)}, {-1, QMatrix::unit(2, 1, 0)}})}};
  CHECK(grassmannian_limit(one) == span_of(2, {QMatrix::unit(2, 1, 0)}));

  TFamily two{2, {laurent({{0, QMatrix::unit(2, 0, 0)}}), one.basis[0]}};
  CHECK(grassmannian_limit(two) == span_of(2, {QMatrix::unit(2, 0, 0), QMatrix::unit(2, 1, 0)}));

  // Equal leading terms: the difference survives at the next order.
  TFamily dep{2, {laurent({{0, QMatrix::unit(2, 0, 0)}, {1, QMatrix::unit(2, 0, 1)}}),
                  laurent({{0, QMatrix::unit(2, 0, 0)}, {2, QMatrix::unit(2, 1, 0)}})}};
  CHECK(grassmannian_limit(dep) == span_of(2, {QMatrix::unit(2, 0, 0), QMatrix::unit(2, 0, 1)}));

  TFamily same{2, {laurent({{0, QMatrix::unit(2, 0, 0)}}), laurent({{3, QMatrix::unit(2, 0, 0) * Rational(2)}})}};
  CHECK(code_of([&] { grassmannian_limit(same); }) == ErrorCode::DegenerateFamily);
  TFamily zero{2, {LaurentMatrix{}}};
  CHECK(code_of([&] { grassmannian_limit(zero); }) == ErrorCode::DegenerateFamily);
}

TEST_CASE("limits agree with the lowest-weight initial space") {
  Rng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 2 + trial % 4;
    const std::size_t d = 1 + static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(n * n) - 2));
    std::vector<QMatrix> gens;
    for (std::size_t i = 0; i < d; ++i) gens.push_back(rng.matrix(n, n, 4));
    const MatrixSubspace v = canonicalize(n, gens);
    WeightVector w;
    for (std::size_t i = 0; i < n; ++i) w.weights.push_back(rng.uniform_int(-3, 3));
    const MatrixSubspace lim = degenerate(v, w);
    CHECK(lim == initial_space(v, w));
    CHECK(lim.dim() == v.dim());
    CHECK(is_phi_stable(lim, w));
    CHECK(degenerate(v, w, true) == initial_space(v, w.negated()));
  }
}

TEST_CASE("extremal spaces are fixed by the standard subgroup") {
  for (std::size_t n = 3; n <= 6; ++n)
    for (std::size_t k = 1; k < n; ++k)
      for (std::size_t p = 0; p <= n - k + 1; ++p) {
        const MatrixSubspace v = extremal_basis({n, k, p});
        CHECK(grassmannian_limit(one_param_family(v, standard_weights(n))) == v);
      }
}

TEST_CASE("weight decomposition") {
  const MatrixSubspace v = extremal_basis({4, 3, 1});
  const auto comps = weight_decomposition(v, standard_weights(4));
  CHECK(dimension_at(comps, -4) == 0);
  CHECK(dimension_at(comps, 0) == 7);
  CHECK(dimension_at(comps, 4) == 3);
  CHECK(dimension_at(comps, 1) == 0);
  for (const auto& c : comps) CHECK(c.component.dim() > 0);

  const MatrixSubspace diag = span_of(3, {QMatrix::unit(3, 0, 0), QMatrix::unit(3, 1, 1)});
  const auto dc = weight_decomposition(diag, WeightVector{{3, 1, 0}});
  REQUIRE(dc.size() == 1);
  CHECK(dc[0].j == 0);

  const MatrixSubspace moving = span_of(2, {QMatrix{{0, 1}, {1, 0}}});
  CHECK(code_of([&] { weight_decomposition(moving, WeightVector{{1, 0}}); }) == ErrorCode::NotPhiStable);

  Rng rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 3 + trial % 3;
    std::vector<QMatrix> gens;
    for (int i = 0; i < 5; ++i) gens.push_back(rng.matrix(n, n, 4));
    const WeightVector w = standard_weights(n);
    const MatrixSubspace lim = degenerate(canonicalize(n, gens), w);
    std::size_t total = 0;
    for (const auto& c : weight_decomposition(lim, w)) {
      total += c.component.dim();
      const long wn = static_cast<long>(n);
      CHECK((c.j == 0 || c.j == wn || c.j == -wn));
      for (const auto& b : c.component.basis())
        for (std::size_t i = 0; i < n; ++i)
          for (std::size_t j = 0; j < n; ++j)
            if (b(i, j) != 0) CHECK(w.entry_weight(i, j) == c.j);
    }
    CHECK(total == lim.dim());
  }
}

TEST_CASE("border dimensions of extremal spaces") {
  for (std::size_t n = 4; n <= 7; ++n) {
    for (std::size_t k = 2; k < n; ++k) {
      for (std::size_t p = 0; p <= n - k + 1; ++p) {
        const auto bd = border_dimensions(extremal_basis({n, k, p}), k);
        CHECK(bd.dim_pos == n - 1);
        CHECK(bd.dim_neg == (p == 0 ? k - 2 : 0));
        CHECK(bd.dim_pos_primed == n - k + 1);
        CHECK(bd.dim_neg_primed == 0);
        CHECK(bd.primed_bound_holds());
        CHECK(bd.total_bound_holds());
        const auto sw = border_dimensions(swapped_extremal_basis({n, k, p}), k);
        CHECK(sw.primed_bound_holds());
        CHECK(sw.total_bound_holds());
      }
    }
  }
  CHECK(code_of([] { border_dimensions(extremal_basis({5, 1, 0}), 1); }) == ErrorCode::BadBudget);
}

TEST_CASE("limits of conjugated swapped forms keep the eigenvalue budget") {
  Rng rng(4);
  for (std::size_t n = 4; n <= 5; ++n) {
    for (std::size_t k = 2; k < n; ++k) {
      for (std::size_t p = 0; p <= n - k + 1; ++p) {
        const MatrixSubspace s = swapped_extremal_basis({n, k, p});
        const MatrixSubspace lim = degenerate(conjugate(s, rng.invertible_upper(n)), standard_weights(n));
        CHECK(lim.dim() == s.dim());
        const auto bd = border_dimensions(lim, k);
        CHECK(bd.primed_bound_holds());
        CHECK(bd.total_bound_holds());
        for (int i = 0; i < 5; ++i) {
          std::vector<Rational> coeffs(lim.dim());
          for (auto& c : coeffs) c = rng.rational();
          CHECK(count_distinct_eigenvalues(lim.combine(coeffs)) <= k);
        }
      }
    }
  }
}
