#include <eigspace/identities.hpp>

#include <eigspace/error.hpp>
#include <eigspace/exact.hpp>
#include <eigspace/spectral.hpp>

#include <algorithm>
#include <utility>

namespace eigspace {

namespace {

// p(mu) at the sample points, plus one extra point that must agree.
template <class F>
UniPoly interpolate_samples(F&& eval, std::size_t degree) {
  std::vector<std::pair<Rational, Rational>> samples;
  for (std::size_t m = 0; m <= degree + 1; ++m) {
    const Rational mu(static_cast<long>(m));
    samples.emplace_back(mu, eval(mu));
  }
  return interpolate_in_mu(samples, degree);
}

UniPoly lambda_minus_t(const Rational& lambda) { return UniPoly({lambda, Rational(-1)}); }

}  // namespace

std::size_t TwoZerosInstance::l() const {
  for (std::size_t q = k; q <= n; ++q) {
    if (b_at(q) != 0) return q;
  }
  return n + 1;
}

BorderedParams TwoZerosInstance::bordered(const Rational& mu) const { return {n, k, lambdas, b, c, mu}; }

void validate(const TwoZerosInstance& inst) {
  if (inst.k < 2 || inst.k >= inst.n) throw Error(ErrorCode::BadBudget, "need 2 <= k < n");
  if (inst.lambdas.size() != inst.k) throw Error(ErrorCode::SizeMismatch, "need exactly k lambdas");
  if (inst.b.size() != inst.n - inst.k + 1) throw Error(ErrorCode::SizeMismatch, "b must hold entries b_k..b_n");
  if (inst.c.size() != inst.n - 1) throw Error(ErrorCode::SizeMismatch, "c must hold entries c_2..c_n");
  for (std::size_t i = 0; i < inst.k; ++i)
    for (std::size_t j = i + 1; j < inst.k; ++j)
      if (inst.lambdas[i] == inst.lambdas[j]) throw Error(ErrorCode::DuplicateLambda, "lambdas must be pairwise distinct");
}

void validate(const DiscriminantInstance& inst) {
  if (inst.lambda1 == inst.lambda2 || inst.lambda1 == 0 || inst.lambda2 == 0)
    throw Error(ErrorCode::DegenerateLambdas, "lambda1 and lambda2 must be distinct and nonzero");
}

UniPoly to_det_a_minus_t(const UniPoly& monic_char_poly) {
  return monic_char_poly.degree() % 2 == 0 ? monic_char_poly : -monic_char_poly;
}

std::vector<Rational> two_zeros_coefficients(const TwoZerosInstance& inst) {
  validate(inst);
  const std::size_t n = inst.n, k = inst.k;
  std::vector<Rational> s(n - k + 1);
  for (std::size_t i = 0; i <= n - k; ++i) {
    for (std::size_t p = k; p <= k + i; ++p) s[i] += inst.b_at(p) * inst.c_at(n - k - i + p);
  }
  return s;
}

UniPoly char_poly_closed_form(const TwoZerosInstance& inst, const Rational& mu) {
  const auto s = two_zeros_coefficients(inst);
  const std::size_t n = inst.n, k = inst.k;
  const UniPoly lk = lambda_minus_t(inst.lambdas[k - 1]);

  UniPoly bracket = lambda_minus_t(inst.lambdas[0]) * lk.pow(static_cast<unsigned>(n - k + 1));
  UniPoly border;
  for (std::size_t i = 0; i <= n - k; ++i) {
    const Rational sign((n - k + i + 1) % 2 == 0 ? 1 : -1);
    border += lk.pow(static_cast<unsigned>(i)) * (sign * s[i]);
  }
  bracket += border * mu;

  UniPoly out = bracket;
  for (std::size_t i = 1; i + 1 < k; ++i) out *= lambda_minus_t(inst.lambdas[i]);
  return out;
}

std::pair<UniPoly, UniPoly> vieta_pair(const TwoZerosInstance& inst, const Rational& mu) {
  const auto s = two_zeros_coefficients(inst);
  const long big_n = static_cast<long>(inst.n - inst.k);
  const Rational a = inst.lambdas[0] - inst.lambdas[inst.k - 1];
  const Rational s0 = s[big_n];
  const Rational s1 = s[big_n - 1];
  UniPoly v2({Rational(-mu * s0), Rational(-(big_n + 1) * a), Rational(binomial(big_n + 2, 2))});
  UniPoly v3({Rational(mu * s1), Rational(0), Rational(-binomial(big_n + 1, 2) * a), Rational(2 * binomial(big_n + 2, 3))});
  return {std::move(v2), std::move(v3)};
}

bool IdentityReport::pass() const {
  return std::all_of(comparisons.begin(), comparisons.end(), [](const auto& c) { return c.pass(); });
}

IdentityReport two_zeros_resultant_check(const TwoZerosInstance& inst) {
  validate(inst);
  if (inst.n - inst.k < 1) throw Error(ErrorCode::BadBudget, "the resultant check needs n - k >= 1");
  const auto s = two_zeros_coefficients(inst);
  const long big_n = static_cast<long>(inst.n - inst.k);
  const Rational a = inst.lambdas[0] - inst.lambdas[inst.k - 1];

  IdentityReport rep;
  rep.in_mu = interpolate_samples(
      [&](const Rational& mu) {
        const auto [v2, v3] = vieta_pair(inst, mu);
        return resultant(v2, v3);
      },
      3);

  const Rational c3(binomial(big_n + 2, 3));
  const Rational expected_mu = Rational(1, 2) * c3 * Rational((big_n + 1) * (big_n + 1) * (big_n + 1)) * a * a * a * s[big_n - 1];
  const Rational s0 = s[big_n];
  const Rational expected_mu3 = Rational(-4) * c3 * c3 * s0 * s0 * s0;
  rep.comparisons.push_back({"constant_term", Rational(0), rep.in_mu.coeff(0)});
  rep.comparisons.push_back({"mu_coefficient", expected_mu, rep.in_mu.coeff(1)});
  rep.comparisons.push_back({"mu3_coefficient", expected_mu3, rep.in_mu.coeff(3)});
  return rep;
}

bool verify_two_zeros_root_structure(const TwoZerosInstance& inst, std::span<const Rational> mu_samples) {
  const auto s = two_zeros_coefficients(inst);
  if (std::any_of(s.begin(), s.end(), [](const Rational& x) { return x != 0; }))
    throw Error(ErrorCode::PreconditionFailed, "border coefficient sums must all vanish");

  const std::size_t n = inst.n, k = inst.k;
  const Rational& lk = inst.lambdas[k - 1];
  UniPoly others = UniPoly::constant(Rational(1));
  for (std::size_t i = 1; i + 1 < k; ++i) others *= UniPoly::linear_factor(inst.lambdas[i]);
  const UniPoly expected_r =
      UniPoly::linear_factor(inst.lambdas[0] - lk) * UniPoly::monomial(Rational(1), static_cast<int>(n - k + 1));

  for (const auto& mu : mu_samples) {
    const QMatrix a = bordered_witness(inst.bordered(mu));
    const auto [q, rem] = char_poly(a).divmod(others);
    if (!rem.is_zero()) return false;
    if (q.compose_affine(Rational(1), lk) != expected_r) return false;
    if (count_distinct_eigenvalues(a) > k) return false;
  }
  return true;
}

UniPoly discriminant_quartic(const DiscriminantInstance& inst, const Rational& mu) {
  const Rational x_i = inst.with_E_block ? inst.x_i : Rational(0);
  return UniPoly({Rational(-mu * x_i), Rational(-mu * inst.x_pq), Rational(inst.lambda1 * inst.lambda2),
                  Rational(-(inst.lambda1 + inst.lambda2)), Rational(1)});
}

IdentityReport quartic_discriminant_check(const DiscriminantInstance& inst) {
  validate(inst);
  IdentityReport rep;
  rep.in_mu = interpolate_samples(
      [&](const Rational& mu) {
        const UniPoly q = discriminant_quartic(inst, mu);
        return resultant(q, q.derivative());
      },
      4);
  const Rational& l1 = inst.lambda1;
  const Rational& l2 = inst.lambda2;
  const Rational x_i = inst.with_E_block ? inst.x_i : Rational(0);
  const Rational diff = l1 - l2;
  const Rational expected_mu = Rational(4) * l1 * l1 * l1 * l2 * l2 * l2 * diff * diff * x_i;
  const Rational x2 = inst.x_pq * inst.x_pq;
  const Rational expected_mu4 = Rational(-27) * x2 * x2;
  rep.comparisons.push_back({"constant_term", Rational(0), rep.in_mu.coeff(0)});
  rep.comparisons.push_back({"mu_coefficient", expected_mu, rep.in_mu.coeff(1)});
  rep.comparisons.push_back({"mu4_coefficient", expected_mu4, rep.in_mu.coeff(4)});
  return rep;
}

TwoZerosInstance random_two_zeros_instance(Rng& rng, std::size_t n, std::size_t k) {
  TwoZerosInstance inst{n, k, {}, {}, {}};
  while (inst.lambdas.size() < k) {
    Rational x = rng.rational();
    if (std::find(inst.lambdas.begin(), inst.lambdas.end(), x) == inst.lambdas.end()) inst.lambdas.push_back(x);
  }
  for (std::size_t q = k; q <= n; ++q) inst.b.push_back(rng.rational());
  for (std::size_t q = 2; q <= n; ++q) inst.c.push_back(rng.rational());
  return inst;
}

DiscriminantInstance random_discriminant_instance(Rng& rng, bool with_E_block) {
  DiscriminantInstance inst;
  inst.lambda1 = rng.nonzero_rational();
  do {
    inst.lambda2 = rng.nonzero_rational();
  } while (inst.lambda2 == inst.lambda1);
  inst.x_i = rng.rational();
  inst.x_pq = rng.rational();
  inst.with_E_block = with_E_block;
  return inst;
}

}  // namespace eigspace
