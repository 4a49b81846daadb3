#pragma once

// Closed-form determinant, resultant-coefficient and discriminant-coefficient
// identities for bordered Jordan-type matrices, checked exactly at rational
// parameter points.

#include <eigspace/constructors.hpp>
#include <eigspace/poly.hpp>
#include <eigspace/random.hpp>
#include <eigspace/rational.hpp>

#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace eigspace {

/// Parameters of the bordered matrix diag(l_1..l_{k-1}) ⊕ J_{n-k+1}(l_k) with
/// first row mu*b_k..mu*b_n and first column c_2..c_n.
struct TwoZerosInstance {
  std::size_t n = 0;
  std::size_t k = 0;
  std::vector<Rational> lambdas;  // l_1..l_k
  std::vector<Rational> b;        // b[0] is b_k
  std::vector<Rational> c;        // c[0] is c_2

  const Rational& b_at(std::size_t q) const { return b.at(q - k); }
  const Rational& c_at(std::size_t q) const { return c.at(q - 2); }
  /// Smallest q >= k with b_q != 0, or n + 1.
  std::size_t l() const;
  BorderedParams bordered(const Rational& mu) const;
};

/// Throws BadBudget, SizeMismatch or DuplicateLambda.
void validate(const TwoZerosInstance& inst);

struct DiscriminantInstance {
  Rational lambda1;
  Rational lambda2;
  Rational x_i;
  Rational x_pq;
  bool with_E_block = true;
};

/// Throws DegenerateLambdas unless lambda1 != lambda2 and both are nonzero.
void validate(const DiscriminantInstance& inst);

/// det(A - tI) = (-1)^n det(tI - A).
UniPoly to_det_a_minus_t(const UniPoly& monic_char_poly);

/// (l_2 - t)...(l_{k-1} - t) * [(l_1 - t)(l_k - t)^{n-k+1}
///   + mu * sum_i (-1)^{n-k+i+1} (l_k - t)^i S_i], in the det(A - tI) convention.
UniPoly char_poly_closed_form(const TwoZerosInstance& inst, const Rational& mu);

/// S_i = sum_{p=k}^{k+i} b_p c_{n-k-i+p} for i = 0..n-k.
std::vector<Rational> two_zeros_coefficients(const TwoZerosInstance& inst);

struct CoefficientComparison {
  std::string name;
  Rational expected;
  Rational actual;
  bool pass() const { return expected == actual; }
};

struct IdentityReport {
  UniPoly in_mu;  // the determinant as a polynomial in mu
  std::vector<CoefficientComparison> comparisons;
  bool pass() const;
};

/// Vieta polynomial pair with N = n - k, a = l_1 - l_k:
///   C(N+2,2) t^2 - (N+1) a t - mu S_N
///   2 C(N+2,3) t^3 - C(N+1,2) a t^2 + mu S_{N-1}
std::pair<UniPoly, UniPoly> vieta_pair(const TwoZerosInstance& inst, const Rational& mu);

/// Resultant of the Vieta pair, interpolated in mu from mu = 0..3 with mu = 4
/// as a consistency sample, compared against the closed-form constant, mu and
/// mu^3 coefficients. Throws BadBudget when n - k < 1.
IdentityReport two_zeros_resultant_check(const TwoZerosInstance& inst);

/// With every S_i zero, checks that the characteristic polynomial of the
/// bordered matrix is prod_{i=2}^{k-1} (t - l_i) * r(t - l_k) with
/// r(t) = (t - (l_1 - l_k)) t^{n-k+1}, and that the matrix has at most k
/// distinct eigenvalues, for every sampled mu. Throws PreconditionFailed.
bool verify_two_zeros_root_structure(const TwoZerosInstance& inst, std::span<const Rational> mu_samples);

/// t^4 - (l1 + l2) t^3 + l1 l2 t^2 - mu x_pq t - mu x_i (x_i dropped without
/// the E block).
UniPoly discriminant_quartic(const DiscriminantInstance& inst, const Rational& mu);

/// resultant(q, q') interpolated in mu from mu = 0..4 with mu = 5 as a
/// consistency sample; compares constant, mu and mu^4 coefficients.
IdentityReport quartic_discriminant_check(const DiscriminantInstance& inst);

/// Random instance with pairwise distinct lambdas.
TwoZerosInstance random_two_zeros_instance(Rng& rng, std::size_t n, std::size_t k);
DiscriminantInstance random_discriminant_instance(Rng& rng, bool with_E_block);

}  // namespace eigspace
