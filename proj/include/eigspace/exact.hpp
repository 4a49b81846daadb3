#pragma once

// Exact dense kernels over Q: rank, determinant, characteristic polynomial,
// inverse, polynomial gcd, Sylvester matrices, resultants and interpolation.

#include <eigspace/matrix.hpp>
#include <eigspace/poly.hpp>
#include <eigspace/rational.hpp>

#include <cstddef>
#include <span>
#include <utility>

namespace eigspace {

/// Rank over Q by fraction-free (Bareiss) elimination on a denominator-cleared copy.
std::size_t rank(const QMatrix& m);

/// Determinant by Bareiss elimination. Throws NonSquare.
Rational det(const QMatrix& m);

/// Monic det(tI - A), computed with the division-free Berkowitz recurrence on
/// an integer matrix d*A and rescaled. Throws NonSquare.
UniPoly char_poly(const QMatrix& a);

/// Throws NonSquare or Singular.
QMatrix inverse(const QMatrix& m);

/// p(A) by Horner's rule. Throws NonSquare.
QMatrix eval_at_matrix(const UniPoly& p, const QMatrix& a);

/// Monic gcd over Q via a primitive pseudo-remainder sequence over Z.
/// Throws BothZero.
UniPoly poly_gcd(const UniPoly& p, const UniPoly& q);

/// (deg p + deg q)-square matrix: deg q shifted rows of p's coefficients,
/// then deg p shifted rows of q's, highest coefficient first.
/// Throws DegreeTooLow when either degree is below 1.
QMatrix sylvester_matrix(const UniPoly& p, const UniPoly& q);

/// det(sylvester_matrix(p, q)).
Rational resultant(const UniPoly& p, const UniPoly& q);

/// Unique polynomial of degree <= degree_bound through the samples (Newton form).
/// Uses the first degree_bound + 1 samples; throws InsufficientSamples or
/// DuplicateAbscissa. Extra samples must agree, otherwise PreconditionFailed.
UniPoly interpolate_in_mu(std::span<const std::pair<Rational, Rational>> samples,
                          std::size_t degree_bound);

}  // namespace eigspace
