#pragma once

// Exact spectral predicates. None of them names an eigenvalue: everything is a
// rank or gcd-degree computation, so irrational spectra are handled the same
// way as rational ones.

#include <eigspace/matrix.hpp>

#include <cstddef>

namespace eigspace {

struct SpectralProfile {
  std::size_t n = 0;
  std::size_t distinct_count = 0;
  std::size_t simple_count = 0;
  bool regular = false;
};

/// n^2 x n^2 matrix of B -> AB - BA in the row-major matrix-unit basis.
QMatrix ad_matrix(const QMatrix& a);

/// rank ad_A >= n^2 - n, i.e. minimal and characteristic polynomials coincide.
bool is_regular(const QMatrix& a);

/// n - deg gcd(p_A, p_A').
std::size_t count_distinct_eigenvalues(const QMatrix& a);

/// Same count via the Sylvester matrix, whose rank is 2n - 1 - deg gcd(p_A, p_A').
/// For n = 1 the derivative is constant and the count is 1.
std::size_t count_distinct_eigenvalues_sylvester(const QMatrix& a);

/// rank((p_A'(A))^m) for m >= n, formed by repeated squaring.
std::size_t count_simple_eigenvalues(const QMatrix& a);

/// Dimension of span{I, A, ..., A^n}, which equals the degree of the minimal
/// polynomial. Independent of the characteristic polynomial.
std::size_t minimal_polynomial_degree(const QMatrix& a);

SpectralProfile spectral_profile(const QMatrix& a);

}  // namespace eigspace
