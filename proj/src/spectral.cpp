#include <eigspace/spectral.hpp>

#include <eigspace/error.hpp>
#include <eigspace/exact.hpp>

namespace eigspace {

namespace {

std::size_t require_square(const QMatrix& a) {
  if (!a.is_square() || a.rows() == 0) throw Error(ErrorCode::NonSquare, "spectral predicates need a non-empty square matrix");
  return a.rows();
}

}  // namespace

QMatrix ad_matrix(const QMatrix& a) {
  const std::size_t n = require_square(a);
  const std::size_t nn = n * n;
  QMatrix ad(nn, nn);
  // Column (p, q) holds vec(A E_pq - E_pq A): A E_pq has column q equal to
  // A's column p; E_pq A has row p equal to A's row q.
  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const std::size_t col = p * n + q;
      for (std::size_t i = 0; i < n; ++i) ad(i * n + q, col) += a(i, p);
      for (std::size_t j = 0; j < n; ++j) ad(p * n + j, col) -= a(q, j);
    }
  }
  return ad;
}

bool is_regular(const QMatrix& a) {
  const std::size_t n = require_square(a);
  return rank(ad_matrix(a)) >= n * n - n;
}

std::size_t count_distinct_eigenvalues(const QMatrix& a) {
  const std::size_t n = require_square(a);
  const UniPoly p = char_poly(a);
  const UniPoly g = poly_gcd(p, p.derivative());
  return n - static_cast<std::size_t>(g.degree());
}

std::size_t count_distinct_eigenvalues_sylvester(const QMatrix& a) {
  const std::size_t n = require_square(a);
  if (n == 1) return 1;
  const UniPoly p = char_poly(a);
  // deg gcd(p, p') = 2n - 1 - rank S(p, p').
  return rank(sylvester_matrix(p, p.derivative())) + 1 - n;
}

std::size_t minimal_polynomial_degree(const QMatrix& a) {
  const std::size_t n = require_square(a);
  QMatrix powers(n + 1, n * n);
  QMatrix cur = QMatrix::identity(n);
  for (std::size_t i = 0; i <= n; ++i) {
    for (std::size_t e = 0; e < n * n; ++e) powers(i, e) = cur.entries()[e];
    cur = cur * a;
  }
  return rank(powers);
}

std::size_t count_simple_eigenvalues(const QMatrix& a) {
  const std::size_t n = require_square(a);
  const UniPoly p = char_poly(a);
  QMatrix b = eval_at_matrix(p.derivative(), a);
  // rank(B^m) is constant for m >= n.
  for (std::size_t power = 1; power < n; power *= 2) b = b * b;
  return rank(b);
}

SpectralProfile spectral_profile(const QMatrix& a) {
  SpectralProfile s;
  s.n = require_square(a);
  s.distinct_count = count_distinct_eigenvalues(a);
  s.simple_count = count_simple_eigenvalues(a);
  s.regular = is_regular(a);
  return s;
}

}  // namespace eigspace
