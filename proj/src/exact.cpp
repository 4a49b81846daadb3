#include <eigspace/exact.hpp>

#include <eigspace/error.hpp>

#include <algorithm>
#include <utility>
#include <vector>

namespace eigspace {

namespace {

using IntRow = std::vector<Integer>;
using IntMatrix = std::vector<IntRow>;

Integer lcm_of_denominators(std::span<const Rational> xs) {
  Integer l = 1;
  for (const auto& x : xs) {
    if (x.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  }
  return l;
}

// Each row scaled by the lcm of its own denominators. Returns the product of
// the scale factors.
Integer integer_rows(const QMatrix& m, IntMatrix& out) {
  out.assign(m.rows(), IntRow(m.cols()));
  Integer prod = 1;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    const std::span<const Rational> row(m.entries().data() + i * m.cols(), m.cols());
    const Integer s = lcm_of_denominators(row);
    prod *= s;
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Integer v = row[j].get_num() * s;
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), row[j].get_den().get_mpz_t());
      out[i][j] = std::move(v);
    }
  }
  return prod;
}

// Fraction-free row echelon in place. Returns the rank and, through `sign`,
// the parity of the row swaps performed.
std::size_t bareiss_echelon(IntMatrix& a, std::size_t cols, int& sign) {
  const std::size_t rows = a.size();
  sign = 1;
  Integer prev = 1;
  std::size_t r = 0;
  Integer tmp;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv][c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r) {
      std::swap(a[piv], a[r]);
      sign = -sign;
    }
    const Integer& p = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      const Integer f = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        // a[i][j] = (p * a[i][j] - f * a[r][j]) / prev, exact.
        mpz_mul(tmp.get_mpz_t(), p.get_mpz_t(), a[i][j].get_mpz_t());
        mpz_submul(tmp.get_mpz_t(), f.get_mpz_t(), a[r][j].get_mpz_t());
        mpz_divexact(a[i][j].get_mpz_t(), tmp.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = p;
    ++r;
  }
  return r;
}

void require_square(const QMatrix& m, const char* what) {
  if (!m.is_square()) throw Error(ErrorCode::NonSquare, what);
}

// --- integer polynomial helpers for the pseudo-remainder sequence ---

using IntPoly = std::vector<Integer>;  // lowest degree first, trimmed

void trim(IntPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

IntPoly primitive_part(IntPoly p) {
  trim(p);
  if (p.empty()) return p;
  Integer g = 0;
  for (const auto& c : p) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (p.back() < 0) g = -g;
  for (auto& c : p) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
  return p;
}

IntPoly to_primitive_integer(const UniPoly& p) {
  const Integer l = lcm_of_denominators(p.coeffs());
  IntPoly out;
  out.reserve(p.coeffs().size());
  for (const auto& c : p.coeffs()) {
    Integer v = c.get_num() * l;
    mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), c.get_den().get_mpz_t());
    out.push_back(std::move(v));
  }
  return primitive_part(std::move(out));
}

// Pseudo-remainder of a by b (deg b >= 0): repeatedly cancels the leading term
// of a after scaling a by lc(b).
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b) {
  const std::size_t db = b.size() - 1;
  const Integer& lb = b.back();
  while (!a.empty() && a.size() - 1 >= db) {
    const Integer la = a.back();
    const std::size_t shift = a.size() - 1 - db;
    for (auto& c : a) c *= lb;
    for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= la * b[j];
    trim(a);
    // Keep coefficients small; the content is irrelevant to the gcd.
    a = primitive_part(std::move(a));
  }
  return a;
}

UniPoly from_integer(const IntPoly& p) {
  std::vector<Rational> c;
  c.reserve(p.size());
  for (const auto& x : p) c.emplace_back(x);
  return UniPoly(std::move(c));
}

}  // namespace

std::size_t rank(const QMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  IntMatrix a;
  integer_rows(m, a);
  int sign = 1;
  return bareiss_echelon(a, m.cols(), sign);
}

Rational det(const QMatrix& m) {
  require_square(m, "det");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a;
  const Integer scale = integer_rows(m, a);
  int sign = 1;
  if (bareiss_echelon(a, n, sign) < n) return 0;
  return make_rational(a[n - 1][n - 1] * sign, scale);
}

UniPoly char_poly(const QMatrix& a) {
  require_square(a, "char_poly");
  const std::size_t n = a.rows();
  if (n == 0) return UniPoly::constant(1);

  const Integer d = lcm_of_denominators(a.entries());
  IntMatrix m(n, IntRow(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Integer v = a(i, j).get_num() * d;
      mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), a(i, j).get_den().get_mpz_t());
      m[i][j] = std::move(v);
    }

  // Berkowitz: vect holds det(tI - M_r) for the leading r x r block, highest
  // coefficient first.
  std::vector<Integer> vect{1, -m[0][0]};
  for (std::size_t r = 1; r < n; ++r) {
    // Toeplitz column [1, -a, -R C, -R M C, ..., -R M^{r-1} C]
    std::vector<Integer> col(r + 2);
    col[0] = 1;
    col[1] = -m[r][r];
    std::vector<Integer> v(r);  // M_r^s C
    for (std::size_t i = 0; i < r; ++i) v[i] = m[i][r];
    for (std::size_t s = 0; s < r; ++s) {
      Integer dot = 0;
      for (std::size_t i = 0; i < r; ++i) dot += m[r][i] * v[i];
      col[s + 2] = -dot;
      if (s + 1 < r) {
        std::vector<Integer> w(r);
        for (std::size_t i = 0; i < r; ++i) {
          Integer acc = 0;
          for (std::size_t j = 0; j < r; ++j) acc += m[i][j] * v[j];
          w[i] = std::move(acc);
        }
        v = std::move(w);
      }
    }
    std::vector<Integer> next(r + 2);
    for (std::size_t i = 0; i < r + 2; ++i) {
      Integer acc = 0;
      for (std::size_t j = 0; j <= std::min(i, r); ++j) acc += col[i - j] * vect[j];
      next[i] = std::move(acc);
    }
    vect = std::move(next);
  }

  // vect[i] is the coefficient of t^{n-i} of det(tI - dA); undo the scaling.
  std::vector<Rational> coeffs(n + 1);
  Integer dpow = 1;
  for (std::size_t i = 0; i <= n; ++i) {
    coeffs[n - i] = make_rational(vect[i], dpow);
    dpow *= d;
  }
  return UniPoly(std::move(coeffs));
}

QMatrix inverse(const QMatrix& m) {
  require_square(m, "inverse");
  const std::size_t n = m.rows();
  QMatrix a = m;
  QMatrix inv = QMatrix::identity(n);
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && a(piv, c) == 0) ++piv;
    if (piv == n) throw Error(ErrorCode::Singular, "matrix is not invertible");
    if (piv != c) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(piv, j), a(c, j));
        std::swap(inv(piv, j), inv(c, j));
      }
    }
    const Rational p = a(c, c);
    for (std::size_t j = 0; j < n; ++j) {
      a(c, j) /= p;
      inv(c, j) /= p;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || a(i, c) == 0) continue;
      const Rational f = a(i, c);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(c, j);
        inv(i, j) -= f * inv(c, j);
      }
    }
  }
  return inv;
}

QMatrix eval_at_matrix(const UniPoly& p, const QMatrix& a) {
  require_square(a, "eval_at_matrix");
  const std::size_t n = a.rows();
  QMatrix acc = QMatrix::zero(n, n);
  for (int i = p.degree(); i >= 0; --i) {
    acc = acc * a;
    const Rational c = p.coeff(i);
    for (std::size_t j = 0; j < n; ++j) acc(j, j) += c;
  }
  return acc;
}

UniPoly poly_gcd(const UniPoly& p, const UniPoly& q) {
  if (p.is_zero() && q.is_zero()) throw Error(ErrorCode::BothZero, "gcd(0, 0) is undefined");
  if (p.is_zero()) return q.monic();
  if (q.is_zero()) return p.monic();
  IntPoly a = to_primitive_integer(p);
  IntPoly b = to_primitive_integer(q);
  if (a.size() < b.size()) std::swap(a, b);
  while (true) {
    if (b.size() == 1) return UniPoly::constant(1);
    IntPoly r = pseudo_remainder(a, b);
    if (r.empty()) return from_integer(b).monic();
    a = std::move(b);
    b = primitive_part(std::move(r));
  }
}

QMatrix sylvester_matrix(const UniPoly& p, const UniPoly& q) {
  const int m = p.degree();
  const int d = q.degree();
  if (m < 1 || d < 1) throw Error(ErrorCode::DegreeTooLow, "Sylvester matrix needs degrees >= 1");
  const std::size_t size = static_cast<std::size_t>(m + d);
  QMatrix s(size, size);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j <= m; ++j) s(static_cast<std::size_t>(i), static_cast<std::size_t>(i + j)) = p.coeff(m - j);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j <= d; ++j)
      s(static_cast<std::size_t>(d + i), static_cast<std::size_t>(i + j)) = q.coeff(d - j);
  return s;
}

Rational resultant(const UniPoly& p, const UniPoly& q) { return det(sylvester_matrix(p, q)); }

UniPoly interpolate_in_mu(std::span<const std::pair<Rational, Rational>> samples,
                          std::size_t degree_bound) {
  const std::size_t need = degree_bound + 1;
  if (samples.size() < need) throw Error(ErrorCode::InsufficientSamples, "not enough samples for the degree bound");
  for (std::size_t i = 0; i < samples.size(); ++i)
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (samples[i].first == samples[j].first)
        throw Error(ErrorCode::DuplicateAbscissa, "abscissa " + to_string(samples[i].first) + " repeated");

  // Newton divided differences over the first `need` samples.
  std::vector<Rational> dd(need);
  for (std::size_t i = 0; i < need; ++i) dd[i] = samples[i].second;
  for (std::size_t level = 1; level < need; ++level)
    for (std::size_t i = need - 1; i >= level; --i)
      dd[i] = (dd[i] - dd[i - 1]) / (samples[i].first - samples[i - level].first);

  UniPoly result = UniPoly::constant(dd[need - 1]);
  for (std::size_t i = need - 1; i-- > 0;) {
    result *= UniPoly::linear_factor(samples[i].first);
    result += UniPoly::constant(dd[i]);
  }
  for (std::size_t i = need; i < samples.size(); ++i) {
    if (result(samples[i].first) != samples[i].second)
      throw Error(ErrorCode::PreconditionFailed, "samples exceed the stated degree bound");
  }
  return result;
}

}  // namespace eigspace
