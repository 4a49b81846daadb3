#pragma once

#include <eigspace/rational.hpp>

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace eigspace {

/// Univariate polynomial over the rationals. Coefficients are stored lowest
/// degree first and never carry a trailing zero; the zero polynomial has no
/// coefficients and degree -1.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<long> coeffs);

  static UniPoly constant(const Rational& c);
  /// c * t^k
  static UniPoly monomial(const Rational& c, int k);
  /// t - root
  static UniPoly linear_factor(const Rational& root);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const noexcept { return coeffs_.empty(); }
  const std::vector<Rational>& coeffs() const noexcept { return coeffs_; }

  /// Coefficient of t^i; zero outside the stored range.
  Rational coeff(int i) const;
  Rational leading() const;

  Rational operator()(const Rational& x) const;

  UniPoly derivative() const;
  UniPoly monic() const;
  UniPoly pow(unsigned e) const;
  /// p(a*t + b)
  UniPoly compose_affine(const Rational& a, const Rational& b) const;

  UniPoly& operator+=(const UniPoly& o);
  UniPoly& operator-=(const UniPoly& o);
  UniPoly& operator*=(const UniPoly& o);
  UniPoly& operator*=(const Rational& c);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& c) { return a *= c; }
  friend UniPoly operator*(const Rational& c, UniPoly a) { return a *= c; }
  UniPoly operator-() const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const UniPoly& a, const UniPoly& b) { return !(a == b); }

  /// Quotient and remainder over Q. Throws BothZero on division by zero.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& divisor) const;

  /// Human-readable form in the given variable, highest degree first.
  std::string str(const char* var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

}  // namespace eigspace
