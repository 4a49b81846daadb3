#pragma once

#include <eigspace/rational.hpp>

#include <cstddef>
#include <initializer_list>
#include <span>
#include <string>
#include <vector>

namespace eigspace {

/// Dense row-major matrix over Q. Indices are 0-based throughout the library.
class QMatrix {
 public:
  QMatrix() = default;
  QMatrix(std::size_t rows, std::size_t cols);
  QMatrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);
  /// Integer literal rows, mostly for tests: QMatrix{{1, 2}, {3, 4}}.
  QMatrix(std::initializer_list<std::initializer_list<long>> rows);

  static QMatrix identity(std::size_t n);
  static QMatrix zero(std::size_t rows, std::size_t cols);
  /// Matrix unit E_ij of an n x n matrix.
  static QMatrix unit(std::size_t n, std::size_t i, std::size_t j);
  static QMatrix diagonal(std::span<const Rational> d);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }
  bool is_zero() const;

  Rational& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  const std::vector<Rational>& entries() const noexcept { return data_; }

  QMatrix transpose() const;
  QMatrix pow(unsigned e) const;
  Rational trace() const;

  QMatrix& operator+=(const QMatrix& o);
  QMatrix& operator-=(const QMatrix& o);
  QMatrix& operator*=(const Rational& c);

  friend QMatrix operator+(QMatrix a, const QMatrix& b) { return a += b; }
  friend QMatrix operator-(QMatrix a, const QMatrix& b) { return a -= b; }
  friend QMatrix operator*(QMatrix a, const Rational& c) { return a *= c; }
  friend QMatrix operator*(const Rational& c, QMatrix a) { return a *= c; }
  friend QMatrix operator*(const QMatrix& a, const QMatrix& b);

  friend bool operator==(const QMatrix& a, const QMatrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }
  friend bool operator!=(const QMatrix& a, const QMatrix& b) { return !(a == b); }

  std::string str() const;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

}  // namespace eigspace
