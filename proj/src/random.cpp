#include <eigspace/random.hpp>

namespace eigspace {

std::int64_t Rng::uniform_int(std::int64_t lo, std::int64_t hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(engine_());
  // Rejection sampling to avoid modulo bias.
  const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % span);
  std::uint64_t x;
  do {
    x = engine_();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

Rational Rng::rational(std::int64_t bound) {
  const std::int64_t num = uniform_int(-bound, bound);
  const std::int64_t den = uniform_int(1, bound);
  return make_rational(num, den);
}

Rational Rng::nonzero_rational(std::int64_t bound) {
  Rational r;
  do {
    r = rational(bound);
  } while (r == 0);
  return r;
}

QMatrix Rng::matrix(std::size_t rows, std::size_t cols, std::int64_t bound) {
  QMatrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rational(bound);
  return m;
}

QMatrix Rng::invertible_upper(std::size_t n, std::int64_t bound) {
  QMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m(i, i) = nonzero_rational(bound);
    for (std::size_t j = i + 1; j < n; ++j) m(i, j) = rational(bound);
  }
  return m;
}

QMatrix Rng::invertible(std::size_t n, std::int64_t bound) {
  QMatrix lower = QMatrix::identity(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < i; ++j) lower(i, j) = rational(bound);
  return lower * invertible_upper(n, bound);
}

}  // namespace eigspace
