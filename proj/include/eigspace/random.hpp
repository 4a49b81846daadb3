#pragma once

#include <eigspace/matrix.hpp>
#include <eigspace/rational.hpp>

#include <cstdint>
#include <random>

namespace eigspace {

/// Seeded generator for reproducible sampling. Bounded draws are derived from
/// the raw 64-bit engine output so results do not depend on the standard
/// library's distribution implementations.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform on [lo, hi].
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Numerator uniform on [-bound, bound], denominator uniform on [1, bound].
  Rational rational(std::int64_t bound = 100);
  Rational nonzero_rational(std::int64_t bound = 100);

  QMatrix matrix(std::size_t rows, std::size_t cols, std::int64_t bound = 100);
  /// Upper triangular with nonzero diagonal.
  QMatrix invertible_upper(std::size_t n, std::int64_t bound = 100);
  /// Unit lower times invertible upper, hence invertible.
  QMatrix invertible(std::size_t n, std::int64_t bound = 100);

  std::uint64_t next() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace eigspace
