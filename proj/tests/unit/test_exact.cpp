#include <doctest.h>

#include "oracles.hpp"

#include <eigspace/error.hpp>
#include <eigspace/exact.hpp>
#include <eigspace/random.hpp>

using namespace eigspace;

namespace {

ErrorCode code_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an eigspace::Error");
  return ErrorCode::ParseError;
}

// Random matrix of a prescribed rank: (n x r) times (r x m).
QMatrix random_rank(Rng& rng, std::size_t n, std::size_t m, std::size_t r) {
  return rng.matrix(n, r, 9) * rng.matrix(r, m, 9);
}

}  // namespace

TEST_CASE("rank on small examples") {
  CHECK(rank(QMatrix{{1, 2}, {2, 4}}) == 1);
  CHECK(rank(QMatrix{{0, 0}, {0, 0}}) == 0);
  CHECK(rank(QMatrix::identity(5)) == 5);
  CHECK(rank(QMatrix(0, 3)) == 0);
  CHECK(rank(QMatrix{{0, 1, 0}, {0, 0, 1}}) == 2);
}

TEST_CASE("rank agrees with Gaussian elimination") {
  Rng rng(1);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 1 + trial % 6, m = 1 + (trial * 7) % 7;
    const std::size_t r = static_cast<std::size_t>(rng.uniform_int(0, static_cast<long>(std::min(n, m))));
    const QMatrix a = trial % 2 ? random_rank(rng, n, m, r) : rng.matrix(n, m);
    CHECK(rank(a) == oracle::rank(a));
  }
}

TEST_CASE("det agrees with cofactor expansion") {
  Rng rng(2);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const QMatrix a = trial % 3 == 0 ? random_rank(rng, n, n, n - 1) : rng.matrix(n, n);
    CHECK(det(a) == oracle::det_laplace(a));
  }
  CHECK(det(QMatrix{{0, 1}, {1, 0}}) == -1);
  CHECK(code_of([] { det(QMatrix(2, 3)); }) == ErrorCode::NonSquare);
}

TEST_CASE("characteristic polynomial agrees with interpolated det(xI - A)") {
  Rng rng(3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const QMatrix a = rng.matrix(n, n);
    const UniPoly p = char_poly(a);
    CHECK(p.coeffs() == oracle::char_poly(a));
    CHECK(p.coeff(static_cast<int>(n) - 1) == -a.trace());
    // Cayley-Hamilton.
    CHECK(eval_at_matrix(p, a).is_zero());
  }
  CHECK(char_poly(QMatrix{{2, 1}, {0, 3}}) == UniPoly{6, -5, 1});
  CHECK(char_poly(QMatrix::zero(3, 3)) == UniPoly::monomial(Rational(1), 3));
}

TEST_CASE("inverse") {
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const QMatrix a = rng.invertible(n);
    CHECK(a * inverse(a) == QMatrix::identity(n));
  }
  CHECK(code_of([] { inverse(QMatrix{{1, 2}, {2, 4}}); }) == ErrorCode::Singular);
  CHECK(code_of([] { inverse(QMatrix(1, 2)); }) == ErrorCode::NonSquare);
}

TEST_CASE("Sylvester matrix layout and resultants") {
  const UniPoly p{-1, 0, 1};
  const UniPoly q{0, 2};
  const QMatrix s = sylvester_matrix(p, q);
  CHECK(s == QMatrix{{1, 0, -1}, {2, 0, 0}, {0, 2, 0}});
  CHECK(det(s) == -4);
  CHECK(resultant(UniPoly::linear_factor(Rational(3)), UniPoly::linear_factor(Rational(5))) == -2);
  CHECK(code_of([] { sylvester_matrix(UniPoly{3}, UniPoly{0, 1}); }) == ErrorCode::DegreeTooLow);
}

TEST_CASE("resultant equals the product over root differences") {
  Rng rng(6);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> ra(1 + trial % 4), rb(1 + trial % 3);
    for (auto& x : ra) x = rng.rational();
    for (auto& x : rb) x = rng.rational();
    const Rational la = rng.nonzero_rational(), lb = rng.nonzero_rational();
    UniPoly pa = UniPoly::constant(la), pb = UniPoly::constant(lb);
    for (const auto& x : ra) pa *= UniPoly::linear_factor(x);
    for (const auto& x : rb) pb *= UniPoly::linear_factor(x);
    CHECK(resultant(pa, pb) == oracle::resultant_from_roots(la, ra, lb, rb));
  }
}

TEST_CASE("interpolation in mu") {
  const UniPoly target{3, -2, 0, 5};
  std::vector<std::pair<Rational, Rational>> samples;
  for (long m = 0; m < 5; ++m) samples.emplace_back(Rational(m), target(Rational(m)));
  CHECK(interpolate_in_mu(samples, 3) == target);
  CHECK(interpolate_in_mu(std::span(samples).first(4), 3) == target);

  CHECK(code_of([&] { interpolate_in_mu(std::span(samples).first(3), 3); }) == ErrorCode::InsufficientSamples);
  auto dup = samples;
  dup[1].first = 0;
  CHECK(code_of([&] { interpolate_in_mu(dup, 3); }) == ErrorCode::DuplicateAbscissa);
  auto off = samples;
  off[4].second += 1;
  CHECK(code_of([&] { interpolate_in_mu(off, 3); }) == ErrorCode::PreconditionFailed);

  std::vector<std::pair<Rational, Rational>> zeros{{Rational(0), Rational(0)}, {Rational(1), Rational(0)}};
  CHECK(interpolate_in_mu(zeros, 1).is_zero());
}
