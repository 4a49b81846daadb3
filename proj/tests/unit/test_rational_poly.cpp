#include <doctest.h>

#include <eigspace/error.hpp>
#include <eigspace/exact.hpp>
#include <eigspace/poly.hpp>
#include <eigspace/random.hpp>
#include <eigspace/rational.hpp>

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

}  // namespace

TEST_CASE("rationals are canonical and print as p/q") {
  CHECK(to_string(make_rational(6, 4)) == "3/2");
  CHECK(to_string(make_rational(-6, -4)) == "3/2");
  CHECK(to_string(make_rational(6, -4)) == "-3/2");
  CHECK(to_string(make_rational(0, 7)) == "0");
  CHECK(to_string(make_rational(8, 4)) == "2");
  CHECK(make_rational(0, 5) == make_rational(0, 1));
  CHECK(code_of([] { make_rational(1, 0); }) == ErrorCode::ParseError);
}

TEST_CASE("parse_rational accepts the serialized forms") {
  CHECK(parse_rational("3/2") == make_rational(3, 2));
  CHECK(parse_rational(" -10/4 ") == make_rational(-5, 2));
  CHECK(parse_rational("+7") == make_rational(7));
  CHECK(parse_rational("123456789012345678901234567890") ==
        Rational(Integer("123456789012345678901234567890")));
  for (const char* bad : {"", "1/0", "abc", "1/2/3", "1.5", "/3", "3/"})
    CHECK_MESSAGE(code_of([&] { parse_rational(bad); }) == ErrorCode::ParseError, bad);
}

TEST_CASE("round trip through text") {
  Rng rng(3);
  for (int i = 0; i < 200; ++i) {
    const Rational r = rng.rational(1000);
    CHECK(parse_rational(to_string(r)) == r);
  }
}

TEST_CASE("binomial") {
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(7, 0) == 1);
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(4, -1) == 0);
  CHECK(binomial(40, 20) == Integer("137846528820"));
}

TEST_CASE("polynomial arithmetic") {
  const UniPoly p{-1, 0, 1};  // t^2 - 1
  const UniPoly q{1, 1};      // t + 1
  CHECK(p.degree() == 2);
  CHECK(UniPoly().degree() == -1);
  CHECK(UniPoly({0, 0, 0}).is_zero());
  CHECK((p * q) == UniPoly{-1, -1, 1, 1});
  CHECK((p - p).is_zero());
  CHECK(p.derivative() == UniPoly{0, 2});
  CHECK(p(Rational(3)) == 8);
  CHECK(q.pow(3) == UniPoly{1, 3, 3, 1});
  CHECK(UniPoly{0, 2}.monic() == UniPoly{0, 1});
  // p(2t + 1) = 4t^2 + 4t
  CHECK(p.compose_affine(Rational(2), Rational(1)) == UniPoly{0, 4, 4});
  CHECK(UniPoly::linear_factor(Rational(3)) == UniPoly{-3, 1});
  CHECK(UniPoly::monomial(Rational(5), 2) == UniPoly{0, 0, 5});
  CHECK(p.str() == "t^2 - 1");
}

TEST_CASE("divmod reconstructs the dividend") {
  Rng rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Rational> a(6), b(3);
    for (auto& x : a) x = rng.rational();
    for (auto& x : b) x = rng.rational();
    b.back() = rng.nonzero_rational();
    const UniPoly pa(a), pb(b);
    const auto [quot, rem] = pa.divmod(pb);
    CHECK(rem.degree() < pb.degree());
    CHECK(quot * pb + rem == pa);
  }
  CHECK(code_of([] { UniPoly{1, 1}.divmod(UniPoly()); }) == ErrorCode::BothZero);
}

TEST_CASE("gcd of polynomials with known common factors") {
  const UniPoly common = UniPoly::linear_factor(Rational(2)) * UniPoly::linear_factor(make_rational(-1, 3));
  const UniPoly a = common * UniPoly{5, 0, 1};
  const UniPoly b = common * UniPoly::linear_factor(Rational(7)) * Rational(4);
  CHECK(poly_gcd(a, b) == common);
  CHECK(poly_gcd(UniPoly{1, 1}, UniPoly{-1, 1}) == UniPoly{1});
  CHECK(poly_gcd(UniPoly(), UniPoly{0, 3}) == UniPoly{0, 1});
  CHECK(code_of([] { poly_gcd(UniPoly(), UniPoly()); }) == ErrorCode::BothZero);

  Rng rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    UniPoly g = UniPoly::linear_factor(rng.rational()) * UniPoly::linear_factor(rng.rational());
    UniPoly x = UniPoly::linear_factor(rng.rational() + 1000);
    UniPoly y = UniPoly::linear_factor(rng.rational() - 1000);
    const UniPoly got = poly_gcd(g * x * rng.nonzero_rational(), g * y);
    CHECK(got == g.monic());
  }
}
