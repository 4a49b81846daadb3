#include <doctest.h>

#include "oracles.hpp"

#include <eigspace/error.hpp>
#include <eigspace/exact.hpp>
#include <eigspace/identities.hpp>
#include <eigspace/spectral.hpp>

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

std::vector<Rational> qs(std::initializer_list<long> xs) {
  std::vector<Rational> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

// n = 5, k = 3 with lambdas (1, 2, 4), b = (1, 2, 3), c = (1, -1, 2, 1).
TwoZerosInstance fixed_instance() { return {5, 3, qs({1, 2, 4}), qs({1, 2, 3}), qs({1, -1, 2, 1})}; }

}  // namespace

TEST_CASE("border coefficient sums") {
  const TwoZerosInstance inst = fixed_instance();
  CHECK(two_zeros_coefficients(inst) == qs({1, 4, 6}));
  CHECK(inst.l() == 3);

  Rng rng(1);
  TwoZerosInstance r = random_two_zeros_instance(rng, 5, 3);
  const auto s = two_zeros_coefficients(r);
  CHECK(s[0] == r.b_at(3) * r.c_at(5));
  CHECK(s[1] == r.b_at(3) * r.c_at(4) + r.b_at(4) * r.c_at(5));
  CHECK(s[2] == r.b_at(3) * r.c_at(3) + r.b_at(4) * r.c_at(4) + r.b_at(5) * r.c_at(5));
  std::fill(r.c.begin(), r.c.end(), Rational(0));
  for (const auto& x : two_zeros_coefficients(r)) CHECK(x == 0);

  TwoZerosInstance none = inst;
  std::fill(none.b.begin(), none.b.end(), Rational(0));
  CHECK(none.l() == 6);
}

TEST_CASE("closed-form characteristic polynomial") {
  const TwoZerosInstance inst = fixed_instance();
  CHECK(char_poly_closed_form(inst, Rational(2)) == UniPoly{-196, 50, 120, -74, 15, -1});

  // mu = 0 or b = 0: the border drops out.
  const UniPoly plain = UniPoly{1, -1} * UniPoly{2, -1} * UniPoly{4, -1}.pow(3);
  CHECK(char_poly_closed_form(inst, Rational(0)) == plain);
  TwoZerosInstance zero_b = inst;
  std::fill(zero_b.b.begin(), zero_b.b.end(), Rational(0));
  CHECK(char_poly_closed_form(zero_b, Rational(9)) == plain);

  Rng rng(2);
  for (std::size_t n = 4; n <= 6; ++n) {
    for (std::size_t k = 3; k < n; ++k) {
      for (int trial = 0; trial < 4; ++trial) {
        const auto r = random_two_zeros_instance(rng, n, k);
        const Rational mu = rng.rational();
        const QMatrix a = bordered_witness(r.bordered(mu));
        std::vector<Rational> want = oracle::char_poly(a);
        if (n % 2 == 1)
          for (auto& x : want) x = -x;
        CHECK(char_poly_closed_form(r, mu).coeffs() == want);
      }
    }
  }
}

TEST_CASE("Vieta resultant coefficients") {
  const IdentityReport rep = two_zeros_resultant_check(fixed_instance());
  CHECK(rep.in_mu == UniPoly{0, -5832, -17928, -13824});
  CHECK(rep.pass());
  REQUIRE(rep.comparisons.size() == 3);
  CHECK(rep.comparisons[1].expected == -5832);
  CHECK(rep.comparisons[2].expected == -13824);

  Rng rng(3);
  for (std::size_t gap = 1; gap <= 4; ++gap)
    for (int trial = 0; trial < 5; ++trial) CHECK(two_zeros_resultant_check(random_two_zeros_instance(rng, 3 + gap, 3)).pass());

  // Both sums zero: the two Vieta polynomials share the root 0.
  const TwoZerosInstance both_zero{4, 3, qs({1, 2, 5}), qs({0, 1}), qs({5, 7, 0})};
  const auto s = two_zeros_coefficients(both_zero);
  CHECK(s[0] == 0);
  CHECK(s[1] == 0);
  CHECK(two_zeros_resultant_check(both_zero).in_mu.is_zero());

  TwoZerosInstance dup = fixed_instance();
  dup.lambdas[2] = dup.lambdas[0];
  CHECK(code_of([&] { two_zeros_resultant_check(dup); }) == ErrorCode::DuplicateLambda);
  TwoZerosInstance square{3, 3, qs({1, 2, 3}), qs({1}), qs({1, 1})};
  CHECK(code_of([&] { two_zeros_resultant_check(square); }) == ErrorCode::BadBudget);
}

TEST_CASE("root structure when every border sum vanishes") {
  const std::vector<Rational> mus = qs({0, 1, -3, 17});
  TwoZerosInstance c_zero{5, 3, qs({2, -1, 6}), qs({4, 5, 6}), qs({0, 0, 0, 0})};
  CHECK(verify_two_zeros_root_structure(c_zero, mus));

  // b = (0, 1, -1) forces c_4 = c_5 = 0 and leaves c_2, c_3 free.
  TwoZerosInstance kernel{5, 3, qs({2, -1, 6}), qs({0, 1, -1}), qs({7, 3, 0, 0})};
  for (const auto& x : two_zeros_coefficients(kernel)) CHECK(x == 0);
  CHECK(kernel.l() == 4);
  CHECK(verify_two_zeros_root_structure(kernel, mus));
  for (const auto& mu : mus) CHECK(count_distinct_eigenvalues(bordered_witness(kernel.bordered(mu))) <= 3);

  TwoZerosInstance bad{5, 3, qs({2, -1, 6}), qs({1, 0, 0}), qs({0, 0, 0, 1})};
  CHECK(code_of([&] { verify_two_zeros_root_structure(bad, mus); }) == ErrorCode::PreconditionFailed);
}

TEST_CASE("quartic discriminant coefficients") {
  DiscriminantInstance inst{Rational(2), make_rational(-1, 3), Rational(5), make_rational(3, 2), true};
  const IdentityReport with_e = quartic_discriminant_check(inst);
  CHECK(with_e.in_mu == UniPoly(std::vector<Rational>{0, make_rational(-7840, 243), make_rational(-37292, 3),
                                                     make_rational(-85725, 2), make_rational(-2187, 16)}));
  CHECK(with_e.pass());
  inst.with_E_block = false;
  const IdentityReport without = quartic_discriminant_check(inst);
  CHECK(without.in_mu ==
        UniPoly(std::vector<Rational>{0, 0, make_rational(49, 9), Rational(-130), make_rational(-2187, 16)}));
  CHECK(without.pass());

  DiscriminantInstance flat{Rational(3), Rational(-2), Rational(0), Rational(0), true};
  CHECK(quartic_discriminant_check(flat).in_mu.is_zero());
  flat.with_E_block = false;
  flat.x_i = 9;
  CHECK(discriminant_quartic(flat, Rational(1)) == discriminant_quartic(flat, Rational(5)));

  Rng rng(4);
  for (int trial = 0; trial < 10; ++trial) {
    CHECK(quartic_discriminant_check(random_discriminant_instance(rng, true)).pass());
    CHECK(quartic_discriminant_check(random_discriminant_instance(rng, false)).pass());
  }
  CHECK(code_of([] { quartic_discriminant_check({Rational(1), Rational(1), Rational(1), Rational(1), true}); }) ==
        ErrorCode::DegenerateLambdas);
  CHECK(code_of([] { quartic_discriminant_check({Rational(0), Rational(1), Rational(1), Rational(1), true}); }) ==
        ErrorCode::DegenerateLambdas);
}

TEST_CASE("sign adapter") {
  CHECK(to_det_a_minus_t(UniPoly{-2, 1}) == UniPoly{2, -1});
  CHECK(to_det_a_minus_t(UniPoly{1, 0, 1}) == UniPoly{1, 0, 1});
}
