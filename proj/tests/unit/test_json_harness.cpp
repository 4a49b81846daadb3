#include <doctest.h>

#include <eigspace/constructors.hpp>
#include <eigspace/error.hpp>
#include <eigspace/harness.hpp>
#include <eigspace/json_io.hpp>

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

const Check& find(const VerificationReport& rep, const std::string& name) {
  for (const auto& c : rep.checks)
    if (c.name == name) return c;
  FAIL("missing check " << name);
  return rep.checks.front();
}

}  // namespace

TEST_CASE("matrix and rational JSON") {
  QMatrix m{{1, 0}, {-3, 2}};
  m(0, 1) = make_rational(-5, 6);
  const Json j = to_json(m);
  CHECK(j.dump() == R"({"rows":2,"cols":2,"entries":[["1","-5/6"],["-3","2"]]})");
  CHECK(matrix_from_json(j) == m);
  CHECK(rational_from_json(Json(7)) == 7);

  CHECK(code_of([] { matrix_from_json(parse_json(R"({"rows":1,"cols":2,"entries":[["1"]]})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { matrix_from_json(parse_json(R"({"rows":1,"cols":1,"entries":[["x"]]})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { matrix_from_json(parse_json(R"({"cols":1,"entries":[]})")); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_json("{"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { read_json_file("/nonexistent/file.json"); }) == ErrorCode::ParseError);
}

TEST_CASE("subspace JSON round trip") {
  const MatrixSubspace v = extremal_basis({4, 3, 1});
  const Json j = to_json(v);
  CHECK(j["n"] == 4);
  CHECK(j["basis"].size() == 10);
  CHECK(subspace_from_json(j) == v);
  CHECK(subspace_from_json(parse_json(j.dump())) == v);
  CHECK(code_of([] { subspace_from_json(parse_json(R"({"n":2,"basis":[{"rows":3,"cols":3,"entries":[["0","0","0"],["0","0","0"],["0","0","0"]]}]})")); }) ==
        ErrorCode::MixedSizes);
}

TEST_CASE("seed derivation separates cells") {
  CHECK(derive_seed(0, {1, 2}) == derive_seed(0, {1, 2}));
  CHECK(derive_seed(0, {1, 2}) != derive_seed(0, {2, 1}));
  CHECK(derive_seed(0, {1}) != derive_seed(1, {1}));
}

TEST_CASE("verify_extremal passes on extremal spaces") {
  const auto rep = verify_extremal({4, 3, 1}, 100, 0);
  CHECK(rep.passed());
  CHECK(find(rep, "dimension").status == CheckStatus::Pass);
  CHECK(find(rep, "eigenvalue_budget").status == CheckStatus::Pass);
  CHECK(find(rep, "border_bounds").status == CheckStatus::Pass);
  CHECK(find(rep, "swapped_border_bounds").status == CheckStatus::Pass);
  CHECK(verify_extremal({8, 7, 0}, 100, 0).passed());
  CHECK(find(verify_extremal({5, 1, 2}, 5, 0), "border_bounds").status == CheckStatus::Vacuous);
  CHECK(code_of([] { verify_extremal({5, 3, 4}, 1, 0); }) == ErrorCode::BadBudget);
}

TEST_CASE("reports are reproducible") {
  const auto a = verify_extremal({5, 3, 1}, 20, 42).to_json().dump();
  const auto b = verify_extremal({5, 3, 1}, 20, 42).to_json().dump();
  CHECK(a == b);
  CHECK(a.find("elapsed") == std::string::npos);
  CHECK(verify_extremal({5, 3, 1}, 1, 42).to_json(true).contains("elapsed_ms"));
  CHECK(maximality_probe({4, 3, 1}, 50, 7).to_json().dump() == maximality_probe({4, 3, 1}, 50, 7).to_json().dump());
}

TEST_CASE("maximality probe") {
  const auto rep = maximality_probe({4, 3, 1}, 1000, 0);
  CHECK(rep.checks.size() == 16);
  const Check& e21 = find(rep, "unit(1,0)");
  CHECK(e21.status == CheckStatus::Pass);
  CHECK(e21.witness["distinct"].get<std::size_t>() >= 4);
  CHECK(find(rep, "unit(0,1)").status == CheckStatus::Vacuous);

  for (const auto& c : maximality_probe({5, 3, 0}, 1000, 0).checks) CHECK(c.status != CheckStatus::Fail);
  for (const auto& c : maximality_probe({5, 3, 0}, 1000, 0).checks) CHECK(c.status != CheckStatus::Inconclusive);

  // Zero trials cannot find anything and must not report failure.
  const auto none = maximality_probe({4, 3, 1}, 0, 0);
  CHECK(none.passed());
  CHECK(find(none, "unit(1,0)").status == CheckStatus::Inconclusive);
}

TEST_CASE("suite sections on a small range") {
  CHECK(check_dimension_formula(5).status == CheckStatus::Pass);
  CHECK(check_config_bound(8).status == CheckStatus::Pass);
  CHECK(check_resultant_identity(5, 5, 1).status == CheckStatus::Pass);
  CHECK(check_spectral_oracles(4, 30, 1).status == CheckStatus::Pass);
  CHECK(check_degeneration_suite(4, 2, 5, 1).status == CheckStatus::Pass);
  CHECK(code_of([] { run_full_suite(3, 0); }) == ErrorCode::BadBudget);
}
