#include <eigspace/json_io.hpp>

#include <eigspace/error.hpp>

#include <fstream>
#include <sstream>

namespace eigspace {

namespace {

std::size_t size_field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key) || !j[key].is_number_unsigned())
    throw Error(ErrorCode::ParseError, std::string("expected non-negative integer field '") + key + "'");
  return j[key].get<std::size_t>();
}

Json rationals(const std::vector<Rational>& xs) {
  Json arr = Json::array();
  for (const auto& x : xs) arr.push_back(to_json(x));
  return arr;
}

}  // namespace

Json to_json(const Rational& r) { return to_string(r); }

Json to_json(const QMatrix& m) {
  Json entries = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(to_json(m(i, j)));
    entries.push_back(std::move(row));
  }
  return Json{{"rows", m.rows()}, {"cols", m.cols()}, {"entries", std::move(entries)}};
}

Json to_json(const MatrixSubspace& v) {
  Json basis = Json::array();
  for (const auto& b : v.basis()) basis.push_back(to_json(b));
  return Json{{"n", v.n()}, {"basis", std::move(basis)}};
}

Json to_json(const UniPoly& p) { return rationals(p.coeffs()); }

Json to_json(const SpectralProfile& s) {
  return Json{{"n", s.n}, {"distinct_count", s.distinct_count}, {"simple_count", s.simple_count}, {"regular", s.regular}};
}

Json to_json(const Config& c) { return Json{{"l", c.l}, {"parts", c.parts}}; }

Json to_json(const TwoZerosInstance& inst) {
  return Json{{"n", inst.n}, {"k", inst.k}, {"lambdas", rationals(inst.lambdas)}, {"b", rationals(inst.b)}, {"c", rationals(inst.c)}};
}

Json to_json(const DiscriminantInstance& inst) {
  return Json{{"lambda1", to_json(inst.lambda1)}, {"lambda2", to_json(inst.lambda2)}, {"x_i", to_json(inst.x_i)},
              {"x_pq", to_json(inst.x_pq)}, {"with_E_block", inst.with_E_block}};
}

Json to_json(const IdentityReport& rep) {
  Json cmp = Json::array();
  for (const auto& c : rep.comparisons)
    cmp.push_back(Json{{"name", c.name}, {"expected", to_json(c.expected)}, {"actual", to_json(c.actual)}, {"pass", c.pass()}});
  return Json{{"polynomial_in_mu", to_json(rep.in_mu)}, {"comparisons", std::move(cmp)}, {"pass", rep.pass()}};
}

Json to_json(const std::vector<WeightComponent>& comps) {
  Json arr = Json::array();
  for (const auto& c : comps) arr.push_back(Json{{"weight", c.j}, {"dim", c.component.dim()}, {"space", to_json(c.component)}});
  return arr;
}

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return make_rational(j.get<std::int64_t>());
  throw Error(ErrorCode::ParseError, "rational must be a \"p/q\" string or an integer");
}

QMatrix matrix_from_json(const Json& j) {
  const std::size_t rows = size_field(j, "rows");
  const std::size_t cols = size_field(j, "cols");
  if (!j.contains("entries") || !j["entries"].is_array() || j["entries"].size() != rows)
    throw Error(ErrorCode::ParseError, "entries must be an array of 'rows' rows");
  std::vector<Rational> data;
  data.reserve(rows * cols);
  for (const auto& row : j["entries"]) {
    if (!row.is_array() || row.size() != cols) throw Error(ErrorCode::ParseError, "each row must hold 'cols' entries");
    for (const auto& x : row) data.push_back(rational_from_json(x));
  }
  return QMatrix(rows, cols, std::move(data));
}

MatrixSubspace subspace_from_json(const Json& j) {
  const std::size_t n = size_field(j, "n");
  if (!j.contains("basis") || !j["basis"].is_array()) throw Error(ErrorCode::ParseError, "basis must be an array of matrices");
  std::vector<QMatrix> gens;
  for (const auto& m : j["basis"]) gens.push_back(matrix_from_json(m));
  return canonicalize(n, gens);
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_json(ss.str());
}

}  // namespace eigspace
