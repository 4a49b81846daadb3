// Python bindings. Rationals cross the boundary as fractions.Fraction, matrices
// as lists of rows, and reports as plain dicts.

#include <eigspace/constructors.hpp>
#include <eigspace/degeneration.hpp>
#include <eigspace/error.hpp>
#include <eigspace/exact.hpp>
#include <eigspace/harness.hpp>
#include <eigspace/identities.hpp>
#include <eigspace/json_io.hpp>
#include <eigspace/spectral.hpp>
#include <eigspace/subspace.hpp>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

namespace py = pybind11;
using namespace eigspace;

namespace {

Rational to_rational(const py::handle& x) { return parse_rational(py::str(x).cast<std::string>()); }

py::object to_fraction(const Rational& r) {
  static py::object fraction = py::module_::import("fractions").attr("Fraction");
  return fraction(to_string(r));
}

std::vector<Rational> to_rationals(const py::sequence& xs) {
  std::vector<Rational> out;
  for (auto x : xs) out.push_back(to_rational(x));
  return out;
}

QMatrix to_matrix(const py::sequence& rows) {
  const std::size_t r = py::len(rows);
  std::size_t c = 0;
  std::vector<Rational> data;
  for (std::size_t i = 0; i < r; ++i) {
    const py::sequence row = rows[i];
    if (i == 0) c = py::len(row);
    if (py::len(row) != c) throw Error(ErrorCode::SizeMismatch, "rows must have equal length");
    for (auto x : row) data.push_back(to_rational(x));
  }
  return QMatrix(r, c, std::move(data));
}

py::list from_matrix(const QMatrix& m) {
  py::list rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    py::list row;
    for (std::size_t j = 0; j < m.cols(); ++j) row.append(to_fraction(m(i, j)));
    rows.append(row);
  }
  return rows;
}

py::list from_poly(const UniPoly& p) {
  py::list out;
  for (const auto& c : p.coeffs()) out.append(to_fraction(c));
  return out;
}

py::object from_json(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

WeightVector weights(const std::vector<long>& w) { return WeightVector{w}; }

MatrixSubspace make_subspace(std::size_t n, const std::vector<py::sequence>& gens) {
  std::vector<QMatrix> ms;
  for (const auto& g : gens) ms.push_back(to_matrix(g));
  return canonicalize(n, ms);
}

}  // namespace

PYBIND11_MODULE(_eigspace, m) {
  m.doc() = "Exact rational tools for matrix spaces with few distinct eigenvalues";

  static py::exception<Error> error(m, "EigspaceError", PyExc_ValueError);
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      py::set_error(error, e.what());
    }
  });

  m.def("rank", [](const py::sequence& a) { return rank(to_matrix(a)); });
  m.def("det", [](const py::sequence& a) { return to_fraction(det(to_matrix(a))); });
  m.def("char_poly", [](const py::sequence& a) { return from_poly(char_poly(to_matrix(a))); },
        "Coefficients of det(tI - A), lowest degree first.");
  m.def("resultant", [](const py::sequence& p, const py::sequence& q) {
    return to_fraction(resultant(UniPoly(to_rationals(p)), UniPoly(to_rationals(q))));
  }, "Resultant of two polynomials given by coefficients, lowest degree first.");

  m.def("is_regular", [](const py::sequence& a) { return is_regular(to_matrix(a)); });
  m.def("count_distinct_eigenvalues", [](const py::sequence& a) { return count_distinct_eigenvalues(to_matrix(a)); });
  m.def("count_simple_eigenvalues", [](const py::sequence& a) { return count_simple_eigenvalues(to_matrix(a)); });
  m.def("spectral_profile", [](const py::sequence& a) { return from_json(to_json(spectral_profile(to_matrix(a)))); });

  py::class_<MatrixSubspace>(m, "MatrixSubspace")
      .def(py::init(&make_subspace), py::arg("n"), py::arg("generators"))
      .def_property_readonly("n", &MatrixSubspace::n)
      .def_property_readonly("dim", &MatrixSubspace::dim)
      .def("basis", [](const MatrixSubspace& v) {
        py::list out;
        for (const auto& b : v.basis()) out.append(from_matrix(b));
        return out;
      })
      .def("contains", [](const MatrixSubspace& v, const py::sequence& a) { return v.contains(to_matrix(a)); })
      .def("to_json", [](const MatrixSubspace& v) { return to_json(v).dump(); })
      .def_static("from_json", [](const std::string& text) { return subspace_from_json(parse_json(text)); })
      .def("__eq__", [](const MatrixSubspace& a, const MatrixSubspace& b) { return a == b; })
      .def("__repr__", [](const MatrixSubspace& v) {
        return "<MatrixSubspace n=" + std::to_string(v.n()) + " dim=" + std::to_string(v.dim()) + ">";
      });

  m.def("sum_and_intersection", &sum_and_intersection);
  m.def("conjugate", [](const MatrixSubspace& v, const py::sequence& p) { return conjugate(v, to_matrix(p)); });
  m.def("is_borel_invariant", &is_borel_invariant);

  m.def("max_dimension", &max_dimension, py::arg("n"), py::arg("k"));
  m.def("extremal_space", [](std::size_t n, std::size_t k, std::size_t p, bool swapped) {
    const ExtremalParams params{n, k, p};
    return swapped ? swapped_extremal_basis(params) : extremal_basis(params);
  }, py::arg("n"), py::arg("k"), py::arg("p"), py::arg("swapped") = false);
  m.def("enumerate_configs", [](std::size_t n, std::size_t k, bool include_l_zero) {
    const auto e = enumerate_configs(n, k, include_l_zero);
    Json arg = Json::array();
    for (const auto& c : e.argmax) arg.push_back(to_json(c));
    return from_json(Json{{"max", e.max_value}, {"argmax", arg}, {"visited", e.visited}});
  }, py::arg("n"), py::arg("k"), py::arg("include_l_zero") = false);

  m.def("degenerate", [](const MatrixSubspace& v, const std::vector<long>& w, bool negate) {
    return degenerate(v, weights(w), negate);
  }, py::arg("space"), py::arg("weights"), py::arg("negate") = false);
  m.def("weight_decomposition", [](const MatrixSubspace& v, const std::vector<long>& w) {
    py::dict out;
    for (const auto& c : weight_decomposition(v, weights(w))) out[py::int_(c.j)] = c.component;
    return out;
  });

  m.def("two_zeros_resultant_check", [](std::size_t n, std::size_t k, const py::sequence& lambdas, const py::sequence& b,
                                         const py::sequence& c) {
    return from_json(to_json(two_zeros_resultant_check({n, k, to_rationals(lambdas), to_rationals(b), to_rationals(c)})));
  }, py::arg("n"), py::arg("k"), py::arg("lambdas"), py::arg("b"), py::arg("c"));
  m.def("quartic_discriminant_check", [](const py::object& l1, const py::object& l2, const py::object& x_i,
                                          const py::object& x_pq, bool with_e) {
    return from_json(to_json(quartic_discriminant_check(
        {to_rational(l1), to_rational(l2), to_rational(x_i), to_rational(x_pq), with_e})));
  }, py::arg("lambda1"), py::arg("lambda2"), py::arg("x_i"), py::arg("x_pq"), py::arg("with_E_block") = true);

  m.def("verify_extremal", [](std::size_t n, std::size_t k, std::size_t p, std::size_t samples, std::uint64_t seed) {
    py::gil_scoped_release release;
    const auto rep = verify_extremal({n, k, p}, samples, seed);
    py::gil_scoped_acquire acquire;
    return from_json(rep.to_json());
  }, py::arg("n"), py::arg("k"), py::arg("p"), py::arg("samples") = 100, py::arg("seed") = 0);
  m.def("maximality_probe", [](std::size_t n, std::size_t k, std::size_t p, std::size_t trials, std::uint64_t seed) {
    return from_json(maximality_probe({n, k, p}, trials, seed).to_json());
  }, py::arg("n"), py::arg("k"), py::arg("p"), py::arg("trials") = 1000, py::arg("seed") = 0);
  m.def("run_full_suite", [](std::size_t max_n, std::uint64_t seed) {
    return from_json(run_full_suite(max_n, seed).to_json());
  }, py::arg("max_n"), py::arg("seed") = 0);
}
