#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "numsgp/serialize.hpp"
#include "numsgp/verify.hpp"

namespace py = pybind11;
using namespace numsgp;

namespace {

py::object to_py(const Json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

template <typename T>
py::list to_py_list(const std::vector<T>& items) {
  py::list out;
  for (const auto& x : items) out.append(to_py(to_json(x)));
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Numerical semigroups: pseudo-Frobenius numbers, RF-matrices, toric ideals";

  PYBIND11_CONSTINIT static py::gil_safe_call_once_and_store<py::object> error;
  error.call_once_and_store_result([&]() { return py::exception<Error>(m, "Error"); });
  py::register_exception_translator([](std::exception_ptr p) {
    try {
      if (p) std::rethrow_exception(p);
    } catch (const Error& e) {
      std::string msg = std::string(to_string(e.kind())) + ": " + e.what();
      py::set_error(error.get_stored(), msg.c_str());
    }
  });

  py::class_<NumericalSemigroup>(m, "NumericalSemigroup")
      .def(py::init([](const std::vector<Int>& g) { return NumericalSemigroup(g); }),
           py::arg("generators"))
      .def_property_readonly("generators", &NumericalSemigroup::generators)
      .def_property_readonly("frobenius", &NumericalSemigroup::frobenius)
      .def_property_readonly("genus", &NumericalSemigroup::genus)
      .def_property_readonly("embedding_dimension", &NumericalSemigroup::embedding_dimension)
      .def("__contains__", &NumericalSemigroup::contains)
      .def("contains", &NumericalSemigroup::contains)
      .def("gaps", &NumericalSemigroup::gaps)
      .def("apery", [](const NumericalSemigroup& s, Int a) { return s.apery(a).elements; })
      .def("pseudo_frobenius",
           [](const NumericalSemigroup& s) { return to_py(to_json(s.pseudo_frobenius())); })
      .def("__repr__", &NumericalSemigroup::to_string)
      .def("__eq__", [](const NumericalSemigroup& a, const NumericalSemigroup& b) { return a == b; });

  m.def("factorizations", [](const NumericalSemigroup& s, Int h) {
    std::vector<Exponents> out;
    for (auto& f : factorizations(s, h)) out.push_back(std::move(f.coeffs));
    return out;
  });
  m.def("alphas", [](const NumericalSemigroup& s) { return to_py(to_json(alphas(s))); });
  m.def("rf_matrices", [](const NumericalSemigroup& s, Int f, std::size_t cap) {
    return to_py_list(rf_matrices(s, f, cap));
  }, py::arg("sg"), py::arg("f"), py::arg("cap") = kDefaultMatrixCap);
  m.def("rf_relations", [](const NumericalSemigroup& s, Int f) {
    return to_py_list(rf_relations(s, f, rf_matrices(s, f)));
  });
  m.def("minimal_generators",
        [](const NumericalSemigroup& s) { return to_py_list(minimal_generators(s)); });
  m.def("generates", [](const NumericalSemigroup& s, const std::vector<std::pair<Exponents, Exponents>>& sides) {
    std::vector<Binomial> bs;
    for (const auto& [u, v] : sides)
      if (auto b = Binomial::from_pair(s, u, v)) bs.push_back(*b);
    return generates_check(s, bs);
  });
  m.def("graded_betti", [](const NumericalSemigroup& s) { return to_py(to_json(graded_betti(s))); });
  m.def("komeda_form", [](const NumericalSemigroup& s) { return to_py(to_json(komeda_form(s))); });
  m.def("verify_all", [](const NumericalSemigroup& s) { return to_py_list(verify_all(s)); });
  m.def("construct_family", [](Int a, Int b, Int d) { return construct_family({a, b, d}); });
  m.def("verify_family", [](Int a, Int b, Int d, Int steps) {
    return to_py(to_json(verify_family({a, b, d}, steps)));
  }, py::arg("a"), py::arg("b"), py::arg("d"), py::arg("steps") = 5);
  m.def("scan", [](const NumericalSemigroup& s, Int m_max, Int from_m) {
    return to_py_list(scan(s, m_max, from_m));
  }, py::arg("sg"), py::arg("m_max"), py::arg("from_m") = 0);
}
