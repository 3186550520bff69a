#include <array>
#include <string>
#include <variant>
#include <vector>

#include <pybind11/complex.h>
#include <pybind11/eigen.h>
#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "octslice/continuation.hpp"
#include "octslice/operators.hpp"
#include "octslice/suites.hpp"
#include "octslice/taylor.hpp"

namespace py = pybind11;
using namespace octslice;

namespace {

using Coeffs = std::array<double, 8>;
// A unit is given either as a basis index 1..7 or as eight coefficients.
using UnitArg = std::variant<int, Coeffs>;

ImaginaryUnit to_unit(const UnitArg& u) {
  if (const int* i = std::get_if<int>(&u)) return ImaginaryUnit::basis(*i);
  return ImaginaryUnit(Octonion(std::get<Coeffs>(u)));
}

Octonion oct(const Coeffs& c) { return Octonion(c); }
Coeffs coeffs(const Octonion& q) { return q.coeffs(); }

// nlohmann::json -> Python objects through the json module.
py::object to_py(const nlohmann::json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Octonionic slice analysis";

  py::register_exception<DomainError>(m, "DomainError", PyExc_ValueError);

  m.def("mul", [](const Coeffs& a, const Coeffs& b) { return coeffs(oct(a) * oct(b)); }, py::arg("a"), py::arg("b"));
  m.def("conj", [](const Coeffs& a) { return coeffs(oct(a).conj()); });
  m.def("inv", [](const Coeffs& a) { return coeffs(inv(oct(a))); });
  m.def("norm", [](const Coeffs& a) { return oct(a).norm(); });
  m.def("scalar_product", [](const Coeffs& a, const Coeffs& b) { return scalar_product(oct(a), oct(b)); });
  m.def("basis", [](int i) { return coeffs(Octonion::basis(i)); }, py::arg("i"));
  m.def("multiplication_table", [] {
    std::vector<std::vector<std::pair<int, int>>> t(8);
    for (int i = 0; i < 8; ++i)
      for (const BasisProduct& b : multiplication_table()[static_cast<std::size_t>(i)]) t[static_cast<std::size_t>(i)].emplace_back(b.sign, b.index);
    return t;
  });
  m.def("left_mult_matrix", [](const Coeffs& q) -> Mat8 { return left_mult_matrix(oct(q)).matrix(); });
  m.def("difference_inverse", [](const UnitArg& J, const UnitArg& K) -> Mat8 {
    return difference_inverse(to_unit(J), to_unit(K)).matrix();
  });

  py::class_<SlicePoint>(m, "SlicePoint")
      .def(py::init([](RealVector x, RealVector y, const UnitArg& unit) { return SlicePoint(x, y, to_unit(unit)); }),
           py::arg("x"), py::arg("y"), py::arg("unit") = UnitArg(1))
      .def_property_readonly("x", &SlicePoint::x)
      .def_property_readonly("y", &SlicePoint::y)
      .def_property_readonly("unit", [](const SlicePoint& p) { return coeffs(p.unit().value()); })
      .def_property_readonly("dim", &SlicePoint::dim)
      .def("to_octonions",
           [](const SlicePoint& p) {
             std::vector<Coeffs> out;
             for (const Octonion& o : p.to_octonions()) out.push_back(coeffs(o));
             return out;
           })
      .def(py::self == py::self)
      .def("__repr__", [](const SlicePoint& p) { return "SlicePoint(" + to_json(p).dump() + ")"; });

  m.def(
      "star_power_apply",
      [](const SlicePoint& q, const SlicePoint& p, std::vector<int> alpha, const Coeffs& a) {
        return coeffs(star_power_apply(q, p, MultiIndex(std::move(alpha)), oct(a)));
      },
      py::arg("q"), py::arg("p"), py::arg("alpha"), py::arg("a"));

  m.def(
      "bound_check_mk",
      [](const Coeffs& r, const Coeffs& s, const UnitArg& I, const UnitArg& J) {
        const MkBound b = bound_check_mk(oct(r), oct(s), to_unit(I), to_unit(J));
        py::dict d;
        d["holds"] = b.holds;
        d["lower"] = b.lower;
        d["value"] = b.value;
        d["upper"] = b.upper;
        return d;
      },
      py::arg("r"), py::arg("s"), py::arg("I"), py::arg("J"));

  py::class_<WeakSqrtExtension>(m, "WeakSqrt")
      .def(py::init([](std::size_t n, const UnitArg& I, const UnitArg& J) {
             return WeakSqrtExtension(n, to_unit(I), to_unit(J));
           }),
           py::arg("n") = 1, py::arg("I") = UnitArg(1), py::arg("J") = UnitArg(2))
      .def("__call__", [](const WeakSqrtExtension& f, const SlicePoint& q) { return coeffs(f(q)); })
      .def("contains", [](const WeakSqrtExtension& f, const SlicePoint& q) { return domain_contains(f.domain(), q); })
      .def_property_readonly("domain", [](const WeakSqrtExtension& f) { return to_py(to_json(f.domain())); });

  m.def(
      "verify_not_slice",
      [](const UnitArg& I, const UnitArg& J, std::size_t n) { return to_py(to_json(verify_not_slice(to_unit(I), to_unit(J), n))); },
      py::arg("I") = UnitArg(1), py::arg("J") = UnitArg(2), py::arg("n") = 1);

  m.def(
      "run_suites",
      [](const std::string& command, std::uint64_t seed, std::size_t probes, std::optional<double> tol) {
        SuiteConfig cfg;
        cfg.seed = seed;
        cfg.probes = probes;
        cfg.tol = tol;
        std::vector<SuiteResult> r;
        if (command == "verify-algebra") r = run_verify_algebra(cfg);
        else if (command == "verify-slice") r = run_verify_slice(cfg);
        else if (command == "taylor-demo") r = run_taylor_demo(cfg);
        else if (command == "sqrt-example") r = run_sqrt_example(cfg);
        else throw py::value_error("unknown command: " + command);
        nlohmann::json out = nlohmann::json::array();
        for (const SuiteResult& s : r) out.push_back(to_json(s));
        return to_py(out);
      },
      py::arg("command"), py::arg("seed") = 1, py::arg("probes") = 0, py::arg("tol") = py::none());
}
