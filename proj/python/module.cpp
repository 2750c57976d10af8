// Python bindings for the main engine operations.  Polynomials enter as
// expression strings ("w^2 + w*i + j") or coefficient lists (lists of 8
// floats, lowest degree first); structured results come back as plain
// Python dicts/lists mirroring the JSON schemas.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hyperzero/camshaft.hpp"
#include "hyperzero/format.hpp"
#include "hyperzero/json_io.hpp"
#include "hyperzero/parse.hpp"
#include "hyperzero/series.hpp"
#include "hyperzero/zero_analysis.hpp"

namespace py = pybind11;

namespace {

py::object to_py(const hz::json& j) {
  return py::module_::import("json").attr("loads")(j.dump());
}

hz::Octonion as_octonion(const py::object& obj) {
  if (py::isinstance<py::str>(obj))
    return hz::parse_octonion(obj.cast<std::string>());
  const auto coords = obj.cast<std::vector<double>>();
  if (coords.size() > 8)
    throw hz::ParseError("an octonion has at most 8 coordinates", 0);
  hz::Octonion x;
  for (std::size_t idx = 0; idx < coords.size(); ++idx) x[idx] = coords[idx];
  return x;
}

hz::OctPoly as_poly(const py::object& obj) {
  if (py::isinstance<py::str>(obj))
    return hz::parse_poly(obj.cast<std::string>());
  std::vector<hz::Octonion> coeffs;
  for (const auto& item : obj.cast<py::list>())
    coeffs.push_back(as_octonion(py::reinterpret_borrow<py::object>(item)));
  return hz::OctPoly(std::move(coeffs));
}

std::vector<std::vector<double>> coeff_lists(const hz::OctPoly& f) {
  std::vector<std::vector<double>> out;
  for (const hz::Octonion& a : f.coeffs())
    out.emplace_back(a.coords().begin(), a.coords().end());
  return out;
}

}  // namespace

PYBIND11_MODULE(_hyperzero, m) {
  m.doc() = "zeros of regular polynomials over quaternions and octonions";

  py::register_exception<hz::Error>(m, "EngineError");

  m.def("mul", [](const py::object& x, const py::object& y) {
    const hz::Octonion r = hz::mul(as_octonion(x), as_octonion(y));
    return std::vector<double>(r.coords().begin(), r.coords().end());
  }, "octonion product in the basis (1, i, j, ij, k, ik, jk, (ij)k)");

  m.def("conj", [](const py::object& x) {
    const hz::Octonion r = hz::conj(as_octonion(x));
    return std::vector<double>(r.coords().begin(), r.coords().end());
  });

  m.def("inverse", [](const py::object& x) {
    const hz::Octonion r = hz::inverse(as_octonion(x));
    return std::vector<double>(r.coords().begin(), r.coords().end());
  });

  m.def("norm", [](const py::object& x) { return hz::norm(as_octonion(x)); });

  m.def("parse_poly",
        [](const std::string& text) { return coeff_lists(hz::parse_poly(text)); },
        "expression -> coefficient lists, lowest degree first");

  m.def("format_poly",
        [](const py::object& f) { return hz::format_poly(as_poly(f)); });

  m.def("format_octonion",
        [](const py::object& x) { return hz::format_octonion(as_octonion(x)); });

  m.def("star_mul", [](const py::object& f, const py::object& g) {
    return coeff_lists(hz::star_mul(as_poly(f), as_poly(g)));
  });

  m.def("evaluate", [](const py::object& f, const py::object& x) {
    const hz::Octonion r = hz::evaluate(as_poly(f), as_octonion(x));
    return std::vector<double>(r.coords().begin(), r.coords().end());
  });

  m.def("normal", [](const py::object& f) {
    return hz::normal(as_poly(f)).coeffs();
  }, "real coefficients of the normal polynomial N(f)");

  m.def("zeros", [](const py::object& f) {
    hz::json out = hz::json::array();
    for (const hz::ZeroRecord& rec : hz::zero_set(as_poly(f)))
      out.push_back(hz::to_json(rec));
    return to_py(out);
  });

  m.def("fta", [](const py::object& f) {
    return to_py(hz::to_json(hz::verify_fta(as_poly(f))));
  });

  m.def("factorize", [](const py::object& f) {
    return to_py(hz::to_json(hz::factorize(as_poly(f))));
  });

  m.def("remainder", [](const py::object& f, double t, double n) {
    return to_py(hz::to_json(hz::remainder_at(as_poly(f), {t, n})));
  });

  m.def("series_divide",
        [](const py::object& f, const py::object& alpha, std::size_t order,
           std::size_t out_order, double radius) {
          hz::TruncatedSeries s = hz::TruncatedSeries::from_poly(as_poly(f), order);
          s.radius = radius;
          auto [g, r] = hz::series_divide_linear(s, as_octonion(alpha), out_order);
          hz::json out;
          out["quotient"] = hz::to_json(g);
          out["remainder"] = hz::to_json(r);
          return to_py(out);
        },
        py::arg("f"), py::arg("alpha"), py::arg("order") = 64,
        py::arg("out_order") = std::numeric_limits<std::size_t>::max(),
        py::arg("radius") = std::numeric_limits<double>::infinity());

  m.def("verify_products",
        [](std::uint64_t trials, int max_degree, std::uint64_t seed) {
          return to_py(hz::to_json(hz::verify_products(trials, max_degree, seed)));
        },
        py::arg("trials") = 100, py::arg("max_degree") = 4, py::arg("seed") = 1);
}
