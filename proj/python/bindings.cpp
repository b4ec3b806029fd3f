#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "lowdeg/cli.hpp"
#include "lowdeg/errors.hpp"
#include "lowdeg/json_io.hpp"
#include "lowdeg/selftest.hpp"

namespace py = pybind11;
using namespace lowdeg;

namespace {

DivisorClass to_class(const std::vector<long>& v) {
  std::vector<Integer> coords(v.begin(), v.end());
  return DivisorClass(std::move(coords));
}

IntersectionLattice to_lattice(const std::vector<std::vector<long>>& gram) {
  std::vector<std::vector<Integer>> rows;
  for (const auto& r : gram) rows.push_back(to_class(r).coords());
  return IntersectionLattice(std::move(rows));
}

std::optional<bool> flag(const std::optional<std::string>& v) {
  if (!v) return std::nullopt;
  if (*v != "yes" && *v != "no") throw InputError("expected 'yes' or 'no', got '" + *v + "'");
  return *v == "yes";
}

std::string certify_json(const std::string& model, const std::optional<std::vector<long>>& cls,
                         const std::optional<std::string>& rational_point,
                         const std::optional<std::string>& bielliptic) {
  auto m = cli::builtin_model(model);
  CurveSpec spec = m.kind() == SurfaceKind::CompleteIntersection
                       ? CurveSpec::complete_intersection(m.ci_degrees())
                       : CurveSpec{m, {}, {}, {}};
  if (cls) spec.cls = to_class(*cls);
  else if (m.kind() != SurfaceKind::CompleteIntersection) throw InputError("a curve class is required");
  spec.has_rational_point = flag(rational_point);
  spec.bielliptic = flag(bielliptic);
  return json::render(json::certificate_to_json(certify(spec)));
}

std::string exc_json(const std::vector<std::vector<long>>& gram, const std::vector<std::vector<long>>& rays,
                     const std::vector<long>& p) {
  std::vector<DivisorClass> rs;
  for (const auto& r : rays) rs.push_back(to_class(r));
  auto cone = RationalCone::from_rays(to_lattice(gram), std::move(rs));
  return json::render(json::exc_report_to_json(exc_set(cone, to_class(p))));
}

std::string destab_json(const std::string& model, const std::vector<long>& curve, long e) {
  DestabilizerQuery q(cli::builtin_model(model), to_class(curve), Integer(e));
  return json::render(json::destab_certificate_to_json(contradiction_certificate(q)));
}

py::tuple run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return py::make_tuple(code, out.str(), err.str());
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact gonality and degree-of-irrationality certificates";
  py::register_exception<InputError>(m, "InputError", PyExc_ValueError);
  py::register_exception<Unsupported>(m, "Unsupported", PyExc_NotImplementedError);
  py::register_exception<InvariantError>(m, "InvariantError", PyExc_RuntimeError);

  m.def("certify_json", &certify_json, py::arg("model"), py::arg("cls") = std::nullopt,
        py::arg("rational_point") = std::nullopt, py::arg("bielliptic") = std::nullopt);
  m.def("exc_json", &exc_json, py::arg("gram"), py::arg("rays"), py::arg("p"));
  m.def("destab_json", &destab_json, py::arg("model"), py::arg("curve"), py::arg("e"));
  m.def("run_cli", &run_cli, py::arg("args"));
  m.def("selftest", [] {
    auto results = run_selftest();
    py::list out;
    for (const auto& r : results) out.append(py::make_tuple(r.property, r.passed, r.detail));
    return out;
  });
}
