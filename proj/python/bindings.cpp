#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "projrefl/catalog.hpp"
#include "projrefl/cli.hpp"
#include "projrefl/expression.hpp"
#include "projrefl/render.hpp"

namespace py = pybind11;
using namespace projrefl;

namespace {

py::object to_python(const Json& j) { return py::module_::import("json").attr("loads")(j.dump()); }

Json from_python(const py::handle& obj) {
  return Json::parse(py::module_::import("json").attr("dumps")(obj).cast<std::string>());
}

CartanMatrix matrix_arg(const py::handle& entries, const std::string& field) {
  return cartan_from_json(Json{{"entries", from_python(entries)}}, parse_field_option(field));
}

CoxeterDiagram diagram_arg(const std::string& key) {
  const CatalogEntry e = find_catalog_entry(key);
  if (const auto* d = std::get_if<CoxeterDiagram>(&e.payload)) return *d;
  if (const auto* f = std::get_if<CatalogFamily>(&e.payload)) return f->diagram;
  return std::get<CatalogMatrix>(e.payload).diagram;
}

CatalogFamily family_arg(const std::string& key) {
  const CatalogEntry e = find_catalog_entry(key);
  const auto* f = std::get_if<CatalogFamily>(&e.payload);
  if (!f) throw PreconditionError("'" + key + "' is not a family");
  return *f;
}

}  // namespace

PYBIND11_MODULE(projrefl, m) {
  m.doc() = "Cartan matrices of projective reflection groups";

  py::register_exception<Error>(m, "Error", PyExc_ValueError);

  m.def("catalog_keys", [] {
    std::vector<std::string> keys;
    for (const auto& e : catalog()) keys.push_back(e.key);
    return keys;
  });

  m.def(
      "cyclic_signature",
      [](const py::handle& entries, const std::string& field) {
        return to_python(signature_to_json(cyclic_signature(matrix_arg(entries, field))));
      },
      py::arg("entries"), py::arg("field") = "");

  m.def(
      "determinant",
      [](const py::handle& entries, const std::string& field) {
        return determinant(matrix_arg(entries, field)).to_string();
      },
      py::arg("entries"), py::arg("field") = "");

  m.def(
      "validate",
      [](const py::handle& entries, const std::string& diagram, const std::string& field) {
        const VinbergReport r = validate_vinberg(matrix_arg(entries, field), diagram_arg(diagram));
        std::vector<std::string> out;
        for (const auto& v : r.violations) out.push_back(to_string(v.kind) + ": " + v.detail);
        return out;
      },
      py::arg("entries"), py::arg("diagram"), py::arg("field") = "",
      "Vinberg violations against a catalog diagram; empty when valid.");

  m.def(
      "diagonal_witness",
      [](const py::handle& a, const py::handle& b, const std::string& field) -> std::optional<std::vector<std::string>> {
        const auto w = diagonal_witness(matrix_arg(a, field), matrix_arg(b, field));
        if (!w) return std::nullopt;
        std::vector<std::string> out;
        for (const auto& x : *w) out.push_back(x.to_string());
        return out;
      },
      py::arg("a"), py::arg("b"), py::arg("field") = "");

  m.def("classify", [](const std::string& diagram) {
    const ClassificationResult r = classify_integer_classes(diagram_arg(diagram));
    py::list classes;
    for (std::size_t k = 0; k < r.representatives.size(); ++k)
      classes.append(to_python(Json{{"matrix", cartan_to_json(r.representatives[k])["entries"]},
                                    {"signature", signature_to_json(r.signatures[k])}}));
    py::dict out;
    out["count"] = r.count();
    out["classes"] = classes;
    return out;
  });

  m.def("solve_family", [](const std::string& key) {
    std::vector<std::string> ts;
    for (const auto& p : solve_integrality(family_arg(key).matrix).points) ts.push_back(p.t.to_string());
    return ts;
  });

  m.def("verify_family", [](const std::string& key, const std::string& t) {
    const CatalogFamily f = family_arg(key);
    const PointCheck pc = verify_at(f.matrix, parse_scalar(t, f.document.field));
    return to_python(Json{{"over_z", pc.over_z},
                          {"matrix", cartan_to_json(pc.matrix)["entries"]},
                          {"signature", signature_to_json(pc.signature)}});
  });

  m.def(
      "units_family",
      [](const std::string& diagram, long ring, const std::string& unit, int count) {
        const UnitFamilyResult r =
            units_family({diagram_arg(diagram), QuadraticRing(ring), parse_scalar(unit, FieldSpec::quadratic(ring)), count});
        py::list out;
        for (const auto& c : r.matrices) out.append(to_python(cartan_to_json(c)["entries"]));
        return out;
      },
      py::arg("diagram"), py::arg("ring"), py::arg("unit"), py::arg("count"));

  m.def(
      "word_ball_size",
      [](const py::handle& entries, int depth, const std::string& field) {
        return word_ball(realize(matrix_arg(entries, field)), depth).size();
      },
      py::arg("entries"), py::arg("depth"), py::arg("field") = "");

  m.def(
      "tile_svg",
      [](const py::handle& entries, int depth, const std::string& field) {
        ChartConfig cfg;
        cfg.depth = depth;
        return tile_svg(realize(matrix_arg(entries, field)), cfg);
      },
      py::arg("entries"), py::arg("depth") = 4, py::arg("field") = "");

  m.def(
      "run",
      [](const std::vector<std::string>& args) {
        const Report r = dispatch(args);
        return py::make_tuple(r.exit_code, to_python(r.to_json()));
      },
      py::arg("args"), "Runs a command-line invocation and returns (exit code, report).");
}
