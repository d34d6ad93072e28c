#include "projrefl/cli.hpp"

#include <algorithm>
#include <fstream>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "projrefl/catalog.hpp"
#include "projrefl/expression.hpp"
#include "projrefl/render.hpp"

namespace projrefl {

Json Report::to_json() const {
  return Json{{"command", command}, {"exit_code", exit_code}, {"warnings", warnings}, {"result", result}};
}

namespace {

struct Options {
  bool json = false;
  std::string field;
  int depth = -1;
  std::string output;
  std::vector<std::string> catalog_keys;
  std::vector<std::string> inputs;
  std::string diagram_path;
  std::string t;
  long long ring = 0;
  std::string unit;
  int count = 0;
};

// One resolved input: a catalog entry or a file.
struct Input {
  std::string label;
  std::string provenance;
  std::optional<int> reference_count;
  std::optional<CartanMatrix> matrix;
  std::optional<CoxeterDiagram> diagram;
  std::optional<FamilyDocument> family;
  std::optional<AlgNumber> sample;
};

struct UsageError : Error {
  using Error::Error;
};

FieldSpec option_field(const Options& o) { return parse_field_option(o.field); }

Input load_catalog(const std::string& key) {
  const CatalogEntry e = find_catalog_entry(key);
  Input in;
  in.label = e.key;
  in.provenance = e.provenance;
  in.reference_count = e.reference_count;
  if (const auto* d = std::get_if<CoxeterDiagram>(&e.payload)) {
    in.diagram = *d;
  } else if (const auto* f = std::get_if<CatalogFamily>(&e.payload)) {
    in.family = f->document;
    in.diagram = f->diagram;
    in.sample = f->sample;
  } else {
    const auto& m = std::get<CatalogMatrix>(e.payload);
    in.matrix = m.matrix;
    in.diagram = m.diagram;
  }
  return in;
}

Input load_file(const std::string& path, const FieldSpec& field) {
  const Json j = read_json_file(path);
  Input in;
  in.label = path;
  in.provenance = "file " + path;
  if (j.contains("parameter") || j.contains("domain")) {
    in.family = family_from_json(j, field);
  } else if (j.contains("entries")) {
    in.matrix = cartan_from_json(j, field);
  } else if (j.contains("faces")) {
    in.diagram = diagram_from_json(j);
    return in;
  } else {
    throw ParseError(path + ": not a Cartan matrix, family or diagram document", 0);
  }
  if (j.contains("diagram")) in.diagram = diagram_from_json(j.at("diagram"));
  return in;
}

std::vector<Input> load_inputs(const Options& o) {
  std::vector<Input> out;
  for (const auto& k : o.catalog_keys) out.push_back(load_catalog(k));
  for (const auto& p : o.inputs) out.push_back(load_file(p, option_field(o)));
  if (!o.diagram_path.empty()) {
    const CoxeterDiagram d = diagram_from_json(read_json_file(o.diagram_path));
    for (auto& in : out) in.diagram = d;
    if (out.empty()) out.push_back(Input{o.diagram_path, "file " + o.diagram_path, std::nullopt, std::nullopt, d,
                                         std::nullopt, std::nullopt});
  }
  return out;
}

Input single_input(const Options& o) {
  auto in = load_inputs(o);
  if (in.empty()) throw UsageError("no input: give a file or --catalog KEY");
  if (in.size() > 1) throw UsageError("this command takes exactly one input");
  return std::move(in.front());
}

AlgNumber parameter_value(const Input& in, const Options& o, Report& rep, bool required) {
  const FieldSpec f = FieldSpec::join(in.family->field, option_field(o));
  if (!o.t.empty()) return parse_scalar(o.t, f);
  if (required || !in.sample) throw UsageError("a family input needs --t VALUE");
  rep.warnings.push_back("no --t given; using t = " + in.sample->to_string());
  return *in.sample;
}

CartanMatrix resolve_matrix(const Input& in, const Options& o, Report& rep) {
  if (in.matrix) return *in.matrix;
  if (in.family) return in.family->build().evaluate(parameter_value(in, o, rep, false));
  throw UsageError("'" + in.label + "' is a diagram; this command needs a Cartan matrix");
}

const CoxeterDiagram& resolve_diagram(const Input& in) {
  if (!in.diagram) throw UsageError("'" + in.label + "' carries no diagram; pass --diagram FILE");
  return *in.diagram;
}

std::string pad(std::string s, std::size_t w) {
  if (s.size() < w) s.append(w - s.size(), ' ');
  return s;
}

std::string matrix_text(const AlgMatrix& m, const std::string& indent = "  ") {
  std::vector<std::size_t> width(m.cols(), 0);
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) width[j] = std::max(width[j], m(i, j).to_string().size());
  std::string out;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += indent + "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const std::string s = m(i, j).to_string();
      out += std::string(width[j] - s.size() + (j ? 1 : 0), ' ') + s;
    }
    out += "]\n";
  }
  return out;
}

Json violations_json(const VinbergReport& r) {
  Json out = Json::array();
  for (const auto& v : r.violations)
    out.push_back(Json{{"rule", to_string(v.kind)}, {"pair", {v.i + 1, v.j + 1}}, {"detail", v.detail}});
  return out;
}

bool all_nonpositive(const CartanMatrix& c) {
  for (int i = 0; i < c.size(); ++i)
    for (int j = 0; j < c.size(); ++j)
      if (i != j && c(i, j).sign() == Sign::positive) return false;
  return true;
}

// ---------------------------------------------------------------------------

void cmd_validate(const Options& o, Report& rep) {
  const Input in = single_input(o);
  const CartanMatrix c = resolve_matrix(in, o, rep);
  const CoxeterDiagram& d = resolve_diagram(in);
  const VinbergReport v = validate_vinberg(c, d);
  const bool finite = v.ok() && all_nonpositive(c) && vertex_groups_finite(c, d);
  rep.result = Json{{"input", in.label},
                    {"diagram", d.name()},
                    {"matrix", cartan_to_json(c)},
                    {"vinberg_ok", v.ok()},
                    {"violations", violations_json(v)},
                    {"vertex_groups_finite", finite},
                    {"ok", v.ok() && finite}};
  std::string t = "input: " + in.label + " on " + d.name() + "\n" + matrix_text(c.matrix());
  for (const auto& x : v.violations)
    t += "  " + to_string(x.kind) + " (" + std::to_string(x.i + 1) + "," + std::to_string(x.j + 1) + "): " + x.detail +
         "\n";
  t += std::string("Vinberg conditions: ") + (v.ok() ? "satisfied" : "violated") + "\n";
  t += std::string("vertex groups finite: ") + (finite ? "yes" : "no") + "\n";
  rep.text = t;
  rep.exit_code = v.ok() && finite ? 0 : 1;
}

void cmd_signature(const Options& o, Report& rep) {
  const Input in = single_input(o);
  if (in.family && o.t.empty()) {
    const ParametricMatrix p = in.family->build();
    const ParametricSignature sig = parametric_signature(p);
    rep.result = Json{{"input", in.label}, {"parameter", p.parameter()}, {"signature", parametric_signature_to_json(sig, p.parameter())}};
    std::string t = "input: " + in.label + " (parametric in " + p.parameter() + ")\n";
    for (const auto& [cycle, f] : sig) t += "  " + pad(cycle_to_string(cycle), 14) + f.to_string(p.parameter()) + "\n";
    rep.text = t;
    return;
  }
  const CartanMatrix c = resolve_matrix(in, o, rep);
  const std::optional<QuadraticRing> ring = o.ring ? std::optional(QuadraticRing(o.ring)) : std::nullopt;
  const Definability def = definability_generators(c, ring);
  Json gens = Json::array();
  for (const auto& g : def.generators) gens.push_back(g.to_string());
  Json defj{{"generators", gens}, {"over_z", def.over_z}};
  if (def.over_ok) defj["over_ring"] = *def.over_ok;
  const CyclicSignature sig = cyclic_signature(c);
  rep.result = Json{{"input", in.label},
                    {"signature", signature_to_json(sig)},
                    {"sign_rule", satisfies_sign_rule(sig)},
                    {"determinant", determinant(c).to_string()},
                    {"definability", defj}};
  std::string t = "input: " + in.label + "\n";
  for (const auto& [cycle, v] : sig) t += "  " + pad(cycle_to_string(cycle), 14) + v.to_string() + "\n";
  t += "determinant: " + determinant(c).to_string() + "\n";
  t += std::string("definable over Z: ") + (def.over_z ? "yes" : "no") + "\n";
  if (def.over_ok)
    t += "definable over O(sqrt(" + std::to_string(o.ring) + ")): " + (*def.over_ok ? "yes" : "no") + "\n";
  rep.text = t;
}

void cmd_classify(const Options& o, Report& rep) {
  const Input in = single_input(o);
  const CoxeterDiagram& d = resolve_diagram(in);
  const ClassificationResult r = classify_integer_classes(d);
  Json classes = Json::array();
  std::string t = "diagram: " + d.name() + "\n";
  for (int k = 0; k < r.count(); ++k) {
    classes.push_back(Json{{"matrix", cartan_to_json(r.representatives[static_cast<std::size_t>(k)])},
                           {"signature", signature_to_json(r.signatures[static_cast<std::size_t>(k)])}});
    t += "class " + std::to_string(k + 1) + ": " + signature_to_string(r.signatures[static_cast<std::size_t>(k)]) + "\n";
    t += matrix_text(r.representatives[static_cast<std::size_t>(k)].matrix());
  }
  rep.result = Json{{"diagram", d.name()},
                    {"count", r.count()},
                    {"candidates", r.candidates},
                    {"rejected",
                     {{"decomposable", r.rejected.decomposable},
                      {"non_negative_type", r.rejected.non_negative_type},
                      {"vertex_infinite", r.rejected.vertex_infinite}}},
                    {"count_up_to_symmetry", count_up_to_symmetry(r, d)},
                    {"classes", classes},
                    {"provenance", in.provenance}};
  if (in.reference_count) rep.result["reference_count"] = *in.reference_count;
  t += "count: " + std::to_string(r.count()) + " (" + std::to_string(r.candidates) + " candidate matrices)\n";
  if (in.reference_count && *in.reference_count != r.count())
    rep.warnings.push_back("enumerated " + std::to_string(r.count()) + " classes for " + d.name() +
                           " but the published table lists " + std::to_string(*in.reference_count) +
                           "; every enumerated class is realized by the integral matrix shown and the "
                           "signatures are pairwise distinct");
  rep.text = t;
}

void cmd_compare(const Options& o, Report& rep) {
  auto ins = load_inputs(o);
  if (ins.size() != 2) throw UsageError("compare takes exactly two inputs");
  const CartanMatrix a = resolve_matrix(ins[0], o, rep);
  const CartanMatrix b = resolve_matrix(ins[1], o, rep);
  const bool eq = a.size() == b.size() && equivalent(a, b);
  const auto w = a.size() == b.size() ? diagonal_witness(a, b) : std::nullopt;
  Json wj = nullptr;
  std::string t = ins[0].label + " vs " + ins[1].label + ": " + (eq ? "equivalent" : "not equivalent") + "\n";
  if (w) {
    wj = Json::array();
    for (const auto& x : *w) wj.push_back(x.to_string());
    t += "witness D = diag(";
    for (std::size_t k = 0; k < w->size(); ++k) t += (k ? ", " : "") + (*w)[k].to_string();
    t += "), A = D B D^-1\n";
  }
  rep.result = Json{{"inputs", {ins[0].label, ins[1].label}}, {"equivalent", eq}, {"witness", wj}};
  rep.text = t;
}

void cmd_realize(const Options& o, Report& rep) {
  const Input in = single_input(o);
  const CartanMatrix c = resolve_matrix(in, o, rep);
  const Realization r = realize(c);
  rep.result = realization_to_json(r);
  rep.result["input"] = in.label;
  std::string t = "input: " + in.label + "\nrank r = " + std::to_string(r.r) + "\n";
  for (int i = 0; i < r.generators(); ++i)
    t += "sigma_" + std::to_string(i + 1) + ":\n" + matrix_text(r.reflections[static_cast<std::size_t>(i)]);
  if (o.depth >= 0) {
    const auto ball = word_ball(r, o.depth);
    rep.result["depth"] = o.depth;
    rep.result["word_ball"] = word_ball_to_json(ball);
    t += "word ball of radius " + std::to_string(o.depth) + ": " + std::to_string(ball.size()) + " elements\n";
  }
  rep.text = t;
}

void cmd_relations(const Options& o, Report& rep) {
  const Input in = single_input(o);
  const CartanMatrix c = resolve_matrix(in, o, rep);
  const CoxeterDiagram& d = resolve_diagram(in);
  const Realization r = realize(c);
  const RelationReport report = check_relations(r, d);
  Json checks = Json::array();
  std::string t = "input: " + in.label + " on " + d.name() + "\n";
  for (const auto& x : report.checks) {
    checks.push_back(Json{{"pair", {x.s + 1, x.t + 1}}, {"order", x.order}, {"holds", x.holds}, {"detail", x.detail}});
    t += std::string(x.holds ? "  ok    " : "  FAIL  ") + x.detail + "\n";
  }
  Json traces = Json::array();
  bool traces_ok = true;
  for (int i = 0; i < c.size(); ++i)
    for (int j = i + 1; j < c.size(); ++j) {
      const AlgNumber tr = trace(r.reflections[static_cast<std::size_t>(i)] * r.reflections[static_cast<std::size_t>(j)]);
      const bool ok = tr == AlgNumber(static_cast<long>(r.r - 4)) + c(i, j) * c(j, i);
      traces_ok = traces_ok && ok;
      traces.push_back(Json{{"pair", {i + 1, j + 1}}, {"trace", tr.to_string()}, {"matches", ok}});
    }
  rep.result = Json{{"input", in.label}, {"r", r.r}, {"ok", report.ok() && traces_ok}, {"checks", checks}, {"traces", traces}};
  t += std::string("trace identity tr(s_i s_j) = r - 4 + c_ij c_ji: ") + (traces_ok ? "holds" : "FAILS") + "\n";
  rep.text = t;
  rep.exit_code = report.ok() && traces_ok ? 0 : 1;
}

void cmd_orbit_svg(const Options& o, Report& rep) {
  const Input in = single_input(o);
  const CartanMatrix c = resolve_matrix(in, o, rep);
  const Realization r = realize(c);
  ChartConfig cfg;
  if (o.depth >= 0) cfg.depth = o.depth;
  const SvgScene scene = build_scene(r, cfg);
  rep.document = render_svg(scene, cfg);
  const auto w = chart_weights(c);
  rep.result = Json{{"input", in.label},
                    {"depth", cfg.depth},
                    {"polygons", scene.polygons.size()},
                    {"culled", scene.culled},
                    {"chart_weights", {w[0].to_string(), w[1].to_string(), w[2].to_string()}}};
  if (!o.output.empty()) rep.result["output"] = o.output;
  rep.text = "input: " + in.label + "\n" + std::to_string(scene.polygons.size()) + " tiles at depth " +
             std::to_string(cfg.depth) + ", " + std::to_string(scene.culled) + " culled\n";
}

Json point_json(const PointCheck& pc) {
  return Json{{"t", pc.t.to_string()},
              {"over_z", pc.over_z},
              {"signature", signature_to_json(pc.signature)},
              {"matrix", cartan_to_json(pc.matrix)}};
}

void cmd_family_verify(const Options& o, Report& rep) {
  const Input in = single_input(o);
  if (!in.family) throw UsageError("family-verify needs a family input");
  const ParametricMatrix p = in.family->build();
  const AlgNumber t0 = parameter_value(in, o, rep, true);
  const PointCheck pc = verify_at(p, t0);
  rep.result = point_json(pc);
  rep.result["input"] = in.label;
  std::string t = "input: " + in.label + " at " + p.parameter() + " = " + t0.to_string() + "\n" +
                  matrix_text(pc.matrix.matrix());
  for (const auto& [cycle, v] : pc.signature) t += "  " + pad(cycle_to_string(cycle), 14) + v.to_string() + "\n";
  t += std::string("definable over Z: ") + (pc.over_z ? "yes" : "no") + "\n";
  if (in.diagram) {
    const VinbergReport v = validate_vinberg(pc.matrix, *in.diagram);
    rep.result["vinberg_ok"] = v.ok();
    rep.result["violations"] = violations_json(v);
    t += std::string("Vinberg conditions on ") + in.diagram->name() + ": " + (v.ok() ? "satisfied" : "violated") + "\n";
  }
  rep.text = t;
}

void cmd_family_solve(const Options& o, Report& rep) {
  const Input in = single_input(o);
  if (!in.family) throw UsageError("family-solve needs a family input");
  const ParametricMatrix p = in.family->build();
  const IntegralitySolution s = solve_integrality(p);
  Json points = Json::array();
  std::string t = "input: " + in.label + ", domain " + p.parameter() + " in " + p.domain().to_string() + "\n";
  for (const auto& pc : s.points) {
    points.push_back(point_json(pc));
    t += "  " + p.parameter() + " = " + pad(pc.t.to_string(), 12) + signature_to_string(pc.signature) + "\n";
  }
  rep.result = Json{{"input", in.label},
                    {"domain", p.domain().to_string()},
                    {"whole_domain", s.whole_domain},
                    {"solutions", points},
                    {"parametric_signature", parametric_signature_to_json(parametric_signature(p), p.parameter())}};
  if (s.whole_domain) {
    rep.result["signature"] = signature_to_json(*s.constant_signature);
    t += "every parameter value gives the same integral class\n";
  } else {
    t += std::to_string(s.points.size()) + " integral parameter value(s)\n";
  }
  rep.text = t;
}

void cmd_units_family(const Options& o, Report& rep) {
  const Input in = single_input(o);
  const CoxeterDiagram& d = resolve_diagram(in);
  if (!o.ring) throw UsageError("units-family needs --ring D");
  if (o.unit.empty()) throw UsageError("units-family needs --unit EXPR");
  const FieldSpec field = FieldSpec::join(FieldSpec::quadratic(o.ring), option_field(o));
  UnitFamilySpec spec{d, QuadraticRing(o.ring), parse_scalar(o.unit, field), o.count > 0 ? o.count : 3};
  const UnitFamilyResult r = units_family(spec);
  Json mats = Json::array();
  std::string t = "diagram: " + d.name() + ", unit " + spec.unit.to_string() + "\n";
  for (std::size_t k = 0; k < r.matrices.size(); ++k) {
    const auto& c = r.matrices[k];
    const CyclicSignature sig = cyclic_signature(c);
    mats.push_back(Json{{"exponent", r.exponents[k]},
                        {"unit", pow(spec.unit, r.exponents[k]).to_string()},
                        {"matrix", cartan_to_json(c)},
                        {"signature", signature_to_json(sig)},
                        {"determinant", determinant(c).to_string()}});
    t += "u = eps^" + std::to_string(r.exponents[k]) + ": " + signature_to_string(sig) + "\n" + matrix_text(c.matrix());
  }
  Json skipped = Json::array();
  for (const auto& s : r.skipped) {
    skipped.push_back(Json{{"exponent", s.exponent}, {"reason", s.reason}});
    t += "skipped eps^" + std::to_string(s.exponent) + ": " + s.reason + "\n";
  }
  Json poly = Json::array();
  for (int f : r.polygon) poly.push_back(f + 1);
  rep.result = Json{{"diagram", d.name()}, {"polygon", poly}, {"matrices", mats}, {"skipped", skipped}};
  rep.text = t;
}

void cmd_catalog(const Options&, Report& rep) {
  Json list = Json::array();
  std::string t;
  for (const auto& e : catalog()) {
    const char* kind = std::holds_alternative<CoxeterDiagram>(e.payload)  ? "diagram"
                       : std::holds_alternative<CatalogFamily>(e.payload) ? "family"
                                                                          : "matrix";
    Json item{{"key", e.key}, {"kind", kind}, {"provenance", e.provenance}};
    if (e.reference_count) item["reference_count"] = *e.reference_count;
    list.push_back(std::move(item));
    t += pad(e.key, 24) + pad(kind, 9) + e.provenance + "\n";
  }
  rep.result = Json{{"entries", list}};
  rep.text = t;
}

}  // namespace

Report dispatch(const std::vector<std::string>& args) {
  Report rep;
  Options o;
  CLI::App app{"Cartan matrices of projective reflection groups: validation, classification, families, tilings",
               "projrefl"};
  app.require_subcommand(1, 1);
  app.add_flag("--json", o.json, "Machine-readable output");
  app.add_option("--field", o.field, "Radicands of the ambient field, e.g. \"5,6\"");
  app.add_option("--depth", o.depth, "Word-ball radius")->check(CLI::NonNegativeNumber);
  app.add_option("-o,--output", o.output, "Write the result to PATH");

  using Handler = void (*)(const Options&, Report&);
  const std::vector<std::tuple<std::string, std::string, Handler>> commands = {
      {"validate", "Check the Vinberg conditions against a diagram", cmd_validate},
      {"signature", "Simple cyclic products and definability", cmd_signature},
      {"classify", "Integral classes on a simplex diagram", cmd_classify},
      {"compare", "Diagonal equivalence of two matrices", cmd_compare},
      {"realize", "Reflection representation (and word ball with --depth)", cmd_realize},
      {"relations", "Verify the Coxeter relations exactly", cmd_relations},
      {"orbit-svg", "SVG tiling of a triangle group", cmd_orbit_svg},
      {"family-verify", "Evaluate a family at --t", cmd_family_verify},
      {"family-solve", "Integral parameter values of a family", cmd_family_solve},
      {"units-family", "Infinite families over a quadratic ring", cmd_units_family},
      {"catalog", "List built-in diagrams, matrices and families", cmd_catalog},
  };
  Handler handler = nullptr;
  for (const auto& [name, help, h] : commands) {
    CLI::App* sub = app.add_subcommand(name, help);
    sub->fallthrough();
    if (name != "catalog") {
      sub->add_option("inputs", o.inputs, "JSON input files");
      sub->add_option("--catalog", o.catalog_keys, "Built-in entry key")->take_all();
      sub->add_option("--diagram", o.diagram_path, "Diagram JSON file");
      sub->add_option("--t", o.t, "Parameter value expression");
    }
    if (name == "signature" || name == "units-family") sub->add_option("--ring", o.ring, "Squarefree d of O(sqrt(d))");
    if (name == "units-family") {
      sub->add_option("--unit", o.unit, "Fundamental unit expression");
      sub->add_option("--count", o.count, "Number of powers of the unit")->check(CLI::PositiveNumber);
    }
    const Handler hh = h;
    sub->callback([&handler, hh] { handler = hh; });
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    rep.command = "help";
    rep.text = app.help();
    for (const auto* sub : app.get_subcommands())
      if (sub->parsed()) rep.text = sub->help();
    return rep;
  } catch (const CLI::ParseError& e) {
    rep.command = args.empty() ? "" : args.front();
    rep.exit_code = 2;
    rep.result = Json{{"error", e.what()}};
    rep.text = std::string("usage error: ") + e.what() + "\n\n" + app.help();
    return rep;
  }

  for (const auto* sub : app.get_subcommands()) rep.command = sub->get_name();
  try {
    handler(o, rep);
  } catch (const UsageError& e) {
    rep.exit_code = 2;
    rep.result = Json{{"error", e.what()}};
    rep.text = std::string("usage error: ") + e.what() + "\n";
  } catch (const std::exception& e) {
    rep.exit_code = 1;
    rep.result = Json{{"error", e.what()}};
    rep.text = std::string("error: ") + e.what() + "\n";
  }
  if (o.json && o.output.empty() && !rep.document.empty()) rep.result["svg"] = rep.document;
  rep.json = o.json;
  rep.output = o.output;
  if (!o.output.empty() && rep.exit_code != 2) {
    std::ofstream out(o.output, std::ios::binary);
    if (rep.document.empty()) out << (o.json ? rep.to_json().dump(2) + "\n" : rep.text);
    else out << rep.document;
    if (!out) {
      rep.exit_code = 1;
      rep.text += "error: cannot write '" + o.output + "'\n";
    }
  }
  return rep;
}

}  // namespace projrefl
