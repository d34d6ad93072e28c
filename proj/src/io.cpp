#include "projrefl/io.hpp"

#include <fstream>
#include <sstream>

#include "projrefl/expression.hpp"

namespace projrefl {

namespace {

std::string expr_text(const Json& j, const std::string& what) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_number_integer()) return std::to_string(j.get<long long>());
  throw ParseError(what + " must be an integer or an expression string", 0);
}

const Json& member(const Json& j, const char* key, const std::string& what) {
  if (!j.is_object() || !j.contains(key)) throw ParseError(what + " needs a \"" + key + "\" member", 0);
  return j.at(key);
}

int face_ref(const Json& j, const std::vector<std::string>& faces) {
  if (j.is_number_integer()) {
    const long long k = j.get<long long>();
    if (k < 1 || k > static_cast<long long>(faces.size()))
      throw ParseError("face index " + std::to_string(k) + " out of range", 0);
    return static_cast<int>(k - 1);
  }
  if (j.is_string()) {
    const auto label = j.get<std::string>();
    for (std::size_t i = 0; i < faces.size(); ++i)
      if (faces[i] == label) return static_cast<int>(i);
    throw ParseError("unknown face '" + label + "'", 0);
  }
  throw ParseError("faces are referenced by label or 1-based index", 0);
}

std::vector<std::vector<std::string>> entry_grid(const Json& j) {
  if (!j.is_array() || j.empty()) throw ParseError("\"entries\" must be a non-empty array of rows", 0);
  std::vector<std::vector<std::string>> out;
  for (const auto& row : j) {
    if (!row.is_array() || row.size() != j.size()) throw ParseError("\"entries\" must be a square array", 0);
    std::vector<std::string> r;
    for (const auto& x : row) r.push_back(expr_text(x, "matrix entry"));
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace

Json field_to_json(const FieldSpec& f) {
  Json r = Json::array();
  for (auto d : f.radicands()) r.push_back(d);
  return Json{{"radicands", r}};
}

FieldSpec field_from_json(const Json& j) {
  const Json& r = member(j, "radicands", "field");
  if (!r.is_array()) throw ParseError("\"radicands\" must be an array", 0);
  std::vector<std::int64_t> ds;
  for (const auto& x : r) {
    if (!x.is_number_integer()) throw ParseError("radicands must be integers", 0);
    ds.push_back(x.get<std::int64_t>());
  }
  return FieldSpec::from_radicands(ds);
}

FieldSpec parse_field_option(const std::string& text) {
  std::vector<std::int64_t> ds;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto b = item.find_first_not_of(" \t");
    if (b == std::string::npos) continue;
    const auto e = item.find_last_not_of(" \t");
    item = item.substr(b, e - b + 1);
    std::size_t used = 0;
    long long v = 0;
    try {
      v = std::stoll(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used != item.size() || item.empty()) throw ParseError("radicand '" + item + "' is not an integer", 0);
    ds.push_back(v);
  }
  return FieldSpec::from_radicands(ds);
}

Json matrix_to_json(const AlgMatrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(m(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

Json cartan_to_json(const CartanMatrix& c) {
  return Json{{"field", field_to_json(c.field())}, {"entries", matrix_to_json(c.matrix())}};
}

CartanMatrix cartan_from_json(const Json& j, const FieldSpec& fallback) {
  const FieldSpec field = j.contains("field") ? FieldSpec::join(field_from_json(j.at("field")), fallback) : fallback;
  const auto grid = entry_grid(member(j, "entries", "Cartan matrix"));
  AlgMatrix m(grid.size(), grid.size());
  for (std::size_t i = 0; i < grid.size(); ++i)
    for (std::size_t k = 0; k < grid.size(); ++k) m(i, k) = parse_scalar(grid[i][k], field);
  return CartanMatrix(std::move(m));
}

Json diagram_to_json(const CoxeterDiagram& d) {
  Json edges = Json::array();
  for (const auto& [pair, m] : d.orders())
    edges.push_back(Json{{"faces", {pair.first + 1, pair.second + 1}}, {"order", m}});
  Json nonadjacent = Json::array();
  for (const auto& pair : d.nonadjacent()) nonadjacent.push_back({pair.first + 1, pair.second + 1});
  Json vertices = Json::array();
  for (const auto& v : d.vertices()) {
    Json vj = Json::array();
    for (int f : v) vj.push_back(f + 1);
    vertices.push_back(std::move(vj));
  }
  return Json{{"name", d.name()},          {"dimension", d.dimension()},     {"faces", d.faces()},
              {"edges", std::move(edges)}, {"nonadjacent", std::move(nonadjacent)}, {"vertices", std::move(vertices)}};
}

CoxeterDiagram diagram_from_json(const Json& j) {
  const Json& fj = member(j, "faces", "diagram");
  std::vector<std::string> faces;
  if (fj.is_number_integer()) {
    for (long long i = 1; i <= fj.get<long long>(); ++i) faces.push_back("F" + std::to_string(i));
  } else if (fj.is_array()) {
    for (const auto& f : fj) {
      if (!f.is_string()) throw ParseError("face labels must be strings", 0);
      faces.push_back(f.get<std::string>());
    }
  } else {
    throw ParseError("\"faces\" must be a count or a list of labels", 0);
  }

  std::map<FacePair, int> orders;
  if (j.contains("edges")) {
    for (const auto& e : j.at("edges")) {
      const Json& pair = member(e, "faces", "edge");
      if (!pair.is_array() || pair.size() != 2) throw ParseError("edge \"faces\" must list two faces", 0);
      const int s = face_ref(pair[0], faces);
      const int t = face_ref(pair[1], faces);
      if (s == t) throw ParseError("edge joins a face to itself", 0);
      const Json& m = member(e, "order", "edge");
      if (!m.is_number_integer()) throw ParseError("edge order must be an integer", 0);
      if (!orders.emplace(make_pair_key(s, t), m.get<int>()).second) throw ParseError("edge listed twice", 0);
    }
  }
  std::set<FacePair> nonadjacent;
  if (j.contains("nonadjacent")) {
    for (const auto& pair : j.at("nonadjacent")) {
      if (!pair.is_array() || pair.size() != 2) throw ParseError("non-adjacent entries must list two faces", 0);
      nonadjacent.insert(make_pair_key(face_ref(pair[0], faces), face_ref(pair[1], faces)));
    }
  }
  std::vector<std::vector<int>> vertices;
  if (j.contains("vertices")) {
    for (const auto& v : j.at("vertices")) {
      std::vector<int> vf;
      for (const auto& f : v) vf.push_back(face_ref(f, faces));
      vertices.push_back(std::move(vf));
    }
  } else if (nonadjacent.empty()) {
    for (int skip = static_cast<int>(faces.size()) - 1; skip >= 0; --skip) {
      std::vector<int> vf;
      for (int i = 0; i < static_cast<int>(faces.size()); ++i)
        if (i != skip) vf.push_back(i);
      vertices.push_back(std::move(vf));
    }
  }
  int dimension = static_cast<int>(faces.size()) - 1;
  if (j.contains("dimension")) {
    dimension = j.at("dimension").get<int>();
  } else if (!vertices.empty()) {
    dimension = static_cast<int>(vertices.front().size());
  }
  const std::string name = j.contains("name") ? j.at("name").get<std::string>() : std::string("diagram");
  return CoxeterDiagram(name, dimension, std::move(faces), std::move(orders), std::move(nonadjacent),
                        std::move(vertices));
}

ParametricMatrix FamilyDocument::build() const {
  ParseContext ctx;
  ctx.field = field;
  ctx.allow_parameter = true;
  ctx.parameter = parameter;
  for (const auto& [name, text] : definitions) {
    if (name == parameter || name == "sqrt") throw ParseError("definition name '" + name + "' is reserved", 0);
    ctx.definitions[name] = parse_expression(text, ctx);
  }
  Matrix<RationalFunction> m(entries.size(), entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) {
    if (entries[i].size() != entries.size()) throw ParseError("family entries must be square", 0);
    for (std::size_t k = 0; k < entries.size(); ++k) {
      RationalFunction f = parse_expression(entries[i][k], ctx);
      if (f.denominator().is_zero()) throw DivisionByZero("entry denominator is identically zero");
      m(i, k) = std::move(f);
    }
  }
  ParameterDomain domain;
  domain.min_open = min_open;
  domain.max_open = max_open;
  if (domain_min != "-inf") domain.min = parse_scalar(domain_min, field);
  if (domain_max != "+inf" && domain_max != "inf") domain.max = parse_scalar(domain_max, field);
  return ParametricMatrix(std::move(m), std::move(domain), parameter);
}

Json family_to_json(const FamilyDocument& f) {
  Json out{{"field", field_to_json(f.field)}, {"parameter", f.parameter}};
  if (!f.definitions.empty()) {
    Json defs = Json::object();
    for (const auto& [name, text] : f.definitions) defs[name] = text;
    out["definitions"] = std::move(defs);
  }
  out["domain"] = Json{{"min", f.domain_min}, {"max", f.domain_max}, {"min_open", f.min_open}, {"max_open", f.max_open}};
  out["entries"] = f.entries;
  return out;
}

FamilyDocument family_from_json(const Json& j, const FieldSpec& fallback) {
  FamilyDocument f;
  f.field = j.contains("field") ? FieldSpec::join(field_from_json(j.at("field")), fallback) : fallback;
  if (j.contains("parameter")) f.parameter = j.at("parameter").get<std::string>();
  if (j.contains("definitions")) {
    const Json& defs = j.at("definitions");
    if (defs.is_object()) {
      for (const auto& [name, text] : defs.items()) f.definitions.emplace_back(name, expr_text(text, "definition"));
    } else if (defs.is_array()) {
      for (const auto& d : defs) {
        if (!d.is_array() || d.size() != 2 || !d[0].is_string())
          throw ParseError("definitions must be [name, expression] pairs", 0);
        f.definitions.emplace_back(d[0].get<std::string>(), expr_text(d[1], "definition"));
      }
    } else {
      throw ParseError("\"definitions\" must be an object", 0);
    }
  }
  if (j.contains("domain")) {
    const Json& d = j.at("domain");
    if (d.contains("min")) f.domain_min = expr_text(d.at("min"), "domain bound");
    if (d.contains("max")) f.domain_max = expr_text(d.at("max"), "domain bound");
    if (d.contains("min_open")) f.min_open = d.at("min_open").get<bool>();
    if (d.contains("max_open")) f.max_open = d.at("max_open").get<bool>();
  }
  f.entries = entry_grid(member(j, "entries", "family"));
  f.build();
  return f;
}

Json signature_to_json(const CyclicSignature& sig) {
  Json out = Json::array();
  for (const auto& [cycle, value] : sig) {
    Json c = Json::array();
    for (int i : cycle) c.push_back(i + 1);
    out.push_back(Json{{"cycle", std::move(c)}, {"value", value.to_string()}});
  }
  return out;
}

Json parametric_signature_to_json(const ParametricSignature& sig, const std::string& parameter) {
  Json out = Json::array();
  for (const auto& [cycle, value] : sig) {
    Json c = Json::array();
    for (int i : cycle) c.push_back(i + 1);
    out.push_back(Json{{"cycle", std::move(c)}, {"value", value.to_string(parameter)}});
  }
  return out;
}

Json realization_to_json(const Realization& r) {
  Json gens = Json::array();
  for (const auto& s : r.reflections) gens.push_back(matrix_to_json(s));
  return Json{{"r", r.r}, {"covectors", matrix_to_json(r.A)}, {"vectors", matrix_to_json(r.V)}, {"generators", gens}};
}

Json word_ball_to_json(const std::vector<GroupElement>& ball) {
  Json out = Json::array();
  for (const auto& g : ball) {
    Json w = Json::array();
    for (int i : g.word) w.push_back(i + 1);
    out.push_back(Json{{"word", std::move(w)}, {"matrix", matrix_to_json(g.matrix)}});
  }
  return out;
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot read '" + path + "'");
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(path + ": " + e.what(), e.byte);
  }
}

}  // namespace projrefl
