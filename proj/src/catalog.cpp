#include "projrefl/catalog.hpp"

#include <algorithm>
#include <regex>

#include "projrefl/expression.hpp"

namespace projrefl {

namespace {

struct TriangleRow {
  int p, q, r, n;
};

// Published class counts for the hyperbolic triangles admitting integral classes.
constexpr TriangleRow kTriangleTable[] = {
    {2, 4, 6, 1}, {3, 3, 4, 2}, {3, 3, 6, 2}, {2, 6, 6, 1}, {3, 4, 4, 3}, {3, 4, 6, 4},
    {4, 4, 4, 4}, {3, 6, 6, 3}, {4, 4, 6, 6}, {6, 6, 6, 4}, {4, 6, 6, 5},
};

const char* const kTriangleSource = "class count table for integral hyperbolic triangle groups";

CoxeterDiagram named_simplex(std::string name, std::vector<std::vector<int>> table) {
  return simplex_diagram(std::move(name), table);
}

CatalogFamily make_family(const std::string& json_text, CoxeterDiagram diagram, const std::string& sample) {
  FamilyDocument doc = family_from_json(Json::parse(json_text));
  ParametricMatrix m = doc.build();
  AlgNumber t = parse_scalar(sample, doc.field);
  return {std::move(doc), std::move(m), std::move(diagram), std::move(t)};
}

CatalogMatrix make_matrix(const std::vector<std::vector<long>>& rows, CoxeterDiagram diagram) {
  AlgMatrix m(rows.size(), rows.size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows.size(); ++j) m(i, j) = AlgNumber(rows[i][j]);
  return {CartanMatrix(std::move(m)), std::move(diagram)};
}

std::string cos2_text(int m) { return cos2_value(m).to_string(); }

CatalogEntry prism_entry(int d) {
  if (d < 3 || d > 5) throw PreconditionError("prism families are defined for 3 <= d <= 5");
  const FieldSpec field = cos2_value(d).field();
  Json doc{{"field", field_to_json(field)},
           {"parameter", "t"},
           {"definitions", {{"mu", "(" + cos2_text(d) + ")*t/((t-1)*(t-1))"}, {"nu", "2+3*mu"}}},
           {"domain", {{"min", "1"}, {"max", "+inf"}, {"min_open", true}, {"max_open", true}}},
           {"entries",
            {{"2", "-1", "-1", "0", "0"},
             {"-1", "2", "-t", "0", "0"},
             {"-1", "-1/t", "2", "mu*(1-t)/t", "0"},
             {"0", "0", "1-t", "2", "-2"},
             {"0", "0", "0", "-nu", "2"}}}};
  return {"benoist-prism(" + std::to_string(d) + ")", make_family(doc.dump(), prism_diagram(d), "2"),
          "one-parameter prism family with t > 1, mu = 4t cos^2(pi/d)/(t-1)^2, nu = 2 + 3 mu", std::nullopt};
}

std::vector<CatalogEntry> build_catalog() {
  std::vector<CatalogEntry> out;
  for (const auto& row : kTriangleTable)
    out.push_back({"triangle(" + std::to_string(row.p) + "," + std::to_string(row.q) + "," + std::to_string(row.r) + ")",
                   triangle_diagram(row.p, row.q, row.r), kTriangleSource, row.n});

  out.push_back({"tetrahedron(d=3)", tetrahedron_diagram(3), "integral classes of a compact hyperbolic tetrahedron", 2});
  out.push_back({"tetrahedron(d=4)", tetrahedron_diagram(4), "integral classes of a compact hyperbolic tetrahedron", 3});
  out.push_back({"simplex4", simplex4_diagram(), "integral classes of the compact hyperbolic 4-simplex", 2});

  const auto t334 = triangle_diagram(3, 3, 4);
  out.push_back({"triangle334-matrix-a", make_matrix({{2, -1, -1}, {-1, 2, -1}, {-1, -2, 2}}, t334),
                 "displayed (3,3,4) integral matrix", std::nullopt});
  out.push_back({"triangle334-matrix-b", make_matrix({{2, -1, -1}, {-1, 2, -2}, {-1, -1, 2}}, t334),
                 "displayed (3,3,4) integral matrix", std::nullopt});

  out.push_back({"triangle346-family",
                 make_family(R"json({"field": {"radicands": []}, "parameter": "t",
                   "domain": {"min": "0", "max": "+inf", "min_open": true, "max_open": true},
                   "entries": [["2", "-3/2", "-1"], ["-2", "2", "-2*t"], ["-2", "-1/(2*t)", "2"]]})json",
                             triangle_diagram(6, 4, 3), "1"),
                 "one-parameter family on the (3,4,6) triangle, t > 0; labels (1,2) = 6, (1,3) = 4, (2,3) = 3",
                 std::nullopt});

  out.push_back({"cu21-family",
                 make_family(R"json({"field": {"radicands": [5, 6]}, "parameter": "t",
                   "domain": {"min": "-inf", "max": "+inf"},
                   "entries": [
                     ["2", "0", "0", "-2/(2+sqrt(5)*t)", "-2/(2+sqrt(5)*t)", "-3+sqrt(5)*t/(2+2*sqrt(5)*t)"],
                     ["0", "2", "-1", "-sqrt(6)", "0", "0"],
                     ["0", "-1", "2", "0", "-sqrt(6)", "0"],
                     ["-1-sqrt(5)*t/2", "-sqrt(6)", "0", "2", "0", "-(2+sqrt(5)*t)/(2+2*sqrt(5)*t)"],
                     ["-1-sqrt(5)*t/2", "0", "-sqrt(6)", "0", "2", "-(2+sqrt(5)*t)/(2+2*sqrt(5)*t)"],
                     ["-3-sqrt(5)*t/2", "0", "0", "-2*(1+sqrt(5)*t)/(2+sqrt(5)*t)", "-2*(1+sqrt(5)*t)/(2+sqrt(5)*t)", "2"]]})json",
                             cu21_diagram(), "0"),
                 "one-parameter family on the compact hyperbolic cube cu21, t real", std::nullopt});

  const std::vector<std::vector<long>> base = {{2, 0, 0, -1, -1, -3},  {0, 2, -1, -2, 0, 0}, {0, -1, 2, 0, -2, 0},
                                               {-1, -3, 0, 2, 0, -1}, {-1, 0, -3, 0, 2, -1}, {-3, 0, 0, -1, -1, 2}};
  auto second = base;
  second[0][5] = -1;
  second[5][0] = -13;
  auto third = base;
  third[0][5] = -13;
  third[5][0] = -1;
  out.push_back({"cu21-integral-1", make_matrix(base, cu21_diagram()), "integral cu21 matrix at t = 0", std::nullopt});
  out.push_back({"cu21-integral-2", make_matrix(second, cu21_diagram()),
                 "integral cu21 matrix at t = -4/(5 sqrt(5))", std::nullopt});
  out.push_back({"cu21-integral-3", make_matrix(third, cu21_diagram()), "integral cu21 matrix at t = 4/sqrt(5)",
                 std::nullopt});

  out.push_back(prism_entry(3));
  out.push_back(prism_entry(4));
  return out;
}

}  // namespace

CoxeterDiagram tetrahedron_diagram(int d) {
  return named_simplex("tetrahedron(d=" + std::to_string(d) + ")",
                       {{0, 4, 3, 2}, {4, 0, 2, 3}, {3, 2, 0, d}, {2, 3, d, 0}});
}

CoxeterDiagram simplex4_diagram() {
  return named_simplex("simplex4",
                       {{0, 3, 2, 2, 3}, {3, 0, 3, 2, 2}, {2, 3, 0, 4, 2}, {2, 2, 4, 0, 3}, {3, 2, 2, 3, 0}});
}

CoxeterDiagram cu21_diagram() {
  std::map<FacePair, int> orders;
  for (const auto& p : {FacePair{0, 3}, {0, 4}, {1, 2}, {3, 5}, {4, 5}}) orders[p] = 3;
  for (const auto& p : {FacePair{0, 1}, {0, 2}, {1, 4}, {1, 5}, {2, 3}, {2, 5}, {3, 4}}) orders[p] = 2;
  std::vector<std::vector<int>> vertices;
  for (int a : {0, 5})
    for (int b : {1, 3})
      for (int c : {2, 4}) vertices.push_back({a, b, c});
  return CoxeterDiagram("cu21", 3, {"F1", "F2", "F3", "F4", "F5", "F6"}, std::move(orders), {{0, 5}, {1, 3}, {2, 4}},
                        std::move(vertices));
}

CoxeterDiagram prism_diagram(int d) {
  std::map<FacePair, int> orders{{{0, 1}, 3}, {{0, 2}, 3}, {{1, 2}, 3}, {{2, 3}, d}, {{0, 3}, 2},
                                 {{0, 4}, 2}, {{1, 3}, 2}, {{1, 4}, 2}, {{2, 4}, 2}};
  std::vector<std::vector<int>> vertices;
  for (int end : {3, 4})
    for (const auto& [a, b] : {FacePair{0, 1}, {0, 2}, {1, 2}}) vertices.push_back({end, a, b});
  return CoxeterDiagram("prism(d=" + std::to_string(d) + ")", 3, {"F1", "F2", "F3", "F4", "F5"}, std::move(orders),
                        {{3, 4}}, std::move(vertices));
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

CatalogEntry find_catalog_entry(std::string_view key) {
  for (const auto& e : catalog())
    if (e.key == key) return e;

  const std::string k(key);
  std::smatch m;
  static const std::regex triangle(R"(triangle\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\))");
  if (std::regex_match(k, m, triangle)) {
    const int p = std::stoi(m[1]), q = std::stoi(m[2]), r = std::stoi(m[3]);
    CatalogEntry e{"triangle(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")",
                   triangle_diagram(p, q, r), "triangle diagram", std::nullopt};
    // A relabelled table row keeps its published count.
    std::vector<int> mine{p, q, r};
    std::sort(mine.begin(), mine.end());
    for (const auto& row : kTriangleTable)
      if (std::vector<int>{row.p, row.q, row.r} == mine) {
        e.reference_count = row.n;
        e.provenance = kTriangleSource;
      }
    return e;
  }
  static const std::regex prism(R"(benoist-prism\(\s*(\d+)\s*\))");
  if (std::regex_match(k, m, prism)) return prism_entry(std::stoi(m[1]));
  static const std::regex tetra(R"(tetrahedron\(\s*d\s*=\s*(\d+)\s*\))");
  if (std::regex_match(k, m, tetra))
    return {"tetrahedron(d=" + std::string(m[1]) + ")", tetrahedron_diagram(std::stoi(m[1])), "tetrahedron diagram",
            std::nullopt};

  throw PreconditionError("unknown catalog key '" + k + "'; run the catalog command for the list");
}

}  // namespace projrefl
