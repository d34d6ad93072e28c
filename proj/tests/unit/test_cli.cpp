#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "projrefl/catalog.hpp"
#include "projrefl/cli.hpp"

using namespace projrefl;

namespace {

std::string temp_file(const std::string& name, const std::string& content) {
  const std::string path = "projrefl_test_" + name;
  std::ofstream(path) << content;
  return path;
}

}  // namespace

TEST_CASE("classify via the catalog") {
  const auto rep = dispatch({"classify", "--catalog", "triangle(3,3,4)"});
  CHECK(rep.exit_code == 0);
  CHECK(rep.result["count"] == 2);
  CHECK(rep.warnings.empty());
  CHECK(rep.text.find("2") != std::string::npos);
}

TEST_CASE("(4,6,6) reports the table discrepancy") {
  const auto rep = dispatch({"classify", "--catalog", "triangle(4,6,6)"});
  CHECK(rep.exit_code == 0);
  CHECK(rep.result["count"] == 6);
  REQUIRE(rep.warnings.size() == 1);
  CHECK(rep.warnings[0].find("5") != std::string::npos);
}

TEST_CASE("family-solve via the catalog") {
  const auto rep = dispatch({"--json", "family-solve", "--catalog", "triangle346-family"});
  REQUIRE(rep.exit_code == 0);
  std::vector<std::string> ts;
  for (const auto& s : rep.result["solutions"]) ts.push_back(s["t"]);
  CHECK(ts == std::vector<std::string>{"1/6", "1/3", "1/2", "1"});
}

TEST_CASE("compare identical files") {
  const auto path = temp_file("a.json", R"({"entries": [[2, -1, -1], [-1, 2, -1], [-1, -2, 2]]})");
  const auto rep = dispatch({"compare", path, path});
  CHECK(rep.exit_code == 0);
  CHECK(rep.result["equivalent"] == true);
  CHECK(rep.result["witness"] == Json::array({"1", "1", "1"}));
  std::remove(path.c_str());
}

TEST_CASE("exit codes") {
  CHECK(dispatch({"no-such-command"}).exit_code == 2);
  CHECK(dispatch({}).exit_code == 2);
  CHECK(dispatch({"classify", "--bogus"}).exit_code == 2);
  CHECK(dispatch({"classify", "--catalog", "unknown-key"}).exit_code == 1);
  CHECK(dispatch({"signature", "/nonexistent.json"}).exit_code == 1);

  const auto bad = temp_file("bad.json", R"({"entries": [[2, 1, -1], [-1, 2, -1], [-1, -2, 2]]})");
  const auto diagram = temp_file("tri.json", diagram_to_json(triangle_diagram(3, 3, 4)).dump());
  const auto rep = dispatch({"validate", bad, "--diagram", diagram});
  CHECK(rep.exit_code == 1);
  CHECK(rep.result["ok"] == false);
  std::remove(bad.c_str());
  std::remove(diagram.c_str());
}

TEST_CASE("other subcommands") {
  CHECK(dispatch({"validate", "--catalog", "triangle334-matrix-a"}).exit_code == 0);
  CHECK(dispatch({"relations", "--catalog", "benoist-prism(3)", "--t", "2"}).exit_code == 0);
  CHECK(dispatch({"signature", "--catalog", "cu21-integral-1"}).result["definability"]["over_z"] == true);

  const auto realize = dispatch({"--depth", "2", "realize", "--catalog", "triangle334-matrix-a"});
  CHECK(realize.exit_code == 0);
  CHECK(realize.result["word_ball"].size() == 10);

  const auto verify = dispatch({"family-verify", "--catalog", "cu21-family", "--t", "0"});
  CHECK(verify.exit_code == 0);
  CHECK(verify.result["over_z"] == true);

  const auto units =
      dispatch({"units-family", "--catalog", "triangle(3,3,4)", "--ring", "2", "--unit", "1+sqrt(2)", "--count", "5"});
  CHECK(units.exit_code == 0);
  CHECK(units.result["matrices"].size() == 5);

  const auto svg = dispatch({"--depth", "2", "orbit-svg", "--catalog", "triangle334-matrix-a"});
  CHECK(svg.exit_code == 0);
  CHECK(svg.document.find("<svg") != std::string::npos);

  CHECK(dispatch({"family-verify", "--catalog", "triangle346-family"}).exit_code == 2);
  const auto sample = dispatch({"validate", "--catalog", "triangle346-family"});
  CHECK(sample.exit_code == 0);
  CHECK_FALSE(sample.warnings.empty());
}

TEST_CASE("output file") {
  const std::string path = "projrefl_test_out.svg";
  const auto rep = dispatch({"--depth", "1", "-o", path, "orbit-svg", "--catalog", "triangle334-matrix-a"});
  CHECK(rep.exit_code == 0);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  CHECK(ss.str() == rep.document);
  std::remove(path.c_str());
}

TEST_CASE("catalog completeness") {
  std::vector<std::string> keys;
  for (const auto& e : catalog()) keys.push_back(e.key);
  for (const char* k : {"triangle(2,4,6)", "triangle(3,3,4)", "triangle(3,3,6)", "triangle(2,6,6)", "triangle(3,4,4)",
                        "triangle(3,4,6)", "triangle(4,4,4)", "triangle(3,6,6)", "triangle(4,4,6)", "triangle(6,6,6)",
                        "triangle(4,6,6)", "tetrahedron(d=3)", "tetrahedron(d=4)", "simplex4", "cu21-family",
                        "cu21-integral-1", "cu21-integral-2", "cu21-integral-3", "benoist-prism(3)", "benoist-prism(4)",
                        "triangle346-family"}) {
    CAPTURE(k);
    CHECK(std::find(keys.begin(), keys.end(), k) != keys.end());
  }
  CHECK(dispatch({"catalog"}).result["entries"].size() == catalog().size());
}

TEST_CASE("every catalog payload satisfies the Vinberg conditions") {
  for (const auto& e : catalog()) {
    CAPTURE(e.key);
    if (const auto* m = std::get_if<CatalogMatrix>(&e.payload)) {
      CHECK(validate_vinberg(m->matrix, m->diagram).ok());
    } else if (const auto* f = std::get_if<CatalogFamily>(&e.payload)) {
      CHECK(f->matrix.domain().contains(f->sample));
      CHECK(validate_vinberg(f->matrix.evaluate(f->sample), f->diagram).ok());
    } else {
      const auto& d = std::get<CoxeterDiagram>(e.payload);
      for (const auto& rep : classify_integer_classes(d).representatives) CHECK(validate_vinberg(rep, d).ok());
    }
  }
}

TEST_CASE("catalog lookup accepts generated keys") {
  CHECK(find_catalog_entry("triangle(4, 3, 3)").reference_count == 2);
  CHECK(find_catalog_entry("benoist-prism(5)").key == "benoist-prism(5)");
  CHECK(find_catalog_entry("tetrahedron(d=5)").key == "tetrahedron(d=5)");
  CHECK_THROWS_AS(find_catalog_entry("benoist-prism(7)"), PreconditionError);
  CHECK_THROWS_AS(find_catalog_entry("nothing"), PreconditionError);
}
