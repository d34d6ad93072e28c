#include "doctest.h"
#include "projrefl/catalog.hpp"
#include "projrefl/expression.hpp"
#include "projrefl/io.hpp"
#include "support.hpp"

using namespace projrefl;
using testing::int_matrix;
using testing::num;

TEST_CASE("scalar parsing") {
  CHECK(parse_scalar("-3/2", {}) == AlgNumber(make_rational(-3, 2)));
  const FieldSpec f56 = FieldSpec::biquadratic(5, 6);
  CHECK(parse_scalar("-sqrt(6)", f56).coords_in(f56) ==
        AlgNumber::Coords{Rational(0), Rational(0), Rational(-1), Rational(0)});
  CHECK(parse_scalar("sqrt(30)", f56) == AlgNumber::sqrt_of(30));
  CHECK(parse_scalar(" ( 1 + sqrt(5) ) / 2 ", FieldSpec::quadratic(5)) == num("(1+sqrt(5))/2", FieldSpec::quadratic(5)));
  CHECK(parse_scalar("--2", {}) == AlgNumber(2L));
}

TEST_CASE("parse errors") {
  CHECK_THROWS_AS(parse_scalar("sqrt(7)", FieldSpec::quadratic(5)), ParseError);
  CHECK_THROWS_AS(parse_scalar("1+", {}), ParseError);
  CHECK_THROWS_AS(parse_scalar("2)", {}), ParseError);
  CHECK_THROWS_AS(parse_scalar("t", {}), ParseError);
  CHECK_THROWS_AS(parse_scalar("1/0", {}), ParseError);
  try {
    parse_scalar("2 + * 3", {});
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.position() == 4);
  }
}

TEST_CASE("rational functions") {
  ParseContext ctx;
  ctx.field = FieldSpec::quadratic(5);
  ctx.allow_parameter = true;
  const auto f = parse_expression("(2+sqrt(5)*t)/(2+2*sqrt(5)*t)", ctx);
  CHECK_FALSE(f.is_constant());
  CHECK(f.evaluate(AlgNumber(0L)) == AlgNumber(1L));
  const AlgNumber one(1L);
  CHECK(f.evaluate(one) == num("(2+sqrt(5))/(2+2*sqrt(5))", ctx.field));
  CHECK_THROWS_AS(f.evaluate(num("-1/sqrt(5)", ctx.field)), DivisionByZero);

  ctx.definitions.emplace("mu", parse_expression("2*t", ctx));
  CHECK(parse_expression("mu*mu - 4*t*t", ctx).is_zero());
  CHECK_THROWS_AS(parse_expression("nu", ctx), ParseError);
}

TEST_CASE("field option") {
  CHECK(parse_field_option("") == FieldSpec{});
  CHECK(parse_field_option("5") == FieldSpec::quadratic(5));
  CHECK(parse_field_option("5,6") == FieldSpec::biquadratic(5, 6));
  CHECK_THROWS(parse_field_option("5,x"));
}

TEST_CASE("matrix round trip") {
  const auto cu = std::get<CatalogMatrix>(find_catalog_entry("cu21-integral-2").payload).matrix;
  CHECK(cartan_from_json(cartan_to_json(cu)) == cu);

  const auto fam = std::get<CatalogFamily>(find_catalog_entry("cu21-family").payload);
  const CartanMatrix at = fam.matrix.evaluate(num("4/sqrt(5)", FieldSpec::quadratic(5)));
  const Json j = cartan_to_json(at);
  CHECK(cartan_from_json(j) == at);
  CHECK(cartan_to_json(cartan_from_json(j)) == j);

  const Json ints = Json::parse(R"({"entries": [[2, -1], [-1, 2]]})");
  CHECK(cartan_from_json(ints) == int_matrix({{2, -1}, {-1, 2}}));
  CHECK_THROWS_AS(cartan_from_json(Json::parse(R"j({"entries": [[2, "-sqrt(5)"], [-1, 2]]})j")), ParseError);
  CHECK(cartan_from_json(Json::parse(R"j({"entries": [[2, "-sqrt(5)"], [-1, 2]]})j"), FieldSpec::quadratic(5))(0, 1) ==
        -AlgNumber::sqrt_of(5));
}

TEST_CASE("diagram round trip") {
  for (const auto& d : {triangle_diagram(3, 4, 6), tetrahedron_diagram(4), cu21_diagram(), prism_diagram(3)}) {
    const Json j = diagram_to_json(d);
    const CoxeterDiagram back = diagram_from_json(j);
    CHECK(back.name() == d.name());
    CHECK(back.orders() == d.orders());
    CHECK(back.nonadjacent() == d.nonadjacent());
    CHECK(back.vertices() == d.vertices());
    CHECK(diagram_to_json(back) == j);
  }

  const Json labels = Json::parse(R"({"name": "t", "dimension": 2, "faces": ["a", "b", "c"],
    "edges": [{"faces": ["a", "b"], "order": 3}, {"faces": ["a", "c"], "order": 3}, {"faces": [2, 3], "order": 4}]})");
  const auto d = diagram_from_json(labels);
  CHECK(d.order(1, 2) == 4);
  CHECK(d.vertices().size() == 3);
  CHECK_THROWS(diagram_from_json(Json::parse(R"({"faces": 3, "edges": [{"faces": [1, 4], "order": 3}]})")));
}

TEST_CASE("family round trip") {
  const auto fam = std::get<CatalogFamily>(find_catalog_entry("benoist-prism(3)").payload);
  const Json j = family_to_json(fam.document);
  const FamilyDocument back = family_from_json(j);
  CHECK(family_to_json(back) == j);
  CHECK(back.build().evaluate(AlgNumber(3L)) == fam.matrix.evaluate(AlgNumber(3L)));
  CHECK(back.definitions.size() == 2);
}

TEST_CASE("read_json_file") {
  CHECK_THROWS_AS(read_json_file("/nonexistent/file.json"), Error);
}
