#include <set>

#include "doctest.h"
#include "projrefl/catalog.hpp"
#include "projrefl/enumerate.hpp"
#include "support.hpp"

using namespace projrefl;
using testing::int_matrix;
using testing::ints;
using testing::num;
using testing::values_of_length;

namespace {

ParametricMatrix family(const std::string& key) { return std::get<CatalogFamily>(find_catalog_entry(key).payload).matrix; }

std::vector<AlgNumber> solved_ts(const IntegralitySolution& s) {
  std::vector<AlgNumber> out;
  for (const auto& p : s.points) out.push_back(p.t);
  return out;
}

}  // namespace

TEST_CASE("classify (3,3,4)") {
  const auto r = classify_integer_classes(triangle_diagram(3, 3, 4));
  REQUIRE(r.count() == 2);
  CHECK(values_of_length(r.signatures[0], 2) == ints({1, 1, 2}));
  CHECK(values_of_length(r.signatures[0], 3) == ints({-1, -2}));
  CHECK(values_of_length(r.signatures[1], 2) == ints({1, 1, 2}));
  CHECK(values_of_length(r.signatures[1], 3) == ints({-2, -1}));
  CHECK(r.candidates == 2);
  CHECK(count_up_to_symmetry(r, triangle_diagram(3, 3, 4)) == 1);
}

TEST_CASE("classify triangle table") {
  const std::vector<std::pair<std::array<int, 3>, int>> rows{
      {{2, 4, 6}, 1}, {{3, 3, 4}, 2}, {{3, 3, 6}, 2}, {{2, 6, 6}, 1}, {{3, 4, 4}, 3}, {{3, 4, 6}, 4},
      {{4, 4, 4}, 4}, {{3, 6, 6}, 3}, {{4, 4, 6}, 6}, {{6, 6, 6}, 4}, {{4, 6, 6}, 6}};
  for (const auto& [o, n] : rows) {
    CAPTURE(o[0]);
    CAPTURE(o[1]);
    CAPTURE(o[2]);
    const auto d = triangle_diagram(o[0], o[1], o[2]);
    const auto r = classify_integer_classes(d);
    CHECK(r.count() == n);
    for (const auto& rep : r.representatives) {
      CHECK(validate_vinberg(rep, d).ok());
      CHECK(satisfies_sign_rule(cyclic_signature(rep)));
    }
  }
}

TEST_CASE("classify tetrahedra and the 4-simplex") {
  const auto d4 = classify_integer_classes(tetrahedron_diagram(4));
  REQUIRE(d4.count() == 3);
  std::set<std::vector<AlgNumber>> fours;
  for (const auto& s : d4.signatures) fours.insert(values_of_length(s, 4));
  CHECK(fours == std::set<std::vector<AlgNumber>>{ints({4, 1}), ints({1, 4}), ints({2, 2})});

  const auto s4 = classify_integer_classes(simplex4_diagram());
  REQUIRE(s4.count() == 2);
  std::set<std::vector<AlgNumber>> fives;
  for (const auto& s : s4.signatures) fives.insert(values_of_length(s, 5));
  CHECK(fives == std::set<std::vector<AlgNumber>>{ints({-1, -2}), ints({-2, -1})});
}

TEST_CASE("classify rejects unsupported input") {
  CHECK_THROWS_AS(classify_integer_classes(prism_diagram(3)), PreconditionError);
  CHECK_THROWS_AS(classify_integer_classes(triangle_diagram(3, 3, 5)), PreconditionError);
}

TEST_CASE("parameter domain") {
  ParameterDomain d{AlgNumber(0L), std::nullopt, true, true};
  CHECK(d.contains(AlgNumber(make_rational(1, 100))));
  CHECK_FALSE(d.contains(AlgNumber(0L)));
  d.min_open = false;
  CHECK(d.contains(AlgNumber(0L)));
  CHECK_FALSE(d.contains(AlgNumber(-1L)));
}

TEST_CASE("parametric_signature") {
  const auto sig = parametric_signature(family("triangle346-family"));
  std::vector<std::string> pairs, triples;
  for (const auto& [c, f] : sig) (c.size() == 2 ? pairs : triples).push_back(f.to_string());
  CHECK(pairs == std::vector<std::string>{"3", "2", "1"});
  CHECK(triples == std::vector<std::string>{"-6*t", "-1/t"});

  const auto prism = parametric_signature(family("benoist-prism(3)"));
  std::set<std::string> values;
  for (const auto& [c, f] : prism) values.insert(f.to_string());
  CHECK(values.count("-t"));
  CHECK(values.count("-1/t"));

  Matrix<RationalFunction> constant(2, 2);
  constant(0, 0) = constant(1, 1) = RationalFunction(AlgNumber(2L));
  constant(0, 1) = constant(1, 0) = RationalFunction(AlgNumber(-3L));
  const auto c = parametric_signature(ParametricMatrix(constant, {}));
  REQUIRE(c.size() == 1);
  CHECK(c.begin()->second.is_constant());
}

TEST_CASE("solve_integrality") {
  const auto s346 = solve_integrality(family("triangle346-family"));
  CHECK_FALSE(s346.whole_domain);
  CHECK(solved_ts(s346) == std::vector<AlgNumber>{AlgNumber(make_rational(1, 6)), AlgNumber(make_rational(1, 3)),
                                                  AlgNumber(make_rational(1, 2)), AlgNumber(1L)});
  for (const auto& p : s346.points) CHECK(p.over_z);

  CHECK(solve_integrality(family("benoist-prism(3)")).points.empty());
  CHECK(solve_integrality(family("benoist-prism(4)")).points.empty());

  Matrix<RationalFunction> constant(3, 3);
  const auto rows = int_matrix({{2, -1, -1}, {-1, 2, -1}, {-1, -2, 2}});
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) constant(i, j) = RationalFunction(rows.matrix()(i, j));
  const auto whole = solve_integrality(ParametricMatrix(constant, {}));
  CHECK(whole.whole_domain);
  REQUIRE(whole.constant_signature);
  CHECK(*whole.constant_signature == cyclic_signature(rows));

  CHECK_THROWS_AS(solve_integrality(family("cu21-family")), PreconditionError);
}

TEST_CASE("verify_at") {
  const auto cu = family("cu21-family");
  CHECK(verify_at(cu, AlgNumber(0L)).over_z);
  CHECK_FALSE(verify_at(cu, AlgNumber(1L)).over_z);

  const auto half = verify_at(family("triangle346-family"), AlgNumber(make_rational(1, 2)));
  CHECK(half.over_z);
  CHECK(values_of_length(half.signature, 3) == ints({-3, -2}));

  CHECK_THROWS_AS(verify_at(family("triangle346-family"), AlgNumber(-1L)), PreconditionError);
  // 2 + 2 sqrt(5) t vanishes at t = -1/sqrt(5).
  CHECK_THROWS_AS(verify_at(cu, num("-1/sqrt(5)", FieldSpec::quadratic(5))), DivisionByZero);
}

TEST_CASE("units_family") {
  const FieldSpec f2 = FieldSpec::quadratic(2);
  const AlgNumber eps = num("1+sqrt(2)", f2);
  const auto t334 = triangle_diagram(3, 3, 4);
  const auto res = units_family({t334, QuadraticRing(2), eps, 3});
  REQUIRE(res.matrices.size() == 3);
  CHECK(res.exponents == std::vector<int>{1, 2, 3});

  std::vector<CyclicSignature> sigs;
  for (std::size_t k = 0; k < res.matrices.size(); ++k) {
    const auto& m = res.matrices[k];
    CHECK(validate_vinberg(m, t334).ok());
    const auto sig = cyclic_signature(m);
    sigs.push_back(sig);
    // One oriented triple equals −4u cos²(π/m) for the closing edge; here
    // the product of the three pairwise values is u·(other)·4cos².
    const auto triples = values_of_length(sig, 3);
    REQUIRE(triples.size() == 2);
    const auto pairs = values_of_length(sig, 2);
    CHECK(triples[0] * triples[1] == pairs[0] * pairs[1] * pairs[2]);
    for (const auto& v : definability_generators(m).generators) CHECK(is_algebraic_integer(v, QuadraticRing(2)));
  }
  for (std::size_t a = 0; a < sigs.size(); ++a)
    for (std::size_t b = a + 1; b < sigs.size(); ++b) CHECK(sigs[a] != sigs[b]);

  // ε and ε² differ only in the two longest cycles.
  int differing = 0;
  for (const auto& [c, v] : sigs[0])
    if (sigs[1].at(c) != v) {
      ++differing;
      CHECK(c.size() == 3);
    }
  CHECK(differing == 2);

  CHECK_THROWS_AS(units_family({t334, QuadraticRing(2), num("2+sqrt(2)", f2), 2}), PreconditionError);
  CHECK_THROWS_AS(units_family({triangle_diagram(2, 4, 6), QuadraticRing(2), eps, 2}), PreconditionError);
}

TEST_CASE("units_family with u = 1 gives an integral class") {
  const auto t334 = triangle_diagram(3, 3, 4);
  // ε⁰ is not produced by the family; build the u = 1 matrix the same way.
  const auto res = units_family({t334, QuadraticRing(2), num("1+sqrt(2)", FieldSpec::quadratic(2)), 1});
  REQUIRE(res.polygon.size() == 3);
  const auto integral = classify_integer_classes(t334);
  AlgMatrix m = res.matrices[0].matrix();
  const int i1 = res.polygon[0], i2 = res.polygon[1];
  const AlgNumber k = m(i1, i2) * m(i2, i1);
  m(i1, i2) = AlgNumber(-1L);
  m(i2, i1) = -k;
  const CartanMatrix u1(m);
  bool matches = false;
  for (const auto& rep : integral.representatives) matches = matches || equivalent(u1, rep);
  CHECK(matches);
}
