#include <random>

#include "doctest.h"
#include "projrefl/catalog.hpp"
#include "projrefl/enumerate.hpp"
#include "projrefl/realize.hpp"
#include "support.hpp"

using namespace projrefl;
using testing::values_of_length;

namespace {

std::vector<std::pair<CoxeterDiagram, CartanMatrix>> representatives() {
  std::vector<std::pair<CoxeterDiagram, CartanMatrix>> out;
  std::vector<CoxeterDiagram> ds;
  for (const auto& e : catalog())
    if (const auto* d = std::get_if<CoxeterDiagram>(&e.payload)) ds.push_back(*d);
  for (const auto& d : ds)
    for (const auto& rep : classify_integer_classes(d).representatives) out.emplace_back(d, rep);
  return out;
}

std::vector<AlgNumber> random_diagonal(std::mt19937& rng, int n) {
  std::uniform_int_distribution<long> num(1, 30), den(1, 12);
  std::vector<AlgNumber> d;
  for (int i = 0; i < n; ++i) d.emplace_back(make_rational(num(rng), den(rng)));
  return d;
}

}  // namespace

TEST_CASE("invariance under random diagonal conjugation") {
  std::mt19937 rng(7);
  for (const auto& [d, c] : representatives()) {
    CAPTURE(d.name());
    const auto sig = cyclic_signature(c);
    const auto det = determinant(c);
    const auto type = perron_type(c);
    for (int k = 0; k < 100; ++k) {
      const auto x = conjugate_by_diagonal(c, random_diagonal(rng, c.size()));
      CHECK(cyclic_signature(x) == sig);
      CHECK(determinant(x) == det);
      CHECK(perron_type(x) == type);
      CHECK(equivalent(x, c));
      const auto w = diagonal_witness(x, c);
      REQUIRE(w);
      CHECK(conjugate_by_diagonal(c, *w) == x);
    }
  }
}

TEST_CASE("sign rule on emitted signatures") {
  for (const auto& [d, c] : representatives()) CHECK(satisfies_sign_rule(cyclic_signature(c)));
  CyclicSignature wrong;
  wrong[{0, 1, 2}] = AlgNumber(2L);
  CHECK_FALSE(satisfies_sign_rule(wrong));
}

TEST_CASE("equivalence is an equivalence relation and matches the witness") {
  std::mt19937 rng(11);
  const auto reps = representatives();
  for (std::size_t a = 0; a < reps.size(); ++a) {
    const auto& ca = reps[a].second;
    const auto x = conjugate_by_diagonal(ca, random_diagonal(rng, ca.size()));
    const auto y = conjugate_by_diagonal(x, random_diagonal(rng, ca.size()));
    CHECK(equivalent(ca, ca));
    CHECK(equivalent(x, ca) == equivalent(ca, x));
    CHECK(equivalent(ca, y));
    for (std::size_t b = 0; b < reps.size(); ++b) {
      const auto& cb = reps[b].second;
      if (cb.size() != ca.size()) continue;
      const bool eq = equivalent(ca, cb);
      CHECK(eq == diagonal_witness(ca, cb).has_value());
      if (reps[a].first.name() == reps[b].first.name()) CHECK(eq == (a == b));
    }
  }
}

TEST_CASE("polygon product identity") {
  // On a cycle pattern the pairwise products multiply to the product of the
  // two orientations of the longest cycle.
  for (const auto& [d, c] : representatives()) {
    const auto sig = cyclic_signature(c);
    std::size_t longest = 0;
    for (const auto& [cyc, v] : sig) longest = std::max(longest, cyc.size());
    bool polygon = true;
    for (int i = 0; i < c.size(); ++i) {
      int degree = 0;
      for (int j = 0; j < c.size(); ++j)
        if (i != j && !c(i, j).is_zero()) ++degree;
      polygon = polygon && degree == 2;
    }
    if (c.size() == 3 || polygon) {
      CAPTURE(d.name());
      AlgNumber pairs(1L), cycles(1L);
      for (const auto& v : values_of_length(sig, 2)) pairs *= v;
      for (const auto& v : values_of_length(sig, longest)) cycles *= v;
      CHECK(values_of_length(sig, longest).size() == 2);
      CHECK(pairs == cycles);
    }
  }
}

TEST_CASE("realizations") {
  std::mt19937 rng(3);
  for (const auto& [d, c] : representatives()) {
    CAPTURE(d.name());
    const auto r = realize(c);
    CHECK(r.A * r.V == c.matrix());
    CHECK(check_relations(r, d).ok());
    for (int i = 0; i < c.size(); ++i)
      for (int j = 0; j < c.size(); ++j)
        if (i != j)
          CHECK(trace(r.reflections[i] * r.reflections[j]) == AlgNumber(r.r - 4) + c(i, j) * c(j, i));

    // Equivalent matrices give equal traces on short words.
    const auto x = conjugate_by_diagonal(c, random_diagonal(rng, c.size()));
    const auto rx = realize(x);
    const auto ball = word_ball(r, c.size() == 3 ? 3 : 2);
    for (const auto& g : ball) {
      AlgMatrix h = AlgMatrix::identity(static_cast<std::size_t>(rx.r));
      for (int w : g.word) h = h * rx.reflections[static_cast<std::size_t>(w)];
      CHECK(trace(h) == trace(g.matrix));
    }
  }
}

TEST_CASE("word ball structure") {
  const auto reps = representatives();
  for (std::size_t k = 0; k < reps.size(); k += 5) {
    const auto r = realize(reps[k].second);
    const auto small = word_ball(r, 2);
    const auto big = word_ball(r, 3);
    std::set<AlgMatrix, MatrixStructuralLess> bigset;
    for (const auto& g : big) bigset.insert(g.matrix);
    for (const auto& g : small) {
      CHECK(bigset.count(g.matrix));
      CHECK(determinant(g.matrix) == AlgNumber(g.word.size() % 2 ? -1L : 1L));
      for (const auto& s : r.reflections) CHECK(bigset.count(s * g.matrix));
    }
    for (std::size_t i = 1; i < big.size(); ++i) CHECK(big[i - 1].word.size() <= big[i].word.size());
  }
}

TEST_CASE("3x3 determinant formula") {
  for (const auto& [d, c] : representatives()) {
    if (c.size() != 3) continue;
    AlgNumber pairs(0L), triples(0L);
    for (const auto& [cyc, v] : cyclic_signature(c)) (cyc.size() == 2 ? pairs : triples) += v;
    CHECK(determinant(c) == AlgNumber(8L) - AlgNumber(2L) * pairs + triples);
  }
}

TEST_CASE("solve_integrality against a dense grid") {
  for (const char* key : {"triangle346-family", "benoist-prism(3)", "benoist-prism(4)"}) {
    CAPTURE(key);
    const auto p = std::get<CatalogFamily>(find_catalog_entry(key).payload).matrix;
    const auto sol = solve_integrality(p);
    std::set<AlgNumber> solved;
    for (const auto& pt : sol.points) {
      CHECK(verify_at(p, pt.t).over_z);
      solved.insert(pt.t);
    }
    for (long num = 1; num <= 40; ++num)
      for (long den = 1; den <= 12; ++den) {
        const AlgNumber t(make_rational(num, den));
        if (!p.domain().contains(t)) continue;
        PointCheck pc;
        try {
          pc = verify_at(p, t);
        } catch (const DivisionByZero&) {
          continue;
        }
        const bool accepted = pc.over_z && satisfies_sign_rule(pc.signature);
        CHECK(accepted == (solved.count(t) > 0));
      }
  }
}

TEST_CASE("unit families are integral and pairwise inequivalent") {
  const FieldSpec f2 = FieldSpec::quadratic(2), f5 = FieldSpec::quadratic(5);
  const std::vector<std::tuple<CoxeterDiagram, long, AlgNumber>> cases{
      {triangle_diagram(3, 3, 4), 2, testing::num("1+sqrt(2)", f2)},
      {triangle_diagram(3, 4, 6), 2, testing::num("3+2*sqrt(2)", f2)},
      {triangle_diagram(3, 3, 6), 5, testing::num("(1+sqrt(5))/2", f5)},
      {tetrahedron_diagram(3), 2, testing::num("1+sqrt(2)", f2)}};
  for (const auto& [d, radicand, unit] : cases) {
    CAPTURE(d.name());
    const QuadraticRing ring(radicand);
    if (d.coxeter_graph_edges().size() != static_cast<std::size_t>(d.size())) {
      CHECK_THROWS_AS(units_family({d, ring, unit, 3}), PreconditionError);
      continue;
    }
    const auto res = units_family({d, ring, unit, 4});
    CHECK(res.matrices.size() + res.skipped.size() == 4);
    for (std::size_t a = 0; a < res.matrices.size(); ++a) {
      CHECK(validate_vinberg(res.matrices[a], d).ok());
      CHECK_FALSE(determinant(res.matrices[a]).is_zero());
      for (const auto& g : definability_generators(res.matrices[a]).generators) CHECK(is_algebraic_integer(g, ring));
      for (std::size_t b = a + 1; b < res.matrices.size(); ++b) CHECK_FALSE(equivalent(res.matrices[a], res.matrices[b]));
    }
  }
}
