#include "projrefl/realize.hpp"

#include <algorithm>
#include <map>

namespace projrefl {

RankFactorization rank_factorize(const CartanMatrix& c) {
  const AlgMatrix& m = c.matrix();
  const std::size_t n = m.rows();
  const RowEchelon e = row_echelon(m);
  const std::size_t r = e.pivots.size();
  if (r == n) return {AlgMatrix::identity(n), m, static_cast<int>(n)};

  AlgMatrix A(n, r);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < r; ++k) A(i, k) = m(i, e.pivots[k]);
  AlgMatrix V(r, n);
  for (std::size_t k = 0; k < r; ++k)
    for (std::size_t j = 0; j < n; ++j) V(k, j) = e.reduced(k, j);
  return {std::move(A), std::move(V), static_cast<int>(r)};
}

std::vector<AlgMatrix> build_reflections(const AlgMatrix& A, const AlgMatrix& V) {
  if (A.cols() != V.rows() || A.rows() != V.cols()) throw PreconditionError("covector and vector shapes disagree");
  const std::size_t r = A.cols();
  std::vector<AlgMatrix> out;
  for (std::size_t i = 0; i < A.rows(); ++i) {
    AlgNumber pairing(0L);
    for (std::size_t k = 0; k < r; ++k) pairing += A(i, k) * V(k, i);
    if (pairing != AlgNumber(2L))
      throw PreconditionError("alpha_" + std::to_string(i + 1) + "(v_" + std::to_string(i + 1) + ") = " +
                              pairing.to_string() + ", expected 2");
    AlgMatrix s = AlgMatrix::identity(r);
    for (std::size_t a = 0; a < r; ++a)
      for (std::size_t b = 0; b < r; ++b) s(a, b) -= V(a, i) * A(i, b);
    out.push_back(std::move(s));
  }
  return out;
}

Realization realize(const CartanMatrix& c) {
  RankFactorization f = rank_factorize(c);
  Realization out;
  out.r = f.r;
  out.reflections = build_reflections(f.A, f.V);
  out.A = std::move(f.A);
  out.V = std::move(f.V);
  return out;
}

bool RelationReport::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const RelationCheck& c) { return c.holds; });
}

std::vector<RelationCheck> RelationReport::failures() const {
  std::vector<RelationCheck> out;
  std::copy_if(checks.begin(), checks.end(), std::back_inserter(out), [](const RelationCheck& c) { return !c.holds; });
  return out;
}

RelationReport check_relations(const Realization& r, const CoxeterDiagram& d) {
  if (r.generators() != d.size())
    throw PreconditionError("realization has " + std::to_string(r.generators()) + " generators but the diagram has " +
                            std::to_string(d.size()) + " faces");
  const AlgMatrix id = AlgMatrix::identity(static_cast<std::size_t>(r.r));
  RelationReport report;
  for (int s = 0; s < d.size(); ++s) {
    for (int t = s + 1; t < d.size(); ++t) {
      const AlgMatrix p = r.reflections[static_cast<std::size_t>(s)] * r.reflections[static_cast<std::size_t>(t)];
      const std::string pair = "(" + std::to_string(s + 1) + "," + std::to_string(t + 1) + ")";
      if (const auto m = d.order(s, t)) {
        const bool holds = power(p, static_cast<unsigned>(*m)) == id;
        const auto kind = *m == 2 ? RelationCheck::Kind::commuting : RelationCheck::Kind::finite_order;
        report.checks.push_back({s, t, kind, *m, holds,
                                 "(s" + std::to_string(s + 1) + " s" + std::to_string(t + 1) + ")^" +
                                     std::to_string(*m) + (holds ? " = I" : " != I") + " for pair " + pair});
      } else {
        AlgMatrix q = p;
        int found = 0;
        for (int k = 1; k <= kInfiniteOrderBound; ++k) {
          if (q == id) {
            found = k;
            break;
          }
          q = q * p;
        }
        report.checks.push_back({s, t, RelationCheck::Kind::infinite_order, kInfiniteOrderBound, found == 0,
                                 found ? "non-adjacent pair " + pair + " has finite order " + std::to_string(found)
                                       : "non-adjacent pair " + pair + ": no power <= " +
                                             std::to_string(kInfiniteOrderBound) + " is I"});
      }
    }
  }
  return report;
}

std::vector<GroupElement> word_ball(const Realization& r, int depth) {
  if (depth < 0) throw PreconditionError("word ball depth must be non-negative");
  std::vector<GroupElement> ball{{AlgMatrix::identity(static_cast<std::size_t>(r.r)), {}}};
  std::map<AlgMatrix, std::size_t, MatrixStructuralLess> index{{ball[0].matrix, 0}};
  std::vector<std::size_t> frontier{0};
  for (int level = 1; level <= depth && !frontier.empty(); ++level) {
    std::vector<std::size_t> next;
    for (std::size_t idx : frontier) {
      for (int g = 0; g < r.generators(); ++g) {
        AlgMatrix m = ball[idx].matrix * r.reflections[static_cast<std::size_t>(g)];
        if (index.count(m)) continue;
        std::vector<int> word = ball[idx].word;
        word.push_back(g);
        index.emplace(m, ball.size());
        next.push_back(ball.size());
        ball.push_back({std::move(m), std::move(word)});
      }
    }
    frontier = std::move(next);
  }
  return ball;
}

AlgNumber adjoint_trace(const AlgMatrix& g) {
  if (!g.is_square()) throw PreconditionError("adjoint trace needs a square matrix");
  const AlgNumber det = determinant(g);
  if (det.is_zero()) throw DivisionByZero("adjoint trace of a singular matrix");
  if (det != AlgNumber(1L) && det != AlgNumber(-1L))
    throw PreconditionError("adjoint trace needs determinant +-1, got " + det.to_string());
  return trace(g) * trace(inverse(g)) - AlgNumber(1L);
}

}  // namespace projrefl
