#pragma once

#include <string>
#include <vector>

#include "projrefl/cartan.hpp"

namespace projrefl {

/// Covector rows α_i (A, m × r) and vector columns v_j (V, r × m) with
/// α_i(v_j) = c_ij, together with the reflections σ_i = I − v_i α_i.
struct Realization {
  int r = 0;
  AlgMatrix A;
  AlgMatrix V;
  std::vector<AlgMatrix> reflections;

  int generators() const { return static_cast<int>(reflections.size()); }
};

struct RankFactorization {
  AlgMatrix A;
  AlgMatrix V;
  int r = 0;
};

/// C = A·V with r = rank C. Full-rank C gives A = I, V = C; otherwise A is the
/// pivot columns of C and V the nonzero rows of its reduced echelon form.
RankFactorization rank_factorize(const CartanMatrix& c);

/// σ_i = I − v_i α_i. Throws PreconditionError unless α_i(v_i) = 2.
std::vector<AlgMatrix> build_reflections(const AlgMatrix& A, const AlgMatrix& V);

Realization realize(const CartanMatrix& c);

struct RelationCheck {
  enum class Kind { finite_order, commuting, infinite_order };
  int s;
  int t;
  Kind kind;
  /// m for adjacent pairs; the largest power tested for non-adjacent ones.
  int order;
  bool holds;
  std::string detail;
};

struct RelationReport {
  std::vector<RelationCheck> checks;
  bool ok() const;
  std::vector<RelationCheck> failures() const;
};

/// Largest power tried when looking for a finite order of a non-adjacent pair.
inline constexpr int kInfiniteOrderBound = 12;

/// (σ_sσ_t)^m = I for adjacent pairs of order m (m = 2 included); for
/// non-adjacent pairs no power up to kInfiniteOrderBound is the identity.
RelationReport check_relations(const Realization& r, const CoxeterDiagram& d);

struct GroupElement {
  AlgMatrix matrix;
  /// Generator indices (0-based); matrix = σ_{w_1} σ_{w_2} ... σ_{w_k}.
  std::vector<int> word;
};

/// Distinct elements of word length <= depth in breadth-first order; each word
/// is a shortest one, generators tried in index order.
std::vector<GroupElement> word_ball(const Realization& r, int depth);

/// tr(g)·tr(g⁻¹) − 1. Requires det g = ±1; throws DivisionByZero when singular.
AlgNumber adjoint_trace(const AlgMatrix& g);

}  // namespace projrefl
