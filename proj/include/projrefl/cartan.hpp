#pragma once

// Cartan matrices c_ij = α_i(v_j) of groups generated by projective
// reflections σ_i = I − v_i ⊗ α_i, their simple cyclic products, the
// conditions for the reflections to tile a convex domain, and diagonal
// equivalence.

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "projrefl/diagram.hpp"
#include "projrefl/matrix.hpp"
#include "projrefl/numfield.hpp"

namespace projrefl {

/// Square matrix with every diagonal entry equal to 2.
class CartanMatrix {
 public:
  CartanMatrix() = default;
  explicit CartanMatrix(AlgMatrix entries);
  CartanMatrix(std::initializer_list<std::initializer_list<AlgNumber>> rows) : CartanMatrix(AlgMatrix(rows)) {}

  int size() const { return static_cast<int>(m_.rows()); }
  const AlgNumber& operator()(int i, int j) const { return m_(static_cast<std::size_t>(i), static_cast<std::size_t>(j)); }
  const AlgMatrix& matrix() const { return m_; }
  /// Smallest supported field holding every entry.
  FieldSpec field() const;

  friend bool operator==(const CartanMatrix& a, const CartanMatrix& b) { return a.m_ == b.m_; }

 private:
  AlgMatrix m_;
};

/// A simple oriented cycle (i_1, ..., i_k), 0-based, rotated so that i_1 is the
/// smallest index. Length-2 cycles are unordered pairs.
using Cycle = std::vector<int>;

/// Orders cycles by length, then lexicographically.
struct CycleLess {
  bool operator()(const Cycle& a, const Cycle& b) const {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  }
};

/// 1-based text form, e.g. "(1,3,2)".
std::string cycle_to_string(const Cycle& c);

/// Every simple cycle of length >= 2 in the digraph with an arc i → j whenever
/// `nonzero(i, j)`; cycles of length >= 3 appear once per orientation.
std::vector<Cycle> simple_cycles(int n, const std::function<bool(int, int)>& nonzero);
std::vector<Cycle> simple_cycles(const CartanMatrix& c);

/// Cycle → simple cyclic product c_{i1 i2} c_{i2 i3} ... c_{ik i1}. Complete
/// invariant of positive diagonal conjugation.
using CyclicSignature = std::map<Cycle, AlgNumber, CycleLess>;

CyclicSignature cyclic_signature(const CartanMatrix& c);
std::string signature_to_string(const CyclicSignature& sig);

struct VinbergViolation {
  enum class Kind { L1, L2i, L2ii };
  Kind kind;
  int i;
  int j;
  std::string detail;
};
std::string to_string(VinbergViolation::Kind kind);

struct VinbergReport {
  std::vector<VinbergViolation> violations;
  bool ok() const { return violations.empty(); }
};

/// (L1) off-diagonal entries <= 0; (L2(i)) c_st c_ts >= 4 for non-adjacent
/// faces; (L2(ii)) c_st c_ts = 4cos²(π/m) for adjacent faces of order m, with
/// both entries zero when m = 2.
VinbergReport validate_vinberg(const CartanMatrix& c, const CoxeterDiagram& d);

bool is_indecomposable(const CartanMatrix& c);
AlgNumber determinant(const CartanMatrix& c);

enum class PerronType { positive, zero, negative };
std::string to_string(PerronType t);

/// Trichotomy of an indecomposable matrix with non-positive off-diagonal
/// entries, decided by leading principal minors.
PerronType perron_type(const CartanMatrix& c);

/// True iff every vertex principal submatrix has positive type on each of its
/// indecomposable components (finite vertex groups).
bool vertex_groups_finite(const CartanMatrix& c, const CoxeterDiagram& d);

/// Same signature, same face labeling.
bool equivalent(const CartanMatrix& a, const CartanMatrix& b);

/// Face permutations π with order(π(i), π(j)) = order(i, j), non-adjacency
/// preserved and vertices mapped to vertices. At most 9 faces.
std::vector<std::vector<int>> diagram_automorphisms(const CoxeterDiagram& d);

/// Equivalence after relabelling the faces of `a` by some automorphism of `d`.
bool equivalent_up_to_symmetry(const CartanMatrix& a, const CartanMatrix& b, const CoxeterDiagram& d);

/// Positive diagonal d with a = diag(d)·b·diag(d)⁻¹, normalized to 1 at the
/// first face of each connected component; nullopt when none exists.
std::optional<std::vector<AlgNumber>> diagonal_witness(const CartanMatrix& a, const CartanMatrix& b);

/// diag(d)·c·diag(d)⁻¹.
CartanMatrix conjugate_by_diagonal(const CartanMatrix& c, const std::vector<AlgNumber>& d);

/// Entries c'_{ij} = c_{π(i) π(j)}.
CartanMatrix permute(const CartanMatrix& c, const std::vector<int>& perm);

struct Definability {
  /// Nonzero simple cyclic products, in signature order.
  std::vector<AlgNumber> generators;
  bool over_z = false;
  /// Set only when a quadratic ring was requested.
  std::optional<bool> over_ok;
};

Definability definability_generators(const CartanMatrix& c, std::optional<QuadraticRing> ring = std::nullopt);

}  // namespace projrefl
