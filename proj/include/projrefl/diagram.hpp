#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace projrefl {

/// Unordered face pair stored with first < second (0-based indices).
using FacePair = std::pair<int, int>;

inline FacePair make_pair_key(int s, int t) { return s < t ? FacePair{s, t} : FacePair{t, s}; }

/// Combinatorics of a Coxeter polytope: faces, the order of every adjacent
/// pair, the non-adjacent pairs, and the faces through each vertex.
class CoxeterDiagram {
 public:
  CoxeterDiagram() = default;
  /// Every face pair must be either adjacent (with order >= 2) or
  /// non-adjacent, never both.
  CoxeterDiagram(std::string name, int dimension, std::vector<std::string> faces,
                 std::map<FacePair, int> orders, std::set<FacePair> nonadjacent,
                 std::vector<std::vector<int>> vertices);

  const std::string& name() const { return name_; }
  int dimension() const { return dimension_; }
  int size() const { return static_cast<int>(faces_.size()); }
  const std::vector<std::string>& faces() const { return faces_; }
  /// Throws PreconditionError for unknown labels.
  int face_index(const std::string& label) const;

  const std::map<FacePair, int>& orders() const { return orders_; }
  const std::set<FacePair>& nonadjacent() const { return nonadjacent_; }
  const std::vector<std::vector<int>>& vertices() const { return vertices_; }

  bool adjacent(int s, int t) const { return orders_.count(make_pair_key(s, t)) > 0; }
  /// Edge order of an adjacent pair; nullopt when non-adjacent.
  std::optional<int> order(int s, int t) const;

  bool is_simplex() const { return nonadjacent_.empty(); }
  /// Pairs with order >= 3, i.e. the edges of the Coxeter graph.
  std::vector<FacePair> coxeter_graph_edges() const;

 private:
  std::string name_;
  int dimension_ = 0;
  std::vector<std::string> faces_;
  std::map<FacePair, int> orders_;
  std::set<FacePair> nonadjacent_;
  std::vector<std::vector<int>> vertices_;
};

/// Triangle with orders (1,2) = p, (1,3) = q, (2,3) = r.
CoxeterDiagram triangle_diagram(int p, int q, int r);

/// n-simplex from a symmetric order table (entries off the diagonal >= 2).
/// Vertices are the complements of single faces.
CoxeterDiagram simplex_diagram(std::string name, const std::vector<std::vector<int>>& orders);

}  // namespace projrefl
