#include "projrefl/diagram.hpp"

#include <algorithm>

#include "projrefl/error.hpp"

namespace projrefl {

CoxeterDiagram::CoxeterDiagram(std::string name, int dimension, std::vector<std::string> faces,
                               std::map<FacePair, int> orders, std::set<FacePair> nonadjacent,
                               std::vector<std::vector<int>> vertices)
    : name_(std::move(name)),
      dimension_(dimension),
      faces_(std::move(faces)),
      orders_(std::move(orders)),
      nonadjacent_(std::move(nonadjacent)),
      vertices_(std::move(vertices)) {
  const int n = size();
  if (dimension_ < 1) throw PreconditionError("diagram dimension must be positive");
  if (n < 2) throw PreconditionError("diagram needs at least two faces");
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (faces_[i] == faces_[j]) throw PreconditionError("duplicate face label '" + faces_[i] + "'");

  const auto check_pair = [n](const FacePair& p) {
    if (p.first < 0 || p.second >= n || p.first >= p.second)
      throw PreconditionError("face pair (" + std::to_string(p.first + 1) + "," + std::to_string(p.second + 1) +
                              ") is invalid");
  };
  for (const auto& [pair, m] : orders_) {
    check_pair(pair);
    if (m < 2) throw PreconditionError("edge order must be >= 2");
    if (nonadjacent_.count(pair))
      throw PreconditionError("face pair (" + std::to_string(pair.first + 1) + "," +
                              std::to_string(pair.second + 1) + ") is both adjacent and non-adjacent");
  }
  for (const auto& pair : nonadjacent_) check_pair(pair);
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (!orders_.count({i, j}) && !nonadjacent_.count({i, j}))
        throw PreconditionError("face pair (" + faces_[i] + "," + faces_[j] + ") has no adjacency data");

  for (auto& v : vertices_) {
    for (int f : v)
      if (f < 0 || f >= n) throw PreconditionError("vertex references unknown face " + std::to_string(f + 1));
    std::sort(v.begin(), v.end());
    if (std::adjacent_find(v.begin(), v.end()) != v.end()) throw PreconditionError("vertex repeats a face");
  }
}

int CoxeterDiagram::face_index(const std::string& label) const {
  const auto it = std::find(faces_.begin(), faces_.end(), label);
  if (it == faces_.end()) throw PreconditionError("unknown face '" + label + "'");
  return static_cast<int>(it - faces_.begin());
}

std::optional<int> CoxeterDiagram::order(int s, int t) const {
  const auto it = orders_.find(make_pair_key(s, t));
  if (it == orders_.end()) return std::nullopt;
  return it->second;
}

std::vector<FacePair> CoxeterDiagram::coxeter_graph_edges() const {
  std::vector<FacePair> out;
  for (const auto& [pair, m] : orders_)
    if (m >= 3) out.push_back(pair);
  return out;
}

CoxeterDiagram triangle_diagram(int p, int q, int r) {
  return simplex_diagram("triangle(" + std::to_string(p) + "," + std::to_string(q) + "," + std::to_string(r) + ")",
                         {{0, p, q}, {p, 0, r}, {q, r, 0}});
}

CoxeterDiagram simplex_diagram(std::string name, const std::vector<std::vector<int>>& table) {
  const int n = static_cast<int>(table.size());
  std::vector<std::string> faces;
  for (int i = 0; i < n; ++i) faces.push_back("F" + std::to_string(i + 1));
  std::map<FacePair, int> orders;
  for (int i = 0; i < n; ++i) {
    if (static_cast<int>(table[i].size()) != n) throw PreconditionError("order table must be square");
    for (int j = i + 1; j < n; ++j) {
      if (table[i][j] != table[j][i]) throw PreconditionError("order table must be symmetric");
      orders[{i, j}] = table[i][j];
    }
  }
  std::vector<std::vector<int>> vertices;
  for (int skip = n - 1; skip >= 0; --skip) {
    std::vector<int> v;
    for (int i = 0; i < n; ++i)
      if (i != skip) v.push_back(i);
    vertices.push_back(std::move(v));
  }
  return CoxeterDiagram(std::move(name), n - 1, std::move(faces), std::move(orders), {}, std::move(vertices));
}

}  // namespace projrefl
