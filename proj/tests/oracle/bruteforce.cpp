#include "bruteforce.hpp"

#include <algorithm>
#include <stdexcept>

namespace oracle {

namespace {

long long four_cos2(int m) {
  switch (m) {
    case 2: return 0;
    case 3: return 1;
    case 4: return 2;
    case 6: return 3;
  }
  throw std::invalid_argument("order without integral 4cos^2");
}

IntMatrix sub(const IntMatrix& m, const std::vector<int>& idx) {
  IntMatrix out(idx.size(), std::vector<long long>(idx.size()));
  for (std::size_t i = 0; i < idx.size(); ++i)
    for (std::size_t j = 0; j < idx.size(); ++j) out[i][j] = m[idx[i]][idx[j]];
  return out;
}

bool connected(const IntMatrix& m, const std::vector<int>& idx) {
  std::vector<int> seen{idx[0]};
  for (std::size_t k = 0; k < seen.size(); ++k)
    for (int j : idx)
      if (std::find(seen.begin(), seen.end(), j) == seen.end() && (m[seen[k]][j] != 0 || m[j][seen[k]] != 0))
        seen.push_back(j);
  return seen.size() == idx.size();
}

// All leading principal minors positive.
bool positive_type(const IntMatrix& m) {
  for (std::size_t k = 1; k <= m.size(); ++k) {
    std::vector<int> lead(k);
    for (std::size_t i = 0; i < k; ++i) lead[i] = static_cast<int>(i);
    if (det(sub(m, lead)) <= 0) return false;
  }
  return true;
}

bool negative_type(const IntMatrix& m) {
  // Indecomposable with non-positive off-diagonal: neither positive nor zero type.
  for (std::size_t k = 1; k < m.size(); ++k) {
    std::vector<int> lead(k);
    for (std::size_t i = 0; i < k; ++i) lead[i] = static_cast<int>(i);
    if (det(sub(m, lead)) <= 0) return true;
  }
  return det(m) < 0;
}

bool vertex_ok(const IntMatrix& m, const std::vector<int>& vertex) {
  std::vector<int> left = vertex;
  while (!left.empty()) {
    std::vector<int> comp{left[0]};
    for (std::size_t k = 0; k < comp.size(); ++k)
      for (int j : left)
        if (std::find(comp.begin(), comp.end(), j) == comp.end() && (m[comp[k]][j] != 0 || m[j][comp[k]] != 0))
          comp.push_back(j);
    std::sort(comp.begin(), comp.end());
    if (!positive_type(sub(m, comp))) return false;
    std::vector<int> rest;
    for (int j : left)
      if (!std::binary_search(comp.begin(), comp.end(), j)) rest.push_back(j);
    left = rest;
  }
  return true;
}

}  // namespace

long long det(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  std::vector<int> p(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
  long long total = 0;
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (p[i] > p[j]) ++inversions;
    long long term = inversions % 2 ? -1 : 1;
    for (int i = 0; i < n && term != 0; ++i) term *= m[i][p[i]];
    total += term;
  } while (std::next_permutation(p.begin(), p.end()));
  return total;
}

Signature signature(const IntMatrix& m) {
  const int n = static_cast<int>(m.size());
  Signature out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> set;
    for (int i = 0; i < n; ++i)
      if (mask >> i & 1) set.push_back(i);
    if (set.size() < 2) continue;
    // Fix the smallest index first; permute the rest.
    std::vector<int> rest(set.begin() + 1, set.end());
    do {
      std::vector<int> cyc{set[0]};
      cyc.insert(cyc.end(), rest.begin(), rest.end());
      long long prod = 1;
      for (std::size_t k = 0; k < cyc.size(); ++k) prod *= m[cyc[k]][cyc[(k + 1) % cyc.size()]];
      if (prod != 0) out[cyc] = prod;
    } while (std::next_permutation(rest.begin(), rest.end()));
  }
  return out;
}

std::vector<IntMatrix> classes(const SimplexSpec& spec) {
  const int n = static_cast<int>(spec.orders.size());
  std::vector<std::pair<int, int>> pairs;
  std::vector<long long> products;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      pairs.emplace_back(i, j);
      products.push_back(four_cos2(spec.orders[i][j]));
    }

  std::vector<IntMatrix> found;
  std::set<Signature> seen;
  IntMatrix m(n, std::vector<long long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 2;

  // Depth-first over pairs, trying every entry value in [−K, −1].
  auto rec = [&](auto&& self, std::size_t k) -> void {
    if (k == pairs.size()) {
      std::vector<int> all(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) all[i] = i;
      if (!connected(m, all) || !negative_type(m)) return;
      for (const auto& v : spec.vertices)
        if (!vertex_ok(m, v)) return;
      Signature s = signature(m);
      if (seen.insert(s).second) found.push_back(m);
      return;
    }
    const auto [i, j] = pairs[k];
    const long long K = products[k];
    if (K == 0) {
      m[i][j] = m[j][i] = 0;
      self(self, k + 1);
      return;
    }
    for (long long a = -K; a <= -1; ++a)
      for (long long b = -K; b <= -1; ++b) {
        if (a * b != K) continue;
        m[i][j] = a;
        m[j][i] = b;
        self(self, k + 1);
      }
  };
  rec(rec, 0);
  return found;
}

}  // namespace oracle
