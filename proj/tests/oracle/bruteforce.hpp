#pragma once

// Brute-force reference for integral class counts. Shares no code with the
// library: plain 64-bit integers, Leibniz determinants, cycles from
// permutations of index subsets.

#include <map>
#include <set>
#include <vector>

namespace oracle {

using IntMatrix = std::vector<std::vector<long long>>;
/// Oriented simple cycle (0-based, smallest index first) → product.
using Signature = std::map<std::vector<int>, long long>;

/// orders[i][j] for i != j; every pair adjacent (simplex).
struct SimplexSpec {
  std::vector<std::vector<int>> orders;
  /// Faces through each vertex.
  std::vector<std::vector<int>> vertices;
};

long long det(const IntMatrix& m);
Signature signature(const IntMatrix& m);

/// Every matrix with diagonal 2 whose entries for an order-m pair are
/// integers in [−K, −1] with c_ij c_ji = K = 4cos²(π/m), kept when connected,
/// of negative type and with positive-type vertex blocks; one per signature.
std::vector<IntMatrix> classes(const SimplexSpec& spec);

}  // namespace oracle
