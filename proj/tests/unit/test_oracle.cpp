#include "bruteforce.hpp"
#include "doctest.h"
#include "projrefl/catalog.hpp"
#include "projrefl/enumerate.hpp"

using namespace projrefl;

namespace {

oracle::Signature to_oracle(const CyclicSignature& sig) {
  oracle::Signature out;
  for (const auto& [c, v] : sig) out[c] = v.rational_value().get_num().get_si();
  return out;
}

oracle::SimplexSpec spec_of(const CoxeterDiagram& d) {
  const int n = d.size();
  oracle::SimplexSpec s{std::vector<std::vector<int>>(n, std::vector<int>(n, 0)), d.vertices()};
  for (const auto& [p, m] : d.orders()) s.orders[p.first][p.second] = s.orders[p.second][p.first] = m;
  return s;
}

void agree(const CoxeterDiagram& d) {
  CAPTURE(d.name());
  const auto lib = classify_integer_classes(d);
  const auto brute = oracle::classes(spec_of(d));
  CHECK(lib.count() == static_cast<int>(brute.size()));
  std::set<oracle::Signature> a, b;
  for (const auto& s : lib.signatures) a.insert(to_oracle(s));
  for (const auto& m : brute) b.insert(oracle::signature(m));
  CHECK(a == b);
  for (std::size_t k = 0; k < lib.representatives.size(); ++k) {
    oracle::IntMatrix m(static_cast<std::size_t>(d.size()), std::vector<long long>(static_cast<std::size_t>(d.size())));
    for (int i = 0; i < d.size(); ++i)
      for (int j = 0; j < d.size(); ++j) m[i][j] = lib.representatives[k](i, j).rational_value().get_num().get_si();
    CHECK(oracle::det(m) == determinant(lib.representatives[k]).rational_value().get_num().get_si());
  }
}

}  // namespace

TEST_CASE("oracle agrees on every triangle with orders in {2,3,4,6}") {
  const int orders[] = {2, 3, 4, 6};
  for (int p : orders)
    for (int q : orders)
      for (int r : orders) {
        // Only hyperbolic triangles can be of negative type; the rest must give 0 on both sides.
        agree(triangle_diagram(p, q, r));
      }
}

TEST_CASE("oracle agrees on tetrahedra and the 4-simplex") {
  for (int d : {2, 3, 4, 6}) agree(tetrahedron_diagram(d));
  agree(simplex4_diagram());
}

TEST_CASE("oracle determinant matches a hand expansion") {
  CHECK(oracle::det({{2, -1, -1}, {-1, 2, -1}, {-1, -2, 2}}) == -3);
  CHECK(oracle::det({{2, 0}, {0, 2}}) == 4);
}
