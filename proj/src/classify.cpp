#include <map>

#include "projrefl/enumerate.hpp"

namespace projrefl {

namespace {

struct EdgeChoices {
  FacePair pair;
  std::vector<std::pair<long, long>> factorizations;  // (a, b) with ab = 4cos²
};

}  // namespace

ClassificationResult classify_integer_classes(const CoxeterDiagram& d) {
  if (!d.is_simplex())
    throw PreconditionError("diagram '" + d.name() +
                            "' has non-adjacent faces; use the parametric family commands for non-simplex polytopes");

  std::vector<EdgeChoices> edges;
  for (const auto& [pair, m] : d.orders()) {
    if (m != 2 && m != 3 && m != 4 && m != 6)
      throw PreconditionError("edge order " + std::to_string(m) +
                              " admits no integral Cartan matrix (4cos^2(pi/m) is an integer only for m in {2,3,4,6})");
    if (m == 2) continue;
    const long k = cos2_value(m).rational_value().get_num().get_si();
    EdgeChoices e{pair, {}};
    for (long a = 1; a <= k; ++a)
      if (k % a == 0) e.factorizations.emplace_back(a, k / a);
    edges.push_back(std::move(e));
  }

  ClassificationResult result;
  result.diagram_name = d.name();
  std::map<CyclicSignature, std::size_t> seen;
  const std::size_t n = static_cast<std::size_t>(d.size());

  // Odometer over one factorization per edge; the last edge varies fastest.
  std::vector<std::size_t> choice(edges.size(), 0);
  for (;;) {
    AlgMatrix m(n, n, AlgNumber(0L));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = AlgNumber(2L);
    for (std::size_t e = 0; e < edges.size(); ++e) {
      const auto [a, b] = edges[e].factorizations[choice[e]];
      const auto [i, j] = edges[e].pair;
      m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = AlgNumber(-a);
      m(static_cast<std::size_t>(j), static_cast<std::size_t>(i)) = AlgNumber(-b);
    }
    ++result.candidates;
    CartanMatrix c(std::move(m));

    if (!is_indecomposable(c)) {
      ++result.rejected.decomposable;
    } else if (perron_type(c) != PerronType::negative) {
      ++result.rejected.non_negative_type;
    } else if (!vertex_groups_finite(c, d)) {
      ++result.rejected.vertex_infinite;
    } else {
      CyclicSignature sig = cyclic_signature(c);
      if (!seen.count(sig)) {
        seen.emplace(sig, result.representatives.size());
        result.representatives.push_back(std::move(c));
        result.signatures.push_back(std::move(sig));
      }
    }

    std::size_t e = edges.size();
    while (e > 0) {
      --e;
      if (++choice[e] < edges[e].factorizations.size()) break;
      choice[e] = 0;
      if (e == 0) return result;
    }
    if (edges.empty()) return result;
  }
}

int count_up_to_symmetry(const ClassificationResult& r, const CoxeterDiagram& d) {
  std::vector<const CartanMatrix*> kept;
  for (const auto& c : r.representatives) {
    bool fresh = true;
    for (const auto* k : kept)
      if (equivalent_up_to_symmetry(c, *k, d)) {
        fresh = false;
        break;
      }
    if (fresh) kept.push_back(&c);
  }
  return static_cast<int>(kept.size());
}

}  // namespace projrefl
