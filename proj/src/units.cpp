#include <map>

#include "projrefl/enumerate.hpp"

namespace projrefl {

namespace {

// Faces of a Coxeter graph that is one cycle through every face, listed from
// face 0 towards its smaller neighbour.
std::vector<int> polygon_order(const CoxeterDiagram& d) {
  const int n = d.size();
  std::vector<std::vector<int>> nbr(static_cast<std::size_t>(n));
  for (const auto& [s, t] : d.coxeter_graph_edges()) {
    nbr[static_cast<std::size_t>(s)].push_back(t);
    nbr[static_cast<std::size_t>(t)].push_back(s);
  }
  for (const auto& v : nbr)
    if (v.size() != 2) throw PreconditionError("Coxeter graph of '" + d.name() + "' is not a single cycle");

  std::vector<int> order{0};
  int prev = 0;
  int cur = std::min(nbr[0][0], nbr[0][1]);
  while (cur != 0) {
    order.push_back(cur);
    const auto& nb = nbr[static_cast<std::size_t>(cur)];
    const int next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (static_cast<int>(order.size()) != n)
    throw PreconditionError("Coxeter graph of '" + d.name() + "' is not a single cycle");
  return order;
}

}  // namespace

UnitFamilyResult units_family(const UnitFamilySpec& spec) {
  const CoxeterDiagram& d = spec.diagram;
  if (!d.is_simplex()) throw PreconditionError("unit families need a simplex diagram");
  if (spec.count < 1) throw PreconditionError("unit count must be positive");
  if (!is_unit(spec.unit, spec.ring)) throw PreconditionError(spec.unit.to_string() + " is not a unit of the ring");
  if (!(spec.unit > AlgNumber(1L))) throw PreconditionError("the unit must be greater than 1");

  UnitFamilyResult out;
  out.polygon = polygon_order(d);
  const FieldSpec quad = FieldSpec::quadratic(spec.ring.d());
  for (const auto& [pair, m] : d.orders()) {
    if (m == 2) continue;
    if (m > 6) throw PreconditionError("edge order " + std::to_string(m) + " is not supported");
    const AlgNumber k = cos2_value(m);
    if (!quad.contains(k.field()) || !is_algebraic_integer(k, spec.ring))
      throw PreconditionError("4cos^2(pi/" + std::to_string(m) + ") = " + k.to_string() +
                              " is not an integer of the ring");
  }

  const std::size_t n = static_cast<std::size_t>(d.size());
  std::map<CyclicSignature, int> seen;
  AlgNumber u(1L);
  for (int e = 1; e <= spec.count; ++e) {
    u *= spec.unit;
    AlgMatrix m(n, n, AlgNumber(0L));
    for (std::size_t i = 0; i < n; ++i) m(i, i) = AlgNumber(2L);
    for (std::size_t k = 0; k < n; ++k) {
      const auto i = static_cast<std::size_t>(out.polygon[k]);
      const auto j = static_cast<std::size_t>(out.polygon[(k + 1) % n]);
      const AlgNumber c = cos2_value(*d.order(static_cast<int>(i), static_cast<int>(j)));
      if (k == 0) {
        m(i, j) = -u;
        m(j, i) = -(c / u);
      } else if (k + 1 == n) {
        // Closing edge (i_1, i_{n+1}).
        m(j, i) = AlgNumber(-1L);
        m(i, j) = -c;
      } else {
        m(i, j) = AlgNumber(-1L);
        m(j, i) = -c;
      }
    }
    CartanMatrix c(std::move(m));

    bool nonpositive = true;
    for (int i = 0; i < c.size(); ++i)
      for (int j = 0; j < c.size(); ++j)
        if (i != j && c(i, j).sign() == Sign::positive) nonpositive = false;
    if (!nonpositive) {
      out.skipped.push_back({e, "positive off-diagonal entry"});
      continue;
    }
    const Definability def = definability_generators(c, spec.ring);
    if (!def.over_ok.value_or(false)) {
      out.skipped.push_back({e, "cyclic product outside the ring"});
      continue;
    }
    if (determinant(c).is_zero()) {
      out.skipped.push_back({e, "zero determinant"});
      continue;
    }
    CyclicSignature sig = cyclic_signature(c);
    if (const auto it = seen.find(sig); it != seen.end()) {
      out.skipped.push_back({e, "equivalent to exponent " + std::to_string(it->second)});
      continue;
    }
    seen.emplace(std::move(sig), e);
    out.matrices.push_back(std::move(c));
    out.exponents.push_back(e);
  }
  return out;
}

}  // namespace projrefl
