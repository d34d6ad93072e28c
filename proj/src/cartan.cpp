#include "projrefl/cartan.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <sstream>

namespace projrefl {

CartanMatrix::CartanMatrix(AlgMatrix entries) : m_(std::move(entries)) {
  if (!m_.is_square()) throw PreconditionError("Cartan matrix must be square");
  for (std::size_t i = 0; i < m_.rows(); ++i)
    if (m_(i, i) != AlgNumber(2L))
      throw PreconditionError("Cartan matrix diagonal entry " + std::to_string(i + 1) + " is " + m_(i, i).to_string() +
                              ", expected 2");
}

FieldSpec CartanMatrix::field() const {
  FieldSpec f;
  for (const auto& x : m_.data()) f = FieldSpec::join(f, x.field());
  return f;
}

std::string cycle_to_string(const Cycle& c) {
  std::string out = "(";
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (k) out += ",";
    out += std::to_string(c[k] + 1);
  }
  return out + ")";
}

std::vector<Cycle> simple_cycles(int n, const std::function<bool(int, int)>& nonzero) {
  std::vector<Cycle> out;
  std::vector<int> path;
  std::vector<char> on_path(static_cast<std::size_t>(n), 0);

  // Cycles whose smallest index is `start`, extended through larger indices.
  std::function<void(int, int)> extend = [&](int start, int v) {
    for (int w = start; w < n; ++w) {
      if (w == v || !nonzero(v, w)) continue;
      if (w == start) {
        if (path.size() >= 2) out.push_back(path);
      } else if (!on_path[static_cast<std::size_t>(w)]) {
        on_path[static_cast<std::size_t>(w)] = 1;
        path.push_back(w);
        extend(start, w);
        path.pop_back();
        on_path[static_cast<std::size_t>(w)] = 0;
      }
    }
  };

  for (int s = 0; s < n; ++s) {
    path = {s};
    on_path[static_cast<std::size_t>(s)] = 1;
    extend(s, s);
    on_path[static_cast<std::size_t>(s)] = 0;
  }
  std::sort(out.begin(), out.end(), CycleLess{});
  return out;
}

std::vector<Cycle> simple_cycles(const CartanMatrix& c) {
  return simple_cycles(c.size(), [&c](int i, int j) { return !c(i, j).is_zero(); });
}

CyclicSignature cyclic_signature(const CartanMatrix& c) {
  CyclicSignature sig;
  for (auto& cycle : simple_cycles(c)) {
    AlgNumber product(1L);
    for (std::size_t k = 0; k < cycle.size(); ++k) product *= c(cycle[k], cycle[(k + 1) % cycle.size()]);
    sig.emplace(std::move(cycle), std::move(product));
  }
  return sig;
}

std::string signature_to_string(const CyclicSignature& sig) {
  std::string out;
  for (const auto& [cycle, value] : sig) {
    if (!out.empty()) out += " ";
    out += cycle_to_string(cycle) + "=" + value.to_string();
  }
  return out.empty() ? "{}" : out;
}

std::string to_string(VinbergViolation::Kind kind) {
  switch (kind) {
    case VinbergViolation::Kind::L1:
      return "L1";
    case VinbergViolation::Kind::L2i:
      return "L2(i)";
    case VinbergViolation::Kind::L2ii:
      return "L2(ii)";
  }
  return "?";
}

VinbergReport validate_vinberg(const CartanMatrix& c, const CoxeterDiagram& d) {
  if (c.size() != d.size())
    throw PreconditionError("Cartan matrix has size " + std::to_string(c.size()) + " but the diagram has " +
                            std::to_string(d.size()) + " faces");
  VinbergReport report;
  const auto add = [&report](VinbergViolation::Kind k, int i, int j, std::string detail) {
    report.violations.push_back({k, i, j, std::move(detail)});
  };
  for (int i = 0; i < c.size(); ++i) {
    for (int j = i + 1; j < c.size(); ++j) {
      for (const auto& [s, t] : {std::pair{i, j}, std::pair{j, i}})
        if (c(s, t).sign() == Sign::positive) add(VinbergViolation::Kind::L1, s, t, "c = " + c(s, t).to_string() + " > 0");

      const AlgNumber product = c(i, j) * c(j, i);
      const auto m = d.order(i, j);
      if (!m) {
        if (product < AlgNumber(4L))
          add(VinbergViolation::Kind::L2i, i, j, "non-adjacent product " + product.to_string() + " < 4");
      } else if (*m == 2) {
        if (!c(i, j).is_zero() || !c(j, i).is_zero())
          add(VinbergViolation::Kind::L2ii, i, j, "order 2 needs c_st = c_ts = 0, product " + product.to_string());
      } else {
        const AlgNumber expected = cos2_value(*m);
        if (product != expected)
          add(VinbergViolation::Kind::L2ii, i, j,
              "order " + std::to_string(*m) + " needs product " + expected.to_string() + ", got " + product.to_string());
      }
    }
  }
  return report;
}

namespace {

// Connected components of the symmetric nonzero pattern restricted to `subset`.
std::vector<std::vector<std::size_t>> components(const AlgMatrix& m, const std::vector<std::size_t>& subset) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<char> seen(subset.size(), 0);
  for (std::size_t r = 0; r < subset.size(); ++r) {
    if (seen[r]) continue;
    std::vector<std::size_t> comp;
    std::deque<std::size_t> queue{r};
    seen[r] = 1;
    while (!queue.empty()) {
      const std::size_t u = queue.front();
      queue.pop_front();
      comp.push_back(subset[u]);
      for (std::size_t v = 0; v < subset.size(); ++v) {
        if (seen[v]) continue;
        if (!m(subset[u], subset[v]).is_zero() || !m(subset[v], subset[u]).is_zero()) {
          seen[v] = 1;
          queue.push_back(v);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
    out.push_back(std::move(comp));
  }
  return out;
}

std::vector<std::size_t> iota(std::size_t n) {
  std::vector<std::size_t> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = i;
  return v;
}

}  // namespace

bool is_indecomposable(const CartanMatrix& c) {
  return components(c.matrix(), iota(static_cast<std::size_t>(c.size()))).size() == 1;
}

AlgNumber determinant(const CartanMatrix& c) { return determinant(c.matrix()); }

std::string to_string(PerronType t) {
  switch (t) {
    case PerronType::positive:
      return "positive";
    case PerronType::zero:
      return "zero";
    case PerronType::negative:
      return "negative";
  }
  return "?";
}

PerronType perron_type(const CartanMatrix& c) {
  if (!is_indecomposable(c)) throw PreconditionError("perron_type needs an indecomposable matrix");
  for (int i = 0; i < c.size(); ++i)
    for (int j = 0; j < c.size(); ++j)
      if (i != j && c(i, j).sign() == Sign::positive)
        throw PreconditionError("perron_type needs non-positive off-diagonal entries");

  const std::size_t n = static_cast<std::size_t>(c.size());
  for (std::size_t k = 1; k < n; ++k) {
    const auto lead = iota(k);
    if (determinant(c.matrix().submatrix(lead, lead)).sign() != Sign::positive) return PerronType::negative;
  }
  switch (determinant(c.matrix()).sign()) {
    case Sign::positive:
      return PerronType::positive;
    case Sign::zero:
      return PerronType::zero;
    default:
      return PerronType::negative;
  }
}

bool vertex_groups_finite(const CartanMatrix& c, const CoxeterDiagram& d) {
  if (c.size() != d.size()) throw PreconditionError("Cartan matrix and diagram sizes differ");
  for (const auto& vertex : d.vertices()) {
    std::vector<std::size_t> faces;
    for (int f : vertex) {
      if (f < 0 || f >= c.size()) throw PreconditionError("vertex references unknown face " + std::to_string(f + 1));
      faces.push_back(static_cast<std::size_t>(f));
    }
    for (const auto& comp : components(c.matrix(), faces)) {
      if (perron_type(CartanMatrix(c.matrix().submatrix(comp, comp))) != PerronType::positive) return false;
    }
  }
  return true;
}

bool equivalent(const CartanMatrix& a, const CartanMatrix& b) {
  if (a.size() != b.size()) throw PreconditionError("cannot compare Cartan matrices of different sizes");
  return cyclic_signature(a) == cyclic_signature(b);
}

std::vector<std::vector<int>> diagram_automorphisms(const CoxeterDiagram& d) {
  const int n = d.size();
  if (n > 9) throw PreconditionError("automorphism search is limited to 9 faces");
  std::set<std::vector<int>> vertices(d.vertices().begin(), d.vertices().end());
  std::vector<int> perm(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) perm[static_cast<std::size_t>(i)] = i;
  std::vector<std::vector<int>> out;
  do {
    bool ok = true;
    for (int i = 0; i < n && ok; ++i)
      for (int j = i + 1; j < n && ok; ++j)
        ok = d.order(perm[static_cast<std::size_t>(i)], perm[static_cast<std::size_t>(j)]) == d.order(i, j);
    for (const auto& v : d.vertices()) {
      if (!ok) break;
      std::vector<int> image;
      for (int f : v) image.push_back(perm[static_cast<std::size_t>(f)]);
      std::sort(image.begin(), image.end());
      ok = vertices.count(image) > 0;
    }
    if (ok) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

bool equivalent_up_to_symmetry(const CartanMatrix& a, const CartanMatrix& b, const CoxeterDiagram& d) {
  if (a.size() != d.size() || b.size() != d.size()) throw PreconditionError("matrix and diagram sizes differ");
  const CyclicSignature target = cyclic_signature(b);
  for (const auto& perm : diagram_automorphisms(d))
    if (cyclic_signature(permute(a, perm)) == target) return true;
  return false;
}

std::optional<std::vector<AlgNumber>> diagonal_witness(const CartanMatrix& a, const CartanMatrix& b) {
  if (a.size() != b.size()) return std::nullopt;
  const int n = a.size();
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (a(i, j).is_zero() != b(i, j).is_zero()) return std::nullopt;

  // Spanning-tree propagation: a_ij = d_i b_ij / d_j.
  std::vector<std::optional<AlgNumber>> d(static_cast<std::size_t>(n));
  for (int root = 0; root < n; ++root) {
    if (d[static_cast<std::size_t>(root)]) continue;
    d[static_cast<std::size_t>(root)] = AlgNumber(1L);
    std::deque<int> queue{root};
    while (!queue.empty()) {
      const int i = queue.front();
      queue.pop_front();
      const AlgNumber& di = *d[static_cast<std::size_t>(i)];
      for (int j = 0; j < n; ++j) {
        if (j == i || d[static_cast<std::size_t>(j)]) continue;
        AlgNumber dj;
        if (!a(i, j).is_zero()) {
          dj = di * b(i, j) / a(i, j);
        } else if (!a(j, i).is_zero()) {
          dj = di * a(j, i) / b(j, i);
        } else {
          continue;
        }
        if (dj.sign() != Sign::positive) return std::nullopt;
        d[static_cast<std::size_t>(j)] = std::move(dj);
        queue.push_back(j);
      }
    }
  }

  std::vector<AlgNumber> out;
  out.reserve(d.size());
  for (auto& x : d) out.push_back(std::move(*x));
  if (!(conjugate_by_diagonal(b, out) == a)) return std::nullopt;
  return out;
}

CartanMatrix conjugate_by_diagonal(const CartanMatrix& c, const std::vector<AlgNumber>& d) {
  if (static_cast<int>(d.size()) != c.size()) throw PreconditionError("diagonal has the wrong length");
  std::vector<AlgNumber> inv;
  for (const auto& x : d) inv.push_back(x.inverse());
  AlgMatrix m = c.matrix();
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j)
      if (i != j && !m(i, j).is_zero()) m(i, j) = d[i] * m(i, j) * inv[j];
  return CartanMatrix(std::move(m));
}

CartanMatrix permute(const CartanMatrix& c, const std::vector<int>& perm) {
  const int n = c.size();
  if (static_cast<int>(perm.size()) != n) throw PreconditionError("permutation has the wrong length");
  std::vector<char> seen(static_cast<std::size_t>(n), 0);
  for (int p : perm) {
    if (p < 0 || p >= n || seen[static_cast<std::size_t>(p)]) throw PreconditionError("not a permutation");
    seen[static_cast<std::size_t>(p)] = 1;
  }
  AlgMatrix m(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) = c(perm[i], perm[j]);
  return CartanMatrix(std::move(m));
}

Definability definability_generators(const CartanMatrix& c, std::optional<QuadraticRing> ring) {
  Definability out;
  out.over_z = true;
  bool over_ok = true;
  const FieldSpec quad = ring ? FieldSpec::quadratic(ring->d()) : FieldSpec{};
  for (const auto& [cycle, value] : cyclic_signature(c)) {
    out.generators.push_back(value);
    if (!is_integer(value)) out.over_z = false;
    if (ring && (!quad.contains(value.field()) || !is_algebraic_integer(value, *ring))) over_ok = false;
  }
  if (ring) out.over_ok = over_ok;
  return out;
}

}  // namespace projrefl
