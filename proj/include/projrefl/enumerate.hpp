#pragma once

#include <optional>
#include <string>
#include <vector>

#include "projrefl/cartan.hpp"
#include "projrefl/diagram.hpp"
#include "projrefl/polynomial.hpp"

namespace projrefl {

// ---------------------------------------------------------------------------
// Integral classes on simplex diagrams

struct RejectCounts {
  int decomposable = 0;
  int non_negative_type = 0;
  int vertex_infinite = 0;
};

struct ClassificationResult {
  std::string diagram_name;
  std::vector<CartanMatrix> representatives;
  std::vector<CyclicSignature> signatures;
  RejectCounts rejected;
  /// Number of integer matrices built from edge factorizations.
  int candidates = 0;

  int count() const { return static_cast<int>(representatives.size()); }
};

/// Number of classes left after also identifying classes related by a
/// relabelling of faces that preserves the diagram.
int count_up_to_symmetry(const ClassificationResult& r, const CoxeterDiagram& d);

/// Conjugacy classes of integral Cartan matrices realizing a simplex diagram
/// with edge orders in {2,3,4,6}. Every order-m edge (m >= 3) is assigned
/// (c_ij, c_ji) = (−a, −b) for each factorization ab = 4cos²(π/m); matrices
/// that are indecomposable, of negative type and have finite vertex groups
/// are kept, one per cyclic signature, in enumeration order.
ClassificationResult classify_integer_classes(const CoxeterDiagram& d);

// ---------------------------------------------------------------------------
// One-parameter families

/// Interval of admissible parameter values; a missing bound is infinite.
struct ParameterDomain {
  std::optional<AlgNumber> min;
  std::optional<AlgNumber> max;
  bool min_open = true;
  bool max_open = true;

  bool contains(const AlgNumber& t) const;
  std::string to_string() const;
};

class ParametricMatrix {
 public:
  ParametricMatrix() = default;
  /// Diagonal entries must be identically 2.
  ParametricMatrix(Matrix<RationalFunction> entries, ParameterDomain domain, std::string parameter = "t");

  int size() const { return static_cast<int>(m_.rows()); }
  const RationalFunction& operator()(int i, int j) const {
    return m_(static_cast<std::size_t>(i), static_cast<std::size_t>(j));
  }
  const Matrix<RationalFunction>& entries() const { return m_; }
  const ParameterDomain& domain() const { return domain_; }
  const std::string& parameter() const { return parameter_; }

  /// Throws DivisionByZero at a pole.
  CartanMatrix evaluate(const AlgNumber& t) const;

 private:
  Matrix<RationalFunction> m_;
  ParameterDomain domain_;
  std::string parameter_ = "t";
};

using ParametricSignature = std::map<Cycle, RationalFunction, CycleLess>;

/// Simple cyclic products over the generic nonzero pattern, as reduced
/// rational functions.
ParametricSignature parametric_signature(const ParametricMatrix& p);

struct PointCheck {
  AlgNumber t;
  CartanMatrix matrix;
  CyclicSignature signature;
  bool over_z = false;
};

/// Exact evaluation at t0 (which must lie in the domain).
PointCheck verify_at(const ParametricMatrix& p, const AlgNumber& t0);

struct IntegralitySolution {
  /// Every cyclic product is a constant integer: the whole domain is one class.
  bool whole_domain = false;
  std::optional<CyclicSignature> constant_signature;
  /// Isolated parameter values, in increasing order.
  std::vector<PointCheck> points;
};

/// All parameter values making every simple cyclic product a correctly signed
/// integer. Requires a pair of products f = αt, g = β/t (so f·g is constant);
/// candidates come from the divisors of f·g and are re-checked exactly, so
/// other nonconstant products only act as filters.
IntegralitySolution solve_integrality(const ParametricMatrix& p);

/// True iff every length-k value has sign (−1)^k.
bool satisfies_sign_rule(const CyclicSignature& sig);

// ---------------------------------------------------------------------------
// Families over rings of quadratic integers

struct UnitFamilySpec {
  CoxeterDiagram diagram;
  QuadraticRing ring{2};
  AlgNumber unit;
  int count = 1;
};

struct SkippedUnit {
  int exponent;
  std::string reason;
};

struct UnitFamilyResult {
  /// Faces in cycle order i_1, ..., i_{n+1} (0-based).
  std::vector<int> polygon;
  std::vector<CartanMatrix> matrices;
  /// u = ε^exponent for each matrix.
  std::vector<int> exponents;
  std::vector<SkippedUnit> skipped;
};

/// For u = ε, ε², ..., ε^N: (c_{i1 i2}, c_{i2 i1}) = (−u, −4cos²(π/m)/u) on the
/// first polygon edge and (−1, −4cos²(π/m)) on every other edge, including the
/// closing edge (i_1, i_{n+1}).
UnitFamilyResult units_family(const UnitFamilySpec& spec);

}  // namespace projrefl
