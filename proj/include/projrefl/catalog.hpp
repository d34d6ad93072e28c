#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "projrefl/io.hpp"

namespace projrefl {

struct CatalogFamily {
  FamilyDocument document;
  ParametricMatrix matrix;
  CoxeterDiagram diagram;
  /// In-domain value used for validation and default evaluation.
  AlgNumber sample;
};

struct CatalogMatrix {
  CartanMatrix matrix;
  CoxeterDiagram diagram;
};

using CatalogPayload = std::variant<CoxeterDiagram, CatalogFamily, CatalogMatrix>;

struct CatalogEntry {
  std::string key;
  CatalogPayload payload;
  std::string provenance;
  /// Published class count for classification entries.
  std::optional<int> reference_count;
};

/// Every built-in entry in listing order.
const std::vector<CatalogEntry>& catalog();

/// Built-in entry by key. Also accepts "triangle(p,q,r)" for any orders and
/// "benoist-prism(d)" for 3 <= d <= 5. Throws PreconditionError if unknown.
CatalogEntry find_catalog_entry(std::string_view key);

/// Tetrahedron with orders (1,2) = 4, (1,3) = 3, (2,4) = 3, (3,4) = d and
/// (1,4), (2,3) orthogonal.
CoxeterDiagram tetrahedron_diagram(int d);
/// Pentagon 1-2-3-4-5-1 with (3,4) of order 4, the other pentagon edges of
/// order 3 and all diagonals orthogonal.
CoxeterDiagram simplex4_diagram();
/// Cube with opposite face pairs (1,6), (2,4), (3,5).
CoxeterDiagram cu21_diagram();
/// Triangular prism: triangle faces 4 and 5, side faces 1, 2, 3; (3,4) of order d.
CoxeterDiagram prism_diagram(int d);

}  // namespace projrefl
