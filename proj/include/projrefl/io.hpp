#pragma once

// JSON formats.
//
//   field:    {"radicands": [5, 6]}
//   matrix:   {"field": {...}, "entries": [["2", "-sqrt(6)", ...], ...]}
//   diagram:  {"name", "dimension", "faces": [...],
//              "edges": [{"faces": [s, t], "order": m}, ...],
//              "nonadjacent": [[s, t], ...], "vertices": [[...], ...]}
//   family:   {"field", "parameter": "t", "definitions": {"mu": expr, ...},
//              "domain": {"min": expr | "-inf", "max": expr | "+inf",
//                         "min_open": bool, "max_open": bool},
//              "entries": [[expr(t), ...], ...]}
//
// Faces in diagram files are labels or 1-based indices. Entries may be JSON
// integers or expression strings.

#include <string>
#include <utility>
#include <vector>

#include "projrefl/enumerate.hpp"
#include "projrefl/realize.hpp"
#include "json.hpp"

namespace projrefl {

using Json = nlohmann::ordered_json;

Json field_to_json(const FieldSpec& f);
FieldSpec field_from_json(const Json& j);

/// Parses "a,b" (or "a", or "") into a field.
FieldSpec parse_field_option(const std::string& text);

Json matrix_to_json(const AlgMatrix& m);
Json cartan_to_json(const CartanMatrix& c);
/// `fallback` is used when the document has no "field" member; the declared
/// field is widened to cover it.
CartanMatrix cartan_from_json(const Json& j, const FieldSpec& fallback = {});

Json diagram_to_json(const CoxeterDiagram& d);
CoxeterDiagram diagram_from_json(const Json& j);

/// A family as written in a file: the parsed matrix keeps the source text so
/// it can be written back unchanged.
struct FamilyDocument {
  FieldSpec field;
  std::string parameter = "t";
  std::vector<std::pair<std::string, std::string>> definitions;
  std::vector<std::vector<std::string>> entries;
  std::string domain_min = "-inf";
  std::string domain_max = "+inf";
  bool min_open = true;
  bool max_open = true;

  ParametricMatrix build() const;
};

Json family_to_json(const FamilyDocument& f);
FamilyDocument family_from_json(const Json& j, const FieldSpec& fallback = {});

Json signature_to_json(const CyclicSignature& sig);
Json parametric_signature_to_json(const ParametricSignature& sig, const std::string& parameter = "t");
Json realization_to_json(const Realization& r);
Json word_ball_to_json(const std::vector<GroupElement>& ball);

/// Whole-file reads; ParseError on malformed JSON.
Json read_json_file(const std::string& path);

}  // namespace projrefl
