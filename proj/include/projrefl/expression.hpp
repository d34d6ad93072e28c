#pragma once

// Scalar expression grammar used by every file format:
//
//   expr    := term (('+' | '-') term)*
//   term    := unary (('*' | '/') unary)*
//   unary   := ('-' | '+') unary | primary
//   primary := integer | 'sqrt' '(' integer ')' | parameter | name | '(' expr ')'
//
// sqrt(D) requires D to be a declared radicand or the product of the two.
// The parameter (default `t`) and named definitions are only accepted when
// the context allows them.

#include <map>
#include <string>
#include <string_view>

#include "projrefl/numfield.hpp"
#include "projrefl/polynomial.hpp"

namespace projrefl {

struct ParseContext {
  FieldSpec field;
  bool allow_parameter = false;
  std::string parameter = "t";
  /// Named subexpressions, e.g. {"mu", ...}; only used with allow_parameter.
  std::map<std::string, RationalFunction, std::less<>> definitions;
};

RationalFunction parse_expression(std::string_view text, const ParseContext& context);

/// Parses a parameter-free scalar.
AlgNumber parse_scalar(std::string_view text, const FieldSpec& field);

}  // namespace projrefl
