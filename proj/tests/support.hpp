#pragma once

#include <string>
#include <vector>

#include "projrefl/cartan.hpp"
#include "projrefl/expression.hpp"

namespace testing {

inline projrefl::AlgNumber num(const std::string& text, const projrefl::FieldSpec& field = {}) {
  return projrefl::parse_scalar(text, field);
}

inline projrefl::AlgMatrix int_alg_matrix(const std::vector<std::vector<long>>& rows) {
  projrefl::AlgMatrix m(rows.size(), rows.empty() ? 0 : rows[0].size());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = projrefl::AlgNumber(rows[i][j]);
  return m;
}

inline projrefl::CartanMatrix int_matrix(const std::vector<std::vector<long>>& rows) {
  return projrefl::CartanMatrix(int_alg_matrix(rows));
}

/// Signature restricted to cycles of the given length, in key order.
inline std::vector<projrefl::AlgNumber> values_of_length(const projrefl::CyclicSignature& sig, std::size_t len) {
  std::vector<projrefl::AlgNumber> out;
  for (const auto& [c, v] : sig)
    if (c.size() == len) out.push_back(v);
  return out;
}

inline std::vector<projrefl::AlgNumber> ints(const std::vector<long>& xs) {
  std::vector<projrefl::AlgNumber> out;
  for (long x : xs) out.emplace_back(x);
  return out;
}

}  // namespace testing
