#pragma once

#include <string>
#include <vector>

#include "projrefl/io.hpp"

namespace projrefl {

struct Report {
  std::string command;
  Json result = Json::object();
  std::vector<std::string> warnings;
  /// 0 success, 1 validation or input failure, 2 usage error.
  int exit_code = 0;
  /// Human-readable rendering of the result.
  std::string text;
  /// Raw payload written to --output or stdout instead of text (SVG).
  std::string document;
  /// --json and --output as given.
  bool json = false;
  std::string output;

  Json to_json() const;
};

/// Runs one command; `args` excludes the program name. Never throws.
Report dispatch(const std::vector<std::string>& args);

}  // namespace projrefl
