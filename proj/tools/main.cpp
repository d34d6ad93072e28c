#include <iostream>

#include "projrefl/cli.hpp"

int main(int argc, char** argv) {
  const std::vector<std::string> args(argv + 1, argv + argc);
  const projrefl::Report rep = projrefl::dispatch(args);
  if (rep.json) {
    if (rep.output.empty()) std::cout << rep.to_json().dump(2) << "\n";
  } else {
    for (const auto& w : rep.warnings) std::cerr << "warning: " << w << "\n";
    if (!rep.document.empty() && rep.output.empty() && rep.exit_code == 0) std::cout << rep.document;
    else if (rep.exit_code == 0 && rep.output.empty()) std::cout << rep.text;
    else if (rep.exit_code != 0) std::cerr << rep.text;
    else std::cout << "wrote " << rep.output << "\n";
  }
  return rep.exit_code;
}
