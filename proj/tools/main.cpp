#include <fstream>
#include <iostream>

#include "cli/run.hpp"

int main(int argc, char** argv) {
  using namespace cartan::cli;
  const auto parsed = parse_command_line(argc, argv);
  if (const int* code = std::get_if<int>(&parsed)) return *code;
  const RunConfig& cfg = std::get<RunConfig>(parsed);

  const RunResult result = run(cfg);
  const std::string text = render(result.document);
  if (result.exit_code == 2) std::cerr << "cartankit: " << result.document.value("message", "error") << "\n";
  if (cfg.output.empty()) {
    std::cout << text;
  } else {
    std::ofstream out(cfg.output);
    if (!out) {
      std::cerr << "cartankit: cannot write " << cfg.output << "\n";
      return 2;
    }
    out << text;
  }
  return result.exit_code;
}
