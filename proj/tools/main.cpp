#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "cli.hpp"

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_cap;
  if (const char* value = std::getenv(burnside::cli::kCapEnvironmentVariable)) env_cap = value;
  return burnside::cli::run(args, std::cout, std::cerr, env_cap);
}
