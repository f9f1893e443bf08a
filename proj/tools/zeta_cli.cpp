#include "zeta/cli/commands.hpp"

#include <cstdlib>
#include <iostream>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  std::optional<std::string> env_config;
  if (const char* env = std::getenv("ZETA_CONFIG")) env_config = env;
  return zeta::cli::run(args, std::cout, std::cerr, env_config);
}
