#include <cstdlib>
#include <iostream>

#include "starconf/cli.hpp"

int main(int argc, char** argv) {
  std::optional<std::string> env_seed;
  if (const char* s = std::getenv("STARCONF_SEED")) env_seed = s;
  return starconf::cli::run(argc, argv, std::cout, std::cerr, env_seed);
}
