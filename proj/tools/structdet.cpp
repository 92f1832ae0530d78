#include <structdet/cli.hpp>

#include <unistd.h>

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  const bool color = ::isatty(STDOUT_FILENO) && std::getenv("NO_COLOR") == nullptr;
  structdet::cli::Streams io{std::cout, std::cerr, color};
  return structdet::cli::run_cli(std::move(args), io);
}
