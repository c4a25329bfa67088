#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "k3enum/cli.hpp"

int main(int argc, char** argv) {
  k3enum::Config config;
  try {
    config = k3enum::Config::from_environment();
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  const std::vector<std::string> args(argv + 1, argv + argc);
  return k3enum::run(args, std::cout, std::cerr, config);
}
