#include <iostream>
#include <string>
#include <vector>

#include "dfvs/pace_io.hpp"

int main(int argc, char** argv) {
  const std::atomic<bool>& terminate = dfvs::install_termination_bridge();
  std::ios::sync_with_stdio(false);
  const std::vector<std::string> args(argv + 1, argv + argc);
  try {
    return dfvs::run_cli(args, std::cin, std::cout, std::cerr, &terminate);
  } catch (const std::exception& e) {
    std::cerr << "fatal: " << e.what() << '\n';
    return 4;
  }
}
