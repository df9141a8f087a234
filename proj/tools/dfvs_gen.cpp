// Writes a random instance in PACE format.

#include <iostream>

#include "CLI11.hpp"
#include "dfvs/oracle.hpp"
#include "dfvs/pace_io.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Random directed graph generator"};
  std::size_t n = 10;
  std::optional<double> p;
  std::optional<std::size_t> m;
  bool self_loops = false;
  std::uint64_t seed = 0;
  app.add_option("-n,--vertices", n)->required();
  auto* prob = app.add_option("-p,--probability", p, "Edge probability per ordered pair")
                   ->check(CLI::Range(0.0, 1.0));
  auto* edges = app.add_option("-m,--edges", m, "Exact number of edges (sparse sampler)");
  prob->excludes(edges);
  app.add_flag("--self-loops", self_loops, "Allow self-loops (with -p)");
  app.add_option("--seed", seed);
  CLI11_PARSE(app, argc, argv);

  try {
    const dfvs::Instance inst =
        m ? dfvs::random_sparse_digraph(n, *m, seed)
          : dfvs::random_digraph({n, p.value_or(0.1), self_loops, seed});
    std::cout << dfvs::format_instance(inst);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 3;
  }
  return 0;
}
