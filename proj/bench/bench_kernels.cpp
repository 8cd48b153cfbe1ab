// Serial reference vs OpenMP kernels on the larger lattices that still fit
// the default cap. Prints one line per kernel with the best of a few runs.
//
//   bench_kernels [repeats]

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>

#include "latsb/kernels.hpp"
#include "latsb/projective.hpp"
#include "latsb/search.hpp"

using namespace latsb;

namespace {

double best_of(int repeats, const std::function<void()>& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
  }
  return best;
}

void row(const char* name, int repeats, const std::function<void()>& serial, const std::function<void()>& parallel) {
  const double s = best_of(repeats, serial), p = best_of(repeats, parallel);
  std::printf("%-34s serial %9.4f s   omp %9.4f s   x%.2f\n", name, s, p, p > 0 ? s / p : 0.0);
}

}  // namespace

int main(int argc, char** argv) {
  const int repeats = argc > 1 ? std::max(1, std::atoi(argv[1])) : 3;
  std::printf("workers: %d\n", kernels::max_workers());

  const Lattice sub4 = build_projective_lattice(4, 2).lattice;  // 67 elements
  const Lattice sub3q3 = build_projective_lattice(3, 3).lattice;
  const Lattice pow10 = build_powerset_lattice(10);              // 1024 elements
  std::vector<ElementId> all(pow10.size());
  for (ElementId i = 0; i < pow10.size(); ++i) all[i] = i;

  volatile std::size_t sink = 0;
  row("modular_violation Sub(F_2^4)", repeats, [&] { sink = sink + kernels::serial::modular_violation(sub4).has_value(); },
      [&] { sink = sink + kernels::omp::modular_violation(sub4).has_value(); });
  row("distributive_violation Pow(8)", repeats,
      [&] { sink = sink + kernels::serial::distributive_violation(build_powerset_lattice(8)).has_value(); },
      [&] { sink = sink + kernels::omp::distributive_violation(build_powerset_lattice(8)).has_value(); });
  row("triangle_violation Sub(F_3^3)", repeats, [&] { sink = sink + kernels::serial::triangle_violation(sub3q3).has_value(); },
      [&] { sink = sink + kernels::omp::triangle_violation(sub3q3).has_value(); });
  row("distance_graph Pow(10) d=4", repeats, [&] { sink = sink + kernels::serial::distance_graph(pow10, all, 4).size(); },
      [&] { sink = sink + kernels::omp::distance_graph(pow10, all, 4).size(); });
  row("max_ball_volume Pow(10) r=3", repeats, [&] { sink = sink + kernels::serial::max_ball_volume(pow10, all, 3); },
      [&] { sink = sink + kernels::omp::max_ball_volume(pow10, all, 3); });

  const SearchProblem clique = SearchProblem::make(sub4, 3);
  row("max_code Sub(F_2^4) d=3", repeats, [&] { sink = sink + max_code_serial(clique).best_size; },
      [&] { sink = sink + max_code(clique).best_size; });
  const Lattice pow8 = build_powerset_lattice(8);
  const SearchProblem window = SearchProblem::make(pow8, 4, HeightWindow{3, 5});
  row("max_code Pow(8) d=4 heights 3..5", repeats, [&] { sink = sink + max_code_serial(window).best_size; },
      [&] { sink = sink + max_code(window).best_size; });
  return 0;
}
