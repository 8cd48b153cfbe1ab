#include <algorithm>
#include <atomic>
#include <limits>
#include <stdexcept>

#include "latsb/kernels.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace latsb::kernels {

namespace {

// Runs row_scan(a) for every row in parallel and returns the witness of the
// smallest row that has one. Rows past the current best are skipped, so the
// answer is the lexicographically first witness whatever the schedule.
template <typename T, typename RowScan>
std::optional<T> first_witness_by_row(ElementId rows, RowScan row_scan) {
  std::atomic<ElementId> best_row{rows};
  std::vector<std::optional<T>> found(rows);
#pragma omp parallel for schedule(dynamic, 1)
  for (long long ai = 0; ai < static_cast<long long>(rows); ++ai) {
    const auto a = static_cast<ElementId>(ai);
    if (a >= best_row.load(std::memory_order_relaxed)) continue;
    found[a] = row_scan(a);
    if (found[a]) {
      ElementId cur = best_row.load();
      while (a < cur && !best_row.compare_exchange_weak(cur, a)) {
      }
    }
  }
  const ElementId r = best_row.load();
  if (r == rows) return std::nullopt;
  return found[r];
}

int& default_workers() {
#ifdef _OPENMP
  static int n = omp_get_max_threads();
#else
  static int n = 1;
#endif
  return n;
}

}  // namespace

int max_workers() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

void set_workers(int n) {
  const int d = default_workers();
#ifdef _OPENMP
  omp_set_num_threads(n > 0 ? n : d);
#else
  (void)n;
  (void)d;
#endif
}

namespace omp {

std::optional<Triple> modular_violation(const Lattice& L) {
  const auto n = static_cast<ElementId>(L.size());
  return first_witness_by_row<Triple>(n, [&](ElementId a) -> std::optional<Triple> {
    for (ElementId b = 0; b < n; ++b)
      for (ElementId c = 0; c < n; ++c)
        if (L.leq(a, c) && L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), c)) return Triple{a, b, c};
    return std::nullopt;
  });
}

std::optional<Triple> distributive_violation(const Lattice& L) {
  const auto n = static_cast<ElementId>(L.size());
  return first_witness_by_row<Triple>(n, [&](ElementId a) -> std::optional<Triple> {
    for (ElementId b = 0; b < n; ++b)
      for (ElementId c = 0; c < n; ++c) {
        if (L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), L.join(a, c))) return Triple{a, b, c};
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return Triple{a, b, c};
      }
    return std::nullopt;
  });
}

std::optional<Pair> valuation_violation(const Lattice& L, std::span<const long long> v) {
  const auto n = static_cast<ElementId>(L.size());
  return first_witness_by_row<Pair>(n, [&](ElementId a) -> std::optional<Pair> {
    for (ElementId b = 0; b < n; ++b)
      if (v[L.join(a, b)] + v[L.meet(a, b)] != v[a] + v[b]) return Pair{a, b};
    return std::nullopt;
  });
}

std::optional<Triple> triangle_violation(const Lattice& L) {
  const auto n = static_cast<ElementId>(L.size());
  return first_witness_by_row<Triple>(n, [&](ElementId a) -> std::optional<Triple> {
    for (ElementId b = 0; b < n; ++b) {
      const unsigned ab = height_metric(L, a, b);
      for (ElementId c = 0; c < n; ++c)
        if (height_metric(L, a, c) > ab + height_metric(L, b, c)) return Triple{a, b, c};
    }
    return std::nullopt;
  });
}

unsigned min_pairwise_distance(const Lattice& L, std::span<const ElementId> members) {
  if (members.size() < 2) throw std::invalid_argument("minimum distance needs at least two elements");
  const auto m = static_cast<long long>(members.size());
  unsigned best = std::numeric_limits<unsigned>::max();
#pragma omp parallel for schedule(dynamic, 8) reduction(min : best)
  for (long long i = 0; i < m; ++i)
    for (long long j = i + 1; j < m; ++j) best = std::min(best, height_metric(L, members[i], members[j]));
  return best;
}

std::vector<Bitset> distance_graph(const Lattice& L, std::span<const ElementId> vertices, unsigned d) {
  const auto n = static_cast<long long>(vertices.size());
  std::vector<Bitset> adj(vertices.size(), Bitset(vertices.size()));
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < n; ++i)
    for (long long j = 0; j < n; ++j)
      if (i != j && height_metric(L, vertices[i], vertices[j]) >= d) adj[i].set(static_cast<std::size_t>(j));
  return adj;
}

std::size_t max_ball_volume(const Lattice& L, std::span<const ElementId> space, unsigned radius) {
  const auto n = static_cast<long long>(space.size());
  std::size_t best = 0;
#pragma omp parallel for schedule(static) reduction(max : best)
  for (long long i = 0; i < n; ++i) {
    std::size_t vol = 0;
    for (ElementId x : space)
      if (height_metric(L, space[i], x) <= radius) ++vol;
    best = std::max(best, vol);
  }
  return best;
}

}  // namespace omp

}  // namespace latsb::kernels
