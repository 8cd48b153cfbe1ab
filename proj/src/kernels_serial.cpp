#include <algorithm>
#include <limits>
#include <stdexcept>

#include "latsb/kernels.hpp"

namespace latsb::kernels::serial {

std::optional<Triple> modular_violation(const Lattice& L) {
  const auto n = static_cast<ElementId>(L.size());
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      for (ElementId c = 0; c < n; ++c)
        if (L.leq(a, c) && L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), c)) return Triple{a, b, c};
  return std::nullopt;
}

std::optional<Triple> distributive_violation(const Lattice& L) {
  const auto n = static_cast<ElementId>(L.size());
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      for (ElementId c = 0; c < n; ++c) {
        if (L.join(a, L.meet(b, c)) != L.meet(L.join(a, b), L.join(a, c))) return Triple{a, b, c};
        if (L.meet(a, L.join(b, c)) != L.join(L.meet(a, b), L.meet(a, c))) return Triple{a, b, c};
      }
  return std::nullopt;
}

std::optional<Pair> valuation_violation(const Lattice& L, std::span<const long long> v) {
  const auto n = static_cast<ElementId>(L.size());
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      if (v[L.join(a, b)] + v[L.meet(a, b)] != v[a] + v[b]) return Pair{a, b};
  return std::nullopt;
}

std::optional<Triple> triangle_violation(const Lattice& L) {
  const auto n = static_cast<ElementId>(L.size());
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b)
      for (ElementId c = 0; c < n; ++c)
        if (height_metric(L, a, c) > height_metric(L, a, b) + height_metric(L, b, c)) return Triple{a, b, c};
  return std::nullopt;
}

unsigned min_pairwise_distance(const Lattice& L, std::span<const ElementId> members) {
  if (members.size() < 2) throw std::invalid_argument("minimum distance needs at least two elements");
  unsigned best = std::numeric_limits<unsigned>::max();
  for (std::size_t i = 0; i < members.size(); ++i)
    for (std::size_t j = i + 1; j < members.size(); ++j) best = std::min(best, height_metric(L, members[i], members[j]));
  return best;
}

std::vector<Bitset> distance_graph(const Lattice& L, std::span<const ElementId> vertices, unsigned d) {
  const std::size_t n = vertices.size();
  std::vector<Bitset> adj(n, Bitset(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j && height_metric(L, vertices[i], vertices[j]) >= d) adj[i].set(j);
  return adj;
}

std::size_t max_ball_volume(const Lattice& L, std::span<const ElementId> space, unsigned radius) {
  std::size_t best = 0;
  for (ElementId center : space) {
    std::size_t vol = 0;
    for (ElementId x : space)
      if (height_metric(L, center, x) <= radius) ++vol;
    best = std::max(best, vol);
  }
  return best;
}

}  // namespace latsb::kernels::serial
