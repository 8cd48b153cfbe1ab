#ifndef LATSB_KERNELS_HPP
#define LATSB_KERNELS_HPP

// Exhaustive scans used by the classifiers, schemes, bounds and search.
//
// Every kernel has a serial reference and an OpenMP version. Both return the
// same value; violations are reported as the lexicographically first witness
// so the parallel result does not depend on scheduling.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "latsb/bitset.hpp"
#include "latsb/lattice.hpp"

namespace latsb::kernels {

struct Triple {
  ElementId a, b, c;
  friend bool operator==(const Triple&, const Triple&) = default;
};

struct Pair {
  ElementId a, b;
  friend bool operator==(const Pair&, const Pair&) = default;
};

namespace serial {

// First (a, b, c) with a <= c and a v (b ^ c) != (a v b) ^ c.
std::optional<Triple> modular_violation(const Lattice& L);
// First (a, b, c) breaking either distributive law.
std::optional<Triple> distributive_violation(const Lattice& L);
std::optional<Pair> valuation_violation(const Lattice& L, std::span<const long long> v);
// First (a, b, c) with d(a,c) > d(a,b) + d(b,c) under the height metric.
std::optional<Triple> triangle_violation(const Lattice& L);
// Minimum height-metric distance over distinct pairs; requires >= 2 members.
unsigned min_pairwise_distance(const Lattice& L, std::span<const ElementId> members);
// adjacency[i] has bit j iff d_h(vertices[i], vertices[j]) >= d, i != j.
std::vector<Bitset> distance_graph(const Lattice& L, std::span<const ElementId> vertices, unsigned d);
// max over centers in space of |{x in space : d_h(center, x) <= radius}|.
std::size_t max_ball_volume(const Lattice& L, std::span<const ElementId> space, unsigned radius);

}  // namespace serial

namespace omp {

std::optional<Triple> modular_violation(const Lattice& L);
std::optional<Triple> distributive_violation(const Lattice& L);
std::optional<Pair> valuation_violation(const Lattice& L, std::span<const long long> v);
std::optional<Triple> triangle_violation(const Lattice& L);
unsigned min_pairwise_distance(const Lattice& L, std::span<const ElementId> members);
std::vector<Bitset> distance_graph(const Lattice& L, std::span<const ElementId> vertices, unsigned d);
std::size_t max_ball_volume(const Lattice& L, std::span<const ElementId> space, unsigned radius);

}  // namespace omp

/// Worker count the OpenMP kernels will use (1 when built without OpenMP).
int max_workers();
/// Sets the worker count for subsequent OpenMP regions; n <= 0 restores the default.
void set_workers(int n);

}  // namespace latsb::kernels

#endif  // LATSB_KERNELS_HPP
