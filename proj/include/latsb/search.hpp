#ifndef LATSB_SEARCH_HPP
#define LATSB_SEARCH_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latsb/bounds.hpp"
#include "latsb/lattice.hpp"
#include "latsb/schemes.hpp"

namespace latsb {

struct SearchBudget {
  std::uint64_t max_nodes = 10'000'000;
  double max_seconds = 60.0;
};

using HeightWindow = std::pair<unsigned, unsigned>;

/// Largest scheme with minimum distance >= d among the elements whose height
/// lies in the window (all elements when there is no window).
struct SearchProblem {
  const Lattice* lattice = nullptr;  // not owned
  unsigned d = 1;
  std::optional<HeightWindow> window;
  SearchBudget budget;
  int workers = 0;  // 0: OpenMP default

  static SearchProblem make(const Lattice& L, unsigned d, std::optional<HeightWindow> window = std::nullopt,
                            SearchBudget budget = {});
};

struct SearchResult {
  std::vector<ElementId> scheme;  // sorted element ids
  std::size_t best_size = 0;
  bool proven_optimal = false;
  std::uint64_t nodes = 0;
};

/// Candidate elements in search order: by height, then element id.
std::vector<ElementId> search_vertices(const Lattice& L, std::optional<HeightWindow> window);

/// Exact maximum via branch and bound on the graph whose edges join elements
/// at height distance >= d, pruned with greedy colouring bounds.
///
/// The root's branches are independent subtrees searched in parallel, each
/// seeded with the greedy code size as incumbent and never sharing improvements
/// while running. Results, including node counts, are therefore identical for
/// any worker count. Exhausting the budget yields proven_optimal = false with
/// the best scheme seen so far.
SearchResult max_code(const SearchProblem& problem);

/// Serial reference: the classic single-incumbent branch and bound starting
/// from an empty incumbent. Same optimum, different node counts.
SearchResult max_code_serial(const SearchProblem& problem);

/// Maximal scheme built by scanning candidates in search order (or a seeded
/// shuffle of it) and keeping each one at distance >= d from all kept so far.
Scheme greedy_code(const Lattice& L, unsigned d, std::optional<HeightWindow> window = std::nullopt,
                   std::optional<std::uint64_t> seed = std::nullopt);

/// gv_lower <= best_size <= lsb for a finished search.
struct SandwichCheck {
  BigNat gv_lower;
  BigNat upper;
  std::size_t best_size = 0;
  bool pass = false;
};

SandwichCheck sandwich_check(const SearchProblem& problem, const SearchResult& result, const BoundParams& params);

/// Evidence row for the question whether constant-dimension schemes reach the
/// windowed bound [n-alpha, l-alpha]_q. Records numbers only.
struct ConjectureRow {
  unsigned q = 2, n = 0, l = 0, d = 1;
  BigNat bound;
  std::optional<std::size_t> optimum;  // empty when inconclusive
  bool proven_optimal = false;
  bool attained = false;
  /// alpha = 0: the bound is the whole Grassmannian and is met trivially;
  /// such rows are not counted as evidence either way.
  bool trivial = false;
  std::uint64_t nodes = 0;
  std::vector<ElementId> scheme;

  std::optional<BigNat> gap() const;
};

ConjectureRow conjecture_probe(unsigned q, unsigned n, unsigned l, unsigned d, SearchBudget budget = {}, int workers = 0,
                               const MaterializationCap& cap = MaterializationCap::from_env());

}  // namespace latsb

#endif  // LATSB_SEARCH_HPP
