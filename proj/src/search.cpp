#include "latsb/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <random>
#include <stdexcept>

#include "latsb/kernels.hpp"

namespace latsb {

SearchProblem SearchProblem::make(const Lattice& L, unsigned d, std::optional<HeightWindow> window, SearchBudget budget) {
  if (d < 1) throw std::invalid_argument("minimum distance must be at least 1");
  if (window && window->first > window->second) throw std::invalid_argument("height window has m > M");
  SearchProblem p;
  p.lattice = &L;
  p.d = d;
  p.window = window;
  p.budget = budget;
  return p;
}

std::vector<ElementId> search_vertices(const Lattice& L, std::optional<HeightWindow> window) {
  std::vector<ElementId> v;
  for (ElementId i = 0; i < L.size(); ++i)
    if (!window || (L.height(i) >= window->first && L.height(i) <= window->second)) v.push_back(i);
  std::stable_sort(v.begin(), v.end(), [&](ElementId a, ElementId b) { return L.height(a) < L.height(b); });
  return v;
}

namespace {

using Clock = std::chrono::steady_clock;

struct SharedBudget {
  SharedBudget(const SearchBudget& b) : limits(b), start(Clock::now()) {}

  // Returns false once the search must stop.
  bool charge(std::uint64_t local_nodes) {
    if (abort.load(std::memory_order_relaxed)) return false;
    if (nodes.fetch_add(1, std::memory_order_relaxed) + 1 > limits.max_nodes) {
      abort.store(true);
      return false;
    }
    if ((local_nodes & 1023U) == 0) {
      const std::chrono::duration<double> elapsed = Clock::now() - start;
      if (elapsed.count() > limits.max_seconds) {
        abort.store(true);
        return false;
      }
    }
    return true;
  }

  SearchBudget limits;
  Clock::time_point start;
  std::atomic<std::uint64_t> nodes{0};
  std::atomic<bool> abort{false};
};

// Greedy sequential colouring of P: vertices come out grouped by colour class,
// colours[i] is the class number (1-based) of order[i], non-decreasing.
void colour_sort(const std::vector<Bitset>& adj, const Bitset& P, std::vector<std::size_t>& order,
                 std::vector<std::size_t>& colours) {
  order.clear();
  colours.clear();
  Bitset uncoloured = P;
  std::size_t k = 0;
  while (!uncoloured.none()) {
    ++k;
    Bitset available = uncoloured;
    for (std::size_t v = available.find_first(); v < available.size(); v = available.find_next(v)) {
      order.push_back(v);
      colours.push_back(k);
      uncoloured.reset(v);
      available.subtract(adj[v]);
    }
  }
}

struct Searcher {
  Searcher(const std::vector<Bitset>& a, SharedBudget& b, std::size_t incumbent = 0)
      : adj(a), budget(b), best(incumbent) {}

  const std::vector<Bitset>& adj;
  SharedBudget& budget;
  std::size_t best;
  std::vector<std::size_t> best_clique;
  std::vector<std::size_t> current;
  std::uint64_t nodes = 0;

  void expand(Bitset P) {
    ++nodes;
    if (!budget.charge(nodes)) return;
    std::vector<std::size_t> order, colours;
    colour_sort(adj, P, order, colours);
    for (std::size_t i = order.size(); i-- > 0;) {
      if (current.size() + colours[i] <= best) return;
      const std::size_t v = order[i];
      Bitset next = P & adj[v];
      current.push_back(v);
      if (next.none()) {
        if (current.size() > best) {
          best = current.size();
          best_clique = current;
        }
      } else {
        expand(std::move(next));
      }
      current.pop_back();
      if (budget.abort.load(std::memory_order_relaxed)) return;
      P.reset(v);
    }
  }
};

struct Graph {
  std::vector<ElementId> vertices;
  std::vector<Bitset> adj;
};

Graph make_graph(const SearchProblem& p) {
  if (p.lattice == nullptr) throw std::invalid_argument("search problem has no lattice");
  Graph g;
  g.vertices = search_vertices(*p.lattice, p.window);
  g.adj = kernels::omp::distance_graph(*p.lattice, g.vertices, p.d);
  return g;
}

// Greedy clique in vertex order.
std::vector<std::size_t> greedy_clique(const Graph& g) {
  std::vector<std::size_t> clique;
  if (g.vertices.empty()) return clique;
  Bitset candidates(g.vertices.size());
  for (std::size_t i = 0; i < g.vertices.size(); ++i) candidates.set(i);
  for (std::size_t v = candidates.find_first(); v < candidates.size(); v = candidates.find_next(v)) {
    clique.push_back(v);
    candidates &= g.adj[v];
  }
  return clique;
}

SearchResult finish(const Graph& g, const std::vector<std::size_t>& clique, bool proven, std::uint64_t nodes) {
  SearchResult r;
  for (std::size_t v : clique) r.scheme.push_back(g.vertices[v]);
  std::sort(r.scheme.begin(), r.scheme.end());
  r.best_size = r.scheme.size();
  r.proven_optimal = proven;
  r.nodes = nodes;
  return r;
}

}  // namespace

SearchResult max_code_serial(const SearchProblem& problem) {
  const Graph g = make_graph(problem);
  const std::size_t n = g.vertices.size();
  if (n == 0) return finish(g, {}, true, 0);
  SharedBudget budget(problem.budget);
  Searcher s(g.adj, budget);
  Bitset all(n);
  for (std::size_t i = 0; i < n; ++i) all.set(i);
  s.expand(all);
  return finish(g, s.best_clique, !budget.abort.load(), s.nodes);
}

SearchResult max_code(const SearchProblem& problem) {
  const Graph g = make_graph(problem);
  const std::size_t n = g.vertices.size();
  if (n == 0) return finish(g, {}, true, 0);

  const std::vector<std::size_t> seed_clique = greedy_clique(g);
  const std::size_t incumbent = seed_clique.size();

  std::vector<std::size_t> order, colours;
  {
    Bitset all(n);
    for (std::size_t i = 0; i < n; ++i) all.set(i);
    colour_sort(g.adj, all, order, colours);
  }
  // prefix[i]: the vertices coloured before position i.
  std::vector<Bitset> prefix(n, Bitset(n));
  for (std::size_t i = 1; i < n; ++i) {
    prefix[i] = prefix[i - 1];
    prefix[i].set(order[i - 1]);
  }

  SharedBudget budget(problem.budget);
  struct Branch {
    std::size_t best = 0;
    std::vector<std::size_t> clique;
    std::uint64_t nodes = 0;
  };
  std::vector<Branch> branches(n);
  const int workers = problem.workers > 0 ? problem.workers : kernels::max_workers();

#pragma omp parallel for schedule(dynamic, 1) num_threads(workers)
  for (long long idx = 0; idx < static_cast<long long>(n); ++idx) {
    const std::size_t i = n - 1 - static_cast<std::size_t>(idx);
    if (colours[i] <= incumbent) continue;
    const std::size_t v = order[i];
    Searcher s(g.adj, budget, incumbent);
    s.current.push_back(v);
    Bitset P = prefix[i] & g.adj[v];
    if (P.none()) {
      s.nodes = 1;
      if (1 > s.best) {
        s.best = 1;
        s.best_clique = s.current;
      }
    } else {
      s.expand(std::move(P));
    }
    branches[i] = Branch{s.best, std::move(s.best_clique), s.nodes};
  }

  // Deterministic merge: largest size, ties to the branch the serial order visits first.
  std::uint64_t nodes = 1;
  std::size_t best = incumbent;
  const std::vector<std::size_t>* best_clique = &seed_clique;
  for (std::size_t i = n; i-- > 0;) {
    nodes += branches[i].nodes;
    if (branches[i].best > best && !branches[i].clique.empty()) {
      best = branches[i].best;
      best_clique = &branches[i].clique;
    }
  }
  return finish(g, *best_clique, !budget.abort.load(), nodes);
}

Scheme greedy_code(const Lattice& L, unsigned d, std::optional<HeightWindow> window, std::optional<std::uint64_t> seed) {
  if (d < 1) throw std::invalid_argument("minimum distance must be at least 1");
  std::vector<ElementId> order = search_vertices(L, window);
  if (order.empty()) throw std::invalid_argument("height window contains no elements");
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(order.begin(), order.end(), rng);
  }
  std::vector<ElementId> kept;
  for (ElementId x : order) {
    const bool far = std::all_of(kept.begin(), kept.end(), [&](ElementId y) { return height_metric(L, x, y) >= d; });
    if (far) kept.push_back(x);
  }
  return Scheme(L, std::move(kept));
}

SandwichCheck sandwich_check(const SearchProblem& problem, const SearchResult& result, const BoundParams& params) {
  const Lattice& L = *problem.lattice;
  SandwichCheck c;
  c.best_size = result.best_size;
  if (problem.window) {
    c.gv_lower = gv_lower_windowed(L, problem.d, problem.window->first, problem.window->second);
    c.upper = lsb_windowed(params, problem.window->first, problem.window->second);
  } else {
    c.gv_lower = gv_lower(L, problem.d);
    c.upper = lsb(params);
  }
  const BigNat best(result.best_size);
  c.pass = c.gv_lower <= best && best <= c.upper;
  return c;
}

std::optional<BigNat> ConjectureRow::gap() const {
  if (!optimum) return std::nullopt;
  return bound - BigNat(*optimum);
}

ConjectureRow conjecture_probe(unsigned q, unsigned n, unsigned l, unsigned d, SearchBudget budget, int workers,
                               const MaterializationCap& cap) {
  if (l > n) throw std::invalid_argument("subspace dimension exceeds the ambient dimension");
  const ProjectiveLattice P = build_projective_lattice(n, q, cap);
  ConjectureRow row;
  row.q = q;
  row.n = n;
  row.l = l;
  row.d = d;
  row.bound = kks_bound(n, l, d, q);
  row.trivial = (d - 1) / 2 == 0;
  SearchProblem problem = SearchProblem::make(P.lattice, d, HeightWindow{l, l}, budget);
  problem.workers = workers;
  const SearchResult r = max_code(problem);
  row.nodes = r.nodes;
  row.proven_optimal = r.proven_optimal;
  row.scheme = r.scheme;
  if (r.proven_optimal) {
    row.optimum = r.best_size;
    row.attained = BigNat(r.best_size) == row.bound;
  }
  return row;
}

}  // namespace latsb
