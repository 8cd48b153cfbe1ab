#include "latsb/lattice.hpp"

#include <algorithm>
#include <functional>
#include <queue>
#include <limits>

#include "latsb/kernels.hpp"

namespace latsb {

namespace {

std::string quoted(const std::vector<std::string>& names, ElementId a) { return "'" + names[a] + "'"; }

}  // namespace

Lattice Lattice::build(std::vector<std::string> names, std::span<const Cover> covers) {
  const std::size_t n = names.size();
  if (n == 0) throw LatticeError("lattice has no elements");
  if (n > std::numeric_limits<ElementId>::max()) throw LatticeError("too many elements");

  std::vector<std::vector<ElementId>> up_edges(n);
  std::vector<std::size_t> indegree(n, 0);
  for (const auto& c : covers) {
    if (c.lower >= n || c.upper >= n) throw LatticeError("cover references an unknown element id");
    if (c.lower == c.upper) throw LatticeError("cover relation has a self loop at " + quoted(names, c.lower));
    up_edges[c.lower].push_back(c.upper);
    ++indegree[c.upper];
  }

  // Kahn's algorithm; the smallest ready id goes first so the order is canonical.
  std::vector<ElementId> topo;
  topo.reserve(n);
  {
    std::vector<std::size_t> deg = indegree;
    std::priority_queue<ElementId, std::vector<ElementId>, std::greater<>> ready;
    for (ElementId i = 0; i < n; ++i)
      if (deg[i] == 0) ready.push(i);
    while (!ready.empty()) {
      ElementId a = ready.top();
      ready.pop();
      topo.push_back(a);
      for (ElementId b : up_edges[a])
        if (--deg[b] == 0) ready.push(b);
    }
    if (topo.size() != n) throw LatticeError("cover relation contains a cycle");
  }

  std::vector<ElementId> minimal, maximal;
  for (ElementId i = 0; i < n; ++i) {
    if (indegree[i] == 0) minimal.push_back(i);
    if (up_edges[i].empty()) maximal.push_back(i);
  }
  if (minimal.size() != 1) throw LatticeError("order has " + std::to_string(minimal.size()) + " minimal elements; a lattice needs exactly one");
  if (maximal.size() != 1) throw LatticeError("order has " + std::to_string(maximal.size()) + " maximal elements; a lattice needs exactly one");

  Lattice L;
  L.names_ = std::move(names);
  L.bottom_ = minimal.front();
  L.top_ = maximal.front();

  L.up_.assign(n, Bitset(n));
  for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
    ElementId a = *it;
    L.up_[a].set(a);
    for (ElementId b : up_edges[a]) L.up_[a] |= L.up_[b];
  }
  std::vector<Bitset> down(n, Bitset(n));
  for (ElementId a = 0; a < n; ++a)
    for (std::size_t b = L.up_[a].find_first(); b < n; b = L.up_[a].find_next(b)) down[b].set(a);

  std::vector<std::size_t> topo_pos(n);
  for (std::size_t i = 0; i < n; ++i) topo_pos[topo[i]] = i;

  // Reduced covers: the minimal elements of up(a) \ {a}, found in topological order.
  L.upper_covers_.assign(n, {});
  L.lower_covers_.assign(n, {});
  for (ElementId a = 0; a < n; ++a) {
    std::vector<ElementId> above;
    for (std::size_t b = L.up_[a].find_first(); b < n; b = L.up_[a].find_next(b))
      if (b != a) above.push_back(static_cast<ElementId>(b));
    std::sort(above.begin(), above.end(), [&](ElementId x, ElementId y) { return topo_pos[x] < topo_pos[y]; });
    Bitset dominated(n);
    for (ElementId b : above) {
      if (dominated.test(b)) continue;
      L.upper_covers_[a].push_back(b);
      dominated |= L.up_[b];
    }
    std::sort(L.upper_covers_[a].begin(), L.upper_covers_[a].end());
  }
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b : L.upper_covers_[a]) L.lower_covers_[b].push_back(a);

  L.heights_.assign(n, 0);
  for (ElementId a : topo)
    for (ElementId b : L.upper_covers_[a]) L.heights_[b] = std::max(L.heights_[b], L.heights_[a] + 1);

  std::vector<std::size_t> up_count(n), down_count(n);
  for (ElementId a = 0; a < n; ++a) {
    up_count[a] = L.up_[a].count();
    down_count[a] = down[a].count();
  }

  // The least upper bound u of {a, b} is the element of U = up(a) & up(b)
  // with up(u) == U; since up(u) is a subset of U this is a count test.
  L.join_.assign(n * n, 0);
  L.meet_.assign(n * n, 0);
  for (ElementId a = 0; a < n; ++a) {
    for (ElementId b = a; b < n; ++b) {
      Bitset upper = L.up_[a] & L.up_[b];
      const std::size_t uc = upper.count();
      std::optional<ElementId> sup;
      for (std::size_t u = upper.find_first(); u < n; u = upper.find_next(u))
        if (up_count[u] == uc) {
          sup = static_cast<ElementId>(u);
          break;
        }
      if (!sup)
        throw LatticeError("elements " + quoted(L.names_, a) + " and " + quoted(L.names_, b) + " have no least upper bound", a, b);

      Bitset lower = down[a] & down[b];
      const std::size_t lc = lower.count();
      std::optional<ElementId> inf;
      for (std::size_t u = lower.find_first(); u < n; u = lower.find_next(u))
        if (down_count[u] == lc) {
          inf = static_cast<ElementId>(u);
          break;
        }
      if (!inf)
        throw LatticeError("elements " + quoted(L.names_, a) + " and " + quoted(L.names_, b) + " have no greatest lower bound", a, b);

      L.join_[L.index(a, b)] = L.join_[L.index(b, a)] = *sup;
      L.meet_[L.index(a, b)] = L.meet_[L.index(b, a)] = *inf;
    }
  }
  return L;
}

std::optional<ElementId> Lattice::find(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) return std::nullopt;
  return static_cast<ElementId>(it - names_.begin());
}

std::vector<Cover> Lattice::covers() const {
  std::vector<Cover> out;
  for (ElementId a = 0; a < size(); ++a)
    for (ElementId b : upper_covers_[a]) out.push_back({a, b});
  std::sort(out.begin(), out.end());
  return out;
}

Valuation height_valuation(const Lattice& L) {
  Valuation v;
  v.values.assign(L.heights().begin(), L.heights().end());
  return v;
}

bool is_valuation(const Lattice& L, const Valuation& v) {
  if (v.values.size() != L.size()) throw std::invalid_argument("valuation size does not match lattice");
  return !kernels::omp::valuation_violation(L, v.values).has_value();
}

bool is_isotone(const Lattice& L, const Valuation& v) {
  if (v.values.size() != L.size()) throw std::invalid_argument("valuation size does not match lattice");
  for (ElementId a = 0; a < L.size(); ++a)
    for (ElementId b : L.upper_covers(a))
      if (v.values[a] > v.values[b]) return false;
  return true;
}

bool is_positive_isotone(const Lattice& L, const Valuation& v) {
  if (v.values.size() != L.size()) throw std::invalid_argument("valuation size does not match lattice");
  // Strictness along every cover gives strictness along every chain.
  for (ElementId a = 0; a < L.size(); ++a)
    for (ElementId b : L.upper_covers(a))
      if (v.values[a] >= v.values[b]) return false;
  return true;
}

bool has_jordan_dedekind(const Lattice& L) {
  const std::size_t n = L.size();
  // Elements sorted by height form a topological order of the cover DAG.
  std::vector<ElementId> order(n);
  for (ElementId i = 0; i < n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](ElementId x, ElementId y) { return L.height(x) < L.height(y); });

  constexpr unsigned unreached = std::numeric_limits<unsigned>::max();
  std::vector<unsigned> shortest(n), longest(n);
  for (ElementId a = 0; a < n; ++a) {
    std::fill(shortest.begin(), shortest.end(), unreached);
    std::fill(longest.begin(), longest.end(), 0);
    shortest[a] = 0;
    for (ElementId x : order) {
      if (shortest[x] == unreached) continue;
      for (ElementId y : L.upper_covers(x)) {
        shortest[y] = std::min(shortest[y], shortest[x] + 1);
        longest[y] = std::max(longest[y], longest[x] + 1);
      }
    }
    for (ElementId b = 0; b < n; ++b)
      if (shortest[b] != unreached && shortest[b] != longest[b]) return false;
  }
  return true;
}

bool is_modular(const Lattice& L) { return !kernels::omp::modular_violation(L).has_value(); }

bool is_distributive(const Lattice& L) { return !kernels::omp::distributive_violation(L).has_value(); }

std::vector<ElementId> atoms(const Lattice& L) {
  if (L.size() == 1) return {};
  auto cov = L.upper_covers(L.bottom());
  return {cov.begin(), cov.end()};
}

std::vector<ElementId> coatoms(const Lattice& L) {
  if (L.size() == 1) return {};
  auto cov = L.lower_covers(L.top());
  return {cov.begin(), cov.end()};
}

bool is_geometric(const Lattice& L) {
  const auto at = atoms(L);
  for (ElementId x = 0; x < L.size(); ++x) {
    ElementId j = L.bottom();
    for (ElementId t : at)
      if (L.leq(t, x)) j = L.join(j, t);
    if (j != x) return false;
  }
  return true;
}

Sublattice sublattice_closure(const Lattice& L, std::span<const ElementId> seed) {
  if (seed.empty()) throw std::invalid_argument("sublattice seed must be nonempty");
  const std::size_t n = L.size();
  Bitset in(n);
  std::vector<ElementId> members;
  for (ElementId s : seed) {
    if (s >= n) throw std::out_of_range("seed element out of range");
    if (!in.test(s)) {
      in.set(s);
      members.push_back(s);
    }
  }
  // Each new element is paired with everything present so far.
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      for (ElementId c : {L.join(members[i], members[j]), L.meet(members[i], members[j])}) {
        if (!in.test(c)) {
          in.set(c);
          members.push_back(c);
        }
      }
    }
  }
  std::sort(members.begin(), members.end());

  std::vector<std::string> names;
  for (ElementId m : members) names.push_back(L.name(m));
  std::vector<Cover> covers;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (std::size_t j = 0; j < members.size(); ++j) {
      if (i == j || !L.leq(members[i], members[j])) continue;
      bool is_cover = true;
      for (std::size_t k = 0; k < members.size() && is_cover; ++k)
        if (k != i && k != j && L.leq(members[i], members[k]) && L.leq(members[k], members[j])) is_cover = false;
      if (is_cover) covers.push_back({static_cast<ElementId>(i), static_cast<ElementId>(j)});
    }
  }
  return Sublattice{Lattice::build(std::move(names), covers), std::move(members)};
}

}  // namespace latsb
