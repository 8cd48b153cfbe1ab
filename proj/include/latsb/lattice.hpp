#ifndef LATSB_LATTICE_HPP
#define LATSB_LATTICE_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "latsb/bitset.hpp"

namespace latsb {

using ElementId = std::uint32_t;

// (lower, upper): upper covers lower.
struct Cover {
  ElementId lower;
  ElementId upper;
  friend bool operator==(const Cover&, const Cover&) = default;
  friend auto operator<=>(const Cover&, const Cover&) = default;
};

// Raised when an input order is not a finite lattice. When a pair is to blame
// (missing join or meet) it is carried along for diagnostics.
class LatticeError : public std::runtime_error {
 public:
  explicit LatticeError(const std::string& what) : std::runtime_error(what) {}
  LatticeError(const std::string& what, ElementId a, ElementId b)
      : std::runtime_error(what), pair_(std::make_pair(a, b)) {}

  const std::optional<std::pair<ElementId, ElementId>>& offending_pair() const { return pair_; }

 private:
  std::optional<std::pair<ElementId, ElementId>> pair_;
};

/// Immutable finite lattice with materialized join/meet tables.
///
/// Built from a Hasse diagram: the order is the reflexive-transitive closure of
/// the supplied covers; redundant (transitive) edges are accepted and dropped.
/// Heights are longest-chain lengths from the bottom element.
class Lattice {
 public:
  static Lattice build(std::vector<std::string> names, std::span<const Cover> covers);

  std::size_t size() const { return names_.size(); }
  ElementId top() const { return top_; }
  ElementId bottom() const { return bottom_; }
  /// Height of the top element.
  unsigned rank() const { return heights_[top_]; }

  ElementId join(ElementId a, ElementId b) const { return join_[index(a, b)]; }
  ElementId meet(ElementId a, ElementId b) const { return meet_[index(a, b)]; }
  bool leq(ElementId a, ElementId b) const { return up_[a].test(b); }
  unsigned height(ElementId a) const { return heights_[a]; }

  const std::string& name(ElementId a) const { return names_[a]; }
  const std::vector<std::string>& names() const { return names_; }
  std::optional<ElementId> find(const std::string& name) const;

  std::span<const ElementId> upper_covers(ElementId a) const { return upper_covers_[a]; }
  std::span<const ElementId> lower_covers(ElementId a) const { return lower_covers_[a]; }
  /// The reduced cover relation, sorted.
  std::vector<Cover> covers() const;
  /// Bitset of all x with a <= x.
  const Bitset& up_set(ElementId a) const { return up_[a]; }

  std::span<const unsigned> heights() const { return heights_; }

 private:
  Lattice() = default;
  std::size_t index(ElementId a, ElementId b) const { return static_cast<std::size_t>(a) * names_.size() + b; }

  std::vector<std::string> names_;
  std::vector<Bitset> up_;
  std::vector<std::vector<ElementId>> upper_covers_;
  std::vector<std::vector<ElementId>> lower_covers_;
  std::vector<ElementId> join_;
  std::vector<ElementId> meet_;
  std::vector<unsigned> heights_;
  ElementId top_ = 0;
  ElementId bottom_ = 0;
};

/// d_h(a,b) = h(a v b) - h(a ^ b). A metric on modular lattices only; the
/// formula is evaluated regardless.
inline unsigned height_metric(const Lattice& L, ElementId a, ElementId b) {
  return L.height(L.join(a, b)) - L.height(L.meet(a, b));
}

/// Integer valued function on elements, indexed by ElementId.
struct Valuation {
  std::vector<long long> values;
};

Valuation height_valuation(const Lattice& L);

bool is_valuation(const Lattice& L, const Valuation& v);
bool is_isotone(const Lattice& L, const Valuation& v);
// x < y implies v(x) < v(y).
bool is_positive_isotone(const Lattice& L, const Valuation& v);

bool has_jordan_dedekind(const Lattice& L);
bool is_modular(const Lattice& L);
bool is_distributive(const Lattice& L);

std::vector<ElementId> atoms(const Lattice& L);
// Every element is the join of the atoms below it (the bottom is the empty join).
bool is_geometric(const Lattice& L);
inline bool is_geometric_modular(const Lattice& L) { return is_modular(L) && is_geometric(L); }
inline bool is_geometric_distributive(const Lattice& L) { return is_distributive(L) && is_geometric(L); }

/// Elements of height n - 1 where n = rank().
std::vector<ElementId> coatoms(const Lattice& L);

struct Sublattice {
  Lattice lattice;
  // parent_ids[i] is the parent element behind sublattice element i.
  std::vector<ElementId> parent_ids;
};

/// Smallest join/meet-closed subset containing the seed, as a lattice in its own right.
Sublattice sublattice_closure(const Lattice& L, std::span<const ElementId> seed);

// IO: {"elements": [...], "covers": [[lower, upper], ...]}
std::string to_json(const Lattice& L);
Lattice lattice_from_json(const std::string& text);
std::string to_dot(const Lattice& L, const std::string& graph_name = "lattice");

}  // namespace latsb

#endif  // LATSB_LATTICE_HPP
