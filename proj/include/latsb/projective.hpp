#ifndef LATSB_PROJECTIVE_HPP
#define LATSB_PROJECTIVE_HPP

#include <cstddef>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "latsb/fq.hpp"
#include "latsb/lattice.hpp"

namespace latsb {

class CapacityError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// How large a lattice may be materialized. Without an explicit element cap
/// the projective builder uses per-field dimension caps (n <= 4 for q = 2,
/// n <= 3 for q = 3, n <= 2 otherwise) and every builder refuses more than
/// default_max_elements elements.
struct MaterializationCap {
  static constexpr std::size_t default_max_elements = 4096;
  std::optional<std::size_t> max_elements;

  /// Reads LATTICE_SB_MAX_ELEMENTS when set.
  static MaterializationCap from_env();
};

std::size_t default_projective_dim_cap(unsigned q);
/// Number of subspaces of F_q^n; throws CapacityError if it does not fit a size_t.
std::size_t projective_size(unsigned n, unsigned q);
bool projective_materializable(unsigned n, unsigned q, const MaterializationCap& cap);

/// Sub(F_q^n) together with the subspace behind every element.
struct ProjectiveLattice {
  unsigned q;
  unsigned n;
  Lattice lattice;
  std::vector<SubspaceRepr> subspaces;  // indexed by ElementId
  std::map<SubspaceRepr, ElementId> index;

  ElementId id_of(const SubspaceRepr& s) const;
  /// Parses subspace text ("101/011") or "O"/"I".
  ElementId parse_element(std::string_view text) const;
};

/// Elements are ordered by dimension, then by enumeration order within each
/// Grassmannian; join is the sum and meet the intersection.
ProjectiveLattice build_projective_lattice(unsigned n, unsigned q, const MaterializationCap& cap = MaterializationCap::from_env());

/// Pow({1..n}). Element ids equal subset bitmasks (bit i-1 <=> i in the set).
Lattice build_powerset_lattice(unsigned n, const MaterializationCap& cap = MaterializationCap::from_env());
std::string subset_name(std::uint32_t mask);

/// "M3", "N5", "L1" or "L2".
Lattice build_named_lattice(std::string_view name);

}  // namespace latsb

#endif  // LATSB_PROJECTIVE_HPP
