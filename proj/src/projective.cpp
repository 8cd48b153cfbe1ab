#include "latsb/projective.hpp"

#include <cstdlib>
#include <limits>

#include "latsb/counting.hpp"

namespace latsb {

MaterializationCap MaterializationCap::from_env() {
  MaterializationCap cap;
  if (const char* v = std::getenv("LATTICE_SB_MAX_ELEMENTS"); v != nullptr && *v != '\0') {
    char* end = nullptr;
    const unsigned long long parsed = std::strtoull(v, &end, 10);
    if (end == v || *end != '\0') throw std::invalid_argument("LATTICE_SB_MAX_ELEMENTS must be a positive integer");
    cap.max_elements = static_cast<std::size_t>(parsed);
  }
  return cap;
}

std::size_t default_projective_dim_cap(unsigned q) {
  if (q == 2) return 4;
  if (q == 3) return 3;
  return 2;
}

std::size_t projective_size(unsigned n, unsigned q) {
  BigNat total = 0;
  for (unsigned k = 0; k <= n; ++k) total += gaussian(n, k, q);
  if (total > std::numeric_limits<std::size_t>::max()) throw CapacityError("projective lattice size overflows");
  return static_cast<std::size_t>(total);
}

bool projective_materializable(unsigned n, unsigned q, const MaterializationCap& cap) {
  if (n > 64) return false;
  std::size_t size = 0;
  try {
    size = projective_size(n, q);
  } catch (const CapacityError&) {
    return false;
  }
  if (cap.max_elements) return size <= *cap.max_elements;
  return n <= default_projective_dim_cap(q) && size <= MaterializationCap::default_max_elements;
}

ElementId ProjectiveLattice::id_of(const SubspaceRepr& s) const {
  auto it = index.find(s);
  if (it == index.end()) throw std::invalid_argument("subspace is not an element of this lattice");
  return it->second;
}

ElementId ProjectiveLattice::parse_element(std::string_view text) const {
  if (text == "O") return lattice.bottom();
  if (text == "I") return lattice.top();
  return id_of(parse_subspace(text, n, q));
}

ProjectiveLattice build_projective_lattice(unsigned n, unsigned q, const MaterializationCap& cap) {
  const Fq F(q);  // validates q
  if (!projective_materializable(n, q, cap)) {
    throw CapacityError("Sub(F_" + std::to_string(q) + "^" + std::to_string(n) +
                        ") exceeds the materialization cap; raise LATTICE_SB_MAX_ELEMENTS to build it");
  }
  std::vector<SubspaceRepr> subspaces;
  std::vector<std::size_t> first_of_dim(n + 2, 0);
  for (unsigned k = 0; k <= n; ++k) {
    first_of_dim[k] = subspaces.size();
    for_each_grassmannian(n, k, q, [&](const SubspaceRepr& s) { subspaces.push_back(s); });
  }
  first_of_dim[n + 1] = subspaces.size();

  std::vector<Cover> covers;
  for (unsigned k = 0; k < n; ++k)
    for (std::size_t a = first_of_dim[k]; a < first_of_dim[k + 1]; ++a)
      for (std::size_t b = first_of_dim[k + 1]; b < first_of_dim[k + 2]; ++b)
        if (is_subspace_of(subspaces[a], subspaces[b]))
          covers.push_back({static_cast<ElementId>(a), static_cast<ElementId>(b)});

  std::vector<std::string> names;
  std::map<SubspaceRepr, ElementId> index;
  for (std::size_t i = 0; i < subspaces.size(); ++i) {
    names.push_back(subspaces[i].to_string());
    index.emplace(subspaces[i], static_cast<ElementId>(i));
  }
  Lattice L = Lattice::build(std::move(names), covers);
  return ProjectiveLattice{q, n, std::move(L), std::move(subspaces), std::move(index)};
}

std::string subset_name(std::uint32_t mask) {
  std::string s = "{";
  bool first = true;
  for (unsigned i = 0; i < 32; ++i) {
    if (!(mask >> i & 1U)) continue;
    if (!first) s += ",";
    s += std::to_string(i + 1);
    first = false;
  }
  return s + "}";
}

Lattice build_powerset_lattice(unsigned n, const MaterializationCap& cap) {
  if (n > 20) throw CapacityError("power set lattices are limited to n <= 20");
  const std::size_t size = std::size_t{1} << n;
  const std::size_t limit = cap.max_elements.value_or(MaterializationCap::default_max_elements);
  if (size > limit)
    throw CapacityError("Pow(" + std::to_string(n) + ") has " + std::to_string(size) +
                        " elements, over the materialization cap of " + std::to_string(limit));
  std::vector<std::string> names;
  std::vector<Cover> covers;
  for (std::uint32_t mask = 0; mask < size; ++mask) {
    names.push_back(subset_name(mask));
    for (unsigned i = 0; i < n; ++i)
      if (!(mask >> i & 1U)) covers.push_back({mask, mask | (1U << i)});
  }
  return Lattice::build(std::move(names), covers);
}

Lattice build_named_lattice(std::string_view name) {
  if (name == "M3") {
    // Sub(F_2^2): A = <(0,1)>, B = <(1,0)>, C = <(1,1)>.
    const std::vector<Cover> covers{{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}};
    return Lattice::build({"O", "A", "B", "C", "I"}, covers);
  }
  if (name == "N5") {
    // d < a < b < u and d < c < u
    const std::vector<Cover> covers{{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}};
    return Lattice::build({"d", "a", "b", "c", "u"}, covers);
  }
  if (name == "L1") {
    const Lattice pow3 = build_powerset_lattice(3, MaterializationCap{});
    const std::vector<ElementId> chain{0b000, 0b001, 0b011, 0b111};
    return sublattice_closure(pow3, chain).lattice;
  }
  if (name == "L2") {
    // Vectors (a,b,c) are coded a + 2b + 4c: <1>, <2>, <3> are the lines of
    // <e1,e2>, and <3,5> is spanned by (1,1,0), (1,0,1). The top is the join
    // of the listed subspaces, i.e. all of F_2^3.
    const ProjectiveLattice P = build_projective_lattice(3, 2, MaterializationCap{});
    std::vector<ElementId> seed;
    for (const char* s : {"000", "100", "010", "110", "100/110", "110/101"}) seed.push_back(P.parse_element(s));
    ElementId top = P.lattice.bottom();
    for (ElementId s : seed) top = P.lattice.join(top, s);
    seed.push_back(top);
    return sublattice_closure(P.lattice, seed).lattice;
  }
  throw std::invalid_argument("unknown named lattice '" + std::string(name) + "' (expected M3, N5, L1 or L2)");
}

}  // namespace latsb
