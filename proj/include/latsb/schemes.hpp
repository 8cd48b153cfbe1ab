#ifndef LATSB_SCHEMES_HPP
#define LATSB_SCHEMES_HPP

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "latsb/fq.hpp"
#include "latsb/lattice.hpp"

namespace latsb {

class UndefinedDistance : public std::domain_error {
 public:
  UndefinedDistance() : std::domain_error("undefined minimum distance") {}
};

/// A lattice scheme: a nonempty set of elements of one lattice. The minimum
/// distance and the height window [m, M] are computed on construction.
/// Holds a non-owning reference; the lattice must outlive the scheme.
class Scheme {
 public:
  Scheme(const Lattice& L, std::vector<ElementId> members);

  const Lattice& lattice() const { return *lattice_; }
  std::span<const ElementId> members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  unsigned min_height() const { return min_height_; }
  unsigned max_height() const { return max_height_; }
  /// Empty for a single-element scheme.
  std::optional<unsigned> min_distance_if_defined() const { return min_distance_; }

 private:
  const Lattice* lattice_;
  std::vector<ElementId> members_;
  std::optional<unsigned> min_distance_;
  unsigned min_height_ = 0;
  unsigned max_height_ = 0;
};

/// Throws UndefinedDistance for a single-element scheme.
unsigned min_distance(const Scheme& S);

struct PunctureResult {
  Scheme scheme;                   // images with duplicates merged
  std::vector<ElementId> images;   // images[i] is the image of members()[i] of the input
  bool collided = false;           // two members mapped to one element
  /// 0 after a collision (the merged pair sits at distance 0); otherwise the
  /// minimum distance of the image set, empty only when the input was a
  /// single element.
  std::optional<unsigned> min_distance;
};

/// {w ^ c : c in S}.
PunctureResult puncture(const Scheme& S, ElementId w);

/// Picks the element one level below c when c <= w.
class ProjectionChooser {
 public:
  static ProjectionChooser least_id() { return ProjectionChooser(std::nullopt); }
  static ProjectionChooser seeded(std::uint64_t seed) { return ProjectionChooser(seed); }

  ElementId choose(std::span<const ElementId> candidates);
  std::string describe() const;

 private:
  explicit ProjectionChooser(std::optional<std::uint64_t> seed);
  std::optional<std::uint64_t> seed_;
  std::mt19937_64 rng_;
};

/// Elements of height h(c) - 1 below c ^ w, in id order. For c = O this is {O}.
std::vector<ElementId> projection_candidates(const Lattice& L, ElementId c, ElementId w);

/// Replaces each c by an element of height h(c) - 1 contained in c ^ w: c ^ w
/// itself when it is one level down, the chooser's pick among the lower
/// neighbours of c when c <= w, and O for O. Meant for coatoms w of geometric
/// modular lattices; if no candidate exists (other w) c ^ w is used.
PunctureResult puncture_project(const Scheme& S, ElementId w, ProjectionChooser& chooser);

/// Support of a binary vector as a Pow(n) element id (bit i <=> coordinate i+1).
ElementId support_transform(std::span<const Digit> bits);
std::vector<Digit> parse_binary_vector(std::string_view text);
unsigned hamming_distance(std::span<const Digit> a, std::span<const Digit> b);

/// Rowspace[I_m | A] in F_q^(m+n).
SubspaceRepr lifting_transform(const Matrix& A, const Fq& F);
/// rank(A - B).
unsigned rank_distance(const Matrix& A, const Matrix& B, const Fq& F);

struct TransformWitness {
  std::string description;
  std::vector<ElementId> images;
  std::size_t pairs_checked = 0;
  bool injective = true;
  bool distance_preserving = true;
  /// First offending pair (code indices) and what went wrong.
  std::optional<std::pair<std::size_t, std::size_t>> violation;
  std::string violation_detail;
  std::optional<unsigned> code_min_distance;
  std::optional<unsigned> scheme_min_distance;

  bool ok() const { return injective && distance_preserving; }
};

/// Checks that T maps the code injectively and isometrically into L
/// (d_h(T a, T b) == d_X(a, b) for every pair) and records both minimum
/// distances, which then agree.
template <typename Word, typename Metric, typename Map>
TransformWitness verify_transform(std::string description, std::span<const Word> code, Metric d_X, const Lattice& L, Map T) {
  TransformWitness w;
  w.description = std::move(description);
  for (const auto& c : code) w.images.push_back(T(c));
  for (std::size_t i = 0; i < code.size(); ++i) {
    for (std::size_t j = i + 1; j < code.size(); ++j) {
      ++w.pairs_checked;
      const unsigned dx = d_X(code[i], code[j]);
      const unsigned dh = height_metric(L, w.images[i], w.images[j]);
      if (!w.code_min_distance || dx < *w.code_min_distance) w.code_min_distance = dx;
      if (!w.scheme_min_distance || dh < *w.scheme_min_distance) w.scheme_min_distance = dh;
      const bool collision = w.images[i] == w.images[j];
      if (collision) w.injective = false;
      if (dx != dh) w.distance_preserving = false;
      if (w.violation || (!collision && dx == dh)) continue;
      w.violation = {i, j};
      w.violation_detail = collision ? "codewords " + std::to_string(i) + " and " + std::to_string(j) + " map to the same element"
                                     : "codewords " + std::to_string(i) + " and " + std::to_string(j) + ": code distance " +
                                           std::to_string(dx) + " but lattice distance " + std::to_string(dh);
    }
  }
  return w;
}

}  // namespace latsb

#endif  // LATSB_SCHEMES_HPP
