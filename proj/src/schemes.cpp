#include "latsb/schemes.hpp"

#include <algorithm>

#include "latsb/kernels.hpp"

namespace latsb {

Scheme::Scheme(const Lattice& L, std::vector<ElementId> members) : lattice_(&L), members_(std::move(members)) {
  if (members_.empty()) throw std::invalid_argument("a scheme needs at least one element");
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
  if (members_.back() >= L.size()) throw std::out_of_range("scheme element is not in the lattice");
  min_height_ = max_height_ = L.height(members_.front());
  for (ElementId m : members_) {
    min_height_ = std::min(min_height_, L.height(m));
    max_height_ = std::max(max_height_, L.height(m));
  }
  if (members_.size() >= 2) min_distance_ = kernels::omp::min_pairwise_distance(L, members_);
}

unsigned min_distance(const Scheme& S) {
  if (!S.min_distance_if_defined()) throw UndefinedDistance();
  return *S.min_distance_if_defined();
}

namespace {

PunctureResult collect(const Scheme& S, std::vector<ElementId> images) {
  Scheme out(S.lattice(), images);
  PunctureResult r{std::move(out), std::move(images), false, std::nullopt};
  r.collided = r.scheme.size() < S.size();
  if (r.collided)
    r.min_distance = 0;
  else
    r.min_distance = r.scheme.min_distance_if_defined();
  return r;
}

}  // namespace

PunctureResult puncture(const Scheme& S, ElementId w) {
  const Lattice& L = S.lattice();
  if (w >= L.size()) throw std::out_of_range("puncturing element is not in the lattice");
  std::vector<ElementId> images;
  for (ElementId c : S.members()) images.push_back(L.meet(c, w));
  return collect(S, std::move(images));
}

ProjectionChooser::ProjectionChooser(std::optional<std::uint64_t> seed) : seed_(seed), rng_(seed.value_or(0)) {}

ElementId ProjectionChooser::choose(std::span<const ElementId> candidates) {
  if (candidates.empty()) throw std::invalid_argument("no candidate to choose from");
  if (!seed_) return candidates.front();
  std::uniform_int_distribution<std::size_t> pick(0, candidates.size() - 1);
  return candidates[pick(rng_)];
}

std::string ProjectionChooser::describe() const {
  return seed_ ? "seeded(" + std::to_string(*seed_) + ")" : "least-id";
}

std::vector<ElementId> projection_candidates(const Lattice& L, ElementId c, ElementId w) {
  const ElementId cw = L.meet(c, w);
  if (L.height(c) == 0) return {cw};
  const unsigned target = L.height(c) - 1;
  std::vector<ElementId> out;
  for (ElementId y = 0; y < L.size(); ++y)
    if (L.height(y) == target && L.leq(y, cw)) out.push_back(y);
  return out;
}

PunctureResult puncture_project(const Scheme& S, ElementId w, ProjectionChooser& chooser) {
  const Lattice& L = S.lattice();
  if (w >= L.size()) throw std::out_of_range("puncturing element is not in the lattice");
  std::vector<ElementId> images;
  for (ElementId c : S.members()) {
    const auto cand = projection_candidates(L, c, w);
    images.push_back(cand.empty() ? L.meet(c, w) : chooser.choose(cand));
  }
  return collect(S, std::move(images));
}

ElementId support_transform(std::span<const Digit> bits) {
  if (bits.size() > 32) throw std::invalid_argument("binary vectors longer than 32 are not supported");
  ElementId mask = 0;
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] > 1) throw std::invalid_argument("binary vector entries must be 0 or 1");
    if (bits[i]) mask |= ElementId{1} << i;
  }
  return mask;
}

std::vector<Digit> parse_binary_vector(std::string_view text) {
  std::vector<Digit> v;
  for (char ch : text) {
    if (ch != '0' && ch != '1') throw std::invalid_argument("binary vector '" + std::string(text) + "' has a non-binary digit");
    v.push_back(static_cast<Digit>(ch - '0'));
  }
  return v;
}

unsigned hamming_distance(std::span<const Digit> a, std::span<const Digit> b) {
  if (a.size() != b.size()) throw std::invalid_argument("vectors have different lengths");
  unsigned d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

SubspaceRepr lifting_transform(const Matrix& A, const Fq& F) {
  const std::size_t m = A.rows(), n = A.cols();
  Matrix lifted(m, m + n);
  for (std::size_t r = 0; r < m; ++r) {
    lifted.at(r, r) = 1;
    for (std::size_t c = 0; c < n; ++c) lifted.at(r, m + c) = A.at(r, c);
  }
  return rref(lifted, F);
}

unsigned rank_distance(const Matrix& A, const Matrix& B, const Fq& F) {
  return static_cast<unsigned>(rank(subtract(A, B, F), F));
}

}  // namespace latsb
