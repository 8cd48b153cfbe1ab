#ifndef LATSB_BITSET_HPP
#define LATSB_BITSET_HPP

#include <bit>
#include <cstddef>
#include <cstdint>
#include <vector>

namespace latsb {

// Fixed-size dynamic bitset with word-level access. Used for order rows and
// clique candidate sets; both need fast and/subset tests more than anything.
class Bitset {
 public:
  using word_type = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  Bitset() = default;
  explicit Bitset(std::size_t nbits) : nbits_(nbits), words_((nbits + word_bits - 1) / word_bits, 0) {}

  std::size_t size() const { return nbits_; }
  std::size_t num_words() const { return words_.size(); }

  bool test(std::size_t i) const { return (words_[i / word_bits] >> (i % word_bits)) & 1U; }
  void set(std::size_t i) { words_[i / word_bits] |= word_type{1} << (i % word_bits); }
  void reset(std::size_t i) { words_[i / word_bits] &= ~(word_type{1} << (i % word_bits)); }

  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }

  bool none() const {
    for (auto w : words_)
      if (w != 0) return false;
    return true;
  }

  // this ⊆ other
  bool is_subset_of(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i)
      if (words_[i] & ~other.words_[i]) return false;
    return true;
  }

  Bitset& operator&=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= o.words_[i];
    return *this;
  }
  Bitset& operator|=(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= o.words_[i];
    return *this;
  }
  // this &= ~o
  Bitset& subtract(const Bitset& o) {
    for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~o.words_[i];
    return *this;
  }
  friend Bitset operator&(Bitset a, const Bitset& b) { return a &= b; }
  friend bool operator==(const Bitset&, const Bitset&) = default;

  // Index of the lowest set bit, or size() when empty.
  std::size_t find_first() const { return find_next_from(0); }
  std::size_t find_next(std::size_t i) const { return find_next_from(i + 1); }

  const std::vector<word_type>& words() const { return words_; }

 private:
  std::size_t find_next_from(std::size_t i) const {
    if (i >= nbits_) return nbits_;
    std::size_t wi = i / word_bits;
    word_type w = words_[wi] & (~word_type{0} << (i % word_bits));
    while (true) {
      if (w != 0) return wi * word_bits + static_cast<std::size_t>(std::countr_zero(w));
      if (++wi >= words_.size()) return nbits_;
      w = words_[wi];
    }
  }

  std::size_t nbits_ = 0;
  std::vector<word_type> words_;
};

}  // namespace latsb

#endif  // LATSB_BITSET_HPP
