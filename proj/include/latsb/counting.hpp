#ifndef LATSB_COUNTING_HPP
#define LATSB_COUNTING_HPP

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "latsb/lattice.hpp"

namespace latsb {

using BigNat = boost::multiprecision::cpp_int;

BigNat binomial(unsigned n, unsigned k);

/// Gaussian binomial [n k]_q by the product formula with exact division.
/// Zero when k > n. Any integer q >= 2 is accepted.
BigNat gaussian(unsigned n, unsigned k, unsigned q);

/// Same quantity through the q-Pascal recurrence
/// [n k]_q = [n-1 k-1]_q + q^k [n-1 k]_q. Kept as an independent check on
/// gaussian(); the two routes share no code.
BigNat gaussian_pascal(unsigned n, unsigned k, unsigned q);

BigNat pow_big(unsigned base, unsigned exp);

/// Number of elements at each height, counts[k] for k = 0..rank.
struct WhitneyTable {
  std::vector<BigNat> counts;

  BigNat total() const;
  friend bool operator==(const WhitneyTable&, const WhitneyTable&) = default;
};

WhitneyTable whitney(const Lattice& L);

enum class Family { powerset, projective };

Family parse_family(std::string_view name);
std::string_view family_name(Family f);

/// binomial(n, k) for the power set, gaussian(n, k, q) for the projective lattice.
BigNat whitney_closed_form(Family family, unsigned n, unsigned k, unsigned q = 2);

/// log2 of a positive integer, rounded half-to-even at 4 decimals, as text.
std::string log2_rendered(const BigNat& x);
/// Underlying value before rounding.
long double log2_value(const BigNat& x);

}  // namespace latsb

#endif  // LATSB_COUNTING_HPP
