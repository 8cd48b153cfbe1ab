#include "latsb/counting.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace latsb {

BigNat binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  BigNat r = 1;
  // r = C(n, i) after step i; each step divides exactly.
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

BigNat pow_big(unsigned base, unsigned exp) {
  BigNat r = 1;
  for (unsigned i = 0; i < exp; ++i) r *= base;
  return r;
}

BigNat gaussian(unsigned n, unsigned k, unsigned q) {
  if (q < 2) throw std::invalid_argument("gaussian binomial needs q >= 2");
  if (k > n) return 0;
  BigNat r = 1;
  // After step i, r = [n choose i+1]_q, so every division is exact.
  for (unsigned i = 0; i < k; ++i) {
    r *= pow_big(q, n - i) - 1;
    const BigNat den = pow_big(q, i + 1) - 1;
    BigNat rem;
    boost::multiprecision::divide_qr(r, den, r, rem);
    if (rem != 0) throw std::logic_error("inexact division in gaussian binomial");
  }
  return r;
}

BigNat gaussian_pascal(unsigned n, unsigned k, unsigned q) {
  if (q < 2) throw std::invalid_argument("gaussian binomial needs q >= 2");
  if (k > n) return 0;
  // row[j] holds [m j]_q for the current m; updated right to left in place.
  std::vector<BigNat> row(k + 1, 0);
  row[0] = 1;
  for (unsigned m = 1; m <= n; ++m) {
    for (unsigned j = std::min(m, k); j >= 1; --j) {
      BigNat qj = 1;
      for (unsigned t = 0; t < j; ++t) qj *= q;
      row[j] = row[j - 1] + qj * row[j];
    }
  }
  return row[k];
}

BigNat WhitneyTable::total() const {
  BigNat t = 0;
  for (const auto& c : counts) t += c;
  return t;
}

WhitneyTable whitney(const Lattice& L) {
  WhitneyTable w;
  w.counts.assign(L.rank() + 1, 0);
  for (ElementId a = 0; a < L.size(); ++a) w.counts[L.height(a)] += 1;
  return w;
}

Family parse_family(std::string_view name) {
  if (name == "powerset") return Family::powerset;
  if (name == "projective") return Family::projective;
  throw std::invalid_argument("unknown lattice family '" + std::string(name) + "'");
}

std::string_view family_name(Family f) { return f == Family::powerset ? "powerset" : "projective"; }

BigNat whitney_closed_form(Family family, unsigned n, unsigned k, unsigned q) {
  switch (family) {
    case Family::powerset:
      return binomial(n, k);
    case Family::projective:
      return gaussian(n, k, q);
  }
  throw std::invalid_argument("unknown lattice family");
}

long double log2_value(const BigNat& x) {
  if (x <= 0) throw std::domain_error("log2 of a non-positive value");
  const auto top = static_cast<unsigned>(boost::multiprecision::msb(x));
  if (top < 64) return std::log2(static_cast<long double>(static_cast<std::uint64_t>(x)));
  const unsigned shift = top - 63;
  const auto head = static_cast<std::uint64_t>(x >> shift);
  return std::log2(static_cast<long double>(head)) + static_cast<long double>(shift);
}

std::string log2_rendered(const BigNat& x) {
  // nearbyint under the default rounding mode rounds half to even.
  const long double scaled = std::nearbyint(log2_value(x) * 10000.0L);
  const auto units = static_cast<long long>(scaled);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%lld.%04lld", units / 10000, units % 10000);
  return buf;
}

}  // namespace latsb
