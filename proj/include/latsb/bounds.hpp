#ifndef LATSB_BOUNDS_HPP
#define LATSB_BOUNDS_HPP

#include <optional>
#include <string>
#include <vector>

#include "latsb/counting.hpp"
#include "latsb/lattice.hpp"
#include "latsb/projective.hpp"

namespace latsb {

/// Where the bound is evaluated: a closed-form family or a built lattice.
struct BoundFamily {
  enum class Kind { powerset, projective, explicit_lattice };

  Kind kind = Kind::powerset;
  unsigned q = 2;
  const Lattice* lattice = nullptr;  // explicit_lattice only; not owned
  bool lattice_distributive = false;

  static BoundFamily powerset() { return {Kind::powerset, 2, nullptr, true}; }
  static BoundFamily projective(unsigned q) { return {Kind::projective, q, nullptr, false}; }
  /// Classifies L once; throws std::invalid_argument unless it is modular.
  static BoundFamily explicit_lattice(const Lattice& L);

  std::string name() const;
  bool distributive() const { return kind == Kind::powerset || (kind == Kind::explicit_lattice && lattice_distributive); }
};

/// Lattice height n, minimum distance d and the family.
///
/// The puncture budget alpha is how many coatom punctures a scheme survives
/// before its distance can reach zero. Each puncture costs at most beta units
/// of distance: beta = 1 on distributive lattices and 2 on modular ones, so
/// alpha = d - 1 or floor((d - 1) / 2).
struct BoundParams {
  BoundFamily family;
  unsigned n = 0;
  unsigned d = 1;

  static BoundParams make(BoundFamily family, unsigned n, unsigned d);
  /// Explicit lattice: n is its rank. The lattice must be modular.
  static BoundParams for_lattice(const Lattice& L, unsigned d);

  unsigned beta() const { return family.distributive() ? 1 : 2; }
  unsigned alpha() const { return family.distributive() ? d - 1 : (d - 1) / 2; }
};

/// c(N, k) for the height-N member of the family (N = n - alpha in the bounds).
/// For an explicit lattice this counts heights inside [O, w] for the first
/// element w of height N.
BigNat family_whitney(const BoundFamily& family, unsigned N, unsigned k);

/// Lattice Singleton bound: sum_{k=0}^{n-alpha} c(n-alpha, k).
/// When alpha > n no two elements can be d apart and the value is 1.
BigNat lsb(const BoundParams& p);

/// Height-windowed form: sum_{k=m-alpha}^{M-alpha} c(n-alpha, k), the lower
/// end clipped at 0. When M < alpha the value is 1 (degenerate).
BigNat lsb_windowed(const BoundParams& p, unsigned m, unsigned M);
bool window_degenerate(const BoundParams& p, unsigned M);

/// 2^(n-d+1); requires 1 <= d <= n.
BigNat classical_singleton(unsigned n, unsigned d);
/// [n-alpha, l-alpha]_q with alpha = floor((d-1)/2); 1 when l < alpha.
BigNat kks_bound(unsigned n, unsigned l, unsigned d, unsigned q);
/// sum_k [n-alpha, k]_q with alpha = floor((d-1)/2).
BigNat projective_singleton(unsigned n, unsigned d, unsigned q);

/// |{x : d_h(center, x) <= radius}|.
BigNat ball_volume(const Lattice& L, ElementId center, unsigned radius);

/// GV-type lower bound ceil(|space| / max ball of radius d - 1), balls taken
/// inside the space. This is a generic packing bound, not the Etzion-Vardy
/// bound; it is what the gv_lower columns report.
BigNat gv_lower(const Lattice& L, unsigned d);
BigNat gv_lower_windowed(const Lattice& L, unsigned d, unsigned m, unsigned M);
/// Power set with center-independent Hamming balls: ceil(2^n / sum_{i<d} C(n, i)).
BigNat gv_lower_powerset(unsigned n, unsigned d);
/// Dispatches on the family; projective families are materialized under the
/// cap and throw CapacityError beyond it.
BigNat gv_lower(const BoundFamily& family, unsigned n, unsigned d, std::optional<std::pair<unsigned, unsigned>> window,
                const MaterializationCap& cap);

BigNat ceil_div(const BigNat& a, const BigNat& b);

/// One row of the bound table.
struct BoundReport {
  std::string family;
  std::optional<unsigned> q;
  unsigned n = 0;
  unsigned d = 1;
  std::optional<unsigned> m, M;
  BigNat lsb;
  std::optional<BigNat> lsb_windowed;
  std::optional<BigNat> gv_lower;
  std::optional<BigNat> oracle_max;
  bool degenerate = false;

  /// The windowed value when a window is set, else the plain bound.
  const BigNat& reported_lsb() const { return lsb_windowed ? *lsb_windowed : lsb; }
};

BoundReport make_bound_report(const BoundParams& p, std::optional<std::pair<unsigned, unsigned>> window,
                              const MaterializationCap& cap);

std::string bound_csv_header();
std::string to_csv_row(const BoundReport& r);

}  // namespace latsb

#endif  // LATSB_BOUNDS_HPP
