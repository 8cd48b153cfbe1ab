#include "latsb/bounds.hpp"

#include <sstream>
#include <stdexcept>

#include "latsb/kernels.hpp"

namespace latsb {

BoundFamily BoundFamily::explicit_lattice(const Lattice& L) {
  if (!is_modular(L)) throw std::invalid_argument("the Singleton bound needs a modular lattice");
  BoundFamily f{Kind::explicit_lattice, 0, &L, is_distributive(L)};
  return f;
}

std::string BoundFamily::name() const {
  switch (kind) {
    case Kind::powerset:
      return "powerset";
    case Kind::projective:
      return "projective";
    case Kind::explicit_lattice:
      return "lattice";
  }
  return "?";
}

BoundParams BoundParams::make(BoundFamily family, unsigned n, unsigned d) {
  if (d < 1) throw std::invalid_argument("minimum distance must be at least 1");
  if (family.kind == BoundFamily::Kind::explicit_lattice && family.lattice->rank() != n)
    throw std::invalid_argument("n must equal the lattice height");
  return BoundParams{family, n, d};
}

BoundParams BoundParams::for_lattice(const Lattice& L, unsigned d) {
  return make(BoundFamily::explicit_lattice(L), L.rank(), d);
}

BigNat family_whitney(const BoundFamily& family, unsigned N, unsigned k) {
  switch (family.kind) {
    case BoundFamily::Kind::powerset:
      return binomial(N, k);
    case BoundFamily::Kind::projective:
      return gaussian(N, k, family.q);
    case BoundFamily::Kind::explicit_lattice: {
      const Lattice& L = *family.lattice;
      for (ElementId w = 0; w < L.size(); ++w) {
        if (L.height(w) != N) continue;
        BigNat count = 0;
        for (ElementId x = 0; x < L.size(); ++x)
          if (L.height(x) == k && L.leq(x, w)) count += 1;
        return count;
      }
      return 0;
    }
  }
  throw std::invalid_argument("unknown family");
}

BigNat lsb(const BoundParams& p) {
  const unsigned a = p.alpha();
  if (a > p.n) return 1;
  const unsigned N = p.n - a;
  BigNat sum = 0;
  for (unsigned k = 0; k <= N; ++k) sum += family_whitney(p.family, N, k);
  return sum;
}

bool window_degenerate(const BoundParams& p, unsigned M) { return M < p.alpha(); }

BigNat lsb_windowed(const BoundParams& p, unsigned m, unsigned M) {
  if (m > M) throw std::invalid_argument("height window has m > M");
  if (M > p.n) throw std::invalid_argument("height window exceeds the lattice height");
  const unsigned a = p.alpha();
  if (M < a) return 1;
  const unsigned N = p.n - a;
  const unsigned lo = m >= a ? m - a : 0;
  const unsigned hi = M - a;
  BigNat sum = 0;
  for (unsigned k = lo; k <= hi; ++k) sum += family_whitney(p.family, N, k);
  return sum;
}

BigNat classical_singleton(unsigned n, unsigned d) {
  if (d < 1) throw std::invalid_argument("minimum distance must be at least 1");
  if (d > n) throw std::invalid_argument("minimum distance exceeds the length");
  return pow_big(2, n - d + 1);
}

BigNat kks_bound(unsigned n, unsigned l, unsigned d, unsigned q) {
  if (d < 1) throw std::invalid_argument("minimum distance must be at least 1");
  if (l > n) throw std::invalid_argument("subspace dimension exceeds the ambient dimension");
  const unsigned a = (d - 1) / 2;
  if (l < a) return 1;
  return gaussian(n - a, l - a, q);
}

BigNat projective_singleton(unsigned n, unsigned d, unsigned q) {
  if (d < 1) throw std::invalid_argument("minimum distance must be at least 1");
  const unsigned a = (d - 1) / 2;
  if (a > n) return 1;
  BigNat sum = 0;
  for (unsigned k = 0; k <= n - a; ++k) sum += gaussian(n - a, k, q);
  return sum;
}

BigNat ball_volume(const Lattice& L, ElementId center, unsigned radius) {
  if (center >= L.size()) throw std::out_of_range("ball center is not in the lattice");
  BigNat count = 0;
  for (ElementId x = 0; x < L.size(); ++x)
    if (height_metric(L, center, x) <= radius) count += 1;
  return count;
}

BigNat ceil_div(const BigNat& a, const BigNat& b) { return (a + b - 1) / b; }

namespace {

BigNat gv_over(const Lattice& L, const std::vector<ElementId>& space, unsigned d) {
  if (d < 1) throw std::invalid_argument("minimum distance must be at least 1");
  if (space.empty()) return 0;
  const std::size_t ball = kernels::omp::max_ball_volume(L, space, d - 1);
  return ceil_div(BigNat(space.size()), BigNat(ball));
}

}  // namespace

BigNat gv_lower(const Lattice& L, unsigned d) {
  std::vector<ElementId> all(L.size());
  for (ElementId i = 0; i < L.size(); ++i) all[i] = i;
  return gv_over(L, all, d);
}

BigNat gv_lower_windowed(const Lattice& L, unsigned d, unsigned m, unsigned M) {
  if (m > M) throw std::invalid_argument("height window has m > M");
  std::vector<ElementId> space;
  for (ElementId i = 0; i < L.size(); ++i)
    if (L.height(i) >= m && L.height(i) <= M) space.push_back(i);
  return gv_over(L, space, d);
}

BigNat gv_lower_powerset(unsigned n, unsigned d) {
  if (d < 1) throw std::invalid_argument("minimum distance must be at least 1");
  BigNat ball = 0;
  for (unsigned i = 0; i < d && i <= n; ++i) ball += binomial(n, i);
  return ceil_div(pow_big(2, n), ball);
}

BigNat gv_lower(const BoundFamily& family, unsigned n, unsigned d, std::optional<std::pair<unsigned, unsigned>> window,
                const MaterializationCap& cap) {
  auto on = [&](const Lattice& L) {
    return window ? gv_lower_windowed(L, d, window->first, window->second) : gv_lower(L, d);
  };
  switch (family.kind) {
    case BoundFamily::Kind::powerset:
      if (!window) return gv_lower_powerset(n, d);
      return on(build_powerset_lattice(n, cap));
    case BoundFamily::Kind::projective:
      return on(build_projective_lattice(n, family.q, cap).lattice);
    case BoundFamily::Kind::explicit_lattice:
      return on(*family.lattice);
  }
  throw std::invalid_argument("unknown family");
}

BoundReport make_bound_report(const BoundParams& p, std::optional<std::pair<unsigned, unsigned>> window,
                              const MaterializationCap& cap) {
  BoundReport r;
  r.family = p.family.name();
  if (p.family.kind == BoundFamily::Kind::projective) r.q = p.family.q;
  r.n = p.n;
  r.d = p.d;
  r.lsb = lsb(p);
  r.degenerate = p.alpha() > p.n;
  if (window) {
    r.m = window->first;
    r.M = window->second;
    r.lsb_windowed = lsb_windowed(p, window->first, window->second);
    r.degenerate = r.degenerate || window_degenerate(p, window->second);
  }
  try {
    r.gv_lower = gv_lower(p.family, p.n, p.d, window, cap);
  } catch (const CapacityError&) {
    r.gv_lower.reset();
  }
  return r;
}

std::string bound_csv_header() { return "family,q,n,d,m,M,lsb,lsb_log2,gv_lower,gv_lower_log2,oracle_max"; }

std::string to_csv_row(const BoundReport& r) {
  std::ostringstream os;
  auto opt = [&](const auto& v) {
    if (v) os << *v;
  };
  os << r.family << ',';
  opt(r.q);
  os << ',' << r.n << ',' << r.d << ',';
  opt(r.m);
  os << ',';
  opt(r.M);
  os << ',' << r.reported_lsb() << ',' << log2_rendered(r.reported_lsb()) << ',';
  if (r.gv_lower) os << *r.gv_lower << ',' << (*r.gv_lower > 0 ? log2_rendered(*r.gv_lower) : std::string());
  else os << ',';
  os << ',';
  opt(r.oracle_max);
  return os.str();
}

}  // namespace latsb
