// Acceptance checks. One line per criterion: PASS or FAIL, what was measured,
// wall time against the limit. Exit status is the number of failures.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "latsb/bounds.hpp"
#include "latsb/cli.hpp"
#include "latsb/counting.hpp"
#include "latsb/kernels.hpp"
#include "latsb/projective.hpp"
#include "latsb/schemes.hpp"
#include "latsb/search.hpp"

using namespace latsb;

namespace {

struct Outcome {
  bool pass = true;
  std::string detail;
};

struct Criterion {
  int id;
  std::string title;
  double limit_seconds;
  std::function<Outcome()> body;
};

void fail(Outcome& o, const std::string& why) {
  if (o.pass) o.detail = why;
  o.pass = false;
}

// 1
Outcome classical_singleton_equivalence() {
  Outcome o;
  int cases = 0;
  for (unsigned n = 1; n <= 10; ++n)
    for (unsigned d = 1; d <= n; ++d) {
      ++cases;
      const BigNat expect = BigNat(1) << (n - d + 1);
      if (lsb(BoundParams::make(BoundFamily::powerset(), n, d)) != expect)
        fail(o, "n=" + std::to_string(n) + " d=" + std::to_string(d));
    }
  if (o.pass) o.detail = std::to_string(cases) + " cases";
  return o;
}

// 2
Outcome kks_equivalence() {
  Outcome o;
  int cases = 0;
  for (unsigned q : {2U, 3U})
    for (unsigned n = 1; n <= 8; ++n)
      for (unsigned l = 0; l <= n; ++l)
        for (unsigned d = 1; d <= 2 * l; ++d) {
          ++cases;
          const unsigned a = (d - 1) / 2;
          const auto p = BoundParams::make(BoundFamily::projective(q), n, d);
          if (lsb_windowed(p, l, l) != gaussian(n - a, l - a, q))
            fail(o, "q=" + std::to_string(q) + " n=" + std::to_string(n) + " l=" + std::to_string(l) + " d=" + std::to_string(d));
        }
  if (o.pass) o.detail = std::to_string(cases) + " cases";
  return o;
}

// 3
Outcome projective_singleton_equivalence() {
  Outcome o;
  int cases = 0;
  for (unsigned q : {2U, 3U})
    for (unsigned n = 1; n <= 12; ++n)
      for (unsigned d = 1; d <= 2 * n + 2; ++d) {
        ++cases;
        const unsigned a = (d - 1) / 2;
        BigNat expect = 0;
        if (a > n) expect = 1;
        else
          for (unsigned k = 0; k <= n - a; ++k) expect += gaussian(n - a, k, q);
        if (lsb(BoundParams::make(BoundFamily::projective(q), n, d)) != expect)
          fail(o, "q=" + std::to_string(q) + " n=" + std::to_string(n) + " d=" + std::to_string(d));
      }
  if (o.pass) o.detail = std::to_string(cases) + " cases";
  return o;
}

// 4: every k x n binary matrix of rank k, reduced, counted once per row space.
Outcome gaussian_oracle() {
  Outcome o;
  const Fq F(2);
  for (unsigned n = 0; n <= 4; ++n)
    for (unsigned k = 0; k <= n; ++k) {
      std::set<SubspaceRepr> seen;
      const unsigned bits = n * k;
      for (std::uint32_t code = 0; code < (1U << bits); ++code) {
        Matrix M(k, n);
        for (unsigned i = 0; i < bits; ++i) M.at(i / n, i % n) = static_cast<Digit>((code >> i) & 1U);
        const SubspaceRepr s = rref(M, F);
        if (s.dim() == k) seen.insert(s);
      }
      if (gaussian(n, k, 2) != seen.size())
        fail(o, "[" + std::to_string(n) + " " + std::to_string(k) + "]_2 = " + gaussian(n, k, 2).str() + " but " +
                    std::to_string(seen.size()) + " subspaces");
    }
  if (gaussian(4, 2, 2) != 35) fail(o, "[4 2]_2 != 35");
  if (o.pass) o.detail = "n <= 4 all k; [4 2]_2 = 35";
  return o;
}

// 5
Outcome classifier_table() {
  Outcome o;
  auto expect = [&](const char* name, bool got, bool want, const char* what) {
    if (got != want) fail(o, std::string(name) + ": " + what + " is " + (got ? "true" : "false"));
  };
  const Lattice pow3 = build_powerset_lattice(3);
  expect("Pow(3)", is_distributive(pow3), true, "distributive");
  expect("Pow(3)", is_geometric(pow3), true, "geometric");
  const Lattice m3 = build_named_lattice("M3");
  expect("M3", is_modular(m3), true, "modular");
  expect("M3", is_distributive(m3), false, "distributive");
  expect("M3", is_geometric(m3), true, "geometric");
  const Lattice n5 = build_named_lattice("N5");
  expect("N5", has_jordan_dedekind(n5), false, "jordan_dedekind");
  expect("N5", is_modular(n5), false, "modular");
  const Lattice l1 = build_named_lattice("L1");
  expect("L1", is_distributive(l1), true, "distributive");
  expect("L1", is_geometric(l1), false, "geometric");
  const Lattice l2 = build_named_lattice("L2");
  expect("L2", is_modular(l2), true, "modular");
  expect("L2", is_distributive(l2), false, "distributive");
  expect("L2", is_geometric(l2), false, "geometric");
  const Lattice sub3 = build_projective_lattice(3, 2).lattice;
  expect("Sub(F_2^3)", is_geometric_modular(sub3), true, "geometric modular");
  expect("Sub(F_2^3)", is_distributive(sub3), false, "distributive");
  if (o.pass) o.detail = "6 lattices";
  return o;
}

// 6
Outcome distance_drop() {
  Outcome o;
  auto sweep = [&](const Lattice& L, unsigned limit, const char* name) {
    unsigned worst = 0;
    std::size_t checked = 0;
    for (ElementId w : coatoms(L))
      for (ElementId a = 0; a < L.size(); ++a)
        for (ElementId b = a + 1; b < L.size(); ++b) {
          const Scheme S(L, {a, b});
          const PunctureResult r = puncture(S, w);
          const unsigned drop = min_distance(S) - *r.min_distance;
          worst = std::max(worst, drop);
          ++checked;
        }
    if (worst > limit) fail(o, std::string(name) + " drop " + std::to_string(worst));
    return std::string(name) + " max drop " + std::to_string(worst) + " over " + std::to_string(checked);
  };
  const std::string a = sweep(build_powerset_lattice(4), 1, "Pow(4)");
  const ProjectiveLattice P = build_projective_lattice(3, 2);
  const std::string b = sweep(P.lattice, 2, "Sub(F_2^3)");
  // A1 = <e1,e2>, A2 = <e2,e1+e3>, W = <e2,e3>
  const Scheme S(P.lattice, {P.parse_element("100/010"), P.parse_element("010/101")});
  const PunctureResult r = puncture(S, P.parse_element("010/001"));
  if (min_distance(S) != 2 || r.min_distance != 0u) fail(o, "two-plane scheme: drop is not 2 -> 0");
  if (o.pass) o.detail = a + "; " + b + "; two-plane scheme 2 -> 0";
  return o;
}

// 7
Outcome metric_and_modularity() {
  Outcome o;
  std::vector<std::pair<std::string, Lattice>> six;
  six.emplace_back("Pow(3)", build_powerset_lattice(3));
  for (const char* n : {"M3", "N5", "L1", "L2"}) six.emplace_back(n, build_named_lattice(n));
  six.emplace_back("Sub(F_2^3)", build_projective_lattice(3, 2).lattice);
  std::string triangle_failures;
  for (const auto& [name, L] : six) {
    if (const auto t = kernels::omp::triangle_violation(L)) {
      const unsigned ac = height_metric(L, t->a, t->c), ab = height_metric(L, t->a, t->b), bc = height_metric(L, t->b, t->c);
      triangle_failures += (triangle_failures.empty() ? "" : "; ") + name + ": d(" + L.name(t->a) + "," + L.name(t->c) +
                           ")=" + std::to_string(ac) + " > d(" + L.name(t->a) + "," + L.name(t->b) + ")+d(" +
                           L.name(t->b) + "," + L.name(t->c) + ")=" + std::to_string(ab + bc);
    }
    const bool rhs = has_jordan_dedekind(L) && is_valuation(L, height_valuation(L));
    if (is_modular(L) != rhs) fail(o, name + ": modular != (JD and height valuation)");
  }
  if (!triangle_failures.empty()) fail(o, "triangle inequality fails on " + triangle_failures);
  if (o.pass) o.detail = "triangle inequality and equivalence on 6 lattices";
  else if (o.detail.rfind("triangle", 0) == 0) o.detail += " (modular <=> JD and valuation holds on all 6)";
  return o;
}

// 8
Outcome transform_isometries() {
  Outcome o;
  const Lattice pow5 = build_powerset_lattice(5);
  std::vector<std::vector<Digit>> words;
  for (unsigned m = 0; m < 32; ++m) {
    std::vector<Digit> v(5);
    for (unsigned i = 0; i < 5; ++i) v[i] = (m >> i) & 1U;
    words.push_back(v);
  }
  const auto sw = verify_transform(
      "support", std::span<const std::vector<Digit>>(words),
      [](const std::vector<Digit>& a, const std::vector<Digit>& b) { return hamming_distance(a, b); }, pow5,
      [](const std::vector<Digit>& v) { return support_transform(v); });
  if (!sw.ok() || sw.pairs_checked != 496) fail(o, "support: " + sw.violation_detail);

  const Fq F(2);
  const ProjectiveLattice sub4 = build_projective_lattice(4, 2);
  std::vector<Matrix> mats;
  for (unsigned m = 0; m < 16; ++m)
    mats.push_back(Matrix::from_rows({{static_cast<Digit>(m & 1U), static_cast<Digit>((m >> 1) & 1U)},
                                      {static_cast<Digit>((m >> 2) & 1U), static_cast<Digit>((m >> 3) & 1U)}},
                                     2));
  const auto lw = verify_transform(
      "lifting", std::span<const Matrix>(mats), [&](const Matrix& a, const Matrix& b) { return 2 * rank_distance(a, b, F); },
      sub4.lattice, [&](const Matrix& a) { return sub4.id_of(lifting_transform(a, F)); });
  if (!lw.ok() || lw.pairs_checked != 120) fail(o, "lifting: " + lw.violation_detail);
  if (o.pass)
    o.detail = "support " + std::to_string(sw.pairs_checked) + " pairs, lifting " + std::to_string(lw.pairs_checked) + " pairs";
  return o;
}

// 9
Outcome oracle_sandwich() {
  Outcome o;
  std::string gap;
  for (unsigned n : {2U, 3U}) {
    const ProjectiveLattice P = build_projective_lattice(n, 2);
    for (unsigned d = 1; d <= 2 * n; ++d) {
      const SearchProblem p = SearchProblem::make(P.lattice, d);
      const SearchResult r = max_code(p);
      const SandwichCheck c = sandwich_check(p, r, BoundParams::make(BoundFamily::projective(2), n, d));
      const std::string at = "n=" + std::to_string(n) + " d=" + std::to_string(d);
      if (!r.proven_optimal) fail(o, at + " not proven optimal");
      if (!c.pass) fail(o, at + ": " + c.gv_lower.str() + " <= " + std::to_string(r.best_size) + " <= " + c.upper.str() + " fails");
      if (n == 2 && d == 2) {
        if (r.best_size != 3 || c.upper != 5) fail(o, "Sub(F_2^2) d=2 gives " + std::to_string(r.best_size) + " vs " + c.upper.str());
        gap = "Sub(F_2^2) d=2: " + std::to_string(r.best_size) + " < " + c.upper.str();
      }
    }
  }
  if (o.pass) o.detail = "10 cases; " + gap;
  return o;
}

// 10
Outcome fig5_curve() {
  Outcome o;
  const auto dir = std::filesystem::temp_directory_path() / "latsb_acceptance";
  std::filesystem::create_directories(dir);
  const std::string csv = (dir / "fig5.csv").string();
  std::ostringstream out, err;
  if (cli::run({"latsb", "fig5", "-o", csv}, out, err) != 0) {
    fail(o, "fig5 failed: " + err.str());
    return o;
  }
  std::ifstream in(csv);
  std::string line;
  std::getline(in, line);
  if (line.rfind("n,lsb,lsb_log2,", 0) != 0) fail(o, "unexpected header " + line);
  unsigned expect_n = 4;
  BigNat prev = 0;
  while (std::getline(in, line)) {
    const auto c1 = line.find(','), c2 = line.find(',', c1 + 1);
    const unsigned n = static_cast<unsigned>(std::stoul(line.substr(0, c1)));
    const BigNat value(line.substr(c1 + 1, c2 - c1 - 1));
    if (n != expect_n) fail(o, "row for n=" + std::to_string(n) + ", expected " + std::to_string(expect_n));
    BigNat pascal = 0;
    for (unsigned k = 0; k <= n - 1; ++k) pascal += gaussian_pascal(n - 1, k, 2);
    if (value != pascal) fail(o, "n=" + std::to_string(n) + ": " + value.str() + " != " + pascal.str());
    if (value <= prev) fail(o, "not increasing at n=" + std::to_string(n));
    prev = value;
    ++expect_n;
  }
  if (expect_n != 21) fail(o, "expected 17 rows");
  if (o.pass) o.detail = "17 rows, recurrence matches, strictly increasing";
  return o;
}

// 11
Outcome conjecture_probe_regression() {
  Outcome o;
  std::vector<ConjectureRow> rows;
  for (int workers : {1, 2, 4}) rows.push_back(conjecture_probe(2, 4, 2, 4, SearchBudget{}, workers, MaterializationCap{}));
  const ConjectureRow& r = rows.front();
  if (r.bound != 7) fail(o, "bound " + r.bound.str());
  if (!r.proven_optimal || !r.optimum) fail(o, "search did not finish within budget");
  if (!r.gap()) fail(o, "no gap");
  for (const auto& other : rows)
    if (other.optimum != r.optimum || other.nodes != r.nodes || other.scheme != r.scheme)
      fail(o, "result differs across worker counts");
  if (o.pass)
    o.detail = "bound 7, optimum " + std::to_string(*r.optimum) + ", gap " + r.gap()->str() + ", " + std::to_string(r.nodes) +
               " nodes for 1, 2 and 4 workers";
  return o;
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "classical Singleton equivalence", 1.0, classical_singleton_equivalence},
      {2, "constant-dimension (KKS) equivalence", 1.0, kks_equivalence},
      {3, "projective Singleton equivalence", 1.0, projective_singleton_equivalence},
      {4, "Gaussian binomial against RREF enumeration", 5.0, gaussian_oracle},
      {5, "classifier truth table", 1.0, classifier_table},
      {6, "distance drop under puncturing", 30.0, distance_drop},
      {7, "height metric and modularity characterization", 10.0, metric_and_modularity},
      {8, "transform isometries", 5.0, transform_isometries},
      {9, "oracle sandwich", 60.0, oracle_sandwich},
      {10, "fig5 curve reproduction", 5.0, fig5_curve},
      {11, "conjecture probe regression", 60.0, conjecture_probe_regression},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.body();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (secs > c.limit_seconds) fail(o, "took " + std::to_string(secs) + " s");
    failures += o.pass ? 0 : 1;
    std::printf("%s %2d %s: %s (%.3f s, limit %.0f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.title.c_str(), o.detail.c_str(),
                secs, c.limit_seconds);
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures;
}
