#include <doctest.h>

#include <bit>
#include <map>
#include <random>
#include <set>

#include "latsb/fq.hpp"

using namespace latsb;

namespace {

using Vec = std::vector<Digit>;

// Every linear combination of the rows, as a set of vectors.
std::set<Vec> span_of(const std::vector<Vec>& rows, std::size_t n, unsigned q) {
  std::set<Vec> out{Vec(n, 0)};
  for (const Vec& r : rows) {
    std::set<Vec> next;
    for (const Vec& v : out)
      for (unsigned c = 0; c < q; ++c) {
        Vec w = v;
        for (std::size_t i = 0; i < n; ++i) w[i] = static_cast<Digit>((w[i] + c * r[i]) % q);
        next.insert(w);
      }
    out = std::move(next);
  }
  return out;
}

std::vector<Vec> rows_of(const SubspaceRepr& s) {
  std::vector<Vec> rows(s.dim(), Vec(s.ambient_dim()));
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t c = 0; c < s.ambient_dim(); ++c) rows[r][c] = s.at(r, c);
  return rows;
}

std::set<Vec> span_of(const SubspaceRepr& s) { return span_of(rows_of(s), s.ambient_dim(), s.field_order()); }

std::vector<Vec> all_vectors(std::size_t n, unsigned q) {
  std::vector<Vec> out{Vec{}};
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<Vec> next;
    for (const Vec& v : out)
      for (unsigned c = 0; c < q; ++c) {
        Vec w = v;
        w.push_back(static_cast<Digit>(c));
        next.push_back(w);
      }
    out = std::move(next);
  }
  return out;
}

}  // namespace

TEST_CASE("field inverses") {
  for (unsigned q : {2U, 3U, 5U, 7U, 11U, 251U}) {
    const Fq F(q);
    for (unsigned a = 1; a < q; ++a) CHECK(F.mul(static_cast<Digit>(a), F.inv(static_cast<Digit>(a))) == 1);
  }
  CHECK_THROWS(Fq(4));
  CHECK_THROWS(Fq(1));
  CHECK_FALSE(is_prime(9));
  CHECK(is_prime(13));
}

TEST_CASE("subspace counts of F_2^n match closed subsets of vectors") {
  for (std::size_t n = 1; n <= 4; ++n) {
    const auto vecs = all_vectors(n, 2);
    const std::size_t N = vecs.size();
    std::map<std::size_t, std::size_t> by_size;
    // a subset containing 0 and closed under addition is a subspace
    for (std::uint32_t mask = 0; mask < (1U << N); ++mask) {
      if (!(mask & 1U)) continue;  // vecs[0] is the zero vector
      bool closed = true;
      for (std::size_t i = 0; i < N && closed; ++i) {
        if (!(mask >> i & 1U)) continue;
        for (std::size_t j = 0; j < N && closed; ++j) {
          if (!(mask >> j & 1U)) continue;
          std::size_t k = 0;
          for (std::size_t b = 0; b < n; ++b) k = k * 2 + ((vecs[i][b] + vecs[j][b]) % 2);
          closed = mask >> k & 1U;
        }
      }
      if (closed) ++by_size[static_cast<std::size_t>(std::popcount(mask))];
    }
    for (std::size_t k = 0; k <= n; ++k) {
      const auto G = enumerate_grassmannian(n, k, 2);
      CHECK(G.size() == by_size[std::size_t{1} << k]);
      std::set<std::set<Vec>> spans;
      for (const auto& s : G) {
        CHECK(s.dim() == k);
        spans.insert(span_of(s));
      }
      CHECK(spans.size() == G.size());
    }
  }
}

TEST_CASE("Grassmannian sizes over F_3") {
  CHECK(enumerate_grassmannian(3, 1, 3).size() == 13);
  CHECK(enumerate_grassmannian(3, 2, 3).size() == 13);
  CHECK(enumerate_grassmannian(4, 2, 3).size() == 130);
  CHECK(enumerate_grassmannian(2, 1, 5).size() == 6);
}

TEST_CASE("RREF is canonical: random generators of one span agree") {
  std::mt19937 rng(7);
  for (unsigned q : {2U, 3U, 5U}) {
    const Fq F(q);
    std::uniform_int_distribution<unsigned> digit(0, q - 1);
    for (int trial = 0; trial < 200; ++trial) {
      const std::size_t n = 2 + trial % 4, rows = 1 + trial % 3;
      Matrix A(rows, n), B(rows + 1, n);
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < n; ++c) A.at(r, c) = static_cast<Digit>(digit(rng));
      // B: the rows of A mixed by random coefficients, plus one more combination
      for (std::size_t r = 0; r <= rows; ++r)
        for (std::size_t s = 0; s < rows; ++s) {
          const Digit c = static_cast<Digit>(r == s ? 1 : digit(rng));
          for (std::size_t k = 0; k < n; ++k) B.at(r, k) = F.add(B.at(r, k), F.mul(c, A.at(s, k)));
        }
      const SubspaceRepr ra = rref(A, F), rb = rref(B, F);
      std::vector<Vec> arows(rows, Vec(n));
      for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < n; ++c) arows[r][c] = A.at(r, c);
      CHECK(span_of(ra) == span_of(arows, n, q));
      // B spans a subspace of A's span, so the sum with A is A
      CHECK(is_subspace_of(rb, ra));
      CHECK(subspace_sum(ra, rb) == ra);
    }
  }
}

TEST_CASE("sum and intersection match set operations") {
  for (const auto& [n, q] : std::vector<std::pair<std::size_t, unsigned>>{{3, 2}, {2, 3}, {4, 2}}) {
    std::vector<SubspaceRepr> all;
    for (std::size_t k = 0; k <= n; ++k)
      for (const auto& s : enumerate_grassmannian(n, k, q)) all.push_back(s);
    for (const auto& a : all) {
      const auto sa = span_of(a);
      for (const auto& b : all) {
        const auto sb = span_of(b);
        std::set<Vec> inter;
        for (const auto& v : sa)
          if (sb.count(v)) inter.insert(v);
        CHECK(span_of(subspace_intersect(a, b)) == inter);
        std::vector<Vec> both = rows_of(a);
        for (const auto& r : rows_of(b)) both.push_back(r);
        CHECK(span_of(subspace_sum(a, b)) == span_of(both, n, q));
        bool contained = true;
        for (const auto& v : sa) contained = contained && sb.count(v) == 1;
        CHECK(is_subspace_of(a, b) == contained);
      }
    }
  }
}

TEST_CASE("rank of 2x2 matrices via the determinant") {
  for (unsigned q : {2U, 3U, 5U}) {
    const Fq F(q);
    for (unsigned code = 0; code < q * q * q * q; ++code) {
      unsigned c = code;
      Matrix M(2, 2);
      for (std::size_t i = 0; i < 4; ++i) {
        M.at(i / 2, i % 2) = static_cast<Digit>(c % q);
        c /= q;
      }
      const unsigned det = (M.at(0, 0) * M.at(1, 1) + q * q - M.at(0, 1) * M.at(1, 0)) % q;
      const bool zero = M.at(0, 0) == 0 && M.at(0, 1) == 0 && M.at(1, 0) == 0 && M.at(1, 1) == 0;
      const std::size_t expect = det != 0 ? 2 : (zero ? 0 : 1);
      CHECK(rank(M, F) == expect);
    }
  }
}

TEST_CASE("rank of random 3x3 matrices via the size of the row space") {
  std::mt19937 rng(11);
  for (unsigned q : {2U, 3U}) {
    const Fq F(q);
    std::uniform_int_distribution<unsigned> digit(0, q - 1);
    for (int trial = 0; trial < 300; ++trial) {
      Matrix M(3, 3);
      std::vector<Vec> rows(3, Vec(3));
      for (std::size_t r = 0; r < 3; ++r)
        for (std::size_t c = 0; c < 3; ++c) rows[r][c] = M.at(r, c) = static_cast<Digit>(digit(rng));
      std::size_t size = span_of(rows, 3, q).size(), r = 0;
      while (size > 1) {
        size /= q;
        ++r;
      }
      CHECK(rank(M, F) == r);
    }
  }
}

TEST_CASE("parse and print subspaces") {
  const SubspaceRepr s = parse_subspace("110/011", 3, 2);
  CHECK(s.dim() == 2);
  CHECK(s.to_string() == "101/011");
  CHECK(s.pivots() == std::vector<std::size_t>{0, 1});
  CHECK(parse_subspace("000", 3, 2).dim() == 0);
  CHECK(parse_subspace("000", 3, 2).to_string() == "000");
  CHECK(parse_subspace("21", 2, 3).to_string() == "12");
  CHECK_THROWS(parse_subspace("12", 2, 2));
  CHECK_THROWS(parse_subspace("1101", 3, 2));
  CHECK_THROWS(parse_subspace("1x0", 3, 2));
}
