#ifndef LATSB_FQ_HPP
#define LATSB_FQ_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace latsb {

using Digit = std::uint8_t;

/// Prime field F_q, q < 256.
class Fq {
 public:
  explicit Fq(unsigned q);

  unsigned order() const { return q_; }
  Digit add(Digit a, Digit b) const { return static_cast<Digit>((a + b) % q_); }
  Digit sub(Digit a, Digit b) const { return static_cast<Digit>((a + q_ - b) % q_); }
  Digit mul(Digit a, Digit b) const { return static_cast<Digit>((unsigned{a} * b) % q_); }
  Digit neg(Digit a) const { return static_cast<Digit>((q_ - a) % q_); }
  // Multiplicative inverse of a nonzero element.
  Digit inv(Digit a) const { return inverse_[a]; }

  friend bool operator==(const Fq& a, const Fq& b) { return a.q_ == b.q_; }

 private:
  unsigned q_;
  std::vector<Digit> inverse_;
};

bool is_prime(unsigned q);

/// Dense row-major matrix over a small prime field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static Matrix from_rows(const std::vector<std::vector<Digit>>& rows, std::size_t cols);
  static Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Digit& at(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Digit at(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Digit> data_;
};

Matrix subtract(const Matrix& a, const Matrix& b, const Fq& F);

/// A subspace of F_q^n held as its reduced row echelon generator matrix.
/// The form is canonical: equal subspaces have identical representations.
class SubspaceRepr {
 public:
  SubspaceRepr(unsigned q, std::size_t ambient_dim) : q_(q), n_(ambient_dim) {}

  unsigned field_order() const { return q_; }
  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return n_ == 0 ? 0 : basis_.size() / n_; }
  Digit at(std::size_t r, std::size_t c) const { return basis_[r * n_ + c]; }
  std::vector<std::size_t> pivots() const;
  /// Rows as digit strings joined by '/', "000" style for the zero space.
  std::string to_string() const;

  friend bool operator==(const SubspaceRepr&, const SubspaceRepr&) = default;
  friend auto operator<=>(const SubspaceRepr&, const SubspaceRepr&) = default;

 private:
  friend SubspaceRepr rref(const Matrix& m, const Fq& F);
  unsigned q_;
  std::size_t n_;
  std::vector<Digit> basis_;
};

SubspaceRepr rref(const Matrix& m, const Fq& F);
std::size_t rank(const Matrix& m, const Fq& F);
Matrix generator_matrix(const SubspaceRepr& s);

SubspaceRepr subspace_sum(const SubspaceRepr& a, const SubspaceRepr& b);
SubspaceRepr subspace_intersect(const SubspaceRepr& a, const SubspaceRepr& b);
bool is_subspace_of(const SubspaceRepr& a, const SubspaceRepr& b);

/// Every k-dimensional subspace of F_q^n exactly once, by RREF pivot pattern
/// (lexicographic) and then free entries.
void for_each_grassmannian(std::size_t n, std::size_t k, unsigned q, const std::function<void(const SubspaceRepr&)>& visit);
std::vector<SubspaceRepr> enumerate_grassmannian(std::size_t n, std::size_t k, unsigned q);

/// Parses "101/011" style text: rows of n digits in [0, q) separated by '/'.
/// Any generator matrix is accepted; the result is canonicalized.
SubspaceRepr parse_subspace(std::string_view text, std::size_t n, unsigned q);

}  // namespace latsb

#endif  // LATSB_FQ_HPP
