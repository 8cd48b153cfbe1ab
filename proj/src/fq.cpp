#include "latsb/fq.hpp"

#include <stdexcept>

namespace latsb {

bool is_prime(unsigned q) {
  if (q < 2) return false;
  for (unsigned d = 2; d * d <= q; ++d)
    if (q % d == 0) return false;
  return true;
}

Fq::Fq(unsigned q) : q_(q) {
  if (!is_prime(q) || q > 255) throw std::invalid_argument("field order must be a prime below 256, got " + std::to_string(q));
  inverse_.assign(q, 0);
  for (unsigned a = 1; a < q; ++a)
    for (unsigned b = 1; b < q; ++b)
      if ((a * b) % q == 1) inverse_[a] = static_cast<Digit>(b);
}

Matrix Matrix::from_rows(const std::vector<std::vector<Digit>>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) throw std::invalid_argument("ragged matrix rows");
    for (std::size_t c = 0; c < cols; ++c) m.at(r, c) = rows[r][c];
  }
  return m;
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = 1;
  return m;
}

Matrix subtract(const Matrix& a, const Matrix& b, const Fq& F) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) throw std::invalid_argument("matrix shape mismatch");
  Matrix out(a.rows(), a.cols());
  for (std::size_t r = 0; r < a.rows(); ++r)
    for (std::size_t c = 0; c < a.cols(); ++c) out.at(r, c) = F.sub(a.at(r, c), b.at(r, c));
  return out;
}

namespace {

// In-place Gauss-Jordan; returns the rank. Rows [0, rank) end up in RREF.
std::size_t reduce(Matrix& m, const Fq& F) {
  std::size_t rank = 0;
  for (std::size_t col = 0; col < m.cols() && rank < m.rows(); ++col) {
    std::size_t piv = rank;
    while (piv < m.rows() && m.at(piv, col) == 0) ++piv;
    if (piv == m.rows()) continue;
    if (piv != rank)
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m.at(piv, c), m.at(rank, c));
    const Digit s = F.inv(m.at(rank, col));
    for (std::size_t c = 0; c < m.cols(); ++c) m.at(rank, c) = F.mul(m.at(rank, c), s);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == rank || m.at(r, col) == 0) continue;
      const Digit f = m.at(r, col);
      for (std::size_t c = 0; c < m.cols(); ++c) m.at(r, c) = F.sub(m.at(r, c), F.mul(f, m.at(rank, c)));
    }
    ++rank;
  }
  return rank;
}

void check_digits(const Matrix& m, const Fq& F) {
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c)
      if (m.at(r, c) >= F.order()) throw std::invalid_argument("matrix entry outside [0, q)");
}

void check_compatible(const SubspaceRepr& a, const SubspaceRepr& b) {
  if (a.ambient_dim() != b.ambient_dim()) throw std::invalid_argument("subspaces live in different ambient dimensions");
  if (a.field_order() != b.field_order()) throw std::invalid_argument("subspaces live over different fields");
}

}  // namespace

SubspaceRepr rref(const Matrix& m, const Fq& F) {
  check_digits(m, F);
  Matrix work = m;
  const std::size_t r = reduce(work, F);
  SubspaceRepr s(F.order(), m.cols());
  s.basis_.reserve(r * m.cols());
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t c = 0; c < m.cols(); ++c) s.basis_.push_back(work.at(i, c));
  return s;
}

std::size_t rank(const Matrix& m, const Fq& F) {
  check_digits(m, F);
  Matrix work = m;
  return reduce(work, F);
}

std::vector<std::size_t> SubspaceRepr::pivots() const {
  std::vector<std::size_t> p;
  for (std::size_t r = 0; r < dim(); ++r) {
    std::size_t c = 0;
    while (at(r, c) == 0) ++c;
    p.push_back(c);
  }
  return p;
}

std::string SubspaceRepr::to_string() const {
  if (dim() == 0) return std::string(n_, '0');
  std::string out;
  for (std::size_t r = 0; r < dim(); ++r) {
    if (r) out.push_back('/');
    for (std::size_t c = 0; c < n_; ++c) out.push_back(static_cast<char>('0' + at(r, c)));
  }
  return out;
}

Matrix generator_matrix(const SubspaceRepr& s) {
  Matrix m(s.dim(), s.ambient_dim());
  for (std::size_t r = 0; r < s.dim(); ++r)
    for (std::size_t c = 0; c < s.ambient_dim(); ++c) m.at(r, c) = s.at(r, c);
  return m;
}

SubspaceRepr subspace_sum(const SubspaceRepr& a, const SubspaceRepr& b) {
  check_compatible(a, b);
  const std::size_t n = a.ambient_dim();
  Matrix m(a.dim() + b.dim(), n);
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = a.at(r, c);
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(a.dim() + r, c) = b.at(r, c);
  return rref(m, Fq(a.field_order()));
}

// Zassenhaus: reduce [A | A ; B | 0]; rows whose left half vanishes carry a
// basis of A ∩ B in their right half.
SubspaceRepr subspace_intersect(const SubspaceRepr& a, const SubspaceRepr& b) {
  check_compatible(a, b);
  const Fq F(a.field_order());
  const std::size_t n = a.ambient_dim();
  Matrix m(a.dim() + b.dim(), 2 * n);
  for (std::size_t r = 0; r < a.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(r, c) = m.at(r, n + c) = a.at(r, c);
  for (std::size_t r = 0; r < b.dim(); ++r)
    for (std::size_t c = 0; c < n; ++c) m.at(a.dim() + r, c) = b.at(r, c);
  const std::size_t rk = reduce(m, F);

  std::vector<std::vector<Digit>> rows;
  for (std::size_t r = 0; r < rk; ++r) {
    bool left_zero = true;
    for (std::size_t c = 0; c < n && left_zero; ++c) left_zero = m.at(r, c) == 0;
    if (!left_zero) continue;
    std::vector<Digit> row(n);
    for (std::size_t c = 0; c < n; ++c) row[c] = m.at(r, n + c);
    rows.push_back(std::move(row));
  }
  return rref(Matrix::from_rows(rows, n), F);
}

bool is_subspace_of(const SubspaceRepr& a, const SubspaceRepr& b) {
  check_compatible(a, b);
  if (a.dim() > b.dim()) return false;
  const Fq F(a.field_order());
  const std::size_t n = a.ambient_dim();
  const auto piv = b.pivots();
  // Reduce each row of a against b's RREF rows; a ⊆ b iff all residues vanish.
  for (std::size_t r = 0; r < a.dim(); ++r) {
    std::vector<Digit> v(n);
    for (std::size_t c = 0; c < n; ++c) v[c] = a.at(r, c);
    for (std::size_t i = 0; i < b.dim(); ++i) {
      const Digit f = v[piv[i]];
      if (f == 0) continue;
      for (std::size_t c = 0; c < n; ++c) v[c] = F.sub(v[c], F.mul(f, b.at(i, c)));
    }
    for (Digit x : v)
      if (x != 0) return false;
  }
  return true;
}

void for_each_grassmannian(std::size_t n, std::size_t k, unsigned q, const std::function<void(const SubspaceRepr&)>& visit) {
  const Fq F(q);
  if (k > n) return;
  std::vector<std::size_t> piv(k);
  for (std::size_t i = 0; i < k; ++i) piv[i] = i;

  while (true) {
    // Free slots: (row, col) with col > pivot of row and col not a pivot column.
    std::vector<bool> is_pivot(n, false);
    for (auto p : piv) is_pivot[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free;
    for (std::size_t r = 0; r < k; ++r)
      for (std::size_t c = piv[r] + 1; c < n; ++c)
        if (!is_pivot[c]) free.emplace_back(r, c);

    Matrix m(k, n);
    for (std::size_t r = 0; r < k; ++r) m.at(r, piv[r]) = 1;
    std::vector<Digit> vals(free.size(), 0);
    while (true) {
      for (std::size_t i = 0; i < free.size(); ++i) m.at(free[i].first, free[i].second) = vals[i];
      visit(rref(m, F));
      // Odometer with the last slot fastest.
      std::size_t i = free.size();
      while (i > 0) {
        --i;
        if (++vals[i] < q) break;
        vals[i] = 0;
        if (i == 0) {
          i = free.size() + 1;
          break;
        }
      }
      if (free.empty() || i == free.size() + 1) break;
    }

    // Next pivot combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && piv[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) return;
    ++piv[i - 1];
    for (std::size_t j = i; j < k; ++j) piv[j] = piv[j - 1] + 1;
  }
}

std::vector<SubspaceRepr> enumerate_grassmannian(std::size_t n, std::size_t k, unsigned q) {
  std::vector<SubspaceRepr> out;
  for_each_grassmannian(n, k, q, [&](const SubspaceRepr& s) { out.push_back(s); });
  return out;
}

SubspaceRepr parse_subspace(std::string_view text, std::size_t n, unsigned q) {
  const Fq F(q);
  std::vector<std::vector<Digit>> rows;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find('/', start), text.size());
    const std::string_view tok = text.substr(start, end - start);
    if (tok.size() != n) throw std::invalid_argument("subspace row '" + std::string(tok) + "' does not have " + std::to_string(n) + " digits");
    std::vector<Digit> row;
    for (char ch : tok) {
      if (ch < '0' || ch > '9' || static_cast<unsigned>(ch - '0') >= q)
        throw std::invalid_argument("subspace row '" + std::string(tok) + "' has a digit outside [0, q)");
      row.push_back(static_cast<Digit>(ch - '0'));
    }
    rows.push_back(std::move(row));
    start = end + 1;
  }
  return rref(Matrix::from_rows(rows, n), F);
}

}  // namespace latsb
