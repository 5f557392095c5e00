#include "cofmat/matrix.hpp"

#include <stdexcept>
#include <utility>

namespace cofmat {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::from_rows(std::span<const RatVector> rows, std::size_t cols) {
  RatMatrix m(0, cols);
  for (const auto& r : rows) m.append_row(r);
  return m;
}

void RatMatrix::append_row(std::span<const Rational> values) {
  if (values.size() != cols_) throw std::invalid_argument("row length does not match column count");
  data_.insert(data_.end(), values.begin(), values.end());
  ++rows_;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

RatMatrix RatMatrix::without_row(std::size_t r) const {
  if (r >= rows_) throw std::out_of_range("row index out of range");
  RatMatrix out(0, cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    if (i != r) out.append_row(row(i));
  return out;
}

RatMatrix RatMatrix::select_rows(std::span<const std::size_t> indices) const {
  RatMatrix out(0, cols_);
  for (auto i : indices) {
    if (i >= rows_) throw std::out_of_range("row index out of range");
    out.append_row(row(i));
  }
  return out;
}

RatVector RatMatrix::operator*(std::span<const Rational> v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length does not match column count");
  RatVector out(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out[r] = dot(row(r), v);
  return out;
}

RatMatrix RatMatrix::operator*(const RatMatrix& other) const {
  if (cols_ != other.rows_) throw std::invalid_argument("incompatible matrix shapes");
  RatMatrix out(rows_, other.cols_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t k = 0; k < cols_; ++k) {
      const Rational& a = (*this)(r, k);
      if (is_zero(a)) continue;
      for (std::size_t c = 0; c < other.cols_; ++c) out(r, c) += a * other(k, c);
    }
  return out;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  if (a.size() != b.size()) throw std::invalid_argument("dot product of vectors with different lengths");
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!is_zero(a[i]) && !is_zero(b[i])) s += a[i] * b[i];
  }
  return s;
}

namespace {

// Integer rows obtained by multiplying each row by the lcm of its
// denominators. `scale` receives the product of the multipliers.
std::vector<std::vector<Integer>> integer_rows(const RatMatrix& m, Integer* scale) {
  std::vector<std::vector<Integer>> a(m.rows(), std::vector<Integer>(m.cols()));
  if (scale) *scale = 1;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (const auto& x : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) {
      const Rational& x = m(r, c);
      a[r][c] = x.get_num() * (l / x.get_den());
    }
    if (scale) *scale *= l;
  }
  return a;
}

struct BareissResult {
  std::size_t rank = 0;
  Integer last_pivot = 1;
  bool odd_swaps = false;
};

// Fraction-free forward elimination in place; every division is exact.
BareissResult bareiss(std::vector<std::vector<Integer>>& a, std::size_t cols) {
  BareissResult res;
  Integer prev = 1;
  Integer t;
  const std::size_t rows = a.size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(a[p][c]) == 0) ++p;
    if (p == rows) continue;
    if (p != r) {
      std::swap(a[p], a[r]);
      res.odd_swaps = !res.odd_swaps;
    }
    const Integer& piv = a[r][c];
    for (std::size_t i = r + 1; i < rows; ++i) {
      Integer lead = a[i][c];
      for (std::size_t j = c + 1; j < cols; ++j) {
        t = piv * a[i][j];
        if (sgn(lead) != 0) t -= lead * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = piv;
    ++r;
  }
  res.rank = r;
  res.last_pivot = prev;
  return res;
}

}  // namespace

std::size_t rank(const RatMatrix& m) {
  if (m.rows() == 0 || m.cols() == 0) return 0;
  auto a = integer_rows(m, nullptr);
  return bareiss(a, m.cols()).rank;
}

Rational det(const RatMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant of a non-square matrix");
  if (m.rows() == 0) return 1;
  Integer scale;
  auto a = integer_rows(m, &scale);
  const auto res = bareiss(a, m.cols());
  if (res.rank < m.rows()) return 0;
  Rational d(res.last_pivot, scale);
  d.canonicalize();
  return res.odd_swaps ? Rational(-d) : d;
}

Echelon reduced_row_echelon(const RatMatrix& m) {
  Echelon e{m, {}};
  RatMatrix& a = e.reduced;
  std::size_t r = 0;
  for (std::size_t c = 0; c < a.cols() && r < a.rows(); ++c) {
    std::size_t p = r;
    while (p < a.rows() && is_zero(a(p, c))) ++p;
    if (p == a.rows()) continue;
    if (p != r)
      for (std::size_t j = 0; j < a.cols(); ++j) std::swap(a(p, j), a(r, j));
    const Rational inv = 1 / a(r, c);
    for (std::size_t j = c; j < a.cols(); ++j) a(r, j) *= inv;
    for (std::size_t i = 0; i < a.rows(); ++i) {
      if (i == r || is_zero(a(i, c))) continue;
      const Rational f = a(i, c);
      for (std::size_t j = c; j < a.cols(); ++j)
        if (!is_zero(a(r, j))) a(i, j) -= f * a(r, j);
    }
    e.pivot_cols.push_back(c);
    ++r;
  }
  return e;
}

std::vector<RatVector> kernel_basis(const RatMatrix& m) {
  const auto e = reduced_row_echelon(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;

  std::vector<RatVector> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    RatVector z(m.cols());
    z[free] = 1;
    for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) z[e.pivot_cols[i]] = -e.reduced(i, free);
    basis.push_back(std::move(z));
  }
  return basis;
}

std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw std::invalid_argument("right-hand side length does not match row count");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) aug(r, c) = m(r, c);
    aug(r, m.cols()) = b[r];
  }
  const auto e = reduced_row_echelon(aug);
  if (!e.pivot_cols.empty() && e.pivot_cols.back() == m.cols()) return std::nullopt;
  RatVector x(m.cols());
  for (std::size_t i = 0; i < e.pivot_cols.size(); ++i) x[e.pivot_cols[i]] = e.reduced(i, m.cols());
  return x;
}

}  // namespace cofmat
