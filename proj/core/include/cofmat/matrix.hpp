#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <vector>

#include "cofmat/rational.hpp"

namespace cofmat {

/// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix from_rows(std::span<const RatVector> rows, std::size_t cols);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Rational> values);

  RatMatrix transpose() const;
  RatMatrix without_row(std::size_t r) const;
  RatMatrix select_rows(std::span<const std::size_t> indices) const;

  RatVector operator*(std::span<const Rational> v) const;
  RatMatrix operator*(const RatMatrix& other) const;

  friend bool operator==(const RatMatrix&, const RatMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Reduced row echelon form together with its pivot columns. Pivots are
/// chosen as the first nonzero entry scanning columns left to right.
struct Echelon {
  RatMatrix reduced;
  std::vector<std::size_t> pivot_cols;
};

Echelon reduced_row_echelon(const RatMatrix& m);

/// Exact rank. Rows are scaled to integers and reduced with fraction-free
/// (Bareiss) elimination, so no intermediate rationals are formed.
std::size_t rank(const RatMatrix& m);

/// Basis of the right null space, one vector per free column of the RREF,
/// in increasing free-column order. Each vector has a 1 in its free column.
std::vector<RatVector> kernel_basis(const RatMatrix& m);

/// Throws std::invalid_argument for a non-square matrix.
Rational det(const RatMatrix& m);

/// Some exact solution of m·x = b, or nullopt if the system is inconsistent.
/// Free variables are set to zero. Throws if b has the wrong length.
std::optional<RatVector> solve(const RatMatrix& m, std::span<const Rational> b);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace cofmat
