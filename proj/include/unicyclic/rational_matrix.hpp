#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "unicyclic/rational.hpp"

namespace unicyclic {

/// Dense row-major matrix of exact rationals.
class RationalMatrix {
 public:
  RationalMatrix() = default;
  /// Zero matrix of the given shape.
  RationalMatrix(std::size_t rows, std::size_t cols);
  /// Throws DimensionError on ragged input.
  RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static RationalMatrix identity(std::size_t n);
  static RationalMatrix zeros(std::size_t rows, std::size_t cols) { return {rows, cols}; }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }
  /// Bounds-checked access; throws DimensionError.
  const Rational& at(std::size_t r, std::size_t c) const;

  std::span<Rational> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  std::size_t nonzero_count() const;
  bool is_zero() const;
  bool is_symmetric() const;

  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

/// Exact product. Zero entries of either operand are skipped, so products
/// involving incidence matrices cost proportionally to their nonzeros.
/// Throws DimensionError when a.cols() != b.rows().
RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix mat_transpose(const RationalMatrix& a);
RationalMatrix mat_add(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix mat_sub(const RationalMatrix& a, const RationalMatrix& b);
RationalMatrix mat_scale(const RationalMatrix& a, const Rational& factor);
/// Entrywise structural equality; false (not an error) on shape mismatch.
bool mat_eq(const RationalMatrix& a, const RationalMatrix& b);

/// Solves a·X = b exactly by Gauss-Jordan elimination, taking the first
/// nonzero entry of each column as pivot. Throws SingularMatrixError when a is
/// singular and DimensionError when a is not square or b does not conform.
RationalMatrix solve_full_rank(const RationalMatrix& a, const RationalMatrix& b);

/// Reduced row echelon form together with its pivot columns.
struct RowEchelon {
  RationalMatrix reduced;
  std::vector<std::size_t> pivot_columns;

  std::size_t rank() const noexcept { return pivot_columns.size(); }
};

RowEchelon reduced_row_echelon(RationalMatrix a);

}  // namespace unicyclic
