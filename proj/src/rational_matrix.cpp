#include "unicyclic/rational_matrix.hpp"

#include <algorithm>
#include <string>
#include <utility>

#include "unicyclic/errors.hpp"

namespace unicyclic {

namespace {

std::string shape(const RationalMatrix& m) {
  return std::to_string(m.rows()) + "x" + std::to_string(m.cols());
}

void require_same_shape(const RationalMatrix& a, const RationalMatrix& b, const char* op) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw DimensionError(std::string(op) + ": shape mismatch " + shape(a) + " vs " + shape(b));
  }
}

std::vector<std::size_t> nonzero_columns(std::span<const Rational> row) {
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (!row[j].is_zero()) out.push_back(j);
  }
  return out;
}

// row[target] -= factor * row[source], touching only the listed columns.
void eliminate(std::span<Rational> target, std::span<const Rational> source,
               const std::vector<std::size_t>& source_nz, const Rational& factor) {
  const Rational neg = -factor;
  for (std::size_t j : source_nz) target[j].add_product(neg, source[j]);
}

}  // namespace

RationalMatrix::RationalMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols) {}

RationalMatrix::RationalMatrix(std::initializer_list<std::initializer_list<Rational>> rows)
    : rows_(rows.size()), cols_(rows.size() == 0 ? 0 : rows.begin()->size()) {
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw DimensionError("RationalMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

RationalMatrix RationalMatrix::identity(std::size_t n) {
  RationalMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

const Rational& RationalMatrix::at(std::size_t r, std::size_t c) const {
  if (r >= rows_ || c >= cols_) {
    throw DimensionError("RationalMatrix::at(" + std::to_string(r) + "," + std::to_string(c) +
                         ") out of range for " + shape(*this));
  }
  return (*this)(r, c);
}

std::size_t RationalMatrix::nonzero_count() const {
  return static_cast<std::size_t>(
      std::count_if(data_.begin(), data_.end(), [](const Rational& x) { return !x.is_zero(); }));
}

bool RationalMatrix::is_zero() const {
  return std::all_of(data_.begin(), data_.end(), [](const Rational& x) { return x.is_zero(); });
}

bool RationalMatrix::is_symmetric() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i) {
    for (std::size_t j = i + 1; j < cols_; ++j) {
      if ((*this)(i, j) != (*this)(j, i)) return false;
    }
  }
  return true;
}

void RationalMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  std::swap_ranges(data_.begin() + static_cast<std::ptrdiff_t>(a * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>((a + 1) * cols_),
                   data_.begin() + static_cast<std::ptrdiff_t>(b * cols_));
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

RationalMatrix mat_mul(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) {
    throw DimensionError("mat_mul: inner dimensions differ (" + shape(a) + " * " + shape(b) + ")");
  }
  // Compressed nonzero pattern of b's rows.
  std::vector<std::size_t> offsets(b.rows() + 1, 0);
  std::vector<std::size_t> columns;
  for (std::size_t k = 0; k < b.rows(); ++k) {
    for (std::size_t j = 0; j < b.cols(); ++j) {
      if (!b(k, j).is_zero()) columns.push_back(j);
    }
    offsets[k + 1] = columns.size();
  }

  RationalMatrix c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    auto out = c.row(i);
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& aik = a(i, k);
      if (aik.is_zero()) continue;
      for (std::size_t p = offsets[k]; p < offsets[k + 1]; ++p) {
        const std::size_t j = columns[p];
        out[j].add_product(aik, b(k, j));
      }
    }
  }
  return c;
}

RationalMatrix mat_transpose(const RationalMatrix& a) {
  RationalMatrix t(a.cols(), a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) t(j, i) = a(i, j);
  }
  return t;
}

RationalMatrix mat_add(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b, "mat_add");
  RationalMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) += b(i, j);
  }
  return c;
}

RationalMatrix mat_sub(const RationalMatrix& a, const RationalMatrix& b) {
  require_same_shape(a, b, "mat_sub");
  RationalMatrix c = a;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) -= b(i, j);
  }
  return c;
}

RationalMatrix mat_scale(const RationalMatrix& a, const Rational& factor) {
  RationalMatrix c(a.rows(), a.cols());
  if (factor.is_zero()) return c;
  for (std::size_t i = 0; i < a.rows(); ++i) {
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = a(i, j) * factor;
  }
  return c;
}

bool mat_eq(const RationalMatrix& a, const RationalMatrix& b) { return a == b; }

RationalMatrix solve_full_rank(const RationalMatrix& a, const RationalMatrix& b) {
  if (!a.is_square()) throw DimensionError("solve_full_rank: matrix is " + shape(a));
  if (b.rows() != a.rows()) {
    throw DimensionError("solve_full_rank: right-hand side " + shape(b) + " vs " + shape(a));
  }
  const std::size_t n = a.rows();
  RationalMatrix lhs = a;
  RationalMatrix rhs = b;

  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && lhs(pivot, col).is_zero()) ++pivot;
    if (pivot == n) {
      throw SingularMatrixError("solve_full_rank: singular matrix (no pivot in column " +
                                std::to_string(col + 1) + ")");
    }
    lhs.swap_rows(col, pivot);
    rhs.swap_rows(col, pivot);

    const Rational inv = Rational(1) / lhs(col, col);
    for (auto& x : lhs.row(col)) x *= inv;
    for (auto& x : rhs.row(col)) x *= inv;

    const auto lhs_nz = nonzero_columns(lhs.row(col));
    const auto rhs_nz = nonzero_columns(rhs.row(col));
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || lhs(r, col).is_zero()) continue;
      const Rational factor = lhs(r, col);
      eliminate(lhs.row(r), lhs.row(col), lhs_nz, factor);
      eliminate(rhs.row(r), rhs.row(col), rhs_nz, factor);
    }
  }
  return rhs;
}

RowEchelon reduced_row_echelon(RationalMatrix a) {
  RowEchelon out;
  std::size_t lead = 0;
  for (std::size_t col = 0; col < a.cols() && lead < a.rows(); ++col) {
    std::size_t pivot = lead;
    while (pivot < a.rows() && a(pivot, col).is_zero()) ++pivot;
    if (pivot == a.rows()) continue;
    a.swap_rows(lead, pivot);

    const Rational inv = Rational(1) / a(lead, col);
    for (auto& x : a.row(lead)) x *= inv;

    const auto nz = nonzero_columns(a.row(lead));
    for (std::size_t r = 0; r < a.rows(); ++r) {
      if (r == lead || a(r, col).is_zero()) continue;
      const Rational factor = a(r, col);
      eliminate(a.row(r), a.row(lead), nz, factor);
    }
    out.pivot_columns.push_back(col);
    ++lead;
  }
  out.reduced = std::move(a);
  return out;
}

}  // namespace unicyclic
