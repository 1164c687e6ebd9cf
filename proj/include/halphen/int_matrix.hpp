#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <optional>
#include <ostream>
#include <span>
#include <vector>

namespace halphen {

using IntVector = std::vector<std::int64_t>;

/// Dense row-major matrix of 64-bit integers. Products are overflow-checked.
class IntMatrix {
 public:
  IntMatrix() = default;
  IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows);

  static IntMatrix identity(std::size_t n);
  static IntMatrix from_rows(const std::vector<IntVector>& rows, std::size_t cols);
  static IntMatrix from_columns(const std::vector<IntVector>& columns, std::size_t rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const std::int64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  IntVector column(std::size_t c) const;

  IntMatrix transposed() const;
  IntMatrix submatrix(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const;
  IntVector apply(std::span<const std::int64_t> v) const;

  void swap_rows(std::size_t a, std::size_t b);
  void swap_cols(std::size_t a, std::size_t b);
  /// row[dst] += factor * row[src]
  void add_row_multiple(std::size_t dst, std::size_t src, std::int64_t factor);
  /// col[dst] += factor * col[src]
  void add_col_multiple(std::size_t dst, std::size_t src, std::int64_t factor);
  void negate_row(std::size_t r);

  friend IntMatrix operator*(const IntMatrix& a, const IntMatrix& b);
  friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<std::int64_t> data_;
};

std::ostream& operator<<(std::ostream& os, const IntMatrix& m);

/// left * input * right == diagonal, with left/right unimodular and the
/// nonzero diagonal entries d_0 | d_1 | ... positive.
struct SmithForm {
  IntMatrix left;
  IntMatrix diagonal;
  IntMatrix right;
  std::size_t rank = 0;

  /// Nonzero diagonal entries in order.
  IntVector divisors() const;
};

SmithForm smith_normal_form(const IntMatrix& a);

/// Basis of {x : a x = 0} over the integers.
std::vector<IntVector> integer_kernel(const IntMatrix& a);

/// One integer solution of a x = b (free coordinates set to zero), or nullopt.
std::optional<IntVector> solve_integer(const SmithForm& snf, std::span<const std::int64_t> b);
std::optional<IntVector> solve_integer(const IntMatrix& a, std::span<const std::int64_t> b);

/// Invariant factors (> 1) of the torsion subgroup of Z^n / (row span of relations).
IntVector torsion_invariants(const IntMatrix& relations);

}  // namespace halphen
