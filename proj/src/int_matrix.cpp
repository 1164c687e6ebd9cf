#include "halphen/int_matrix.hpp"

#include <cstdlib>
#include <utility>

#include "halphen/checked.hpp"
#include "halphen/error.hpp"

namespace halphen {

IntMatrix::IntMatrix(std::initializer_list<std::initializer_list<std::int64_t>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ShapeError("IntMatrix: ragged initializer");
    data_.insert(data_.end(), r.begin(), r.end());
  }
}

IntMatrix IntMatrix::identity(std::size_t n) {
  IntMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

IntMatrix IntMatrix::from_rows(const std::vector<IntVector>& rows, std::size_t cols) {
  IntMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw ShapeError("IntMatrix::from_rows: row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

IntMatrix IntMatrix::from_columns(const std::vector<IntVector>& columns, std::size_t rows) {
  IntMatrix m(rows, columns.size());
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != rows) throw ShapeError("IntMatrix::from_columns: column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = columns[j][i];
  }
  return m;
}

IntVector IntMatrix::column(std::size_t c) const {
  IntVector v(rows_);
  for (std::size_t i = 0; i < rows_; ++i) v[i] = (*this)(i, c);
  return v;
}

IntMatrix IntMatrix::transposed() const {
  IntMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

IntMatrix IntMatrix::submatrix(std::span<const std::size_t> row_ids, std::span<const std::size_t> col_ids) const {
  IntMatrix s(row_ids.size(), col_ids.size());
  for (std::size_t i = 0; i < row_ids.size(); ++i)
    for (std::size_t j = 0; j < col_ids.size(); ++j) s(i, j) = (*this)(row_ids[i], col_ids[j]);
  return s;
}

IntVector IntMatrix::apply(std::span<const std::int64_t> v) const {
  if (v.size() != cols_) throw ShapeError("IntMatrix::apply: vector length mismatch");
  IntVector out(rows_, 0);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] = checked::fma(out[i], (*this)(i, j), v[j]);
  return out;
}

void IntMatrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
}

void IntMatrix::swap_cols(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
}

void IntMatrix::add_row_multiple(std::size_t dst, std::size_t src, std::int64_t factor) {
  if (factor == 0) return;
  for (std::size_t j = 0; j < cols_; ++j) (*this)(dst, j) = checked::fma((*this)(dst, j), factor, (*this)(src, j));
}

void IntMatrix::add_col_multiple(std::size_t dst, std::size_t src, std::int64_t factor) {
  if (factor == 0) return;
  for (std::size_t i = 0; i < rows_; ++i) (*this)(i, dst) = checked::fma((*this)(i, dst), factor, (*this)(i, src));
}

void IntMatrix::negate_row(std::size_t r) {
  for (std::size_t j = 0; j < cols_; ++j) (*this)(r, j) = checked::sub(0, (*this)(r, j));
}

IntMatrix operator*(const IntMatrix& a, const IntMatrix& b) {
  if (a.cols_ != b.rows_) throw ShapeError("IntMatrix product: inner dimensions differ");
  IntMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i)
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const std::int64_t aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) c(i, j) = checked::fma(c(i, j), aik, b(k, j));
    }
  return c;
}

std::ostream& operator<<(std::ostream& os, const IntMatrix& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << '[';
    for (std::size_t j = 0; j < m.cols(); ++j) os << (j ? " " : "") << m(i, j);
    os << "]\n";
  }
  return os;
}

IntVector SmithForm::divisors() const {
  IntVector d;
  for (std::size_t i = 0; i < rank; ++i) d.push_back(diagonal(i, i));
  return d;
}

namespace {

// Position of the nonzero entry of least absolute value in rows/cols >= t, or nullopt.
std::optional<std::pair<std::size_t, std::size_t>> min_pivot(const IntMatrix& d, std::size_t t) {
  std::optional<std::pair<std::size_t, std::size_t>> best;
  std::int64_t best_abs = 0;
  for (std::size_t i = t; i < d.rows(); ++i)
    for (std::size_t j = t; j < d.cols(); ++j) {
      const std::int64_t v = std::llabs(d(i, j));
      if (v != 0 && (!best || v < best_abs)) {
        best = {i, j};
        best_abs = v;
      }
    }
  return best;
}

}  // namespace

SmithForm smith_normal_form(const IntMatrix& a) {
  SmithForm f{IntMatrix::identity(a.rows()), a, IntMatrix::identity(a.cols()), 0};
  IntMatrix& d = f.diagonal;
  const std::size_t n = std::min(a.rows(), a.cols());

  for (std::size_t t = 0; t < n; ++t) {
    auto pivot = min_pivot(d, t);
    if (!pivot) break;
    for (;;) {
      d.swap_rows(t, pivot->first);
      f.left.swap_rows(t, pivot->first);
      d.swap_cols(t, pivot->second);
      f.right.swap_cols(t, pivot->second);

      bool clean = true;
      for (std::size_t i = t + 1; i < d.rows(); ++i) {
        const std::int64_t q = d(i, t) / d(t, t);
        d.add_row_multiple(i, t, -q);
        f.left.add_row_multiple(i, t, -q);
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < d.cols(); ++j) {
        const std::int64_t q = d(t, j) / d(t, t);
        d.add_col_multiple(j, t, -q);
        f.right.add_col_multiple(j, t, -q);
        if (d(t, j) != 0) clean = false;
      }
      if (clean) {
        // Divisibility: fold any offending row into row t and continue reducing.
        std::optional<std::size_t> bad;
        for (std::size_t i = t + 1; i < d.rows() && !bad; ++i)
          for (std::size_t j = t + 1; j < d.cols(); ++j)
            if (d(i, j) % d(t, t) != 0) {
              bad = i;
              break;
            }
        if (!bad) break;
        d.add_row_multiple(t, *bad, 1);
        f.left.add_row_multiple(t, *bad, 1);
      }
      // Smallest nonzero entry in row t / column t becomes the new pivot.
      std::pair<std::size_t, std::size_t> next{t, t};
      std::int64_t best = std::llabs(d(t, t));
      for (std::size_t i = t + 1; i < d.rows(); ++i)
        if (d(i, t) != 0 && std::llabs(d(i, t)) < best) {
          best = std::llabs(d(i, t));
          next = {i, t};
        }
      for (std::size_t j = t + 1; j < d.cols(); ++j)
        if (d(t, j) != 0 && std::llabs(d(t, j)) < best) {
          best = std::llabs(d(t, j));
          next = {t, j};
        }
      pivot = next;
    }
    if (d(t, t) < 0) {
      d.negate_row(t);
      f.left.negate_row(t);
    }
    f.rank = t + 1;
  }
  return f;
}

std::vector<IntVector> integer_kernel(const IntMatrix& a) {
  const SmithForm f = smith_normal_form(a);
  std::vector<IntVector> basis;
  for (std::size_t j = f.rank; j < a.cols(); ++j) basis.push_back(f.right.column(j));
  return basis;
}

std::optional<IntVector> solve_integer(const SmithForm& snf, std::span<const std::int64_t> b) {
  const IntVector ub = snf.left.apply(b);
  IntVector y(snf.right.rows(), 0);
  for (std::size_t i = 0; i < ub.size(); ++i) {
    if (i < snf.rank) {
      const std::int64_t di = snf.diagonal(i, i);
      if (ub[i] % di != 0) return std::nullopt;
      y[i] = ub[i] / di;
    } else if (ub[i] != 0) {
      return std::nullopt;
    }
  }
  return snf.right.apply(y);
}

std::optional<IntVector> solve_integer(const IntMatrix& a, std::span<const std::int64_t> b) {
  if (b.size() != a.rows()) throw ShapeError("solve_integer: right-hand side length mismatch");
  return solve_integer(smith_normal_form(a), b);
}

IntVector torsion_invariants(const IntMatrix& relations) {
  IntVector out;
  for (std::int64_t d : smith_normal_form(relations).divisors())
    if (d > 1) out.push_back(d);
  return out;
}

}  // namespace halphen
