#ifndef FWH_MATRIX_HPP
#define FWH_MATRIX_HPP

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <ostream>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fwh/fields.hpp"

namespace fwh {

/// Dense row-major matrix over a single field. The field descriptor is stored
/// with the matrix; construction from raw entries verifies that every entry
/// belongs to it.
template <FieldDescriptor K>
class Matrix {
 public:
  using Field = K;
  using Scalar = typename K::Scalar;

  Matrix(K field, std::size_t rows, std::size_t cols)
      : field_(field), rows_(rows), cols_(cols),
        e_(rows * cols, field.zero()) {}

  static Matrix identity(K field, std::size_t n) {
    Matrix m(field, n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = field.one();
    return m;
  }

  static Matrix from_rows(K field,
                          const std::vector<std::vector<Scalar>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c)
        throw std::invalid_argument("Matrix: ragged rows");
      for (std::size_t j = 0; j < c; ++j) {
        if (!field.matches(rows[i][j]))
          throw field_mismatch_error("Matrix: entry (" + std::to_string(i) +
                                     "," + std::to_string(j) +
                                     ") not in field " + field.name());
        m.at(i, j) = rows[i][j];
      }
    }
    return m;
  }

  /// Convenience for integer literals in tests and builders.
  static Matrix from_ints(K field,
                          const std::vector<std::vector<std::int64_t>>& rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r == 0 ? 0 : rows.front().size();
    Matrix m(field, r, c);
    for (std::size_t i = 0; i < r; ++i) {
      if (rows[i].size() != c)
        throw std::invalid_argument("Matrix: ragged rows");
      for (std::size_t j = 0; j < c; ++j) m.at(i, j) = field.from_int(rows[i][j]);
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  const K& field() const { return field_; }

  Scalar& at(std::size_t r, std::size_t c) { return e_[r * cols_ + c]; }
  const Scalar& at(std::size_t r, std::size_t c) const {
    return e_[r * cols_ + c];
  }

  void swap_rows(std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < cols_; ++c) std::swap(at(i, c), at(j, c));
  }

  std::vector<Scalar> row(std::size_t i) const {
    return std::vector<Scalar>(e_.begin() + i * cols_,
                               e_.begin() + (i + 1) * cols_);
  }

  /// Vertical concatenation; fields must agree.
  Matrix stack_below(const Matrix& other) const {
    if (cols_ != other.cols_)
      throw std::invalid_argument("Matrix: column mismatch in stack");
    if (!(field_ == other.field_))
      throw field_mismatch_error("Matrix: stacking over different fields");
    Matrix m(field_, rows_ + other.rows_, cols_);
    std::copy(e_.begin(), e_.end(), m.e_.begin());
    std::copy(other.e_.begin(), other.e_.end(), m.e_.begin() + e_.size());
    return m;
  }

  Matrix transpose() const {
    Matrix m(field_, cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) m.at(j, i) = at(i, j);
    return m;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.e_ == b.e_;
  }
  friend bool operator!=(const Matrix& a, const Matrix& b) {
    return !(a == b);
  }

 private:
  K field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Scalar> e_;
};

template <FieldDescriptor K>
std::ostream& operator<<(std::ostream& os, const Matrix<K>& m) {
  for (std::size_t i = 0; i < m.rows(); ++i) {
    os << (i == 0 ? "[" : " ") << "[";
    for (std::size_t j = 0; j < m.cols(); ++j)
      os << (j ? " " : "") << m.at(i, j);
    os << "]" << (i + 1 == m.rows() ? "]" : "\n");
  }
  return os;
}

template <FieldDescriptor K>
struct Echelon {
  Matrix<K> mat;
  std::vector<std::size_t> pivots;
};

namespace detail {

inline double max_abs_entry(const Matrix<CxField>& a) {
  double m = 0.0;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      m = std::max(m, a.at(i, j).abs());
  return m;
}

}  // namespace detail

/// Reduced row echelon form by Gauss-Jordan elimination.
///
/// Exact fields pick the first nonzero pivot; the approximate complex field
/// pivots on the largest entry in the column and treats entries below
/// tolerance * max|entry| as zero.
template <FieldDescriptor K>
Echelon<K> reduced_row_echelon(Matrix<K> a) {
  const K field = a.field();
  const std::size_t rows = a.rows(), cols = a.cols();
  double threshold = 0.0;
  if constexpr (!K::exact)
    threshold = field.tol * std::max(1.0, detail::max_abs_entry(a));

  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    if constexpr (K::exact) {
      for (std::size_t i = r; i < rows; ++i)
        if (!field.is_zero(a.at(i, c))) {
          p = i;
          break;
        }
    } else {
      double best = threshold;
      for (std::size_t i = r; i < rows; ++i) {
        const double mag = a.at(i, c).abs();
        if (mag > best) {
          best = mag;
          p = i;
        }
      }
    }
    if (p == rows) continue;

    a.swap_rows(r, p);
    const auto pivot = a.at(r, c);
    a.at(r, c) = field.one();
    for (std::size_t j = c + 1; j < cols; ++j) a.at(r, j) /= pivot;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r) continue;
      const auto factor = a.at(i, c);
      if (field.is_zero(factor)) continue;
      a.at(i, c) = field.zero();
      for (std::size_t j = c + 1; j < cols; ++j)
        a.at(i, j) -= factor * a.at(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return {std::move(a), std::move(pivots)};
}

/// Fraction-free (Bareiss) elimination rank over Q. Denominators are cleared
/// row by row, then every update (a_rc*a_ij - a_ic*a_rj)/prev divides exactly,
/// keeping intermediate integers at minor-determinant size.
inline std::size_t bareiss_rank(const Matrix<QField>& a) {
  const std::size_t rows = a.rows(), cols = a.cols();
  std::vector<std::vector<Integer>> m(rows, std::vector<Integer>(cols));
  for (std::size_t i = 0; i < rows; ++i) {
    Integer lcm = 1;
    for (std::size_t j = 0; j < cols; ++j)
      lcm = boost::multiprecision::lcm(lcm, denominator(a.at(i, j)));
    for (std::size_t j = 0; j < cols; ++j) {
      const Rational v = a.at(i, j) * Rational(lcm);
      m[i][j] = numerator(v);
    }
  }

  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = rows;
    for (std::size_t i = r; i < rows; ++i)
      if (m[i][c] != 0) {
        p = i;
        break;
      }
    if (p == rows) continue;
    std::swap(m[r], m[p]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j)
        m[i][j] = (m[r][c] * m[i][j] - m[i][c] * m[r][j]) / prev;
      m[i][c] = 0;
    }
    prev = m[r][c];
    ++r;
  }
  return r;
}

template <FieldDescriptor K>
std::size_t rank(const Matrix<K>& a) {
  if constexpr (std::is_same_v<K, QField>)
    return bareiss_rank(a);
  else
    return reduced_row_echelon(a).pivots.size();
}

/// Basis of ker A as rows of a matrix with A.cols() columns (one row per free
/// column of the echelon form). Rows are not yet in canonical reduced form;
/// Subspace::from_span canonicalizes.
template <FieldDescriptor K>
Matrix<K> kernel_basis(const Matrix<K>& a) {
  const K field = a.field();
  const auto ech = reduced_row_echelon(a);
  const std::size_t cols = a.cols();
  std::vector<bool> is_pivot(cols, false);
  for (std::size_t c : ech.pivots) is_pivot[c] = true;

  Matrix<K> basis(field, cols - ech.pivots.size(), cols);
  std::size_t row = 0;
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    basis.at(row, f) = field.one();
    for (std::size_t i = 0; i < ech.pivots.size(); ++i)
      basis.at(row, ech.pivots[i]) = -ech.mat.at(i, f);
    ++row;
  }
  return basis;
}

}  // namespace fwh

#endif  // FWH_MATRIX_HPP
