#ifndef FWH_SUBSPACE_HPP
#define FWH_SUBSPACE_HPP

#include <cstddef>
#include <stdexcept>
#include <utility>
#include <vector>

#include "fwh/matrix.hpp"

namespace fwh {

/// Linear subspace of K^m stored as the reduced row echelon basis of its
/// spanning set. The RREF basis is a canonical form, so equality of subspaces
/// is equality of representations.
template <FieldDescriptor K>
class Subspace {
 public:
  using Field = K;
  using Scalar = typename K::Scalar;

  static Subspace from_span(const Matrix<K>& span) {
    auto ech = reduced_row_echelon(span);
    const std::size_t r = ech.pivots.size();
    Matrix<K> basis(span.field(), r, span.cols());
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < span.cols(); ++j)
        basis.at(i, j) = ech.mat.at(i, j);
    return Subspace(std::move(basis), std::move(ech.pivots));
  }

  static Subspace zero(K field, std::size_t m) {
    return Subspace(Matrix<K>(field, 0, m), {});
  }

  static Subspace full(K field, std::size_t m) {
    return from_span(Matrix<K>::identity(field, m));
  }

  /// Coordinate subspace 0 x K^(m-b): the last b coordinates are free, the
  /// first m-b vanish.
  static Subspace coordinate_tail(K field, std::size_t m, std::size_t b) {
    if (b > m) throw std::invalid_argument("coordinate_tail: b > m");
    Matrix<K> basis(field, b, m);
    for (std::size_t i = 0; i < b; ++i) basis.at(i, m - b + i) = field.one();
    return from_span(basis);
  }

  std::size_t dim() const { return basis_.rows(); }
  std::size_t ambient_dim() const { return basis_.cols(); }
  const Matrix<K>& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  const K& field() const { return basis_.field(); }

  bool contains(const std::vector<Scalar>& v) const {
    if (v.size() != ambient_dim())
      throw std::invalid_argument("contains: wrong ambient dimension");
    const K f = field();
    std::vector<Scalar> residual = v;
    for (std::size_t i = 0; i < dim(); ++i) {
      const Scalar coeff = residual[pivots_[i]];
      if (f.is_zero(coeff)) continue;
      for (std::size_t j = 0; j < ambient_dim(); ++j)
        residual[j] -= coeff * basis_.at(i, j);
    }
    for (const auto& x : residual)
      if (!f.is_zero(x)) return false;
    return true;
  }

  bool contains(const Subspace& other) const {
    for (std::size_t i = 0; i < other.dim(); ++i)
      if (!contains(other.basis_.row(i))) return false;
    return true;
  }

  Subspace sum(const Subspace& other) const {
    check_compatible(other, "sum");
    return from_span(basis_.stack_below(other.basis_));
  }

  /// Zassenhaus: row-reduce [U|U; W|0]. Rows whose pivot lands in the right
  /// block, restricted to that block, form a basis of the intersection.
  Subspace intersect(const Subspace& other) const {
    check_compatible(other, "intersect");
    const K f = field();
    const std::size_t m = ambient_dim();
    Matrix<K> z(f, dim() + other.dim(), 2 * m);
    for (std::size_t i = 0; i < dim(); ++i)
      for (std::size_t j = 0; j < m; ++j) {
        z.at(i, j) = basis_.at(i, j);
        z.at(i, m + j) = basis_.at(i, j);
      }
    for (std::size_t i = 0; i < other.dim(); ++i)
      for (std::size_t j = 0; j < m; ++j)
        z.at(dim() + i, j) = other.basis_.at(i, j);

    const auto ech = reduced_row_echelon(std::move(z));
    std::size_t first = ech.pivots.size();
    for (std::size_t i = 0; i < ech.pivots.size(); ++i)
      if (ech.pivots[i] >= m) {
        first = i;
        break;
      }
    Matrix<K> inter(f, ech.pivots.size() - first, m);
    for (std::size_t i = first; i < ech.pivots.size(); ++i)
      for (std::size_t j = 0; j < m; ++j)
        inter.at(i - first, j) = ech.mat.at(i, m + j);
    return from_span(inter);
  }

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) {
    return !(a == b);
  }

 private:
  Subspace(Matrix<K> basis, std::vector<std::size_t> pivots)
      : basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  void check_compatible(const Subspace& other, const char* op) const {
    if (ambient_dim() != other.ambient_dim())
      throw std::invalid_argument(std::string(op) +
                                  ": ambient dimensions differ");
    if (!(field() == other.field()))
      throw field_mismatch_error(std::string(op) + ": fields differ");
  }

  Matrix<K> basis_;
  std::vector<std::size_t> pivots_;
};

/// ker A as a subspace of K^cols; every basis row v satisfies A v^T = 0.
template <FieldDescriptor K>
Subspace<K> kernel(const Matrix<K>& a) {
  return Subspace<K>::from_span(kernel_basis(a));
}

}  // namespace fwh

#endif  // FWH_SUBSPACE_HPP
