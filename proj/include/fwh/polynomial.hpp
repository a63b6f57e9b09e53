#ifndef FWH_POLYNOMIAL_HPP
#define FWH_POLYNOMIAL_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "fwh/fields.hpp"

namespace fwh {

/// Homogeneous sparse polynomial: a map from exponent vectors (length nvars,
/// entries summing to exactly `degree`) to nonzero coefficients. The map's
/// lexicographic key order is also the serialization order, making output
/// byte-stable.
template <FieldDescriptor K>
class SparsePolynomial {
 public:
  using Scalar = typename K::Scalar;
  using Exponents = std::vector<std::uint32_t>;

  SparsePolynomial(K field, long nvars, long degree)
      : field_(field), nvars_(nvars), degree_(degree) {
    if (nvars < 1) throw std::invalid_argument("SparsePolynomial: nvars < 1");
    if (degree < 0) throw std::invalid_argument("SparsePolynomial: degree < 0");
  }

  const K& field() const { return field_; }
  long nvars() const { return nvars_; }
  long degree() const { return degree_; }
  const std::map<Exponents, Scalar>& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  void add_term(const Exponents& exps, const Scalar& coef) {
    if (static_cast<long>(exps.size()) != nvars_)
      throw std::invalid_argument("SparsePolynomial: exponent arity mismatch");
    long total = 0;
    for (std::uint32_t e : exps) total += e;
    if (total != degree_)
      throw std::invalid_argument(
          "SparsePolynomial: term degree " + std::to_string(total) +
          " breaks homogeneity of degree " + std::to_string(degree_));
    if (!field_.matches(coef))
      throw field_mismatch_error("SparsePolynomial: coefficient field");
    if (field_.is_zero(coef)) return;
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
      terms_.emplace(exps, coef);
    } else {
      it->second += coef;
      if (field_.is_zero(it->second)) terms_.erase(it);
    }
  }

  SparsePolynomial& operator+=(const SparsePolynomial& o) {
    require_shape(o, true);
    for (const auto& [exps, coef] : o.terms_) add_term(exps, coef);
    return *this;
  }
  friend SparsePolynomial operator+(SparsePolynomial a,
                                    const SparsePolynomial& b) {
    return a += b;
  }

  friend SparsePolynomial operator*(const SparsePolynomial& a,
                                    const SparsePolynomial& b) {
    a.require_shape(b, false);
    SparsePolynomial out(a.field_, a.nvars_, a.degree_ + b.degree_);
    for (const auto& [ea, ca] : a.terms_)
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea.size());
        for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
        out.add_term(e, ca * cb);
      }
    return out;
  }

  SparsePolynomial pow(std::uint64_t e) const {
    SparsePolynomial acc(field_, nvars_, 0);
    acc.add_term(Exponents(static_cast<std::size_t>(nvars_), 0), field_.one());
    SparsePolynomial base = *this;
    while (e) {
      if (e & 1) acc = acc * base;
      if (e >>= 1) base = base * base;
    }
    return acc;
  }

  Scalar evaluate(const std::vector<Scalar>& point) const {
    if (static_cast<long>(point.size()) != nvars_)
      throw std::invalid_argument("SparsePolynomial: point arity mismatch");
    Scalar acc = field_.zero();
    for (const auto& [exps, coef] : terms_) {
      Scalar term = coef;
      for (std::size_t i = 0; i < exps.size(); ++i)
        if (exps[i]) term *= power(field_, point[i], exps[i]);
      acc += term;
    }
    return acc;
  }

  friend bool operator==(const SparsePolynomial& a, const SparsePolynomial& b) {
    return a.nvars_ == b.nvars_ && a.degree_ == b.degree_ &&
           a.terms_ == b.terms_;
  }

 private:
  void require_shape(const SparsePolynomial& o, bool same_degree) const {
    if (nvars_ != o.nvars_)
      throw std::invalid_argument("SparsePolynomial: nvars mismatch");
    if (same_degree && degree_ != o.degree_)
      throw std::invalid_argument(
          "SparsePolynomial: adding different homogeneous degrees");
    if (!(field_ == o.field_))
      throw field_mismatch_error("SparsePolynomial: fields differ");
  }

  K field_;
  long nvars_;
  long degree_;
  std::map<Exponents, Scalar> terms_;
};

}  // namespace fwh

#endif  // FWH_POLYNOMIAL_HPP
