#ifndef FWH_FERMAT_WARING_HPP
#define FWH_FERMAT_WARING_HPP

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "fwh/certificates.hpp"
#include "fwh/polynomial.hpp"
#include "fwh/rng.hpp"
#include "fwh/subspace.hpp"

namespace fwh {

template <FieldDescriptor K>
struct LinearForm {
  std::vector<typename K::Scalar> coeffs;  // against z_0,...,z_n
};

/// The hypersurface X = {z in P^n : sum_j h_j(z)^d = 0} together with the
/// data that produced it. `overridden` records that (m, d) deviate from the
/// mode's canonical degree_for values.
template <FieldDescriptor K>
struct HypersurfaceSpec {
  long n = 0;
  long m = 0;
  long d = 0;
  TheoremMode mode = TheoremMode::theorem1;
  bool overridden = false;
  std::uint64_t seed = 0;
  long height = 0;
  K field;
  std::vector<LinearForm<K>> forms;
};

/// Every (n+1)-subset of the m forms is linearly independent: the
/// finite-rank part of genericity (necessary, not sufficient; the probe
/// module gathers evidence for the rest).
template <FieldDescriptor K>
bool forms_in_general_position(const HypersurfaceSpec<K>& spec) {
  const std::size_t pick = static_cast<std::size_t>(spec.n) + 1;
  if (spec.forms.size() < pick) return false;
  std::vector<std::size_t> idx(pick);
  for (std::size_t i = 0; i < pick; ++i) idx[i] = i;
  for (;;) {
    Matrix<K> sub(spec.field, pick, pick);
    for (std::size_t i = 0; i < pick; ++i)
      for (std::size_t j = 0; j < pick; ++j)
        sub.at(i, j) = spec.forms[idx[i]].coeffs[j];
    if (rank(sub) != pick) return false;

    std::size_t i = pick;
    while (i > 0 && idx[i - 1] == spec.forms.size() - pick + (i - 1)) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < pick; ++j) idx[j] = idx[j - 1] + 1;
  }
}

/// Draws m = degree_for(n, mode).m forms with integer coefficients in
/// [-height, height] from the seeded RNG, rejecting whole draws (cap 1000)
/// until every (n+1)-subset has full rank. d defaults to the mode's minimal
/// degree; larger d is accepted and flagged. Over F_p the modulus must
/// exceed d, else x -> x^d could collapse through Frobenius.
template <FieldDescriptor K>
  requires(K::exact)
HypersurfaceSpec<K> build_hypersurface(long n, TheoremMode mode,
                                       std::uint64_t seed, K field,
                                       long height = 100,
                                       std::optional<long> override_d = {}) {
  if (n < 2) throw std::invalid_argument("build_hypersurface: need n >= 2");
  if (height < 1)
    throw std::invalid_argument("build_hypersurface: need height >= 1");
  const DegreeChoice canon = degree_for(n, mode);
  const long d = override_d.value_or(canon.d);
  if (d < canon.d)
    throw std::invalid_argument(
        "build_hypersurface: d below the mode's degree bound");
  if constexpr (std::is_same_v<K, FpField>) {
    if (static_cast<long>(field.p) <= d)
      throw std::invalid_argument(
          "build_hypersurface: need p > d for nondegenerate d-th powers");
  }

  HypersurfaceSpec<K> spec{n,    canon.m, d,      mode, d != canon.d,
                           seed, height,  field, {}};

  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    spec.forms.clear();
    for (long j = 0; j < spec.m; ++j) {
      LinearForm<K> form;
      bool all_zero = true;
      for (long i = 0; i <= n; ++i) {
        const std::int64_t c = rng.range(-height, height);
        if (c != 0) all_zero = false;
        form.coeffs.push_back(field.from_int(c));
      }
      if (all_zero) break;
      spec.forms.push_back(std::move(form));
    }
    if (static_cast<long>(spec.forms.size()) == spec.m &&
        forms_in_general_position(spec))
      return spec;
  }
  throw std::runtime_error(
      "build_hypersurface: rejection cap (1000) exceeded; the RNG/field "
      "combination cannot reach general position");
}

/// The Fermat hypersurface itself: m = n+1 coordinate forms. Unless d
/// happens to match the mode's canonical pair this is flagged overridden.
template <FieldDescriptor K>
  requires(K::exact)
HypersurfaceSpec<K> fermat_spec(long n, long d, K field,
                                TheoremMode mode = TheoremMode::theorem1) {
  if (n < 1) throw std::invalid_argument("fermat_spec: need n >= 1");
  if (d < 1) throw std::invalid_argument("fermat_spec: need d >= 1");
  HypersurfaceSpec<K> spec{n, n + 1, d, mode, false, 0, 1, field, {}};
  for (long j = 0; j <= n; ++j) {
    LinearForm<K> form;
    for (long i = 0; i <= n; ++i)
      form.coeffs.push_back(i == j ? field.one() : field.zero());
    spec.forms.push_back(std::move(form));
  }
  const DegreeChoice canon =
      n >= 2 ? degree_for(n, mode) : DegreeChoice{0, 0};
  spec.overridden = !(spec.m == canon.m && spec.d == canon.d);
  return spec;
}

/// Exact expansion of sum_j h_j^d via repeated squaring of each form.
/// Monomial space C(d+n, n) is capped at 10^6.
template <FieldDescriptor K>
SparsePolynomial<K> expand_power_sum(const HypersurfaceSpec<K>& spec) {
  if (integer_binomial(spec.d + spec.n, spec.n) > 1'000'000)
    throw std::invalid_argument(
        "expand_power_sum: C(d+n, n) exceeds the 10^6 monomial cap");
  const long nvars = spec.n + 1;
  SparsePolynomial<K> sum(spec.field, nvars, spec.d);
  for (const auto& form : spec.forms) {
    SparsePolynomial<K> h(spec.field, nvars, 1);
    for (long i = 0; i < nvars; ++i) {
      typename SparsePolynomial<K>::Exponents e(
          static_cast<std::size_t>(nvars), 0);
      e[static_cast<std::size_t>(i)] = 1;
      h.add_term(e, form.coeffs[static_cast<std::size_t>(i)]);
    }
    sum += h.pow(static_cast<std::uint64_t>(spec.d));
  }
  return sum;
}

/// sum_j h_j(z)^d without expansion; the dual evaluation path.
template <FieldDescriptor K>
typename K::Scalar evaluate_spec(const HypersurfaceSpec<K>& spec,
                                 const std::vector<typename K::Scalar>& point) {
  if (static_cast<long>(point.size()) != spec.n + 1)
    throw std::invalid_argument("evaluate_spec: point arity mismatch");
  typename K::Scalar acc = spec.field.zero();
  for (const auto& form : spec.forms) {
    typename K::Scalar s = spec.field.zero();
    for (std::size_t i = 0; i < point.size(); ++i)
      s += form.coeffs[i] * point[i];
    acc += power(spec.field, s, static_cast<std::uint64_t>(spec.d));
  }
  return acc;
}

/// The image of z -> (h_1(z),...,h_m(z)) as a subspace V of F^m, of
/// dimension n+1: the hypersurface is the Fermat hypersurface of degree d
/// in P^(m-1) cut by P(V).
template <FieldDescriptor K>
Subspace<K> plane_section_model(const HypersurfaceSpec<K>& spec) {
  const std::size_t rows = static_cast<std::size_t>(spec.n) + 1;
  const std::size_t cols = static_cast<std::size_t>(spec.m);
  Matrix<K> a(spec.field, rows, cols);
  for (std::size_t j = 0; j < cols; ++j)
    for (std::size_t i = 0; i < rows; ++i)
      a.at(i, j) = spec.forms[j].coeffs[i];
  auto v = Subspace<K>::from_span(a);
  if (v.dim() != rows)
    throw std::invalid_argument(
        "plane_section_model: coefficient matrix rank below n+1");
  return v;
}

/// Dimension (n+1)m - 1 of the algebraic family of such hypersurfaces
/// (m forms of n+1 coefficients each, modulo overall scale).
inline long family_dimension(long n, long m) {
  if (n < 1 || m < n + 1)
    throw std::invalid_argument("family_dimension: need m >= n+1, n >= 1");
  return (n + 1) * m - 1;
}

}  // namespace fwh

#endif  // FWH_FERMAT_WARING_HPP
