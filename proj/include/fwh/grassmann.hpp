#ifndef FWH_GRASSMANN_HPP
#define FWH_GRASSMANN_HPP

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>

#include "fwh/fields.hpp"
#include "fwh/subspace.hpp"

namespace fwh {

/// Parameters of the incidence family Gamma_{m,a,b,c} inside Gr_{m,a}, the
/// Grassmannian of codimension-a subspaces of F^m. Q_{m,b} denotes the
/// codimension-b coordinate subspace 0_b x F^(m-b); V lies in Gamma iff
/// dim(V hit Q_{m,b}) >= m-c.
struct GammaParams {
  long m = 0;
  long a = 0;
  long b = 0;
  long c = 0;

  void validate() const {
    if (!(1 <= a && a <= c && c <= m))
      throw std::invalid_argument("GammaParams: need 1 <= a <= c <= m");
    if (!(1 <= b && b <= c && c <= a + b))
      throw std::invalid_argument("GammaParams: need 1 <= b <= c <= a+b");
  }
};

struct RankStratumQuery {
  long k = 0;
  long l = 0;
  long r = 0;
  std::uint64_t q = 0;

  void validate() const {
    if (!(0 <= r && r <= std::min(k, l)))
      throw std::invalid_argument("RankStratumQuery: need 0 <= r <= min(k,l)");
    if (k < 1 || l < 1)
      throw std::invalid_argument("RankStratumQuery: need k, l >= 1");
    if (!is_prime(q))
      throw std::invalid_argument("RankStratumQuery: q must be prime");
  }
};

inline long grassmannian_dim(long m, long a) {
  if (!(1 <= a && a <= m))
    throw std::invalid_argument("grassmannian_dim: need 1 <= a <= m");
  return a * (m - a);
}

/// Codimension of Gamma_{m,a,b,c} in Gr_{m,a}.
inline long codim_gamma(const GammaParams& p) {
  p.validate();
  return (p.m - p.c) * (p.a + p.b - p.c);
}

/// Codimension of {C in Mat_{k,l} : rank C <= r} in the space of all k x l
/// matrices.
inline long rank_stratum_codim(long k, long l, long r) {
  if (!(0 <= r && r <= std::min(k, l)))
    throw std::invalid_argument("rank_stratum_codim: need 0 <= r <= min(k,l)");
  return (k - r) * (l - r);
}

/// Gaussian binomial [n choose k]_q, the number of k-dimensional subspaces
/// of F_q^n.
Integer gaussian_binomial(long n, long k, const Integer& q);

enum class CountMode { formula, exhaustive, both };

/// #{C in Mat_{k,l}(F_q) : rank C <= r}. Mode `formula` sums the closed-form
/// rank-stratum counts; `exhaustive` enumerates all q^(kl) matrices (capped
/// at 10^7); `both` runs the two and insists they agree.
Integer count_rank_le(const RankStratumQuery& query,
                      CountMode mode = CountMode::both);

/// The coordinate subspace Q_{m,b} = 0_b x K^(m-b).
template <FieldDescriptor K>
Subspace<K> q_subspace(K field, long m, long b) {
  if (!(0 <= b && b <= m)) throw std::invalid_argument("q_subspace: bad b");
  return Subspace<K>::coordinate_tail(field, static_cast<std::size_t>(m),
                                      static_cast<std::size_t>(m - b));
}

/// Membership of V in Gamma_{m,a,b,c} with a = m - dim V:
/// dim(V hit Q_{m,b}) >= m - c.
template <FieldDescriptor K>
bool gamma_membership(const Subspace<K>& v, long b, long c) {
  const long m = static_cast<long>(v.ambient_dim());
  const long a = m - static_cast<long>(v.dim());
  GammaParams{m, a, b, c}.validate();
  const auto q = q_subspace(v.field(), m, b);
  return static_cast<long>(v.intersect(q).dim()) >= m - c;
}

/// Number of points of Gr(dim r in F_q^m).
Integer grassmann_point_count(long m, long r, std::uint64_t q);

/// Visits every r-dimensional subspace of F_q^m exactly once via reduced
/// echelon canonical representatives. Point count capped at 10^7.
void for_each_grassmann_point(
    const FpField& field, long m, long r,
    const std::function<void(const Subspace<FpField>&)>& visit);

/// Accepted deviation between the rounded measured exponent and the
/// predicted codimension: subleading Gaussian-binomial factors pollute
/// small-q counts.
inline double exponent_slack(std::uint64_t q) {
  if (q <= 3) return 1.0;
  if (q <= 100) return 0.75;
  return 0.35;
}

enum class EstimateMode { exhaustive, sampled };

struct GammaEstimate {
  GammaParams params;
  std::uint64_t q = 0;
  EstimateMode mode = EstimateMode::exhaustive;
  std::uint64_t seed = 0;
  Integer fraction_num;   // members found
  Integer fraction_den;   // points inspected (or trials)
  /// -log_q(num/den); absent when no members were found.
  std::optional<double> measured_exponent;
  std::optional<long> rounded_exponent;
  long predicted_codim = 0;
  double slack = 0.0;
  bool verdict = false;
};

/// Measures the codimension of Gamma_{m,a,b,c} over F_q as the exponent of
/// the fraction of Grassmannian points lying in Gamma, and compares the
/// rounded exponent against codim_gamma within exponent_slack(q).
///
/// Exhaustive mode requires q^(m(m-a)) <= 10^7 and counts exactly over the
/// canonical echelon representatives. Sampled mode draws `trials` uniform
/// full-rank basis matrices (per-trial RNG streams, scheduling independent)
/// and requires q >= 5 plus trials >= 4 * q^predicted, otherwise a hit count
/// statistically indistinguishable from zero could masquerade as a verdict.
GammaEstimate estimate_gamma_codim(const GammaParams& params, std::uint64_t q,
                                   EstimateMode mode, std::uint64_t trials = 0,
                                   std::uint64_t seed = kDefaultSeed);

}  // namespace fwh

#endif  // FWH_GRASSMANN_HPP
