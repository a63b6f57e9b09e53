#ifndef FWH_PROBE_HPP
#define FWH_PROBE_HPP

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "fwh/certificates.hpp"
#include "fwh/partition.hpp"
#include "fwh/rng.hpp"
#include "fwh/subspace.hpp"

namespace fwh {

/// mu values for a partition: values[a] parallels partition.classes[a] and
/// holds (mu_{a,2},...,mu_{a,k_a}), the ratios of the class members to the
/// class leader. Constrained classes (all of them in theorem1 mode, classes
/// 2..l in theorem2 mode) satisfy 1 + sum_j mu_{a,j}^d = 0; the theorem2
/// distinguished class carries free nonzero constants that must NOT satisfy
/// that relation.
template <FieldDescriptor K>
struct MuAssignment {
  Partition partition;
  long d = 0;
  K field;
  std::vector<std::vector<typename K::Scalar>> values;
};

namespace detail {

inline std::uint64_t inverse_mod(std::uint64_t a, std::uint64_t n) {
  std::int64_t t = 0, newt = 1;
  std::int64_t r = static_cast<std::int64_t>(n),
               newr = static_cast<std::int64_t>(a % n);
  while (newr != 0) {
    const std::int64_t q = r / newr;
    t = std::exchange(newt, t - q * newt);
    r = std::exchange(newr, r - q * newr);
  }
  if (r != 1) throw std::domain_error("inverse_mod: not coprime");
  return static_cast<std::uint64_t>(t < 0 ? t + static_cast<std::int64_t>(n)
                                          : t);
}

/// Solves x^d = t over F_p, assuming t was already verified to be a d-th
/// power. gcd(d, p-1) = 1 inverts the exponent; otherwise a deterministic
/// scan from a seeded random start (search mode needs p <= 10^5).
inline Fp dth_root_mod_p(const Fp& t, long d, const FpField& field,
                         SplitMix64& rng) {
  const std::uint64_t p = field.p;
  const std::uint64_t order = p - 1;
  const std::uint64_t g = std::gcd(static_cast<std::uint64_t>(d), order);
  if (g == 1) {
    const std::uint64_t dinv =
        inverse_mod(static_cast<std::uint64_t>(d) % order, order);
    return t.pow(dinv);
  }
  if (p > 100'000)
    throw std::invalid_argument(
        "dth_root_mod_p: root search needs p <= 10^5 when gcd(d, p-1) > 1");
  const std::uint64_t start = rng.below(order);
  for (std::uint64_t i = 0; i < order; ++i) {
    const Fp x = field.element(1 + (start + i) % order);
    if (x.pow(static_cast<std::uint64_t>(d)) == t) return x;
  }
  throw std::logic_error("dth_root_mod_p: verified d-th power has no root");
}

template <FieldDescriptor K>
typename K::Scalar random_scalar(const K& field, SplitMix64& rng) {
  if constexpr (std::is_same_v<K, FpField>) {
    return field.random(rng);
  } else if constexpr (std::is_same_v<K, CxField>) {
    const auto unit = [&rng] {
      return 2.0 * (static_cast<double>(rng.next() >> 11) * 0x1.0p-53) - 1.0;
    };
    return field.element({unit(), unit()});
  } else {
    return field.from_int(rng.range(-100, 100));
  }
}

/// Nonzero draw; complex values come from an annulus so that "nonzero"
/// survives the tolerance policy.
template <FieldDescriptor K>
typename K::Scalar random_nonzero_scalar(const K& field, SplitMix64& rng) {
  if constexpr (std::is_same_v<K, FpField>) {
    return field.random_nonzero(rng);
  } else {
    for (;;) {
      auto x = random_scalar(field, rng);
      if constexpr (std::is_same_v<K, CxField>) {
        if (x.abs() >= 0.1) return x;
      } else {
        if (!field.is_zero(x)) return x;
      }
    }
  }
}

}  // namespace detail

/// Re-verifies the MuAssignment invariant by plain evaluation (no shared
/// code with the sampler's root-solving): every constrained class satisfies
/// 1 + sum mu^d = 0, the distinguished class does not, all values nonzero.
template <FieldDescriptor K>
void verify_mu(const MuAssignment<K>& mu) {
  const K& f = mu.field;
  const Partition& p = mu.partition;
  if (mu.values.size() != p.classes.size())
    throw std::logic_error("verify_mu: class count mismatch");
  for (std::size_t a = 0; a < p.classes.size(); ++a) {
    if (mu.values[a].size() + 1 != p.classes[a].size())
      throw std::logic_error("verify_mu: tuple length mismatch");
    typename K::Scalar rel = f.one();
    for (const auto& v : mu.values[a]) {
      if (f.is_zero(v)) throw std::logic_error("verify_mu: zero mu value");
      rel += power(f, v, static_cast<std::uint64_t>(mu.d));
    }
    const bool constrained =
        p.mode == TheoremMode::theorem1 || a > 0;
    if (constrained && !f.is_zero(rel))
      throw std::logic_error("verify_mu: Fermat relation violated");
    if (!constrained && f.is_zero(rel))
      throw std::logic_error(
          "verify_mu: distinguished class hit the Fermat relation");
  }
}

/// Draws mu satisfying the Fermat relations: for each constrained class,
/// mu_{a,j} for j >= 3 are uniform nonzero, then mu_{a,2} solves
/// mu^d = -1 - sum_{j>=3} mu_{a,j}^d (retrying the draw, cap 10000, until
/// the right side is a nonzero d-th power). The theorem2 distinguished
/// class draws free nonzero values, resampling if they collide with the
/// relation. Works over F_p (exact) and complex floats (1e-9 relative).
template <FieldDescriptor K>
MuAssignment<K> sample_mu(const Partition& p, long d, K field,
                          SplitMix64& rng) {
  static_assert(std::is_same_v<K, FpField> || std::is_same_v<K, CxField>,
                "sample_mu needs F_p or complex floats");
  p.validate();
  if (d < 1) throw std::invalid_argument("sample_mu: need d >= 1");
  if constexpr (std::is_same_v<K, FpField>) {
    if (static_cast<std::uint64_t>(d) % field.p == 0)
      throw std::invalid_argument("sample_mu: need p not dividing d");
  }

  MuAssignment<K> mu{p, d, field, {}};
  mu.values.resize(p.classes.size());

  for (std::size_t a = 0; a < p.classes.size(); ++a) {
    const std::size_t k = p.classes[a].size();
    const bool constrained = p.mode == TheoremMode::theorem1 || a > 0;
    bool done = false;
    for (int attempt = 0; attempt < 10'000 && !done; ++attempt) {
      std::vector<typename K::Scalar> vals;
      if (!constrained) {
        typename K::Scalar rel = field.one();
        for (std::size_t j = 2; j <= k; ++j) {
          vals.push_back(detail::random_nonzero_scalar(field, rng));
          rel += power(field, vals.back(), static_cast<std::uint64_t>(d));
        }
        if (field.is_zero(rel)) continue;  // measure-zero collision
      } else {
        typename K::Scalar t = -field.one();
        for (std::size_t j = 3; j <= k; ++j) {
          vals.push_back(detail::random_nonzero_scalar(field, rng));
          t -= power(field, vals.back(), static_cast<std::uint64_t>(d));
        }
        if (field.is_zero(t)) continue;
        if constexpr (std::is_same_v<K, FpField>) {
          const std::uint64_t g =
              std::gcd(static_cast<std::uint64_t>(d), field.p - 1);
          if (!(t.pow((field.p - 1) / g) == field.one())) continue;
          vals.insert(vals.begin(), detail::dth_root_mod_p(t, d, field, rng));
        } else {
          const std::complex<double> root =
              std::pow(t.value(), 1.0 / static_cast<double>(d));
          vals.insert(vals.begin(), field.element(root));
        }
      }
      mu.values[a] = std::move(vals);
      done = true;
    }
    if (!done)
      throw std::runtime_error(
          "sample_mu: retry cap (10000) exceeded for a class; " +
          field.name() +
          " has too few d-th powers here - use a larger p and avoid p = 1 "
          "mod d, which maximizes non-powers");
  }
  verify_mu(mu);
  return mu;
}

template <FieldDescriptor K>
MuAssignment<K> sample_mu(const Partition& p, long d, K field,
                          std::uint64_t seed) {
  SplitMix64 rng(seed);
  return sample_mu(p, d, field, rng);
}

template <FieldDescriptor K>
struct DiagonalPlane {
  Subspace<K> subspace;
  Partition partition;
  MuAssignment<K> mu;
};

/// The l-plane cut out by z_i = 0 on I_0 and z_{i(a,j)} = mu_{a,j} z_{i(a,1)}
/// within each class: one basis vector per class, with disjoint supports.
template <FieldDescriptor K>
DiagonalPlane<K> build_diagonal_plane(const Partition& p,
                                      const MuAssignment<K>& mu) {
  p.validate();
  if (!(mu.partition.m == p.m && mu.partition.classes == p.classes &&
        mu.partition.i0 == p.i0 && mu.partition.mode == p.mode))
    throw std::invalid_argument("build_diagonal_plane: mu built for a "
                                "different partition");
  if (mu.values.size() != p.classes.size())
    throw std::invalid_argument("build_diagonal_plane: mu count mismatch");
  const K& f = mu.field;
  const auto m = static_cast<std::size_t>(p.m);
  Matrix<K> basis(f, p.classes.size(), m);
  for (std::size_t a = 0; a < p.classes.size(); ++a) {
    const auto& cls = p.classes[a];
    if (mu.values[a].size() + 1 != cls.size())
      throw std::invalid_argument("build_diagonal_plane: mu count mismatch");
    basis.at(a, static_cast<std::size_t>(cls[0] - 1)) = f.one();
    for (std::size_t j = 1; j < cls.size(); ++j)
      basis.at(a, static_cast<std::size_t>(cls[j] - 1)) = mu.values[a][j - 1];
  }
  auto sub = Subspace<K>::from_span(basis);
  if (sub.dim() != p.classes.size())
    throw std::logic_error(
        "build_diagonal_plane: disjoint supports must give dim l");
  return {std::move(sub), p, mu};
}

struct ProbeBucket {
  std::uint64_t draws = 0;
  long max_dim = 0;
};

template <FieldDescriptor K>
struct ProbeReport {
  long m = 0;
  long n = 0;
  long d = 0;
  TheoremMode mode = TheoremMode::theorem1;
  std::uint64_t trials = 0;
  std::uint64_t seed = 0;
  /// Pool of partitions with l >= 2 that trials draw from, with per-pool
  /// histograms; parallel vectors.
  std::vector<Partition> pool;
  std::vector<ProbeBucket> histogram;
  std::vector<std::size_t> flagged_partitions;
  long max_dim = 0;
  bool clean = true;
  bool vacuous = false;
  std::string warning;
};

/// Monte-Carlo falsification probe of the genericity statement
/// dim(Y hit V) < 2: draws partitions uniformly from the l >= 2 pool,
/// samples mu, builds the diagonal plane and intersects it with V.
/// Per-trial RNG streams are derived by counter, so reports depend only on
/// (V, mode, d, trials, seed).
template <FieldDescriptor K>
ProbeReport<K> probe(const Subspace<K>& v, TheoremMode mode, long d,
                     std::uint64_t trials, std::uint64_t seed) {
  ProbeReport<K> rep;
  rep.m = static_cast<long>(v.ambient_dim());
  rep.n = static_cast<long>(v.dim()) - 1;
  rep.d = d;
  rep.mode = mode;
  rep.trials = trials;
  rep.seed = seed;
  if (rep.n < 1)
    throw std::invalid_argument("probe: need dim V >= 2 (projective curves)");

  for_each_partition(rep.m, mode, [&](const Partition& p) {
    if (p.l() >= 2) rep.pool.push_back(p);
  });
  rep.histogram.assign(rep.pool.size(), ProbeBucket{});

  if (rep.pool.empty()) {
    rep.vacuous = true;
    rep.warning = "no partitions with l >= 2 at m = " + std::to_string(rep.m) +
                  "; nothing to probe";
    return rep;
  }
  if (trials == 0) {
    rep.vacuous = true;
    rep.warning = "zero trials requested; vacuously clean";
    return rep;
  }

  const K field = v.field();
  for (std::uint64_t t = 0; t < trials; ++t) {
    SplitMix64 rng = SplitMix64::stream(seed, t);
    const std::size_t idx =
        static_cast<std::size_t>(rng.below(rep.pool.size()));
    const Partition& p = rep.pool[idx];
    const auto mu = sample_mu(p, d, field, rng);
    const auto plane = build_diagonal_plane(p, mu);
    const long dim =
        static_cast<long>(plane.subspace.intersect(v).dim());
    auto& bucket = rep.histogram[idx];
    ++bucket.draws;
    bucket.max_dim = std::max(bucket.max_dim, dim);
    rep.max_dim = std::max(rep.max_dim, dim);
  }
  for (std::size_t i = 0; i < rep.pool.size(); ++i)
    if (rep.histogram[i].max_dim >= 2) rep.flagged_partitions.push_back(i);
  rep.clean = rep.max_dim < 2;
  return rep;
}

/// A member of the bad locus: V of dim n+1 containing a 2-dimensional
/// subspace of the given diagonal plane (its first two basis vectors plus
/// n-1 random vectors, redrawn until dim V = n+1).
template <FieldDescriptor K>
Subspace<K> construct_bad_V(const Partition& p, const MuAssignment<K>& mu,
                            long n, std::uint64_t seed) {
  if (p.l() < 2)
    throw std::invalid_argument(
        "construct_bad_V: need l >= 2 (a dim-1 plane has no 2-dim subspace)");
  if (n < 1 || p.m < n + 1)
    throw std::invalid_argument("construct_bad_V: need 1 <= n <= m-1");
  const auto plane = build_diagonal_plane(p, mu);
  const K& field = mu.field;
  const auto m = static_cast<std::size_t>(p.m);
  const auto dim_v = static_cast<std::size_t>(n) + 1;

  SplitMix64 rng(seed);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    Matrix<K> span(field, dim_v, m);
    for (std::size_t j = 0; j < m; ++j) {
      span.at(0, j) = plane.subspace.basis().at(0, j);
      span.at(1, j) = plane.subspace.basis().at(1, j);
    }
    for (std::size_t i = 2; i < dim_v; ++i)
      for (std::size_t j = 0; j < m; ++j)
        span.at(i, j) = detail::random_scalar(field, rng);
    auto v = Subspace<K>::from_span(span);
    if (v.dim() != dim_v) continue;
    if (plane.subspace.intersect(v).dim() < 2)
      throw std::logic_error(
          "construct_bad_V: containment lost in the intersection");
    return v;
  }
  throw std::runtime_error("construct_bad_V: could not complete to dim n+1");
}

}  // namespace fwh

#endif  // FWH_PROBE_HPP
