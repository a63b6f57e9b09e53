#include "fwh/grassmann.hpp"

#include <cmath>
#include <numeric>
#include <optional>
#include <utility>
#include <vector>

#include "fwh/matrix.hpp"

namespace fwh {

namespace {

constexpr std::int64_t kEnumerationCap = 10'000'000;

Integer integer_pow(const Integer& base, long e) {
  Integer r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

}  // namespace

Integer gaussian_binomial(long n, long k, const Integer& q) {
  if (k < 0 || n < 0 || k > n) return 0;
  Integer num = 1, den = 1;
  for (long i = 0; i < k; ++i) {
    num *= integer_pow(q, n - i) - 1;
    den *= integer_pow(q, i + 1) - 1;
  }
  // The quotient is the polynomial identity value, hence exact.
  return num / den;
}

Integer grassmann_point_count(long m, long r, std::uint64_t q) {
  return gaussian_binomial(m, r, Integer(q));
}

namespace {

Integer count_rank_le_formula(const RankStratumQuery& query) {
  const Integer q(query.q);
  Integer total = 0;
  for (long rho = 0; rho <= query.r; ++rho) {
    // #{rank exactly rho}: choice of row space times surjections onto it.
    Integer stratum = gaussian_binomial(query.k, rho, q);
    for (long i = 0; i < rho; ++i)
      stratum *= integer_pow(q, query.l) - integer_pow(q, i);
    total += stratum;
  }
  return total;
}

Integer count_rank_le_exhaustive(const RankStratumQuery& query) {
  const long cells = query.k * query.l;
  const Integer space = integer_pow(Integer(query.q), cells);
  if (space > kEnumerationCap)
    throw std::invalid_argument(
        "count_rank_le: q^(k*l) exceeds the exhaustive cap of 10^7");

  FpField field(query.q);
  Matrix<FpField> mat(field, static_cast<std::size_t>(query.k),
                      static_cast<std::size_t>(query.l));
  std::vector<std::uint64_t> digits(static_cast<std::size_t>(cells), 0);
  Integer hits = 0;
  for (;;) {
    for (long i = 0; i < query.k; ++i)
      for (long j = 0; j < query.l; ++j)
        mat.at(static_cast<std::size_t>(i), static_cast<std::size_t>(j)) =
            field.element(digits[static_cast<std::size_t>(i * query.l + j)]);
    if (static_cast<long>(rank(mat)) <= query.r) ++hits;

    std::size_t d = 0;
    while (d < digits.size() && ++digits[d] == query.q) digits[d++] = 0;
    if (d == digits.size()) break;
  }
  return hits;
}

}  // namespace

Integer count_rank_le(const RankStratumQuery& query, CountMode mode) {
  query.validate();
  switch (mode) {
    case CountMode::formula:
      return count_rank_le_formula(query);
    case CountMode::exhaustive:
      return count_rank_le_exhaustive(query);
    case CountMode::both: {
      const Integer f = count_rank_le_formula(query);
      const Integer e = count_rank_le_exhaustive(query);
      if (f != e)
        throw std::logic_error(
            "count_rank_le: closed form and enumeration disagree (" +
            f.str() + " vs " + e.str() + ")");
      return f;
    }
  }
  throw std::invalid_argument("count_rank_le: unknown mode");
}

void for_each_grassmann_point(
    const FpField& field, long m, long r,
    const std::function<void(const Subspace<FpField>&)>& visit) {
  if (r < 0 || r > m || m < 0)
    throw std::invalid_argument("for_each_grassmann_point: need 0 <= r <= m");
  if (grassmann_point_count(m, r, field.p) > kEnumerationCap)
    throw std::invalid_argument(
        "for_each_grassmann_point: point count exceeds the cap of 10^7");
  const auto mu = static_cast<std::size_t>(m);
  const auto ru = static_cast<std::size_t>(r);
  if (ru == 0) {
    visit(Subspace<FpField>::zero(field, mu));
    return;
  }

  std::vector<std::size_t> piv(ru);
  std::iota(piv.begin(), piv.end(), std::size_t{0});
  for (;;) {
    std::vector<bool> is_piv(mu, false);
    for (std::size_t p : piv) is_piv[p] = true;
    std::vector<std::pair<std::size_t, std::size_t>> free_pos;
    for (std::size_t i = 0; i < ru; ++i)
      for (std::size_t j = piv[i] + 1; j < mu; ++j)
        if (!is_piv[j]) free_pos.emplace_back(i, j);

    Matrix<FpField> mat(field, ru, mu);
    for (std::size_t i = 0; i < ru; ++i) mat.at(i, piv[i]) = field.one();

    std::vector<std::uint64_t> digits(free_pos.size(), 0);
    for (;;) {
      for (std::size_t idx = 0; idx < free_pos.size(); ++idx)
        mat.at(free_pos[idx].first, free_pos[idx].second) =
            field.element(digits[idx]);
      visit(Subspace<FpField>::from_span(mat));

      std::size_t d = 0;
      while (d < digits.size() && ++digits[d] == field.p) digits[d++] = 0;
      if (d == digits.size()) break;
    }

    // Next pivot-column combination in lexicographic order.
    std::size_t i = ru;
    while (i > 0 && piv[i - 1] == mu - ru + (i - 1)) --i;
    if (i == 0) break;
    ++piv[i - 1];
    for (std::size_t j = i; j < ru; ++j) piv[j] = piv[j - 1] + 1;
  }
}

GammaEstimate estimate_gamma_codim(const GammaParams& params, std::uint64_t q,
                                   EstimateMode mode, std::uint64_t trials,
                                   std::uint64_t seed) {
  params.validate();
  FpField field(q);
  const long dim_v = params.m - params.a;

  GammaEstimate est;
  est.params = params;
  est.q = q;
  est.mode = mode;
  est.seed = seed;
  est.predicted_codim = codim_gamma(params);
  est.slack = exponent_slack(q);

  Integer members = 0, total = 0;
  if (mode == EstimateMode::exhaustive) {
    if (integer_pow(Integer(q), params.m * dim_v) > kEnumerationCap)
      throw std::invalid_argument(
          "estimate_gamma_codim: exhaustive cap q^(m(m-a)) <= 10^7 exceeded; "
          "use sampled mode");
    for_each_grassmann_point(field, params.m, dim_v,
                             [&](const Subspace<FpField>& v) {
                               ++total;
                               if (gamma_membership(v, params.b, params.c))
                                 ++members;
                             });
    if (total != grassmann_point_count(params.m, dim_v, q))
      throw std::logic_error(
          "estimate_gamma_codim: enumeration count disagrees with the "
          "Gaussian binomial");
  } else {
    if (q < 5)
      throw std::invalid_argument(
          "estimate_gamma_codim: sampled mode needs q >= 5 to tell adjacent "
          "exponents apart");
    if (trials == 0)
      throw std::invalid_argument(
          "estimate_gamma_codim: sampled mode requires a trial count");
    if (Integer(trials) < 4 * integer_pow(Integer(q), est.predicted_codim))
      throw std::invalid_argument(
          "estimate_gamma_codim: fewer than 4 expected hits at the predicted "
          "codimension; increase trials to at least 4*q^predicted");

    const auto rows = static_cast<std::size_t>(dim_v);
    const auto cols = static_cast<std::size_t>(params.m);
    for (std::uint64_t t = 0; t < trials; ++t) {
      auto rng = SplitMix64::stream(seed, t);
      Matrix<FpField> mat(field, rows, cols);
      std::optional<Subspace<FpField>> v;
      for (int attempt = 0; attempt < 256 && !v; ++attempt) {
        for (std::size_t i = 0; i < rows; ++i)
          for (std::size_t j = 0; j < cols; ++j)
            mat.at(i, j) = field.random(rng);
        auto sp = Subspace<FpField>::from_span(mat);
        if (sp.dim() == rows) v = std::move(sp);
      }
      if (!v)
        throw std::runtime_error(
            "estimate_gamma_codim: persistent rank-deficient draws");
      ++total;
      if (gamma_membership(*v, params.b, params.c)) ++members;
    }
  }

  est.fraction_num = members;
  est.fraction_den = total;
  if (members > 0) {
    const double num = members.convert_to<double>();
    const double den = total.convert_to<double>();
    const double measured =
        (std::log(den) - std::log(num)) / std::log(static_cast<double>(q));
    est.measured_exponent = measured;
    const long rounded = std::lround(measured);
    est.rounded_exponent = rounded;
    est.verdict = std::abs(static_cast<double>(rounded - est.predicted_codim))
                  <= est.slack + 1e-12;
  } else {
    est.verdict = false;
  }
  return est;
}

}  // namespace fwh
