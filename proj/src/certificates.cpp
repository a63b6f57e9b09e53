#include "fwh/certificates.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <tuple>
#include <utility>

#include "fwh/grassmann.hpp"

namespace fwh {

long bad_codim(long n, long m, long l) {
  if (n < 2) throw std::invalid_argument("bad_codim: need n >= 2");
  if (l < 1) throw std::invalid_argument("bad_codim: need l >= 1");
  if (m < n + 1)
    throw std::invalid_argument("bad_codim: need m >= n+1");
  const long s = 2 * (m - n - l + 1);

  const GammaParams g{m, m - n - 1, m - l, m - 2};
  const bool valid = 1 <= g.a && g.a <= g.c && g.c <= g.m && 1 <= g.b &&
                     g.b <= g.c && g.c <= g.a + g.b;
  if (valid && codim_gamma(g) != s)
    throw std::logic_error("bad_codim: disagrees with codim_gamma");
  return s;
}

DegreeChoice degree_for(long n, TheoremMode mode) {
  if (n < 2) throw std::invalid_argument("degree_for: need n >= 2");
  DegreeChoice out;
  out.m = mode == TheoremMode::theorem1 ? 2 * n - 1 : 2 * n;
  out.d = tfg_degree_bound(out.m, mode);
  return out;
}

long tfg_degree_bound(long m, TheoremMode mode) {
  if (m < 2) throw std::invalid_argument("tfg_degree_bound: need m >= 2");
  if (m > 1'000'000)
    throw std::invalid_argument("tfg_degree_bound: m too large");
  return mode == TheoremMode::theorem1 ? (m - 1) * (m - 1) : m * m - m + 1;
}

namespace {

Integer factorial(long n) {
  Integer r = 1;
  for (long i = 2; i <= n; ++i) r *= i;
  return r;
}

// Number of set partitions of an r-element set with block-size multiset
// lambda: r! / (prod lambda_i! * prod (multiplicity of each size)!).
Integer set_partition_count(long r, const std::vector<long>& lambda) {
  Integer count = factorial(r);
  std::map<long, long> mult;
  for (long part : lambda) {
    count /= factorial(part);
    ++mult[part];
  }
  for (const auto& [size, times] : mult) count /= factorial(times);
  return count;
}

// Integer partitions of r into parts >= 2, non-increasing.
void for_each_lambda(long r, long max_part, std::vector<long>& cur,
                     const std::function<void(const std::vector<long>&)>& fn) {
  if (r == 0) {
    fn(cur);
    return;
  }
  for (long part = std::min(r, max_part); part >= 2; --part) {
    if (r - part == 1) continue;  // a stranded singleton can never be a class
    cur.push_back(part);
    for_each_lambda(r - part, part, cur, fn);
    cur.pop_back();
  }
}

struct RowKey {
  long l;
  long k0;
  std::vector<long> sizes;
  bool operator<(const RowKey& o) const {
    return std::tie(l, k0, sizes) < std::tie(o.l, o.k0, o.sizes);
  }
};

std::map<RowKey, Integer> signature_counts(long m, TheoremMode mode) {
  std::map<RowKey, Integer> rows;
  std::vector<long> cur;
  for (long k0 = 0; k0 <= m; ++k0) {
    const long r = m - k0;
    const Integer choose_i0 = integer_binomial(m, k0);
    if (mode == TheoremMode::theorem1) {
      for_each_lambda(r, r, cur, [&](const std::vector<long>& lambda) {
        if (lambda.empty()) return;  // l >= 1
        RowKey key{static_cast<long>(lambda.size()), k0, lambda};
        rows[key] += choose_i0 * set_partition_count(r, lambda);
      });
    } else {
      for (long t = 1; t <= r; ++t) {
        const Integer choose_d = choose_i0 * integer_binomial(r, t);
        for_each_lambda(r - t, r - t, cur, [&](const std::vector<long>& lambda) {
          std::vector<long> sizes;
          sizes.reserve(lambda.size() + 1);
          sizes.push_back(t);
          sizes.insert(sizes.end(), lambda.begin(), lambda.end());
          RowKey key{static_cast<long>(lambda.size()) + 1, k0,
                     std::move(sizes)};
          rows[key] += choose_d * set_partition_count(r - t, lambda);
        });
      }
    }
  }
  return rows;
}

// Lean mask enumeration counting partitions per (l, k0) cell; the verdict
// path for m <= 14.
struct CellCounter {
  long m = 0;
  std::vector<std::uint64_t> cells;  // cells[l * (m+1) + k0]
  long cur_k0 = 0;

  void rec(std::uint32_t s, long l) {
    if (s == 0) {
      if (l >= 1) ++cells[static_cast<std::size_t>(l * (m + 1) + cur_k0)];
      return;
    }
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t rest = s ^ low;
    for (std::uint32_t t = rest; t; t = (t - 1) & rest) rec(rest ^ t, l + 1);
  }

  void run(TheoremMode mode) {
    const std::uint32_t full = (1u << m) - 1;
    cells.assign(static_cast<std::size_t>((m / 2 + 2) * (m + 1)), 0);
    for (std::uint32_t i0 = 0; i0 <= full; ++i0) {
      cur_k0 = std::popcount(i0);
      const std::uint32_t rest = full ^ i0;
      if (mode == TheoremMode::theorem1) {
        rec(rest, 0);
      } else {
        for (std::uint32_t d = rest; d; d = (d - 1) & rest) rec(rest ^ d, 1);
      }
    }
  }

  std::uint64_t at(long l, long k0) const {
    const auto idx = static_cast<std::size_t>(l * (m + 1) + k0);
    return idx < cells.size() ? cells[idx] : 0;
  }
};

long row_moduli(const SignatureRow& row, long m, TheoremMode mode) {
  long sum = 0;
  if (mode == TheoremMode::theorem1) {
    for (long size : row.class_sizes) sum += size - 2;
    if (sum != m - row.k0 - 2 * row.l)
      throw std::logic_error("certify: theorem1 moduli identity broken");
  } else {
    sum = row.class_sizes.front() - 1;
    for (std::size_t i = 1; i < row.class_sizes.size(); ++i)
      sum += row.class_sizes[i] - 2;
    if (sum != m - row.k0 - 2 * row.l + 1)
      throw std::logic_error("certify: theorem2 moduli identity broken");
  }
  return sum;
}

// A concrete canonical partition sitting in the (l, k0) cell.
Partition witness_partition(long m, TheoremMode mode, long l, long k0) {
  Partition p;
  p.m = m;
  p.mode = mode;
  for (long i = 1; i <= k0; ++i) p.i0.push_back(i);
  long next = k0 + 1;
  const long r = m - k0;
  auto take = [&](long count) {
    std::vector<long> cls;
    for (long i = 0; i < count; ++i) cls.push_back(next++);
    return cls;
  };
  if (mode == TheoremMode::theorem1) {
    for (long a = 1; a < l; ++a) p.classes.push_back(take(2));
    p.classes.push_back(take(r - 2 * (l - 1)));
  } else {
    p.distinguished = 1;
    p.classes.push_back(take(r - 2 * (l - 1)));
    for (long a = 1; a < l; ++a) p.classes.push_back(take(2));
  }
  p.validate();
  return p;
}

}  // namespace

CertificateReport certify(long n, TheoremMode mode,
                          std::optional<long> override_m, bool allow_analytic) {
  if (n < 2) throw std::invalid_argument("certify: need n >= 2");
  CertificateReport rep;
  rep.n = n;
  rep.mode = mode;
  rep.overridden = override_m.has_value();
  rep.m = override_m.value_or(degree_for(n, mode).m);
  if (rep.m < n + 1)
    throw std::invalid_argument(
        "certify: need m >= n+1 for the Grassmannian of plane sections");
  if (rep.m < 2) throw std::invalid_argument("certify: need m >= 2");
  rep.d = tfg_degree_bound(rep.m, mode);
  rep.analytic = rep.m > 14;
  if (rep.analytic && !allow_analytic)
    throw std::invalid_argument(
        "certify: m > 14 exceeds the enumeration cap; enable the analytic "
        "closed-form fallback to proceed");
  if (rep.m > 40)
    throw std::invalid_argument("certify: m > 40 not supported");

  const long m = rep.m;
  auto counted = signature_counts(m, mode);
  rep.total_partitions = 0;
  for (auto& [key, count] : counted) {
    SignatureRow row;
    row.l = key.l;
    row.k0 = key.k0;
    row.class_sizes = key.sizes;
    row.count = count;
    row.moduli = row_moduli(row, m, mode);
    row.s = bad_codim(n, m, row.l);
    row.slack = row.s - row.moduli - 1;
    rep.total_partitions += count;
    rep.rows.push_back(std::move(row));
  }

  if (!rep.analytic) {
    CellCounter counter;
    counter.m = m;
    counter.run(mode);

    std::uint64_t enumerated_total = 0;
    for (std::uint64_t c : counter.cells) enumerated_total += c;
    if (Integer(enumerated_total) != rep.total_partitions ||
        enumerated_total != partition_count(m, mode))
      throw std::logic_error(
          "certify: enumeration total disagrees with the closed-form counts");

    std::map<std::pair<long, long>, Integer> per_cell;
    for (const auto& row : rep.rows)
      per_cell[{row.l, row.k0}] += row.count;
    for (long l = 0; l <= m / 2 + 1; ++l)
      for (long k0 = 0; k0 <= m; ++k0) {
        const Integer expected(counter.at(l, k0));
        auto it = per_cell.find({l, k0});
        const Integer got = it == per_cell.end() ? Integer(0) : it->second;
        if (expected != got)
          throw std::logic_error(
              "certify: enumerated cell (" + std::to_string(l) + "," +
              std::to_string(k0) + ") disagrees with the multinomial count");
      }
  }

  std::optional<RowKey> worst_key;
  for (const auto& row : rep.rows) {
    if (row.l < 2) continue;
    if (!rep.min_slack || row.slack < *rep.min_slack) {
      rep.min_slack = row.slack;
      worst_key = RowKey{row.l, row.k0, row.class_sizes};
    }
  }
  rep.pass = !rep.min_slack || *rep.min_slack >= 0;

  if (worst_key) {
    rep.worst = witness_partition(m, mode, worst_key->l, worst_key->k0);
    const long check =
        bad_codim(n, m, rep.worst->l()) - moduli_dim(*rep.worst) - 1;
    if (check != *rep.min_slack)
      throw std::logic_error("certify: witness slack mismatch");
  }

  // With an l >= 2, k_0 = 0 stratum present, the verdict collapses to the
  // threshold on m.
  bool has_tight = false;
  for (const auto& row : rep.rows)
    if (row.l >= 2 && row.k0 == 0) has_tight = true;
  if (has_tight) {
    const bool closed = mode == TheoremMode::theorem1 ? m >= 2 * n - 1
                                                      : m >= 2 * n;
    if (rep.pass != closed)
      throw std::logic_error(
          "certify: verdict disagrees with the closed-form threshold");
  }

  return rep;
}

}  // namespace fwh
