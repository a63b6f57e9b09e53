#ifndef FWH_CERTIFICATES_HPP
#define FWH_CERTIFICATES_HPP

#include <optional>
#include <vector>

#include "fwh/fields.hpp"
#include "fwh/partition.hpp"

namespace fwh {

/// Codimension s = 2(m-n-l+1) in Gr_{m,m-n-1} of the locus of plane sections
/// V for which a fixed diagonal l-plane meets P(V) in positive dimension.
/// Signed: oversized l makes the formula negative and the certificate must
/// see that. Cross-checked against codim_gamma under the substitution
/// a = m-n-1, b = m-l, c = m-2 whenever those satisfy the Gamma constraints.
long bad_codim(long n, long m, long l);

struct DegreeChoice {
  long m = 0;
  long d = 0;
};

/// The theorem's canonical parameters: theorem1 takes m = 2n-1 and
/// d = (m-1)^2 = 4(n-1)^2; theorem2 takes m = 2n and d = m^2-m+1.
DegreeChoice degree_for(long n, TheoremMode mode);

/// Minimal d the mode's hypothesis demands for a given m: (m-1)^2 for
/// theorem1, m^2-m+1 for theorem2.
long tfg_degree_bound(long m, TheoremMode mode);

/// One aggregated report row: all partitions sharing (l, k_0, class sizes)
/// have identical moduli, s and slack, so they are reported once with their
/// exact multinomial count. For theorem2 the first class size is the
/// distinguished one.
struct SignatureRow {
  long l = 0;
  long k0 = 0;
  std::vector<long> class_sizes;
  Integer count;
  long moduli = 0;
  long s = 0;
  long slack = 0;
};

struct CertificateReport {
  long n = 0;
  long m = 0;
  long d = 0;
  TheoremMode mode = TheoremMode::theorem1;
  bool overridden = false;
  /// True when m exceeded the enumeration cap and the rows come from
  /// closed-form counting alone.
  bool analytic = false;
  std::vector<SignatureRow> rows;
  Integer total_partitions;
  /// Minimum slack over rows with l >= 2; empty when no such row exists
  /// (then the verdict passes vacuously).
  std::optional<long> min_slack;
  bool pass = false;
  /// A concrete partition achieving min_slack.
  std::optional<Partition> worst;
};

/// The genericity certificate: enumerates every partition of J_m, groups
/// them into signature rows, and passes iff slack = s - moduli - 1 >= 0 for
/// every partition with l >= 2 (l = 1 planes are points and are exempt).
///
/// m defaults to the mode's canonical 2n-1 or 2n; an override is allowed
/// here, and only here, so that failure cases are testable. For m > 14 the
/// enumeration cap applies; with allow_analytic the verdict is instead
/// computed from the closed-form row counts and flagged.
CertificateReport certify(long n, TheoremMode mode,
                          std::optional<long> override_m = std::nullopt,
                          bool allow_analytic = false);

}  // namespace fwh

#endif  // FWH_CERTIFICATES_HPP
