#ifndef FWH_PARTITION_HPP
#define FWH_PARTITION_HPP

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace fwh {

enum class TheoremMode { theorem1, theorem2 };

inline const char* mode_name(TheoremMode mode) {
  return mode == TheoremMode::theorem1 ? "theorem1" : "theorem2";
}

/// A splitting of J_m = {1,...,m} into a vanishing set I_0 and equivalence
/// classes I_1,...,I_l (1-based indices throughout).
///
/// theorem1: every class has size >= 2. theorem2: classes[0] is the
/// distinguished class with size >= 1, all others have size >= 2.
/// Non-distinguished classes are sorted by least element, which makes the
/// representation canonical and enumeration duplicate-free.
struct Partition {
  long m = 0;
  std::vector<long> i0;
  std::vector<std::vector<long>> classes;
  TheoremMode mode = TheoremMode::theorem1;
  /// 1-based index of the distinguished class; 0 when mode is theorem1.
  long distinguished = 0;

  long l() const { return static_cast<long>(classes.size()); }
  long k0() const { return static_cast<long>(i0.size()); }

  void validate() const;
};

/// Free parameters of the diagonal-plane family attached to the partition:
/// sum(k_a - 2) = m - k_0 - 2l for theorem1, and (k_1 - 1) + the same sum
/// over the rest = m - k_0 - 2l + 1 for theorem2. Both the explicit sum and
/// the closed form are computed and must agree.
long moduli_dim(const Partition& p);

/// Visits every partition of J_m valid for the mode exactly once, in
/// canonical order. Caps at m <= 14 (the counts grow like Bell numbers).
void for_each_partition(long m, TheoremMode mode,
                        const std::function<void(const Partition&)>& visit);

/// Materialized variant of for_each_partition; refuses to build more than
/// 2 * 10^6 objects (stream instead at that scale).
std::vector<Partition> enumerate_partitions(long m, TheoremMode mode);

/// Number of partitions for_each_partition will visit, from the closed-form
/// Bell-number identities (theorem1: Bell(m) - 1; theorem2:
/// Bell(m+1) - Bell(m)).
unsigned long long partition_count(long m, TheoremMode mode);

}  // namespace fwh

#endif  // FWH_PARTITION_HPP
