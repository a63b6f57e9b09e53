#include "fwh/partition.hpp"

#include <algorithm>
#include <cstdint>

namespace fwh {

void Partition::validate() const {
  if (m < 1 || m > 32) throw std::invalid_argument("Partition: need 1 <= m <= 32");
  if (classes.empty())
    throw std::invalid_argument("Partition: need l >= 1 (some index survives)");
  if (mode == TheoremMode::theorem1 && distinguished != 0)
    throw std::invalid_argument("Partition: theorem1 has no distinguished class");
  if (mode == TheoremMode::theorem2 && distinguished != 1)
    throw std::invalid_argument(
        "Partition: theorem2 distinguished class must be class 1");

  std::uint64_t seen = 0;
  auto absorb = [&](const std::vector<long>& part, const char* what) {
    for (std::size_t i = 0; i < part.size(); ++i) {
      const long x = part[i];
      if (x < 1 || x > m)
        throw std::invalid_argument(std::string("Partition: ") + what +
                                    " index out of J_m");
      if (i > 0 && part[i - 1] >= x)
        throw std::invalid_argument(std::string("Partition: ") + what +
                                    " not sorted strictly");
      const std::uint64_t bit = 1ull << (x - 1);
      if (seen & bit)
        throw std::invalid_argument("Partition: index " + std::to_string(x) +
                                    " appears twice");
      seen |= bit;
    }
  };
  absorb(i0, "i0");
  for (const auto& cls : classes) absorb(cls, "class");
  if (seen != (m == 64 ? ~0ull : (1ull << m) - 1))
    throw std::invalid_argument("Partition: union is not all of J_m");

  for (std::size_t a = 0; a < classes.size(); ++a) {
    const bool dist = mode == TheoremMode::theorem2 && a == 0;
    const std::size_t min_size = dist ? 1 : 2;
    if (classes[a].size() < min_size)
      throw std::invalid_argument("Partition: class " + std::to_string(a + 1) +
                                  " smaller than " + std::to_string(min_size));
  }
  const std::size_t first_plain = mode == TheoremMode::theorem2 ? 1 : 0;
  for (std::size_t a = first_plain + 1; a < classes.size(); ++a)
    if (classes[a - 1].front() >= classes[a].front())
      throw std::invalid_argument(
          "Partition: classes not in canonical least-element order");
}

long moduli_dim(const Partition& p) {
  p.validate();
  const long l = p.l();
  long sum = 0;
  long closed = 0;
  if (p.mode == TheoremMode::theorem1) {
    for (const auto& cls : p.classes) sum += static_cast<long>(cls.size()) - 2;
    closed = p.m - p.k0() - 2 * l;
  } else {
    sum = static_cast<long>(p.classes.front().size()) - 1;
    for (std::size_t a = 1; a < p.classes.size(); ++a)
      sum += static_cast<long>(p.classes[a].size()) - 2;
    closed = p.m - p.k0() - 2 * l + 1;
  }
  if (sum != closed)
    throw std::logic_error("moduli_dim: explicit sum " + std::to_string(sum) +
                           " disagrees with closed form " +
                           std::to_string(closed));
  return sum;
}

namespace {

std::vector<long> bits_of(std::uint32_t mask) {
  std::vector<long> out;
  for (long i = 0; mask; ++i, mask >>= 1)
    if (mask & 1u) out.push_back(i + 1);
  return out;
}

struct Enumerator {
  long m;
  TheoremMode mode;
  const std::function<void(const Partition&)>* visit;
  std::uint32_t i0mask = 0;
  std::uint32_t dmask = 0;
  std::vector<std::uint32_t> blocks;

  void leaf() {
    Partition p;
    p.m = m;
    p.mode = mode;
    p.i0 = bits_of(i0mask);
    if (mode == TheoremMode::theorem2) {
      p.distinguished = 1;
      p.classes.push_back(bits_of(dmask));
    }
    for (std::uint32_t b : blocks) p.classes.push_back(bits_of(b));
    if (p.classes.empty()) return;
    (*visit)(p);
  }

  // Partition `s` into blocks of size >= 2: the lowest remaining element
  // leads its block, so blocks emerge ordered by least element.
  void rec_blocks(std::uint32_t s) {
    if (s == 0) {
      leaf();
      return;
    }
    const std::uint32_t low = s & (~s + 1);
    const std::uint32_t rest = s ^ low;
    for (std::uint32_t t = rest; t; t = (t - 1) & rest) {
      blocks.push_back(low | t);
      rec_blocks(rest ^ t);
      blocks.pop_back();
    }
  }

  void run() {
    const std::uint32_t full = (m == 32) ? ~0u : (1u << m) - 1;
    for (std::uint32_t i0 = 0; i0 <= full; ++i0) {
      if ((i0 | full) != full) continue;
      i0mask = i0;
      const std::uint32_t rest = full ^ i0;
      if (mode == TheoremMode::theorem1) {
        rec_blocks(rest);
      } else {
        for (std::uint32_t d = rest; d; d = (d - 1) & rest) {
          dmask = d;
          rec_blocks(rest ^ d);
        }
      }
    }
  }
};

}  // namespace

void for_each_partition(long m, TheoremMode mode,
                        const std::function<void(const Partition&)>& visit) {
  if (m < 2) throw std::invalid_argument("for_each_partition: need m >= 2");
  if (m > 14)
    throw std::invalid_argument(
        "for_each_partition: m > 14 exceeds the enumeration cap");
  Enumerator e;
  e.m = m;
  e.mode = mode;
  e.visit = &visit;
  e.run();
}

std::vector<Partition> enumerate_partitions(long m, TheoremMode mode) {
  if (m >= 2 && m <= 14 && partition_count(m, mode) > 2'000'000)
    throw std::invalid_argument(
        "enumerate_partitions: too many partitions to materialize; use "
        "for_each_partition");
  std::vector<Partition> out;
  for_each_partition(m, mode, [&](const Partition& p) { out.push_back(p); });
  return out;
}

unsigned long long partition_count(long m, TheoremMode mode) {
  if (m < 0 || m > 24)
    throw std::invalid_argument("partition_count: need 0 <= m <= 24");
  // Bell triangle; Bell(25) still fits in 64 bits.
  const std::size_t top = static_cast<std::size_t>(m) + 1;
  std::vector<unsigned long long> bell(top + 1, 0);  // bell[i] = Bell(i)
  std::vector<unsigned long long> row{1};
  bell[0] = 1;
  for (std::size_t i = 1; i <= top; ++i) {
    std::vector<unsigned long long> next(i + 1);
    next[0] = row.back();
    for (std::size_t j = 0; j < i; ++j) next[j + 1] = next[j] + row[j];
    bell[i] = next[0];
    row = std::move(next);
  }
  if (mode == TheoremMode::theorem1)
    return bell[static_cast<std::size_t>(m)] - 1;
  return bell[static_cast<std::size_t>(m) + 1] -
         bell[static_cast<std::size_t>(m)];
}

}  // namespace fwh
