#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdint>

#include "fwh/fields.hpp"
#include "fwh/rng.hpp"

using namespace fwh;

namespace {

bool trial_division_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

}  // namespace

TEST_CASE("is_prime agrees with trial division below 5000") {
  for (std::uint64_t n = 0; n < 5000; ++n)
    CHECK(is_prime(n) == trial_division_prime(n));
  CHECK(is_prime(10007));
  CHECK(is_prime(12289));
  CHECK(is_prime((1ull << 31) - 1));  // Mersenne
  CHECK_FALSE(is_prime(3215031751ull));  // strong pseudoprime to 2,3,5,7
}

TEST_CASE("FpField construction validates the modulus") {
  CHECK_THROWS_AS(FpField{4}, std::invalid_argument);
  CHECK_THROWS_AS(FpField{1}, std::invalid_argument);
  CHECK_THROWS_AS(FpField{1ull << 33}, std::invalid_argument);
  CHECK(FpField{2}.p == 2);
}

TEST_CASE("Fp arithmetic satisfies the field axioms on seeded triples") {
  for (std::uint64_t p : kCuratedPrimes) {
    FpField f{p};
    SplitMix64 rng(kDefaultSeed ^ p);
    for (int t = 0; t < 1000; ++t) {
      const Fp a = f.random(rng), b = f.random(rng), c = f.random(rng);
      CHECK((a + b) + c == a + (b + c));
      CHECK(a + b == b + a);
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * b == b * a);
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + f.zero() == a);
      CHECK(a * f.one() == a);
      CHECK(a - a == f.zero());
      CHECK(a + (-a) == f.zero());
      if (!f.is_zero(b)) CHECK((a / b) * b == a);
    }
  }
}

TEST_CASE("Fp inverse covers every nonzero residue") {
  for (std::uint64_t p : {5ull, 7ull, 101ull, 1009ull}) {
    FpField f{p};
    for (std::uint64_t v = 1; v < p; ++v)
      CHECK(f.element(v) * f.element(v).inverse() == f.one());
  }
  CHECK_THROWS_AS(FpField{7}.zero().inverse(), std::domain_error);
}

TEST_CASE("mixing moduli is rejected at the first operation") {
  const Fp a = FpField{2}.one(), b = FpField{3}.one();
  CHECK_THROWS_AS(a + b, field_mismatch_error);
  CHECK_THROWS_AS(a * b, field_mismatch_error);
  CHECK_THROWS_AS(a == b, field_mismatch_error);
}

TEST_CASE("rational arithmetic from seeded integer pairs") {
  QField f;
  SplitMix64 rng(kDefaultSeed);
  for (int t = 0; t < 1000; ++t) {
    const Rational a(rng.range(-50, 50), 1 + rng.below(20));
    const Rational b(rng.range(-50, 50), 1 + rng.below(20));
    const Rational c(rng.range(-50, 50), 1 + rng.below(20));
    CHECK((a + b) * c == a * c + b * c);
    CHECK(a - a == f.zero());
    if (b != 0) CHECK((a / b) * b == a);
  }
  CHECK(Rational(2, 4) == Rational(1, 2));  // canonical lowest terms
}

TEST_CASE("complex scalars compare within their tolerance") {
  CxField f{1e-9};
  CHECK(f.element({1.0, 0.0}) == f.element({1.0 + 1e-12, 0.0}));
  CHECK(f.element({1.0, 0.0}) != f.element({1.0 + 1e-6, 0.0}));
  CHECK(f.is_zero(f.element({1e-10, -1e-10})));
  CHECK_FALSE(f.is_zero(f.element({1e-3, 0.0})));
}

TEST_CASE("power matches repeated multiplication") {
  FpField f{1009};
  SplitMix64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const Fp x = f.random(rng);
    const std::uint64_t e = rng.below(30);
    Fp naive = f.one();
    for (std::uint64_t i = 0; i < e; ++i) naive *= x;
    CHECK(power(f, x, e) == naive);
    CHECK(x.pow(e) == naive);
  }
  QField q;
  CHECK(power(q, Rational(2, 3), 4) == Rational(16, 81));
}

TEST_CASE("integer_binomial matches the Pascal recurrence") {
  for (long n = 1; n <= 40; ++n)
    for (long k = 0; k <= n; ++k)
      CHECK(integer_binomial(n, k) ==
            integer_binomial(n - 1, k - 1) + integer_binomial(n - 1, k));
  CHECK(integer_binomial(52, 26) == Integer("495918532948104"));
  CHECK(integer_binomial(4, 7) == 0);
}

TEST_CASE("seeded rng streams are deterministic and distinct") {
  SplitMix64 a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next() == b.next());
  auto s0 = SplitMix64::stream(42, 0), s1 = SplitMix64::stream(42, 1);
  CHECK(s0.next() != s1.next());
  // below() stays in range and hits both endpoints eventually
  SplitMix64 r(3);
  bool lo = false, hi = false;
  for (int i = 0; i < 2000; ++i) {
    const auto v = r.below(7);
    CHECK(v < 7);
    lo |= v == 0;
    hi |= v == 6;
  }
  CHECK(lo);
  CHECK(hi);
  for (int i = 0; i < 200; ++i) {
    const auto v = r.range(-3, 3);
    CHECK(v >= -3);
    CHECK(v <= 3);
  }
}
