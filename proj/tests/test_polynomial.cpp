#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <vector>

#include "fwh/polynomial.hpp"
#include "fwh/rng.hpp"

using namespace fwh;

namespace {

using QPoly = SparsePolynomial<QField>;

QPoly linear(QField f, std::vector<long> coeffs) {
  QPoly p(f, static_cast<long>(coeffs.size()), 1);
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    std::vector<std::uint32_t> e(coeffs.size(), 0);
    e[i] = 1;
    p.add_term(e, Rational(coeffs[i]));
  }
  return p;
}

Integer power_int(long base, long e) {
  Integer r = 1;
  for (long i = 0; i < e; ++i) r *= base;
  return r;
}

// Independent expansion of (c0 z0 + c1 z1 + c2 z2)^d by direct multinomial
// coefficients; shares no code with SparsePolynomial::pow.
QPoly multinomial_cube_power(QField f, long c0, long c1, long c2, long d) {
  QPoly out(f, 3, d);
  for (long i = 0; i <= d; ++i)
    for (long j = 0; i + j <= d; ++j) {
      const long k = d - i - j;
      const Integer coef = integer_binomial(d, i) *
                           integer_binomial(d - i, j) *
                           power_int(c0, i) * power_int(c1, j) *
                           power_int(c2, k);
      out.add_term({static_cast<std::uint32_t>(i),
                    static_cast<std::uint32_t>(j),
                    static_cast<std::uint32_t>(k)},
                   Rational(coef));
    }
  return out;
}

}  // namespace

TEST_CASE("terms merge, cancel, and stay homogeneous") {
  QField f;
  QPoly p(f, 2, 2);
  p.add_term({2, 0}, Rational(1));
  p.add_term({0, 2}, Rational(1));
  CHECK(p.term_count() == 2);
  p.add_term({2, 0}, Rational(-1));  // cancels
  CHECK(p.term_count() == 1);
  p.add_term({0, 2}, Rational(0));  // dropped
  CHECK(p.term_count() == 1);
  CHECK_THROWS_AS(p.add_term({1, 0}, Rational(1)), std::invalid_argument);
  CHECK_THROWS_AS(p.add_term({1, 1, 0}, Rational(1)), std::invalid_argument);
}

TEST_CASE("(z0+z1)^2 expands to the binomial coefficients") {
  QField f;
  const auto sq = linear(f, {1, 1}).pow(2);
  CHECK(sq.degree() == 2);
  CHECK(sq.term_count() == 3);
  CHECK(sq.terms().at({2, 0}) == Rational(1));
  CHECK(sq.terms().at({1, 1}) == Rational(2));
  CHECK(sq.terms().at({0, 2}) == Rational(1));
}

TEST_CASE("difference of squares via multiplication") {
  QField f;
  const auto prod = linear(f, {1, 1}) * linear(f, {1, -1});
  CHECK(prod.degree() == 2);
  CHECK(prod.term_count() == 2);
  CHECK(prod.terms().at({2, 0}) == Rational(1));
  CHECK(prod.terms().at({0, 2}) == Rational(-1));
}

TEST_CASE("pow matches an independent multinomial expansion") {
  QField f;
  SplitMix64 rng(11);
  for (int t = 0; t < 12; ++t) {
    const long c0 = rng.range(-4, 4), c1 = rng.range(-4, 4),
               c2 = rng.range(-4, 4);
    const long d = 1 + rng.below(5);
    const auto via_pow = linear(f, {c0, c1, c2}).pow(d);
    const auto direct = multinomial_cube_power(f, c0, c1, c2, d);
    CHECK(via_pow == direct);
  }
}

TEST_CASE("pow(0) is the constant one") {
  QField f;
  const auto one = linear(f, {3, -2}).pow(0);
  CHECK(one.degree() == 0);
  CHECK(one.term_count() == 1);
  CHECK(one.terms().at({0, 0}) == Rational(1));
}

TEST_CASE("evaluation agrees with expansion at seeded points") {
  QField f;
  SplitMix64 rng(5);
  const auto p = linear(f, {2, -3, 1}).pow(4);
  for (int t = 0; t < 50; ++t) {
    const Rational x(rng.range(-9, 9)), y(rng.range(-9, 9)),
        z(rng.range(-9, 9));
    const Rational base = 2 * x - 3 * y + z;
    CHECK(p.evaluate({x, y, z}) == base * base * base * base);
  }
  FpField f7{7};
  SparsePolynomial<FpField> q(f7, 2, 3);
  q.add_term({3, 0}, f7.from_int(2));
  q.add_term({1, 2}, f7.from_int(6));
  SplitMix64 rng2(6);
  for (int t = 0; t < 50; ++t) {
    const Fp x = f7.random(rng2), y = f7.random(rng2);
    CHECK(q.evaluate({x, y}) ==
          f7.from_int(2) * x * x * x + f7.from_int(6) * x * y * y);
  }
}

TEST_CASE("adding polynomials of different shape is rejected") {
  QField f;
  QPoly a(f, 2, 2), b(f, 2, 3), c(f, 3, 2);
  CHECK_THROWS_AS(a + b, std::invalid_argument);
  CHECK_THROWS_AS(a + c, std::invalid_argument);
  // multiplication is the one place degrees may differ: they add
  QPoly d(f, 2, 3);
  d.add_term({3, 0}, Rational(1));
  QPoly e(f, 2, 2);
  e.add_term({0, 2}, Rational(5));
  const auto prod = d * e;
  CHECK(prod.degree() == 5);
  CHECK(prod.terms().at({3, 2}) == Rational(5));
}

TEST_CASE("terms iterate in lexicographic exponent order") {
  QField f;
  QPoly p(f, 2, 3);
  p.add_term({0, 3}, Rational(1));
  p.add_term({3, 0}, Rational(1));
  p.add_term({1, 2}, Rational(1));
  std::vector<std::vector<std::uint32_t>> order;
  for (const auto& [e, cf] : p.terms()) order.emplace_back(e.begin(), e.end());
  CHECK(order == std::vector<std::vector<std::uint32_t>>{
                     {0, 3}, {1, 2}, {3, 0}});
}
