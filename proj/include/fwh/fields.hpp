#ifndef FWH_FIELDS_HPP
#define FWH_FIELDS_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <cmath>
#include <complex>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "fwh/rng.hpp"

namespace fwh {

using Integer = boost::multiprecision::cpp_int;

/// Arbitrary-precision rational. cpp_rational keeps values in lowest terms
/// with a positive denominator, which is exactly the canonical form the
/// linear algebra relies on.
using Rational = boost::multiprecision::cpp_rational;

/// Thrown when scalars from different fields (e.g. F_2 and F_3) meet in one
/// operation or one matrix.
class field_mismatch_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Deterministic Miller-Rabin. The witness set below is proven sufficient for
/// every n < 3.3e24, far beyond the 2^32 modulus bound enforced elsewhere.
inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    if (n % p == 0) return n == p;
  }
  const std::uint64_t d0 = n - 1;
  int s = 0;
  std::uint64_t d = d0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  auto mulmod = [n](std::uint64_t a, std::uint64_t b) {
    return static_cast<std::uint64_t>(
        (static_cast<unsigned __int128>(a) * b) % n);
  };
  auto powmod = [&](std::uint64_t a, std::uint64_t e) {
    std::uint64_t r = 1;
    a %= n;
    while (e) {
      if (e & 1) r = mulmod(r, a);
      a = mulmod(a, a);
      e >>= 1;
    }
    return r;
  };
  for (std::uint64_t a : {2ull, 3ull, 5ull, 7ull, 11ull, 13ull, 17ull, 19ull,
                          23ull, 29ull, 31ull, 37ull}) {
    std::uint64_t x = powmod(a, d);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int i = 1; i < s; ++i) {
      x = mulmod(x, x);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

/// Element of a prime field F_p. The modulus travels with the value, so mixing
/// moduli is detected at the first arithmetic operation.
class Fp {
 public:
  Fp(std::uint64_t value, std::uint64_t p) : v_(value % p), p_(p) {}

  std::uint64_t value() const { return v_; }
  std::uint64_t modulus() const { return p_; }

  friend Fp operator+(const Fp& a, const Fp& b) {
    a.require_same(b);
    std::uint64_t s = a.v_ + b.v_;
    if (s >= a.p_) s -= a.p_;
    return Fp(s, a.p_, unchecked{});
  }
  friend Fp operator-(const Fp& a, const Fp& b) {
    a.require_same(b);
    return Fp(a.v_ >= b.v_ ? a.v_ - b.v_ : a.v_ + a.p_ - b.v_, a.p_,
              unchecked{});
  }
  friend Fp operator*(const Fp& a, const Fp& b) {
    a.require_same(b);
    // p < 2^32 is enforced at field construction, so the product fits u64.
    return Fp((a.v_ * b.v_) % a.p_, a.p_, unchecked{});
  }
  friend Fp operator/(const Fp& a, const Fp& b) { return a * b.inverse(); }
  Fp operator-() const { return Fp(v_ == 0 ? 0 : p_ - v_, p_, unchecked{}); }

  Fp& operator+=(const Fp& o) { return *this = *this + o; }
  Fp& operator-=(const Fp& o) { return *this = *this - o; }
  Fp& operator*=(const Fp& o) { return *this = *this * o; }
  Fp& operator/=(const Fp& o) { return *this = *this / o; }

  friend bool operator==(const Fp& a, const Fp& b) {
    a.require_same(b);
    return a.v_ == b.v_;
  }
  friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

  Fp inverse() const {
    if (v_ == 0) throw std::domain_error("Fp: inverse of zero");
    // extended Euclid on (v, p)
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_);
    std::int64_t new_r = static_cast<std::int64_t>(v_);
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return Fp(static_cast<std::uint64_t>(t), p_, unchecked{});
  }

  Fp pow(std::uint64_t e) const {
    Fp base = *this;
    Fp acc(1 % p_, p_, unchecked{});
    while (e) {
      if (e & 1) acc *= base;
      base *= base;
      e >>= 1;
    }
    return acc;
  }

 private:
  struct unchecked {};
  Fp(std::uint64_t v, std::uint64_t p, unchecked) : v_(v), p_(p) {}

  void require_same(const Fp& o) const {
    if (p_ != o.p_)
      throw field_mismatch_error("Fp: elements of F_" + std::to_string(p_) +
                                 " and F_" + std::to_string(o.p_) + " mixed");
  }

  std::uint64_t v_;
  std::uint64_t p_;
};

inline std::ostream& operator<<(std::ostream& os, const Fp& x) {
  return os << x.value();
}

/// Complex double with an attached absolute tolerance. Comparisons and zero
/// tests are tolerance-aware; elimination additionally rescales the tolerance
/// by the largest matrix entry.
class Cx {
 public:
  Cx(std::complex<double> v, double tol) : v_(v), tol_(tol) {}
  Cx(double re, double im, double tol) : v_(re, im), tol_(tol) {}

  std::complex<double> value() const { return v_; }
  double tol() const { return tol_; }
  double abs() const { return std::abs(v_); }

  friend Cx operator+(const Cx& a, const Cx& b) {
    return Cx(a.v_ + b.v_, std::max(a.tol_, b.tol_));
  }
  friend Cx operator-(const Cx& a, const Cx& b) {
    return Cx(a.v_ - b.v_, std::max(a.tol_, b.tol_));
  }
  friend Cx operator*(const Cx& a, const Cx& b) {
    return Cx(a.v_ * b.v_, std::max(a.tol_, b.tol_));
  }
  friend Cx operator/(const Cx& a, const Cx& b) {
    return Cx(a.v_ / b.v_, std::max(a.tol_, b.tol_));
  }
  Cx operator-() const { return Cx(-v_, tol_); }

  Cx& operator+=(const Cx& o) { return *this = *this + o; }
  Cx& operator-=(const Cx& o) { return *this = *this - o; }
  Cx& operator*=(const Cx& o) { return *this = *this * o; }
  Cx& operator/=(const Cx& o) { return *this = *this / o; }

  friend bool operator==(const Cx& a, const Cx& b) {
    return std::abs(a.v_ - b.v_) <= std::max(a.tol_, b.tol_);
  }
  friend bool operator!=(const Cx& a, const Cx& b) { return !(a == b); }

 private:
  std::complex<double> v_;
  double tol_;
};

inline std::ostream& operator<<(std::ostream& os, const Cx& x) {
  return os << x.value().real() << (x.value().imag() < 0 ? "" : "+")
            << x.value().imag() << "i";
}

// ---------------------------------------------------------------------------
// Field descriptors. A descriptor carries whatever runtime data the field
// needs (the modulus for F_p, the tolerance for complex) and acts as the
// element factory, so that generic code can make zeros and ones of the right
// field. Matrices and subspaces store one descriptor and verify that every
// entry belongs to it.
// ---------------------------------------------------------------------------

struct QField {
  using Scalar = Rational;
  static constexpr bool exact = true;

  Rational zero() const { return Rational(0); }
  Rational one() const { return Rational(1); }
  Rational from_int(std::int64_t v) const { return Rational(v); }
  bool matches(const Rational&) const { return true; }
  bool is_zero(const Rational& x) const { return x == 0; }
  std::string name() const { return "Q"; }
  friend bool operator==(const QField&, const QField&) { return true; }
};

struct FpField {
  using Scalar = Fp;
  static constexpr bool exact = true;

  /// Constructing the field checks primality once; elements then trust it.
  explicit FpField(std::uint64_t prime) : p(prime) {
    if (p >= (1ull << 32))
      throw std::invalid_argument("FpField: modulus must be < 2^32");
    if (!is_prime(p))
      throw std::invalid_argument("FpField: " + std::to_string(p) +
                                  " is not prime");
  }

  Fp zero() const { return Fp(0, p); }
  Fp one() const { return Fp(1 % p, p); }
  Fp from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p);
    if (r < 0) r += static_cast<std::int64_t>(p);
    return Fp(static_cast<std::uint64_t>(r), p);
  }
  Fp element(std::uint64_t v) const { return Fp(v, p); }
  bool matches(const Fp& x) const { return x.modulus() == p; }
  bool is_zero(const Fp& x) const { return x.value() == 0; }
  std::string name() const { return "F_" + std::to_string(p); }

  Fp random(SplitMix64& rng) const { return Fp(rng.below(p), p); }
  Fp random_nonzero(SplitMix64& rng) const { return Fp(1 + rng.below(p - 1), p); }

  friend bool operator==(const FpField& a, const FpField& b) {
    return a.p == b.p;
  }

  std::uint64_t p;
};

struct CxField {
  using Scalar = Cx;
  static constexpr bool exact = false;

  explicit CxField(double tolerance = 1e-9) : tol(tolerance) {}

  Cx zero() const { return Cx(0.0, 0.0, tol); }
  Cx one() const { return Cx(1.0, 0.0, tol); }
  Cx from_int(std::int64_t v) const {
    return Cx(static_cast<double>(v), 0.0, tol);
  }
  Cx element(std::complex<double> v) const { return Cx(v, tol); }
  bool matches(const Cx&) const { return true; }
  bool is_zero(const Cx& x) const { return x.abs() <= tol; }
  std::string name() const { return "C~"; }
  friend bool operator==(const CxField& a, const CxField& b) {
    return a.tol == b.tol;
  }

  double tol;
};

template <class K>
concept FieldDescriptor = requires(const K k, const typename K::Scalar s) {
  { k.zero() } -> std::convertible_to<typename K::Scalar>;
  { k.one() } -> std::convertible_to<typename K::Scalar>;
  { k.matches(s) } -> std::convertible_to<bool>;
  { k.is_zero(s) } -> std::convertible_to<bool>;
  { K::exact } -> std::convertible_to<bool>;
};

/// x^e by repeated squaring, for any field scalar.
template <FieldDescriptor K>
typename K::Scalar power(const K& field, typename K::Scalar x,
                         std::uint64_t e) {
  typename K::Scalar acc = field.one();
  while (e) {
    if (e & 1) acc *= x;
    x *= x;
    e >>= 1;
  }
  return acc;
}

/// Exact binomial coefficient C(n, k).
inline Integer integer_binomial(long n, long k) {
  if (k < 0 || k > n) return 0;
  Integer r = 1;
  for (long i = 0; i < k; ++i) {
    r *= n - i;
    r /= i + 1;  // exact: r is C(n, i+1) times earlier factors
  }
  return r;
}

/// Moduli the CLI and oracle suites are routinely run with. Any prime below
/// 2^32 is accepted by FpField; these are the reproducibility defaults.
inline constexpr std::uint64_t kCuratedPrimes[] = {2,  3,    5,    7,
                                                   11, 101, 1009, 10007};

}  // namespace fwh

#endif  // FWH_FIELDS_HPP
