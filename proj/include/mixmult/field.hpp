#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

#include "mixmult/errors.hpp"

namespace mixmult {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

inline constexpr std::uint32_t kDefaultPrime = 32003;

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Generalized binomial coefficient C(top, k) for any integer top and k >= 0.
inline Integer binomial(const Integer& top, long k) {
  if (k < 0) return 0;
  Integer num = 1;
  Integer den = 1;
  for (long i = 0; i < k; ++i) {
    num *= top - i;
    den *= i + 1;
  }
  return num / den;
}

/// Z/pZ with p < 2^31, elements stored as canonical representatives in [0, p).
class PrimeField {
 public:
  using Element = std::uint32_t;

  explicit PrimeField(std::uint32_t p = kDefaultPrime) : p_(p) {
    if (p >= (1u << 31) || !is_prime(p)) throw UsageError("field characteristic " + std::to_string(p) + " is not a prime below 2^31");
  }

  std::uint32_t characteristic() const { return p_; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(Element a) const { return a == 0; }
  bool is_one(Element a) const { return a == 1; }

  Element add(Element a, Element b) const {
    std::uint32_t s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  Element sub(Element a, Element b) const { return a >= b ? a - b : a + p_ - b; }
  Element neg(Element a) const { return a == 0 ? 0 : p_ - a; }
  Element mul(Element a, Element b) const {
    return static_cast<Element>((static_cast<std::uint64_t>(a) * b) % p_);
  }
  Element inv(Element a) const {
    if (a == 0) throw MathError("division by zero in prime field");
    std::int64_t t = 0, new_t = 1, r = p_, new_r = a;
    while (new_r != 0) {
      std::int64_t q = r / new_r;
      std::int64_t tmp = t - q * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - q * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += p_;
    return static_cast<Element>(t);
  }
  Element div(Element a, Element b) const { return mul(a, inv(b)); }

  Element from_integer(const Integer& n) const {
    Integer r = n % p_;
    if (r < 0) r += p_;
    return static_cast<Element>(r);
  }
  Element from_rational(const Rational& q) const {
    Element den = from_integer(boost::multiprecision::denominator(q));
    if (den == 0) throw UsageError("rational coefficient has denominator divisible by the characteristic");
    return div(from_integer(boost::multiprecision::numerator(q)), den);
  }
  Element from_uint(std::uint64_t n) const { return static_cast<Element>(n % p_); }

  /// Symmetric representative, so that -1 prints as -1.
  Integer to_integer(Element a) const {
    return a > p_ / 2 ? Integer(static_cast<std::int64_t>(a) - static_cast<std::int64_t>(p_)) : Integer(a);
  }
  std::string to_string(Element a) const { return to_integer(a).str(); }

  bool operator==(const PrimeField& other) const { return p_ == other.p_; }

 private:
  std::uint32_t p_;
};

/// The rationals, exact.
class RationalField {
 public:
  using Element = Rational;

  std::uint32_t characteristic() const { return 0; }

  Element zero() const { return 0; }
  Element one() const { return 1; }
  bool is_zero(const Element& a) const { return a == 0; }
  bool is_one(const Element& a) const { return a == 1; }

  Element add(const Element& a, const Element& b) const { return a + b; }
  Element sub(const Element& a, const Element& b) const { return a - b; }
  Element neg(const Element& a) const { return -a; }
  Element mul(const Element& a, const Element& b) const { return a * b; }
  Element inv(const Element& a) const {
    if (a == 0) throw MathError("division by zero in the rationals");
    return 1 / a;
  }
  Element div(const Element& a, const Element& b) const { return mul(a, inv(b)); }

  Element from_integer(const Integer& n) const { return Rational(n); }
  Element from_rational(const Rational& q) const { return q; }
  Element from_uint(std::uint64_t n) const { return Rational(n); }

  std::string to_string(const Element& a) const { return a.str(); }

  bool operator==(const RationalField&) const { return true; }
};

}  // namespace mixmult
