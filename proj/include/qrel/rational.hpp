#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

namespace qrel {

using BigInt = mpz_class;

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value type over GMP's mpq_class. Wrapping it keeps gmpxx expression
/// templates out of the public API (so `auto x = a + b;` is a Rational, not a
/// lazy expression) and gives one place to define formatting.
class Rational {
 public:
  Rational() = default;

  template <std::signed_integral I>
  Rational(I v) : q_(static_cast<long>(v)) {}  // NOLINT: implicit by design of numeric literals

  template <std::unsigned_integral U>
  Rational(U v) : q_(static_cast<unsigned long>(v)) {}  // NOLINT

  Rational(const BigInt& v) : q_(v) {}  // NOLINT

  /// Throws std::domain_error when den == 0.
  Rational(const BigInt& num, const BigInt& den);

  /// Parses "p", "-p" or "p/q".
  static Rational parse(std::string_view text);

  BigInt num() const { return q_.get_num(); }
  BigInt den() const { return q_.get_den(); }

  int sign() const { return sgn(q_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return q_.get_den() == 1; }
  double to_double() const { return q_.get_d(); }

  /// "p" for integers, "p/q" otherwise.
  std::string str() const;

  Rational abs() const;
  Rational inverse() const;
  /// Integer power; negative exponents require a nonzero base.
  Rational pow(long e) const;

  Rational& operator+=(const Rational& o) { q_ += o.q_; return *this; }
  Rational& operator-=(const Rational& o) { q_ -= o.q_; return *this; }
  Rational& operator*=(const Rational& o) { q_ *= o.q_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { return a += b; }
  friend Rational operator-(Rational a, const Rational& b) { return a -= b; }
  friend Rational operator*(Rational a, const Rational& b) { return a *= b; }
  friend Rational operator/(Rational a, const Rational& b) { return a /= b; }
  friend Rational operator-(const Rational& a) {
    Rational r;
    r.q_ = -a.q_;
    return r;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.q_ == b.q_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.q_, b.q_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& gmp() const { return q_; }

 private:
  mpq_class q_;
};

inline bool is_zero(const Rational& x) { return x.is_zero(); }

std::ostream& operator<<(std::ostream& os, const Rational& x);

}  // namespace qrel
