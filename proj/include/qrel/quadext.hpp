#pragma once

#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>

#include "qrel/rational.hpp"

namespace qrel {

/// Element a + b*sqrt(D) of a real quadratic field, D squarefree.
///
/// Canonical form: D == 1 exactly when b == 0, so rationals carry no field
/// tag and mix freely with any D. Mixing two different D != 1 throws.
class QuadExt {
 public:
  QuadExt() = default;
  QuadExt(const Rational& a) : a_(a) {}  // NOLINT
  template <std::integral I>
  QuadExt(I v) : a_(v) {}  // NOLINT
  /// Throws std::domain_error unless D is a positive squarefree integer.
  QuadExt(const Rational& a, const Rational& b, std::int64_t D);

  /// sqrt(n) for n >= 0, written as root*sqrt(core).
  static QuadExt sqrt_of(std::int64_t n);

  const Rational& a() const { return a_; }
  const Rational& b() const { return b_; }
  std::int64_t D() const { return d_; }

  bool is_zero() const { return a_.is_zero() && b_.is_zero(); }
  bool is_rational() const { return b_.is_zero(); }

  QuadExt conjugate() const;
  Rational norm() const { return a_ * a_ - Rational(d_) * b_ * b_; }
  /// Sign of the real embedding, computed exactly.
  int sign() const;
  double to_double() const;
  QuadExt inverse() const;
  QuadExt pow(long e) const;

  /// "a" when rational, otherwise "a+b*sqrt(D)".
  std::string str() const;

  QuadExt& operator+=(const QuadExt& o);
  QuadExt& operator-=(const QuadExt& o);
  QuadExt& operator*=(const QuadExt& o);
  QuadExt& operator/=(const QuadExt& o);

  friend QuadExt operator+(QuadExt x, const QuadExt& y) { return x += y; }
  friend QuadExt operator-(QuadExt x, const QuadExt& y) { return x -= y; }
  friend QuadExt operator*(QuadExt x, const QuadExt& y) { return x *= y; }
  friend QuadExt operator/(QuadExt x, const QuadExt& y) { return x /= y; }
  friend QuadExt operator-(const QuadExt& x);

  friend bool operator==(const QuadExt& x, const QuadExt& y) {
    return x.d_ == y.d_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

 private:
  std::int64_t join(const QuadExt& o) const;
  void normalize();

  Rational a_;
  Rational b_;
  std::int64_t d_ = 1;
};

inline bool is_zero(const QuadExt& x) { return x.is_zero(); }

std::ostream& operator<<(std::ostream& os, const QuadExt& x);

}  // namespace qrel
