#pragma once

#include <compare>
#include <ostream>
#include <string>

#include "qrel/rational.hpp"

namespace qrel {

/// A half-integer stored as twice its value.
struct HalfInt {
  int twice = 0;

  static constexpr HalfInt of(int n) { return HalfInt{2 * n}; }
  /// Parses "3/2", "-1/2", "2".
  static HalfInt parse(const std::string& text);

  bool is_integer() const { return twice % 2 == 0; }
  Rational value() const { return Rational(twice, 2); }
  std::string str() const;

  friend constexpr HalfInt operator+(HalfInt x, HalfInt y) { return {x.twice + y.twice}; }
  friend constexpr HalfInt operator-(HalfInt x, HalfInt y) { return {x.twice - y.twice}; }
  friend constexpr HalfInt operator+(HalfInt x, int n) { return {x.twice + 2 * n}; }
  friend constexpr HalfInt operator-(HalfInt x, int n) { return {x.twice - 2 * n}; }
  friend constexpr bool operator==(HalfInt x, HalfInt y) = default;
  friend constexpr auto operator<=>(HalfInt x, HalfInt y) = default;
};

/// r * pi^(e/2). Adding values with different e throws; zero adapts.
struct PiScalar {
  Rational r;
  int e = 0;

  bool is_zero() const { return r.is_zero(); }
  double to_double() const;
  /// "r", "r*sqrt(pi)", "r*pi" or "r*pi^(e/2)".
  std::string str() const;

  PiScalar& operator+=(const PiScalar& o);
  PiScalar& operator-=(const PiScalar& o);
  PiScalar& operator*=(const PiScalar& o) {
    r *= o.r;
    e += o.e;
    return *this;
  }
  PiScalar& operator/=(const PiScalar& o) {
    r /= o.r;
    e -= o.e;
    return *this;
  }

  friend PiScalar operator+(PiScalar x, const PiScalar& y) { return x += y; }
  friend PiScalar operator-(PiScalar x, const PiScalar& y) { return x -= y; }
  friend PiScalar operator*(PiScalar x, const PiScalar& y) { return x *= y; }
  friend PiScalar operator/(PiScalar x, const PiScalar& y) { return x /= y; }
  friend PiScalar operator*(PiScalar x, const Rational& c) {
    x.r *= c;
    return x;
  }
  friend PiScalar operator*(const Rational& c, PiScalar x) { return x * c; }
  friend PiScalar operator-(PiScalar x) {
    x.r = -x.r;
    return x;
  }
  /// Zero equals zero regardless of e.
  friend bool operator==(const PiScalar& x, const PiScalar& y) {
    if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
    return x.e == y.e && x.r == y.r;
  }
};

inline bool is_zero(const PiScalar& x) { return x.is_zero(); }

std::ostream& operator<<(std::ostream& os, const PiScalar& x);
std::ostream& operator<<(std::ostream& os, HalfInt h);

}  // namespace qrel
