#pragma once

#include <map>
#include <string>
#include <utility>

#include "qrel/rational.hpp"

namespace qrel {

/// Laurent polynomial in two variables X, Y over the rationals.
class Poly2 {
 public:
  using Exponent = std::pair<int, int>;

  Poly2() = default;
  Poly2(const Rational& c) { add_term(0, 0, c); }  // NOLINT
  static Poly2 monomial(const Rational& c, int i, int j);
  static Poly2 X() { return monomial(1, 1, 0); }
  static Poly2 Y() { return monomial(1, 0, 1); }

  const std::map<Exponent, Rational>& terms() const { return terms_; }
  Rational coeff(int i, int j) const;
  bool is_zero() const { return terms_.empty(); }
  /// Total degree when homogeneous; throws otherwise.
  int homogeneous_degree() const;

  void add_term(int i, int j, const Rational& c);
  Poly2 pow(int e) const;
  /// Value at (x, y); negative exponents need nonzero arguments.
  Rational eval(const Rational& x, const Rational& y) const;
  /// p(X0, Y0) for polynomial arguments; requires nonnegative exponents in p.
  Poly2 compose(const Poly2& x0, const Poly2& y0) const;

  std::string str() const;

  Poly2& operator+=(const Poly2& o);
  Poly2& operator-=(const Poly2& o);
  friend Poly2 operator+(Poly2 a, const Poly2& b) { return a += b; }
  friend Poly2 operator-(Poly2 a, const Poly2& b) { return a -= b; }
  friend Poly2 operator*(const Poly2& a, const Poly2& b);
  friend Poly2 operator*(const Rational& c, const Poly2& p);
  friend bool operator==(const Poly2& a, const Poly2& b) { return a.terms_ == b.terms_; }

 private:
  std::map<Exponent, Rational> terms_;
};

/// P_{a,b}(X,Y) = sum_{j=0}^{a-2} C(j+b-2, j) X^j (X+Y)^{a-j-2}; throws for a < 2.
Poly2 p_poly(int a, const Rational& b);

/// First alternative form: sum_j C(a+b-3, j) X^j Y^{a-2-j}.
Poly2 p_poly_alt1(int a, const Rational& b);
/// Second alternative form: sum_j C(a+b-3, a-2-j) C(j+b-2, j) (X+Y)^{a-2-j} (-Y)^j.
Poly2 p_poly_alt2(int a, const Rational& b);

}  // namespace qrel
