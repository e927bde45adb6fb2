#include "qrel/poly2.hpp"

#include <stdexcept>

#include "qrel/special.hpp"

namespace qrel {

Poly2 Poly2::monomial(const Rational& c, int i, int j) {
  Poly2 p;
  p.add_term(i, j, c);
  return p;
}

Rational Poly2::coeff(int i, int j) const {
  const auto it = terms_.find({i, j});
  return it == terms_.end() ? Rational(0) : it->second;
}

int Poly2::homogeneous_degree() const {
  if (terms_.empty()) throw std::domain_error("Poly2: zero polynomial has no degree");
  const int d = terms_.begin()->first.first + terms_.begin()->first.second;
  for (const auto& [e, c] : terms_)
    if (e.first + e.second != d) throw std::domain_error("Poly2: not homogeneous");
  return d;
}

void Poly2::add_term(int i, int j, const Rational& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace({i, j}, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Poly2 Poly2::pow(int e) const {
  if (e < 0) throw std::domain_error("Poly2: negative power");
  Poly2 result(1);
  Poly2 base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return result;
}

Rational Poly2::eval(const Rational& x, const Rational& y) const {
  Rational total;
  for (const auto& [e, c] : terms_) total += c * x.pow(e.first) * y.pow(e.second);
  return total;
}

Poly2 Poly2::compose(const Poly2& x0, const Poly2& y0) const {
  Poly2 total;
  for (const auto& [e, c] : terms_) {
    if (e.first < 0 || e.second < 0)
      throw std::domain_error("Poly2::compose: negative exponent");
    total += c * (x0.pow(e.first) * y0.pow(e.second));
  }
  return total;
}

std::string Poly2::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [e, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.str() + ")";
    if (e.first) out += "*X^" + std::to_string(e.first);
    if (e.second) out += "*Y^" + std::to_string(e.second);
  }
  return out;
}

Poly2& Poly2::operator+=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, c);
  return *this;
}

Poly2& Poly2::operator-=(const Poly2& o) {
  for (const auto& [e, c] : o.terms_) add_term(e.first, e.second, -c);
  return *this;
}

Poly2 operator*(const Poly2& a, const Poly2& b) {
  Poly2 r;
  for (const auto& [ea, ca] : a.terms_)
    for (const auto& [eb, cb] : b.terms_) r.add_term(ea.first + eb.first, ea.second + eb.second, ca * cb);
  return r;
}

Poly2 operator*(const Rational& c, const Poly2& p) {
  Poly2 r;
  for (const auto& [e, v] : p.terms_) r.add_term(e.first, e.second, c * v);
  return r;
}

Poly2 p_poly(int a, const Rational& b) {
  if (a < 2) throw std::domain_error("p_poly: need a >= 2");
  const Poly2 xy = Poly2::X() + Poly2::Y();
  Poly2 total;
  for (int j = 0; j <= a - 2; ++j)
    total += gen_binom(Rational(j) + b - Rational(2), j) * (Poly2::X().pow(j) * xy.pow(a - j - 2));
  return total;
}

Poly2 p_poly_alt1(int a, const Rational& b) {
  if (a < 2) throw std::domain_error("p_poly_alt1: need a >= 2");
  Poly2 total;
  for (int j = 0; j <= a - 2; ++j)
    total.add_term(j, a - 2 - j, gen_binom(Rational(a - 3) + b, j));
  return total;
}

Poly2 p_poly_alt2(int a, const Rational& b) {
  if (a < 2) throw std::domain_error("p_poly_alt2: need a >= 2");
  const Poly2 xy = Poly2::X() + Poly2::Y();
  const Poly2 minus_y = Poly2::monomial(-1, 0, 1);
  Poly2 total;
  for (int j = 0; j <= a - 2; ++j) {
    const Rational c = gen_binom(Rational(a - 3) + b, a - 2 - j) * gen_binom(Rational(j - 2) + b, j);
    total += c * (xy.pow(a - 2 - j) * minus_y.pow(j));
  }
  return total;
}

}  // namespace qrel
