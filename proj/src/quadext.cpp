#include "qrel/quadext.hpp"

#include <cmath>
#include <stdexcept>

#include "qrel/integer_utils.hpp"

namespace qrel {

QuadExt::QuadExt(const Rational& a, const Rational& b, std::int64_t D) : a_(a), b_(b), d_(D) {
  if (D < 1 || squarefree_split(D).root != 1)
    throw std::domain_error("QuadExt: radicand must be a positive squarefree integer");
  normalize();
}

QuadExt QuadExt::sqrt_of(std::int64_t n) {
  if (n < 0) throw std::domain_error("QuadExt::sqrt_of: negative argument");
  if (n == 0) return {};
  const auto split = squarefree_split(n);
  return {Rational(0), Rational(split.root), split.core};
}

void QuadExt::normalize() {
  if (d_ == 1) {
    a_ += b_;
    b_ = Rational(0);
  }
  if (b_.is_zero()) d_ = 1;
}

std::int64_t QuadExt::join(const QuadExt& o) const {
  if (d_ == 1) return o.d_;
  if (o.d_ == 1 || o.d_ == d_) return d_;
  throw std::domain_error("QuadExt: mixing sqrt(" + std::to_string(d_) + ") and sqrt(" +
                          std::to_string(o.d_) + ")");
}

QuadExt QuadExt::conjugate() const {
  QuadExt r = *this;
  r.b_ = -r.b_;
  return r;
}

int QuadExt::sign() const {
  const int sa = a_.sign();
  const int sb = b_.sign();
  if (sb == 0) return sa;
  if (sa == 0) return sb;
  if (sa == sb) return sa;
  // Opposite signs: the larger of a^2 and D*b^2 decides.
  const int c = (a_ * a_ <=> Rational(d_) * b_ * b_) > 0 ? 1 : -1;
  return c > 0 ? sa : sb;
}

double QuadExt::to_double() const {
  const double root = std::sqrt(static_cast<double>(d_));
  if (a_.sign() * b_.sign() >= 0) return a_.to_double() + b_.to_double() * root;
  // Opposite signs cancel; use norm / conjugate instead.
  return norm().to_double() / (a_.to_double() - b_.to_double() * root);
}

QuadExt QuadExt::inverse() const {
  const Rational n = norm();
  if (n.is_zero()) throw std::domain_error("QuadExt: inverse of zero");
  QuadExt r = conjugate();
  r.a_ /= n;
  r.b_ /= n;
  return r;
}

QuadExt QuadExt::pow(long e) const {
  if (e < 0) return inverse().pow(-e);
  QuadExt result(1);
  QuadExt base = *this;
  while (e > 0) {
    if (e & 1) result *= base;
    e >>= 1;
    if (e > 0) base *= base;
  }
  return result;
}

std::string QuadExt::str() const {
  if (b_.is_zero()) return a_.str();
  return a_.str() + "+" + b_.str() + "*sqrt(" + std::to_string(d_) + ")";
}

QuadExt& QuadExt::operator+=(const QuadExt& o) {
  d_ = join(o);
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator-=(const QuadExt& o) {
  d_ = join(o);
  a_ -= o.a_;
  b_ -= o.b_;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator*=(const QuadExt& o) {
  const std::int64_t d = join(o);
  const Rational a = a_ * o.a_ + Rational(d) * b_ * o.b_;
  const Rational b = a_ * o.b_ + b_ * o.a_;
  a_ = a;
  b_ = b;
  d_ = d;
  normalize();
  return *this;
}

QuadExt& QuadExt::operator/=(const QuadExt& o) { return *this *= o.inverse(); }

QuadExt operator-(const QuadExt& x) {
  QuadExt r = x;
  r.a_ = -r.a_;
  r.b_ = -r.b_;
  return r;
}

std::ostream& operator<<(std::ostream& os, const QuadExt& x) { return os << x.str(); }

}  // namespace qrel
