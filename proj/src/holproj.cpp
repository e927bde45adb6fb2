#include "qrel/holproj.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "qrel/integer_utils.hpp"

namespace qrel {

PiScalar kappa(const BracketSpec& spec) {
  const HalfInt k = spec.k, l = spec.l;
  const int nu = spec.nu;
  if (nu < 0) throw std::domain_error("kappa: negative degree");
  if (!(k + l).is_integer()) throw std::domain_error("kappa: k + l must be an integer");
  if (k == HalfInt::of(1)) throw std::domain_error("kappa: k = 1 is a pole");
  const int top = (k + l).twice / 2 + 2 * nu - 2;
  if (top < 0) throw std::domain_error("kappa: k + l + 2 nu - 2 must be nonnegative");

  const Rational kv = k.value();
  PiScalar sum{Rational(0), 0};
  for (int mu = 0; mu <= nu; ++mu) {
    Rational ratio(1);
    for (int j = 1; j <= mu; ++j) ratio *= Rational(2 - j) - kv;
    const Rational binoms = gen_binom(kv + Rational(nu - 1), nu - mu) *
                            gen_binom(l.value() + Rational(nu - 1), mu);
    if ((ratio * binoms).is_zero()) continue;
    sum += gamma_value(l + (2 * nu - mu)) * (ratio * binoms);
  }
  return sum * (Rational(factorial(top)) * (kv - Rational(1))).inverse();
}

ThetaInput ThetaInput::half(std::int64_t s, const DirichletCharacter& chi) {
  return {s, [chi](std::int64_t a) { return Rational(chi(a)); }};
}

ThetaInput ThetaInput::three_half(std::int64_t s, const DirichletCharacter& chi) {
  return {s, [chi](std::int64_t a) { return Rational(a * chi(a)); }};
}

ThetaInput ThetaInput::zero(std::int64_t s) { return {s, {}}; }

Rational ThetaInput::coeff(std::int64_t n) const {
  if (!weight || n < 0 || n % s != 0) return Rational(0);
  const auto root = exact_sqrt(n / s);
  if (!root) return Rational(0);
  if (*root == 0) return weight(0);
  return weight(*root) + weight(-*root);
}

RSeries ThetaInput::series(std::int64_t T) const {
  RSeries f(T);
  for (std::int64_t a = 0; s * a * a <= T; ++a) f.set(s * a * a, coeff(s * a * a));
  return f;
}

double ScaledQuad::to_double() const {
  return std::pow(std::numbers::pi, pi_e / 2.0) * std::sqrt(static_cast<double>(outer)) *
         value.to_double();
}

std::string ScaledQuad::str() const {
  if (value.is_zero()) return "0";
  std::string out = "(" + value.str() + ")";
  if (outer != 1) out = "sqrt(" + std::to_string(outer) + ")*" + out;
  if (pi_e != 0) out = PiScalar{Rational(1), pi_e}.str().substr(2) + "*" + out;
  return out;
}

ScaledQuad& ScaledQuad::operator+=(const ScaledQuad& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (pi_e != o.pi_e || outer != o.outer)
    throw std::domain_error("ScaledQuad: adding values with different pi power or radicand");
  value += o.value;
  return *this;
}

namespace {

// (|alpha| sqrt(s))^j = coefficient * sqrt(s)^{j mod 2}.
struct RootPower {
  Rational coefficient;
  bool with_sqrt;
};

RootPower root_power(std::int64_t s, std::int64_t alpha, int j) {
  const std::int64_t abs_alpha = std::abs(alpha);
  const int fl = j >= 0 ? j / 2 : -((-j + 1) / 2);
  return {Rational(abs_alpha).pow(j) * Rational(s).pow(fl), (j % 2) != 0};
}

// Sums of the shape R0 + Rs sqrt(s) + Rt sqrt(t) + Rst sqrt(s t).
struct Slots {
  Rational r0, rs, rt, rst;
  void add(const Rational& c, bool sqrt_s, bool sqrt_t) {
    if (sqrt_s && sqrt_t)
      rst += c;
    else if (sqrt_s)
      rs += c;
    else if (sqrt_t)
      rt += c;
    else
      r0 += c;
  }
};

ScaledQuad collapse(const Slots& slots, std::int64_t s, std::int64_t t, const PiScalar& factor) {
  const auto ss = squarefree_split(s), ts = squarefree_split(t);
  if (ss.core != ts.core) throw std::logic_error("correction_b: s t is not a square");
  const std::int64_t s0 = ss.core;
  const Rational rational_part = slots.r0 + slots.rst * Rational(ss.root * ts.root * s0);
  const Rational root_part = slots.rs * Rational(ss.root) + slots.rt * Rational(ts.root);
  ScaledQuad out;
  out.pi_e = factor.e;
  if (s0 == 1) {
    out.value = QuadExt(factor.r * (rational_part + root_part));
  } else if (root_part.is_zero()) {
    out.value = QuadExt(factor.r * rational_part);
  } else if (rational_part.is_zero()) {
    out.outer = s0;
    out.value = QuadExt(factor.r * root_part);
  } else {
    throw std::logic_error("correction_b: mixed radicands in the result");
  }
  return out;
}

void check_spec(const BracketSpec& spec) {
  if (!(spec.k + spec.l).is_integer())
    throw std::domain_error("correction_b: k + l must be an integer");
  if (spec.nu < 0) throw std::domain_error("correction_b: negative degree");
  if (spec.k.is_integer() && spec.k.twice >= 2)
    throw std::domain_error("correction_b: Gamma(1 - k) has a pole");
}

}  // namespace

ScaledQuad correction_b(std::int64_t r, const ThetaInput& shadow, const ThetaInput& g,
                        const BracketSpec& spec) {
  if (r < 1) throw std::domain_error("correction_b: r must be positive");
  check_spec(spec);
  if (!shadow.weight || !g.weight) return {};
  const std::int64_t s = g.s, t = shadow.s;
  const auto c = exact_sqrt(s * t);
  if (!c)
    throw std::domain_error(
        "correction_b: s t is not a perfect square; the sum has no finite support");

  const int nu = spec.nu;
  const int a = (spec.k + spec.l).twice / 2 + 2 * nu;
  const Rational kk = spec.k.value() + Rational(nu - 1);
  const Rational ll = spec.l.value() + Rational(nu - 1);
  std::vector<Rational> binoms(static_cast<std::size_t>(nu + 1));
  std::vector<Poly2> polys(static_cast<std::size_t>(nu + 1));
  for (int mu = 0; mu <= nu; ++mu) {
    binoms[static_cast<std::size_t>(mu)] = gen_binom(kk, nu - mu) * gen_binom(ll, mu);
    polys[static_cast<std::size_t>(mu)] = p_poly(a, Rational(2 - mu) - spec.k.value());
  }

  // s alpha^2 - t beta^2 = r factors as (s alpha - c beta)(s alpha + c beta) = s r.
  Slots slots;
  for (std::int64_t beta = 1; 2 * *c * beta <= s * r; ++beta) {
    const std::int64_t n = t * beta * beta;
    const std::int64_t m = r + n;
    if (m % s != 0) continue;
    const auto alpha = exact_sqrt(m / s);
    if (!alpha) continue;
    const Rational ag = g.coeff(m);
    const Rational cn = shadow.coeff(n);
    if (ag.is_zero() || cn.is_zero()) continue;
    for (int mu = 0; mu <= nu; ++mu) {
      const Rational pre = binoms[static_cast<std::size_t>(mu)] * ag * cn;
      if (pre.is_zero()) continue;
      // m^{nu-mu} m^{mu-2nu-l+1} P(r, n)
      const auto m1 = root_power(s, *alpha, 2 - 2 * nu - spec.l.twice);
      const Rational pv = polys[static_cast<std::size_t>(mu)].eval(Rational(r), Rational(n));
      slots.add(pre * m1.coefficient * pv, m1.with_sqrt, false);
      // m^{nu-mu} n^{k+mu-1}
      const auto n1 = root_power(t, beta, spec.k.twice + 2 * mu - 2);
      const Rational mpow = Rational(m).pow(nu - mu);
      slots.add(-(pre * mpow * n1.coefficient), false, n1.with_sqrt);
    }
  }
  const PiScalar factor = -gamma_value(HalfInt::of(1) - spec.k);
  return collapse(slots, s, t, factor);
}

ScaledQuad kappa_term(std::int64_t r, const ThetaInput& shadow, const ThetaInput& g,
                      const BracketSpec& spec) {
  const Rational c0 = shadow.coeff(0);
  if (c0.is_zero() || !g.weight || r % g.s != 0) return {};
  const auto alpha = exact_sqrt(r / g.s);
  if (!alpha || *alpha == 0) return {};
  const Rational ag = g.coeff(r);
  if (ag.is_zero()) return {};
  const PiScalar kap = kappa(spec);
  const auto rp = root_power(g.s, *alpha, (spec.k + (spec.nu - 1)).twice);
  Slots slots;
  slots.add(c0 * ag * rp.coefficient, rp.with_sqrt, false);
  // The sqrt(s) slot collapses against s itself here.
  return collapse(slots, g.s, g.s, kap);
}

ScaledQuad projection_correction(std::int64_t r, const ThetaInput& shadow, const ThetaInput& g,
                                 const BracketSpec& spec) {
  ScaledQuad total = correction_b(r, shadow, g, spec);
  total += kappa_term(r, shadow, g, spec);
  return total;
}

}  // namespace qrel
