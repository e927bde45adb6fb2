#pragma once

#include <cstdint>
#include <functional>
#include <string>

#include "qrel/character.hpp"
#include "qrel/piscalar.hpp"
#include "qrel/poly2.hpp"
#include "qrel/qseries.hpp"
#include "qrel/special.hpp"

namespace qrel {

/// Weights (k, l) of the bracket entries and the degree nu.
struct BracketSpec {
  HalfInt k;
  HalfInt l;
  int nu = 0;
};

/// [f,g]_nu = sum_mu (-1)^mu C(k+nu-1, nu-mu) C(l+nu-1, mu) D^mu f * D^{nu-mu} g
template <class S>
QSeries<S> rankin_cohen(const QSeries<S>& f, const QSeries<S>& g, const BracketSpec& spec) {
  if (spec.nu < 0) throw std::invalid_argument("rankin_cohen: negative degree");
  QSeries<S> total(std::min(f.trunc(), g.trunc()));
  const Rational kk = spec.k.value() + Rational(spec.nu - 1);
  const Rational ll = spec.l.value() + Rational(spec.nu - 1);
  for (int mu = 0; mu <= spec.nu; ++mu) {
    Rational c = gen_binom(kk, spec.nu - mu) * gen_binom(ll, mu);
    if (mu % 2) c = -c;
    if (c.is_zero()) continue;
    total = add(total, scale(S(c), mul(d_power(f, mu), d_power(g, spec.nu - mu))));
  }
  return total;
}

/// kappa(k, l, nu) with Gamma(2-k)/Gamma(2-k-mu) taken as prod_{j=1}^{mu} (2-k-j).
/// Requires k + l integral, k != 1 and k + l + 2 nu >= 2.
PiScalar kappa(const BracketSpec& spec);

/// Unary theta series sum_{alpha in Z} w(alpha) q^{s alpha^2}.
struct ThetaInput {
  std::int64_t s = 1;
  std::function<Rational(std::int64_t)> weight;

  /// w(alpha) = chi(alpha), weight 1/2.
  static ThetaInput half(std::int64_t s, const DirichletCharacter& chi);
  /// w(alpha) = alpha chi(alpha), weight 3/2.
  static ThetaInput three_half(std::int64_t s, const DirichletCharacter& chi);
  static ThetaInput zero(std::int64_t s = 1);

  /// Coefficient of q^n.
  Rational coeff(std::int64_t n) const;
  RSeries series(std::int64_t T) const;
};

/// pi^{pi_e/2} * sqrt(outer) * value, with outer squarefree.
struct ScaledQuad {
  int pi_e = 0;
  std::int64_t outer = 1;
  QuadExt value;

  bool is_zero() const { return value.is_zero(); }
  double to_double() const;
  std::string str() const;
  ScaledQuad& operator+=(const ScaledQuad& o);
  friend bool operator==(const ScaledQuad& x, const ScaledQuad& y) {
    if (x.is_zero() || y.is_zero()) return x.is_zero() && y.is_zero();
    return x.pi_e == y.pi_e && x.outer == y.outer && x.value == y.value;
  }
};

/// b(r) of the holomorphic projection of [f^-, g]_nu for theta-supported
/// shadow coefficients c(n) and g coefficients a_g(m), summed over m - n = r
/// with n >= 1. Requires s_g * s_shadow to be a perfect square (finite sum).
ScaledQuad correction_b(std::int64_t r, const ThetaInput& shadow, const ThetaInput& g,
                        const BracketSpec& spec);

/// kappa * c(0) * r^{k+nu-1} * a_g(r): the contribution of the constant term of the shadow.
ScaledQuad kappa_term(std::int64_t r, const ThetaInput& shadow, const ThetaInput& g,
                      const BracketSpec& spec);

/// correction_b + kappa_term.
ScaledQuad projection_correction(std::int64_t r, const ThetaInput& shadow, const ThetaInput& g,
                                 const BracketSpec& spec);

}  // namespace qrel
