#include "qrel/indefinite_theta.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

#include "qrel/integer_utils.hpp"

namespace qrel {

std::pair<BigInt, BigInt> pell_fundamental(std::int64_t N) {
  if (N < 2 || is_square(N)) throw std::domain_error("pell_fundamental: N must be a non-square > 1");
  // Continued fraction of sqrt(N); convergents h/k until h^2 - N k^2 = 1.
  const std::int64_t a0 = isqrt(N);
  std::int64_t m = 0, d = 1, a = a0;
  BigInt h_prev = 1, h = a0, k_prev = 0, k = 1;
  for (int guard = 0; guard < 1'000'000; ++guard) {
    if (h * h - BigInt(N) * k * k == 1) return {h, k};
    m = d * a - m;
    d = (N - m * m) / d;
    a = (a0 + m) / d;
    BigInt h_next = BigInt(a) * h + h_prev;
    BigInt k_next = BigInt(a) * k + k_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
  }
  throw std::runtime_error("pell_fundamental: no solution found");
}

std::pair<BigInt, BigInt> PellOrbitData::step(const BigInt& m, const BigInt& n) const {
  return {x * m + BigInt(t) * y * n, BigInt(s) * y * m + x * n};
}

PellOrbitData pell_orbit(std::int64_t s, std::int64_t t, std::int64_t r) {
  if (s < 1 || t < 1) throw std::domain_error("pell_orbit: s, t must be positive");
  if (r < 1) throw std::domain_error("pell_orbit: r must be positive");
  if (is_square(s * t))
    throw std::domain_error("pell_orbit: s t is a perfect square; use the factorization path");
  PellOrbitData out;
  out.s = s;
  out.t = t;
  out.r = r;
  const auto split = squarefree_split(s * t);
  out.D = split.core;
  out.c = split.root;
  std::tie(out.x, out.y) = pell_fundamental(s * t);
  out.epsilon = QuadExt(Rational(out.x), Rational(out.y * out.c), out.D);

  // A positive solution starts its orbit iff its predecessor has n <= 0,
  // which is equivalent to n^2 <= s y^2 r.
  const BigInt bound = BigInt(s) * out.y * out.y * BigInt(r);
  if (bound > BigInt("100000000000000"))
    throw std::domain_error("pell_orbit: fundamental unit too large for enumeration");
  const std::int64_t nmax = isqrt(bound.get_si());
  for (std::int64_t n = 1; n <= nmax; ++n) {
    const std::int64_t num = r + t * n * n;
    if (num % s != 0) continue;
    if (const auto m = exact_sqrt(num / s)) out.representatives.emplace_back(*m, n);
  }
  return out;
}

double IndefiniteTheta::to_double(std::int64_t n) const {
  return std::sqrt(static_cast<double>(outer)) * series.coeff(n).to_double();
}

namespace {

struct Normalization {
  std::int64_t outer;  // s0
  Rational scale;      // a / s^{nu+1}, with s = s0 a^2
  std::int64_t root;   // a
};

Normalization normalization(std::int64_t s, int nu) {
  const auto split = squarefree_split(s);
  return {split.core, Rational(split.root) / Rational(s).pow(nu + 1), split.root};
}

void check_characters(const DirichletCharacter& chi, const DirichletCharacter& psi, bool even,
                      const char* who) {
  if (chi.is_even() != even || psi.is_even() != even)
    throw std::invalid_argument(std::string(who) + ": characters must be " +
                                (even ? "even" : "odd"));
}

// sum_{j >= 0} chi(m_j) psi(n_j) u_j^{2nu+1} for the orbit starting at (m, n),
// where u_j = u_0 eps^{-j}; the residue sequence is periodic.
QuadExt orbit_closed_form(const PellOrbitData& P, const DirichletCharacter& chi,
                          const DirichletCharacter& psi, int nu, const BigInt& m0, const BigInt& n0,
                          const QuadExt& u0) {
  const std::int64_t M = std::lcm(chi.modulus(), psi.modulus());
  const std::int64_t xm = mpz_class(P.x % M).get_si(), ym = mpz_class(P.y % M).get_si();
  const std::int64_t start_m = mpz_class(((m0 % M) + M) % M).get_si();
  const std::int64_t start_n = mpz_class(((n0 % M) + M) % M).get_si();
  const QuadExt inv_eps = P.epsilon.conjugate();
  const long e = 2L * nu + 1;
  const QuadExt ratio = inv_eps.pow(e);

  QuadExt partial;
  QuadExt term = u0.pow(e);
  std::int64_t cm = start_m, cn = start_n;
  QuadExt ratio_power(1);
  for (std::int64_t j = 0;; ++j) {
    if (j > M * M + 1) throw std::logic_error("orbit_closed_form: no period found");
    const int w = chi(cm) * psi(cn);
    if (w != 0) partial += QuadExt(w) * term;
    term *= ratio;
    ratio_power *= ratio;
    const std::int64_t nm = mod(xm * cm + mod(P.t, M) * ym % M * cn, M);
    const std::int64_t nn = mod(mod(P.s, M) * ym % M * cm + xm * cn, M);
    cm = nm;
    cn = nn;
    if (cm == start_m && cn == start_n) break;
  }
  return partial / (QuadExt(1) - ratio_power);
}

QuadExt u_value(const PellOrbitData& P, const BigInt& m, const BigInt& n) {
  return QuadExt(Rational(BigInt(P.s) * m), Rational(-BigInt(P.c) * n), P.D);
}

QuadExt orbit_coefficient(std::int64_t s, std::int64_t t, const DirichletCharacter& chi,
                          const DirichletCharacter& psi, int nu, std::int64_t r) {
  const PellOrbitData P = pell_orbit(s, t, r);
  QuadExt total;
  for (const auto& [m, n] : P.representatives) {
    const BigInt bm(m), bn(n);
    total += orbit_closed_form(P, chi, psi, nu, bm, bn, u_value(P, bm, bn));
  }
  return total;
}

QuadExt square_coefficient(std::int64_t s, std::int64_t t, std::int64_t c,
                           const DirichletCharacter& chi, const DirichletCharacter& psi, int nu,
                           std::int64_t r) {
  // (s m - c n)(s m + c n) = s r
  const std::int64_t N = s * r;
  QuadExt total;
  for (const auto u : divisors(N)) {
    const std::int64_t v = N / u;
    if (u >= v) break;
    if ((u + v) % (2 * s) != 0 || (v - u) % (2 * c) != 0) continue;
    const std::int64_t m = (u + v) / (2 * s), n = (v - u) / (2 * c);
    if (m < 1 || n < 1) continue;
    (void)t;
    const int w = chi(m) * psi(n);
    if (w != 0) total += QuadExt(Rational(w) * Rational(u).pow(2 * nu + 1));
  }
  return total;
}

}  // namespace

IndefiniteTheta indefinite_double_sum(std::int64_t s, std::int64_t t, const DirichletCharacter& chi,
                                      const DirichletCharacter& psi, int nu, std::int64_t T) {
  if (s < 1 || t < 1) throw std::invalid_argument("indefinite theta: s, t must be positive");
  if (nu < 0) throw std::invalid_argument("indefinite theta: negative nu");
  if (T < 0) throw std::invalid_argument("indefinite theta: negative truncation");
  const auto norm = normalization(s, nu);
  IndefiniteTheta out{norm.outer, QESeries(T)};
  const auto c = exact_sqrt(s * t);
  for (std::int64_t r = 1; r <= T; ++r) {
    const QuadExt inner = c ? square_coefficient(s, t, *c, chi, psi, nu, r)
                            : orbit_coefficient(s, t, chi, psi, nu, r);
    if (!inner.is_zero()) out.series.set(r, QuadExt(Rational(2) * norm.scale) * inner);
  }
  return out;
}

IndefiniteTheta lambda_indef(std::int64_t s, std::int64_t t, const DirichletCharacter& chi,
                             const DirichletCharacter& psi, int nu, std::int64_t T) {
  check_characters(chi, psi, true, "lambda_indef");
  IndefiniteTheta out = indefinite_double_sum(s, t, chi, psi, nu, T);
  const int psi0 = psi(0);
  if (psi0 == 0) return out;
  // (sqrt(s) a)^{2nu+1} = sqrt(s0) * root * s^nu * a^{2nu+1}
  const auto norm = normalization(s, nu);
  for (std::int64_t a = 1; s * a * a <= T; ++a) {
    const int w = psi0 * chi(a);
    if (w == 0) continue;
    const Rational v = Rational(w * norm.root) * Rational(s).pow(nu) * Rational(a).pow(2 * nu + 1);
    out.series.add_to(s * a * a, QuadExt(v));
  }
  return out;
}

IndefiniteTheta delta_indef(std::int64_t s, std::int64_t t, const DirichletCharacter& chi,
                            const DirichletCharacter& psi, int nu, std::int64_t T) {
  check_characters(chi, psi, false, "delta_indef");
  return indefinite_double_sum(s, t, chi, psi, nu, T);
}

OrbitWindow orbit_window(std::int64_t s, std::int64_t t, const DirichletCharacter& chi,
                         const DirichletCharacter& psi, int nu, std::int64_t r, std::int64_t m_max) {
  const PellOrbitData P = pell_orbit(s, t, r);
  const auto norm = normalization(s, nu);
  const QuadExt scale(Rational(2) * norm.scale);
  const long e = 2L * nu + 1;
  const double eps = P.epsilon.to_double();
  OrbitWindow out;
  out.outer = norm.outer;
  for (const auto& [m0, n0] : P.representatives) {
    BigInt m(m0), n(n0);
    out.total += scale * orbit_closed_form(P, chi, psi, nu, m, n, u_value(P, m, n));
    while (m <= m_max) {
      const int w = chi(mpz_class(m % chi.modulus()).get_si()) * psi(mpz_class(n % psi.modulus()).get_si());
      if (w != 0) out.enumerated += scale * QuadExt(w) * u_value(P, m, n).pow(e);
      ++out.enumerated_terms;
      std::tie(m, n) = P.step(m, n);
    }
    const QuadExt uK = u_value(P, m, n);
    out.tail += scale * orbit_closed_form(P, chi, psi, nu, m, n, uK);
    out.tail_bound += std::abs((scale * uK.pow(e)).to_double()) / (1.0 - std::pow(eps, -static_cast<double>(e)));
  }
  return out;
}

}  // namespace qrel
