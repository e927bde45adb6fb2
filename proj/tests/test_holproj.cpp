#include <doctest.h>

#include <cmath>
#include <random>
#include <set>

#include "qrel/arithmetic.hpp"
#include "qrel/character.hpp"
#include "qrel/congruence_theta.hpp"
#include "qrel/holproj.hpp"
#include "qrel/indefinite_theta.hpp"
#include "qrel/integer_utils.hpp"
#include "qrel/modular_forms.hpp"
#include "qrel/poly2.hpp"
#include "qrel/special.hpp"

using namespace qrel;

namespace {

const DirichletCharacter& one() {
  static const DirichletCharacter c = DirichletCharacter::trivial();
  return c;
}

// Kappa straight from its Gamma-quotient definition, in floating point.
double kappa_oracle(double k, double l, int nu) {
  double sum = 0;
  for (int mu = 0; mu <= nu; ++mu) {
    const double binoms = std::tgamma(k + nu) / (std::tgamma(nu - mu + 1) * std::tgamma(k + mu)) *
                          std::tgamma(l + nu) / (std::tgamma(mu + 1) * std::tgamma(l + nu - mu));
    sum += std::tgamma(2 - k) * std::tgamma(l + 2 * nu - mu) / std::tgamma(2 - k - mu) * binoms;
  }
  return sum / (std::tgamma(k + l + 2 * nu - 1) * (k - 1));
}

// 2 sum_{m^2 - n^2 = r, m, n >= 1} (m - n)^{2nu+1} + [r = a^2] a^{2nu+1}
BigInt square_case_oracle(std::int64_t r, int nu) {
  BigInt total = 0;
  for (std::int64_t n = 1; 2 * n + 1 <= r; ++n) {
    const std::int64_t m2 = r + n * n;
    if (const auto m = exact_sqrt(m2)) {
      BigInt term;
      mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(*m - n), 2 * nu + 1);
      total += 2 * term;
    }
  }
  if (const auto a = exact_sqrt(r)) {
    BigInt term;
    mpz_ui_pow_ui(term.get_mpz_t(), static_cast<unsigned long>(*a), 2 * nu + 1);
    total += term;
  }
  return total;
}

// Double sum over s m^2 - t n^2 = r, m, n <= 3e6, for every 1 <= r <= R, in long double.
std::vector<long double> orbit_sum_oracle(std::int64_t s, std::int64_t t, std::int64_t R, int nu) {
  std::vector<long double> total(static_cast<std::size_t>(R + 1), 0);
  const long double rs = std::sqrt(static_cast<long double>(s)), rt = std::sqrt(static_cast<long double>(t));
  for (std::int64_t n = 1; n <= 3'000'000; ++n) {
    // smallest m with s m^2 > t n^2, then walk up while r stays in range
    std::int64_t m = isqrt(t * n * n / s);
    while (s * m * m <= t * n * n) ++m;
    for (;; ++m) {
      const std::int64_t r = s * m * m - t * n * n;
      if (r > R) break;
      const long double diff = static_cast<long double>(r) / (rs * static_cast<long double>(m) + rt * static_cast<long double>(n));
      total[static_cast<std::size_t>(r)] += 2 * std::pow(diff, 2 * nu + 1);
    }
  }
  return total;
}

}  // namespace

TEST_CASE("Rankin-Cohen brackets") {
  const RSeries h = hurwitz_series(60), th = theta_classical(60);
  CHECK(rankin_cohen(h, th, {HalfInt{3}, HalfInt{1}, 0}) == mul(h, th));
  CHECK(rankin_cohen(h, th, {HalfInt{3}, HalfInt{1}, 0})[4] == 1);
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<long> c(-9, 9);
  RSeries f(40), g(40);
  for (std::int64_t n = 0; n <= 40; ++n) {
    f.set(n, Rational(c(rng)));
    g.set(n, Rational(c(rng)));
  }
  for (int nu = 0; nu <= 4; ++nu) {
    const BracketSpec spec{HalfInt{1}, HalfInt{1}, nu};
    const RSeries fg = rankin_cohen(f, g, spec), gf = rankin_cohen(g, f, spec);
    CHECK(fg == (nu % 2 ? scale(Rational(-1), gf) : gf));
  }
  // [q, q]_1 at k = l = 1/2: (1/2) q * q - (1/2) q * q = 0
  RSeries q(5);
  q.set(1, Rational(1));
  CHECK(rankin_cohen(q, q, {HalfInt{1}, HalfInt{1}, 1}) == RSeries(5));
  CHECK_THROWS(rankin_cohen(q, q, {HalfInt{1}, HalfInt{1}, -1}));
}

TEST_CASE("P polynomials") {
  for (const Rational b : {Rational(-3, 2), Rational(1, 2), Rational(7)}) {
    CHECK(p_poly(2, b) == Poly2(Rational(1)));
    CHECK(p_poly(3, b) == Poly2::Y() + b * Poly2::X());
  }
  CHECK_THROWS(p_poly(1, Rational(1)));
  // evaluate the defining sum directly at a few points
  std::mt19937_64 rng(8);
  std::uniform_int_distribution<long> c(-7, 7);
  for (int a = 2; a <= 9; ++a)
    for (const Rational b : {Rational(-1, 2), Rational(5, 2), Rational(3)}) {
      const Poly2 p = p_poly(a, b);
      for (int trial = 0; trial < 4; ++trial) {
        const Rational x(c(rng)), y(c(rng));
        Rational expected;
        for (int j = 0; j <= a - 2; ++j)
          expected += gen_binom(Rational(j) + b - 2, j) * x.pow(j) * (x + y).pow(a - j - 2);
        CHECK(p.eval(x, y) == expected);
      }
      CHECK(p.homogeneous_degree() == a - 2);
    }
}

TEST_CASE("kappa") {
  CHECK(kappa({HalfInt{3}, HalfInt{1}, 0}) == PiScalar{Rational(2), 1});
  for (int nu = 0; nu <= 20; ++nu) {
    const Rational closed = Rational(2).pow(1 - 2 * nu) * Rational(binomial(2 * nu, nu));
    CHECK(kappa({HalfInt{3}, HalfInt{1}, nu}) == PiScalar{closed, 1});
  }
  CHECK(kappa({HalfInt{1}, HalfInt{3}, 1}) == PiScalar{Rational(-3, 2), 1});
  for (int nu = 0; nu <= 5; ++nu)
    for (const auto& [k, l] : {std::pair{3, 1}, std::pair{1, 3}, std::pair{5, 3}, std::pair{3, 5}, std::pair{1, 5}}) {
      const PiScalar got = kappa({HalfInt{k}, HalfInt{l}, nu});
      CHECK(got.to_double() == doctest::Approx(kappa_oracle(k / 2.0, l / 2.0, nu)).epsilon(1e-10));
    }
  CHECK_THROWS_AS(kappa({HalfInt::of(1), HalfInt::of(1), 1}), std::domain_error);
  CHECK_THROWS_AS(kappa({HalfInt{3}, HalfInt{2}, 1}), std::domain_error);
}

TEST_CASE("correction coefficients") {
  const BracketSpec spec{HalfInt{3}, HalfInt{1}, 1};
  const ThetaInput g = ThetaInput::half(1, one());
  for (std::int64_t r = 1; r <= 20; ++r) CHECK(correction_b(r, ThetaInput::zero(), g, spec).is_zero());
  CHECK_THROWS(correction_b(0, ThetaInput::half(1, one()), g, spec));
  CHECK_THROWS(correction_b(3, ThetaInput::half(2, one()), g, spec));
  CHECK_THROWS(correction_b(3, ThetaInput::half(1, one()), g, {HalfInt{3}, HalfInt{2}, 0}));
  CHECK_THROWS(correction_b(3, ThetaInput::half(1, one()), g, {HalfInt::of(2), HalfInt::of(0), 0}));

  // weights (3/2, 1/2): the projection correction is 4^{1-nu} C(2nu,nu) sqrt(pi) times the Lambda coefficient
  const ThetaInput shadow = ThetaInput::half(1, one());
  for (int nu = 0; nu <= 2; ++nu) {
    const IndefiniteTheta lam = lambda_indef(1, 1, one(), one(), nu, 40);
    const Rational c = Rational(4).pow(1 - nu) * Rational(binomial(2 * nu, nu));
    for (std::int64_t r = 1; r <= 40; ++r) {
      const ScaledQuad got = projection_correction(r, shadow, g, {HalfInt{3}, HalfInt{1}, nu});
      const ScaledQuad expected{1, 1, QuadExt(c) * lam.coeff(r)};
      CHECK(got == expected);
    }
  }
}

TEST_CASE("Pell orbits") {
  const PellOrbitData a = pell_orbit(1, 2, 1);
  CHECK(a.epsilon == QuadExt(Rational(3), Rational(2), 2));
  CHECK(a.representatives == std::vector<std::pair<std::int64_t, std::int64_t>>{{3, 2}});
  CHECK(a.epsilon.norm() == 1);
  const PellOrbitData b = pell_orbit(1, 3, 1);
  CHECK(b.epsilon == QuadExt(Rational(2), Rational(1), 3));
  CHECK(b.representatives == std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 1}});
  CHECK_THROWS_AS(pell_orbit(1, 1, 3), std::domain_error);
  CHECK_THROWS_AS(pell_orbit(2, 8, 3), std::domain_error);
  CHECK_THROWS_AS(pell_orbit(1, 2, 0), std::domain_error);

  // orbits from the representatives reproduce every positive solution, once
  const std::int64_t M = 20000;
  for (const auto& [s, t] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}, std::pair{3, 5}, std::pair{2, 6}})
    for (std::int64_t r = 1; r <= 60; ++r) {
      const PellOrbitData d = pell_orbit(s, t, r);
      CHECK(d.epsilon.sign() > 0);
      CHECK(d.epsilon.norm() == 1);
      std::set<std::pair<std::int64_t, std::int64_t>> brute, reached;
      for (std::int64_t m = 1; m <= M; ++m) {
        const std::int64_t rest = s * m * m - r;
        if (rest <= 0 || rest % t != 0) continue;
        if (const auto n = exact_sqrt(rest / t)) brute.insert({m, *n});
      }
      bool duplicate = false;
      for (const auto& [m0, n0] : d.representatives) {
        CHECK(s * m0 * m0 - t * n0 * n0 == r);
        BigInt m = m0, n = n0;
        while (m <= M) {
          duplicate = duplicate || !reached.insert({m.get_si(), n.get_si()}).second;
          std::tie(m, n) = d.step(m, n);
        }
      }
      CHECK(!duplicate);
      CHECK(reached == brute);
    }
}

TEST_CASE("indefinite theta examples") {
  CHECK(lambda_indef(1, 1, one(), one(), 0, 10).coeff(4) == QuadExt(2));
  const IndefiniteTheta l12 = lambda_indef(1, 2, one(), one(), 0, 10);
  CHECK(l12.outer == 1);
  CHECK(l12.coeff(1) == QuadExt(Rational(0), Rational(1), 2));
  CHECK(l12.to_double(1) == doctest::Approx(std::sqrt(2.0)));

  const DirichletCharacter chi4 = kronecker_character(-4);
  const IndefiniteTheta d = delta_indef(1, 1, chi4, chi4, 0, 20);
  CHECK(d.coeff(8) == QuadExt(-4));
  CHECK(d.coeff(0) == QuadExt(0));

  CHECK_THROWS_AS(lambda_indef(1, 1, chi4, one(), 0, 10), std::invalid_argument);
  CHECK_THROWS_AS(delta_indef(1, 1, one(), chi4, 0, 10), std::invalid_argument);

  // the square case against direct enumeration
  for (int nu = 0; nu <= 3; ++nu) {
    const IndefiniteTheta lam = lambda_indef(1, 1, one(), one(), nu, 300);
    for (std::int64_t r = 1; r <= 300; ++r) CHECK(lam.coeff(r) == QuadExt(Rational(square_case_oracle(r, nu))));
  }
}

TEST_CASE("orbit closed form against a long floating sum") {
  for (const auto& [s, t] : {std::pair{1, 2}, std::pair{1, 3}, std::pair{2, 3}})
    for (int nu = 0; nu <= 1; ++nu) {
      const IndefiniteTheta d = indefinite_double_sum(s, t, one(), one(), nu, 30);
      const auto brute = orbit_sum_oracle(s, t, 30, nu);
      // truncating at n = 3e6 leaves a tail below 1e-5
      for (std::int64_t r = 1; r <= 30; ++r)
        CHECK(static_cast<double>(brute[static_cast<std::size_t>(r)]) == doctest::Approx(d.to_double(r)).epsilon(2e-5).scale(1.0));
    }
}

TEST_CASE("orbit window splits into enumerated part and tail") {
  const OrbitWindow w = orbit_window(1, 2, one(), one(), 0, 1, 100);
  CHECK(w.total == QuadExt(Rational(-1), Rational(1), 2));
  CHECK(w.enumerated + w.tail == w.total);
  CHECK(std::abs(w.tail.to_double()) <= w.tail_bound);
  // m <= 100 on the orbit of (3, 2): m = 3, 17, 99
  CHECK(w.enumerated_terms == 3);
}

TEST_CASE("congruence-restricted Lambda") {
  for (const std::int64_t p : {3, 5, 7})
    for (int nu = 0; nu <= 2; ++nu) {
      RSeries total(400);
      for (std::int64_t a = 0; a <= (p - 1) / 2; ++a) total = add(total, lambda_pa(p, a, nu, 400));
      const IndefiniteTheta lam = lambda_indef(1, 1, one(), one(), nu, 400);
      for (std::int64_t r = 1; r <= 400; ++r) CHECK(QuadExt(total[r]) == lam.coeff(r));
    }
  CHECK(d_pa_series(5, 1, 1, 10)[6] == 1);
  for (std::int64_t n = 1; n <= 200; ++n) CHECK(d_pa_series(1, 0, 3, 200)[n] == 2 * lambda_k(n, 3));
  CHECK_THROWS(lambda_pa(4, 1, 0, 10));
  CHECK_THROWS(lambda_pa(5, 5, 0, 10));
}
