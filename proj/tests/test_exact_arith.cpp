#include <doctest.h>

#include <cmath>
#include <random>

#include "qrel/piscalar.hpp"
#include "qrel/quadext.hpp"
#include "qrel/rational.hpp"
#include "qrel/special.hpp"

using namespace qrel;

namespace {

Rational random_rational(std::mt19937_64& rng, long bound) {
  std::uniform_int_distribution<long> num(-bound, bound), den(1, bound);
  return Rational(BigInt(num(rng)), BigInt(den(rng)));
}

}  // namespace

TEST_CASE("rational normal form and parsing") {
  const Rational x(BigInt(6), BigInt(-4));
  CHECK(x.num() == -3);
  CHECK(x.den() == 2);
  CHECK(x.str() == "-3/2");
  CHECK(Rational::parse("10/4") == Rational(5, 2));
  CHECK(Rational::parse("-7") == Rational(-7));
  CHECK(Rational(4, 2).str() == "2");
  CHECK_THROWS_AS(Rational(BigInt(1), BigInt(0)), std::domain_error);
  CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
  CHECK(Rational(2, 3).pow(-2) == Rational(9, 4));
}

TEST_CASE("gen_binom examples") {
  CHECK(gen_binom(Rational(7, 3), 0) == 1);
  CHECK(gen_binom(Rational(1, 2), 2) == Rational(-1, 8));
  CHECK(gen_binom(Rational(5), 2) == 10);
  CHECK(gen_binom(Rational(3), 5) == 0);
}

TEST_CASE("gen_binom satisfies Pascal's rule") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    const Rational x = random_rational(rng, 50);
    for (long m = 1; m <= 30; ++m)
      CHECK(gen_binom(x, m) == gen_binom(x - 1, m) + gen_binom(x - 1, m - 1));
  }
}

TEST_CASE("duplication of half-integral binomials") {
  // C(nu+1/2, nu-mu) C(nu-1/2, mu) = 2^{-2nu} C(2nu,nu) C(2nu+1, 2mu+1)
  for (int nu = 0; nu <= 20; ++nu)
    for (int mu = 0; mu <= nu; ++mu) {
      const Rational lhs = gen_binom(Rational(2 * nu + 1, 2), nu - mu) * gen_binom(Rational(2 * nu - 1, 2), mu);
      // binomials from factorials, computed independently of gen_binom
      const Rational c1 = Rational(factorial(2 * nu)) / Rational(factorial(nu) * factorial(nu));
      const Rational c2 = Rational(factorial(2 * nu + 1)) /
                          Rational(factorial(2 * mu + 1) * factorial(2 * nu - 2 * mu));
      CHECK(lhs == c1 * c2 / Rational(2).pow(2 * nu));
    }
}

TEST_CASE("pochhammer") {
  CHECK(pochhammer(Rational(3, 7), 0) == 1);
  CHECK(pochhammer(Rational(1), 6) == 720);
  CHECK(pochhammer(Rational(1, 2), 3) == Rational(15, 8));
}

TEST_CASE("gamma at half-integers") {
  CHECK(gamma_half(HalfInt{1}) == PiScalar{Rational(1), 1});
  CHECK(gamma_half(HalfInt{5}) == PiScalar{Rational(3, 4), 1});
  CHECK(gamma_half(HalfInt::of(4)) == PiScalar{Rational(6), 0});
  CHECK_THROWS_AS(gamma_half(HalfInt{0}), std::domain_error);
  CHECK_THROWS_AS(gamma_half(HalfInt{-1}), std::domain_error);
  CHECK(gamma_value(HalfInt{-1}) == PiScalar{Rational(-2), 1});
  CHECK_THROWS(gamma_value(HalfInt::of(-2)));
  for (int twice = 1; twice <= 20; ++twice) {
    const HalfInt s{twice};
    const PiScalar lhs = gamma_half(s + s);
    const PiScalar rhs = PiScalar{Rational(2).pow(twice - 1), -1} * gamma_half(s) * gamma_half(s + HalfInt{1});
    CHECK(lhs == rhs);
    const double num = std::tgamma(twice) ;
    CHECK(lhs.to_double() == doctest::Approx(num).epsilon(1e-12));
  }
}

TEST_CASE("half integers") {
  CHECK(HalfInt::parse("3/2") == HalfInt{3});
  CHECK(HalfInt::parse("-1/2") == HalfInt{-1});
  CHECK(HalfInt::parse("4") == HalfInt::of(4));
  CHECK((HalfInt{3} + HalfInt{1}).is_integer());
  CHECK(HalfInt{3}.str() == "3/2");
}

TEST_CASE("pi scalars keep the pi power") {
  PiScalar a{Rational(1), 1};
  const PiScalar rational_one{Rational(1), 0};
  CHECK_THROWS_AS(a += rational_one, std::domain_error);
  PiScalar z{Rational(0), 0};
  z += a;
  CHECK(z == a);
  CHECK((a * a) == PiScalar{Rational(1), 2});
  CHECK((a / a) == PiScalar{Rational(1), 0});
  CHECK(a.str() == "1*sqrt(pi)");
}

TEST_CASE("quadratic field canonical form") {
  CHECK(QuadExt(Rational(1), Rational(2), 1) == QuadExt(3));
  CHECK(QuadExt(Rational(1), Rational(0), 5).D() == 1);
  CHECK(QuadExt::sqrt_of(8) == QuadExt(Rational(0), Rational(2), 2));
  CHECK(QuadExt::sqrt_of(9) == QuadExt(3));
  CHECK_THROWS(QuadExt(Rational(1), Rational(1), 4));
  CHECK_THROWS(QuadExt::sqrt_of(2) + QuadExt::sqrt_of(3));
  const QuadExt x(Rational(3), Rational(-2), 2);
  CHECK(x.conjugate() == QuadExt(Rational(3), Rational(2), 2));
  CHECK(x.norm() == 1);
  CHECK(x * x.inverse() == QuadExt(1));
  CHECK(x.str() == "3+-2*sqrt(2)");
}

TEST_CASE("quadratic field ring axioms and norm") {
  std::mt19937_64 rng(11);
  for (const std::int64_t D : {2, 3, 5, 6, 7, 10}) {
    for (int trial = 0; trial < 30; ++trial) {
      const QuadExt x(random_rational(rng, 100), random_rational(rng, 100), D);
      const QuadExt y(random_rational(rng, 100), random_rational(rng, 100), D);
      const QuadExt z(random_rational(rng, 100), random_rational(rng, 100), D);
      CHECK(x * y == y * x);
      CHECK((x * y) * z == x * (y * z));
      CHECK(x * (y + z) == x * y + x * z);
      CHECK((x * y).norm() == x.norm() * y.norm());
    }
  }
}

TEST_CASE("exact sign agrees with floating evaluation") {
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<long> coef(-1'000'000, 1'000'000);
  const std::int64_t Ds[] = {2, 3, 5, 7, 11, 13};
  for (int trial = 0; trial < 1000; ++trial) {
    const std::int64_t D = Ds[trial % 6];
    const long a = coef(rng), b = coef(rng);
    const QuadExt x(Rational(a), Rational(b), D);
    const long double v = static_cast<long double>(a) + static_cast<long double>(b) * std::sqrt(static_cast<long double>(D));
    const int expected = v > 0 ? 1 : (v < 0 ? -1 : 0);
    CHECK(x.sign() == expected);
  }
}
