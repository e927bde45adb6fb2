#include <doctest.h>

#include <cmath>

#include "qrel/arithmetic.hpp"
#include "qrel/character.hpp"
#include "qrel/elliptic.hpp"
#include "qrel/hurwitz.hpp"
#include "qrel/integer_utils.hpp"
#include "qrel/modular_forms.hpp"

using namespace qrel;

TEST_CASE("Hurwitz generating series") {
  const RSeries h = hurwitz_series(100);
  CHECK(h[0] == Rational(-1, 12));
  CHECK(h[1] == 0);
  CHECK(h[4] == Rational(1, 2));
  for (std::int64_t n = 0; n <= 100; ++n) CHECK(h[n] == hurwitz(n));
}

TEST_CASE("unary theta series") {
  const RSeries th = theta_classical(50);
  CHECK(th[0] == 1);
  CHECK(th[4] == 2);
  CHECK(th[3] == 0);
  CHECK(theta_half(1, DirichletCharacter::trivial(), 50) == th);
  const DirichletCharacter chi5 = kronecker_character(5);
  CHECK(theta_half(1, chi5, 50)[1] == 2);
  CHECK(theta_half(1, chi5, 50)[4] == -2);
  CHECK(theta_half(2, DirichletCharacter::trivial(), 50)[8] == 2);
  CHECK_THROWS(theta_half(1, kronecker_character(-4), 10));

  const DirichletCharacter chi4 = kronecker_character(-4);
  const RSeries t32 = theta_three_half(1, chi4, 100);
  CHECK(t32[1] == 2);
  CHECK(t32[9] == -6);
  CHECK(t32[25] == 10);
  CHECK(t32[7] == 0);
  CHECK(theta_three_half(3, chi4, 100)[12] == 0);  // alpha = 2 is even
  CHECK(theta_three_half(3, chi4, 100)[27] == -6);
  CHECK_THROWS(theta_three_half(1, chi5, 10));

  const RSeries sq = mul(th, th);
  for (const auto& [n, c] : sq.terms()) CHECK(c.sign() > 0);
}

TEST_CASE("congruence theta series partition the classical theta") {
  CHECK(theta_congruence(5, 0, 30)[0] == 1);
  CHECK(theta_congruence(5, 0, 30)[25] == 2);
  CHECK(theta_congruence(5, 1, 30)[1] == 1);
  CHECK(theta_congruence(5, 1, 30)[16] == 1);
  for (const std::int64_t p : {5, 7}) {
    RSeries total(2000);
    for (std::int64_t a = 0; a < p; ++a) total = add(total, theta_congruence(p, a, 2000));
    CHECK(total == theta_classical(2000));
  }
}

TEST_CASE("Eisenstein series and cusp forms") {
  const RSeries g2 = eisenstein_g2(10);
  CHECK(g2[0] == Rational(-1, 24));
  CHECK(g2[1] == 1);
  CHECK(g2[6] == 12);
  const RSeries d = delta12(200);
  CHECK(d[1] == 1);
  CHECK(d[2] == -24);
  CHECK(d[3] == 252);
  for (std::int64_t n = 1; n <= 200; ++n) {
    const BigInt diff = d[n].num() - sigma_k(n, 11);
    CHECK(mpz_divisible_ui_p(diff.get_mpz_t(), 691) != 0);
  }
  const RSeries e = eta2_pow12(10);
  CHECK(e[1] == 1);
  CHECK(e[2] == 0);
  CHECK(e[3] == -12);
}

TEST_CASE("g7 from point counts") {
  const PartialSeries g = g7(200);
  CHECK(g.at(1) == 1);
  CHECK(g.at(5) == 0);
  CHECK(g.at(25) == -5);
  CHECK(g.at(11) == ec_ap(kG7A4, kG7A6, 11));
  for (const std::int64_t n : {2, 3, 6, 7, 14, 21, 49}) {
    CHECK(!g.is_defined(n));
    CHECK(!g7_supported(n));
    CHECK_THROWS_AS(g.at(n), std::domain_error);
  }
  CHECK(g7_supported(55));
  CHECK(g.at(55) == g.at(5) * g.at(11));
  for (std::int64_t p = 5; p <= 200; ++p) {
    if (!is_prime(p) || p == 7) continue;
    const double ap = g.at(p).get_d();
    CHECK(ap * ap <= 4.0 * static_cast<double>(p));
  }
}

TEST_CASE("series catalog") {
  const auto h1 = catalog_series("H", 60);
  const auto h2 = catalog_series("H", 60);
  CHECK(h1.get() == h2.get());
  CHECK(h1->series == hurwitz_series(60));
  CHECK(h1->info.weight == HalfInt{3});
  CHECK(catalog_series("G2", 2)->series == RSeries::from_dense({Rational(-1, 24), 1, 3}));
  CHECK(catalog_series("Delta", 5)->series == delta12(5));
  CHECK(catalog_series("theta_pa:5:1", 20)->series == theta_congruence(5, 1, 20));
  CHECK(catalog_series("theta_half:2:1", 20)->series == theta_half(2, DirichletCharacter::trivial(), 20));
  CHECK(catalog_series("theta32:1:chi4", 20)->series ==
        theta_three_half(1, kronecker_character(-4), 20));
  const auto g = catalog_series("g7", 30);
  CHECK(!g->is_defined(2));
  CHECK(g->is_defined(11));
  CHECK_THROWS_AS(catalog_series("nosuch", 10), std::invalid_argument);
  CHECK_THROWS_AS(describe_series("nosuch"), std::invalid_argument);
  CHECK(describe_series("eta2_12").level == 4);
  CHECK(catalog_ids().size() >= 9);
}
