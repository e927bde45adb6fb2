#include <doctest.h>

#include <random>
#include <sstream>

#include "qrel/qseries.hpp"

using namespace qrel;

namespace {

RSeries random_series(std::mt19937_64& rng, std::int64_t T, double density = 0.6) {
  std::uniform_int_distribution<long> num(-20, 20), den(1, 6);
  std::bernoulli_distribution keep(density);
  RSeries f(T);
  for (std::int64_t n = 0; n <= T; ++n)
    if (keep(rng)) f.set(n, Rational(BigInt(num(rng)), BigInt(den(rng))));
  return f;
}

// Naive expansion of prod (1 - q^{dn})^e by repeated multiplication by binomials.
std::vector<BigInt> naive_eta(const std::vector<std::pair<std::int64_t, std::int64_t>>& factors,
                              std::int64_t T) {
  std::int64_t shift24 = 0;
  for (const auto& [d, e] : factors) shift24 += d * e;
  const std::int64_t shift = shift24 / 24;
  std::vector<BigInt> c(static_cast<std::size_t>(T + 1), 0);
  c[0] = 1;
  for (const auto& [d, e] : factors) {
    for (std::int64_t n = 1; d * n <= T; ++n) {
      const std::int64_t step = d * n;
      for (std::int64_t rep = 0; rep < (e < 0 ? -e : e); ++rep) {
        if (e > 0) {
          for (std::int64_t i = T; i >= step; --i) c[i] -= c[i - step];
        } else {
          // divide by (1 - q^step): geometric series
          for (std::int64_t i = step; i <= T; ++i) c[i] += c[i - step];
        }
      }
    }
  }
  std::vector<BigInt> out(static_cast<std::size_t>(T + 1), 0);
  for (std::int64_t n = shift; n <= T; ++n) out[n] = c[n - shift];
  return out;
}

}  // namespace

TEST_CASE("multiplication examples") {
  const RSeries a = RSeries::from_dense({1, 1, 0, 0, 0, 0});
  const RSeries b = RSeries::from_dense({1, -1, 0, 0, 0, 0});
  CHECK(mul(a, b) == RSeries::from_dense({1, 0, -1, 0, 0, 0}));
  CHECK(mul(a, one<Rational>(5)) == a);
  const RSeries geo = RSeries::from_dense(std::vector<Rational>(9, Rational(1)));
  CHECK(mul(geo, geo)[4] == 5);
  CHECK(mul(geo, RSeries::from_dense({1, 1, 1})).trunc() == 2);
}

TEST_CASE("ring axioms on random series") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 20; ++trial) {
    const RSeries f = random_series(rng, 64), g = random_series(rng, 64), h = random_series(rng, 64);
    CHECK(mul(f, g) == mul(g, f));
    CHECK(mul(add(f, g), h) == add(mul(f, h), mul(g, h)));
    CHECK(mul(mul(f, g), h) == mul(f, mul(g, h)));
    CHECK(sub(f, f) == RSeries(64));
  }
}

TEST_CASE("sparse and dense convolution agree") {
  std::mt19937_64 rng(5);
  const RSeries f = random_series(rng, 400, 0.02), g = random_series(rng, 400, 0.9);
  const RSeries h = mul(f, g);
  for (std::int64_t n = 0; n <= 400; n += 7) {
    Rational expected;
    for (std::int64_t i = 0; i <= n; ++i) expected += f[i] * g[n - i];
    CHECK(h[n] == expected);
  }
}

TEST_CASE("power and inverse") {
  std::mt19937_64 rng(9);
  const RSeries f = random_series(rng, 30);
  RSeries rep = one<Rational>(30);
  for (int m = 0; m <= 7; ++m) {
    CHECK(pow(f, m) == rep);
    rep = mul(rep, f);
  }
  RSeries g = f;
  g.set(0, Rational(3));
  CHECK(mul(g, inverse(g)) == one<Rational>(30));
  RSeries z = f;
  z.set(0, Rational(0));
  CHECK_THROWS_AS(inverse(z), std::domain_error);
  CHECK_THROWS_AS(pow(f, -1), std::invalid_argument);
}

TEST_CASE("derivative operator") {
  RSeries mono(10);
  mono.set(7, Rational(1, 3));
  CHECK(d_operator(mono)[7] == Rational(7, 3));
  CHECK(d_operator(one<Rational>(10)) == RSeries(10));
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 10; ++trial) {
    const RSeries f = random_series(rng, 40), g = random_series(rng, 40);
    CHECK(d_operator(mul(f, g)) == add(mul(d_operator(f), g), mul(f, d_operator(g))));
    CHECK(d_operator(add(f, g)) == add(d_operator(f), d_operator(g)));
    CHECK(d_power(f, 3) == d_operator(d_operator(d_operator(f))));
  }
}

TEST_CASE("U, V and sieving") {
  std::mt19937_64 rng(23);
  const RSeries f = random_series(rng, 60);
  const RSeries u = u_op(f, 2);
  CHECK(u.trunc() == 30);
  CHECK(u[3] == f[6]);
  for (const std::int64_t N : {1, 2, 3, 4, 5, 7}) {
    const RSeries v = v_op(f, N);
    CHECK(v.trunc() == 60 * N);
    CHECK(u_op(v, N) == f);
    RSeries total(60);
    for (std::int64_t r = 0; r < N; ++r) total = add(total, sieve(f, N, r));
    CHECK(total == f);
    CHECK(u_op(sieve(f, N, 0), N) == u_op(f, N));
  }
  CHECK_THROWS(u_op(f, 0));
}

TEST_CASE("twists compose pointwise") {
  std::mt19937_64 rng(31);
  const RSeries f = random_series(rng, 80);
  const auto chi4 = [](std::int64_t n) { return n % 2 == 0 ? 0 : (n % 4 == 1 ? 1 : -1); };
  const auto chi3 = [](std::int64_t n) { return n % 3 == 0 ? 0 : (n % 3 == 1 ? 1 : -1); };
  const auto both = [&](std::int64_t n) { return chi4(n) * chi3(n); };
  CHECK(twist(twist(f, chi4), chi3) == twist(f, both));
  CHECK(twist(f, [](std::int64_t) { return 1; }) == f);
}

TEST_CASE("eta products") {
  const RSeries delta = eta_product({{1, 24}}, 3);
  CHECK(delta == RSeries::from_dense({0, 1, -24, 252}));
  CHECK(eta_product({{2, 12}}, 3) == RSeries::from_dense({0, 1, 0, -12}));
  CHECK_THROWS_AS(eta_product({{1, 1}}, 5), std::invalid_argument);
  CHECK_THROWS_AS(eta_product({{1, -24}}, 5), std::invalid_argument);

  const std::vector<std::vector<std::pair<std::int64_t, std::int64_t>>> cases = {
      {{1, 24}}, {{2, 12}}, {{1, 8}, {2, 8}}, {{1, -24}, {2, 48}}, {{4, 6}}};
  for (const auto& factors : cases) {
    const auto expected = naive_eta(factors, 120);
    const RSeries got = eta_product(factors, 120);
    for (std::int64_t n = 0; n <= 120; ++n) CHECK(got[n] == Rational(expected[n]));
  }
  const RSeries e = euler_product(200);
  const auto naive = naive_eta({{1, 1}}, 200);  // no shift: 1/24 * 1 floors to zero
  for (std::int64_t n = 0; n <= 200; ++n) CHECK(e[n] == Rational(naive[n]));
}

TEST_CASE("coefficient access outside the truncation") {
  const RSeries f = RSeries::from_dense({1, 2, 3});
  CHECK(f[-1] == 0);
  CHECK_THROWS_AS(f[3], std::out_of_range);
  RSeries g(2);
  CHECK_THROWS_AS(g.set(3, Rational(1)), std::out_of_range);
}

TEST_CASE("csv round trip") {
  std::mt19937_64 rng(41);
  const RSeries f = random_series(rng, 50);
  std::stringstream ss;
  write_csv(ss, f);
  CHECK(read_csv_rational(ss) == f);

  QESeries q(4);
  q.set(1, QuadExt(Rational(1, 2), Rational(-3), 2));
  q.set(4, QuadExt(Rational(5)));
  std::stringstream qs;
  write_csv(qs, q);
  const std::string text = qs.str();
  CHECK(text.find("1,1,2,-3,1,2") != std::string::npos);
  CHECK(read_csv_quad(qs) == q);
}
