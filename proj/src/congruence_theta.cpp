#include "qrel/congruence_theta.hpp"

#include <stdexcept>

#include "qrel/arithmetic.hpp"
#include "qrel/integer_utils.hpp"

namespace qrel {

namespace {

void check_pa(std::int64_t p, std::int64_t a) {
  if (p != 1 && (p < 3 || !is_prime(p)))
    throw std::invalid_argument("p must be an odd prime or 1");
  if (a < 0 || a >= p) throw std::invalid_argument("a must satisfy 0 <= a < p");
}

BigInt ipow(std::int64_t b, int e) {
  BigInt v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(b), static_cast<unsigned long>(e));
  return v;
}

}  // namespace

RSeries lambda_pa(std::int64_t p, std::int64_t a, int nu, std::int64_t T) {
  check_pa(p, a);
  if (nu < 0) throw std::invalid_argument("lambda_pa: negative nu");
  if (T < 0) throw std::invalid_argument("lambda_pa: negative truncation");
  std::vector<BigInt> c(static_cast<std::size_t>(T + 1));
  const int e = 2 * nu + 1;
  std::vector<std::int64_t> classes{a};
  if (a != 0) classes.push_back(p - a);
  for (const auto rho : classes) {
    for (std::int64_t m = rho == 0 ? p : rho; 2 * m - 1 <= T || m * m <= T; m += p) {
      if (m * m <= T) c[static_cast<std::size_t>(m * m)] += ipow(m, e);
      for (std::int64_t n = m - 1; n >= 1 && m * m - n * n <= T; --n)
        c[static_cast<std::size_t>(m * m - n * n)] += 2 * ipow(m - n, e);
    }
  }
  RSeries out(T);
  for (std::int64_t n = 0; n <= T; ++n)
    if (c[static_cast<std::size_t>(n)] != 0) out.set(n, Rational(c[static_cast<std::size_t>(n)]));
  return out;
}

RSeries d_pa_series(std::int64_t p, std::int64_t a, int k, std::int64_t T) {
  check_pa(p, a);
  RSeries out(T);
  for (std::int64_t n = 1; n <= T; ++n) out.set(n, lambda_k_pa(n, k, p, a));
  return out;
}

RSeries lambda_pa_divisor_term(std::int64_t p, std::int64_t a, int k, std::int64_t T) {
  check_pa(p, a);
  RSeries out(T);
  for (std::int64_t n = 1; n <= T; ++n) {
    Rational total;
    for (const auto d : divisors(n)) {
      if (d * d >= n) break;
      if (d % p != 0) continue;
      const std::int64_t e = mod(n / d, p);
      if (e == a || e == mod(-a, p)) total += Rational(d).pow(k);
    }
    if (!total.is_zero()) out.set(n, Rational(2) * total);
  }
  return out;
}

RSeries lambda_pa_u4_rhs(std::int64_t p, std::int64_t a, int nu, std::int64_t T, LambdaPaU4Form form) {
  check_pa(p, a);
  if (p == 1) throw std::invalid_argument("lambda_pa_u4_rhs: p must be an odd prime");
  const int k = 2 * nu + 1;
  const std::int64_t inv2 = invmod(2, p), inv4 = invmod(4, p);
  auto D = [&](std::int64_t x) { return d_pa_series(p, mod(x, p), k, T); };
  const Rational pk = Rational(p).pow(k);
  RSeries total(T);
  if (a != 0) {
    for (std::int64_t b = 0; b < p; ++b) {
      if (mod(b - a, p) == 0 || mod(b + a, p) == 0) continue;
      const std::int64_t x = mod((a - b) * inv2, p);
      const std::int64_t r = mod((a * a - b * b) * inv4, p);
      RSeries term = D(x);
      if (form == LambdaPaU4Form::Corrected) term = term + D(-x);
      total = total + sieve(term, p, r);
    }
    total = total + sieve(D(a) + D(-a), p, 0);
    if (form == LambdaPaU4Form::Stated)
      total = total + scale(pk, v_op(d_pa_series(1, 0, k, T), p).truncated(T));
    else
      total = total + sieve(lambda_pa_divisor_term(p, a, k, T), p, 0);
  } else {
    for (std::int64_t b = 1; b < p; ++b)
      total = total + sieve(D(b * inv2), p, mod(-b * b * inv4, p));
    total = total + scale(pk, v_op(d_pa_series(1, 0, k, T), p * p).truncated(T));
  }
  return scale(Rational(2).pow(k), total);
}

}  // namespace qrel
