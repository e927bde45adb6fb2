#include "qrel/special.hpp"

#include <stdexcept>

namespace qrel {

Rational falling_factorial(const Rational& x, long m) {
  if (m < 0) throw std::domain_error("falling_factorial: negative length");
  Rational r(1);
  for (long i = 0; i < m; ++i) r *= x - Rational(i);
  return r;
}

Rational gen_binom(const Rational& x, long m) {
  if (m < 0) return Rational(0);
  return falling_factorial(x, m) / Rational(factorial(m));
}

Rational pochhammer(const Rational& a, long n) {
  if (n < 0) throw std::domain_error("pochhammer: negative length");
  Rational r(1);
  for (long j = 0; j < n; ++j) r *= a + Rational(j);
  return r;
}

BigInt factorial(long n) {
  if (n < 0) throw std::domain_error("factorial: negative argument");
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
  return r;
}

BigInt binomial(long n, long k) {
  if (k < 0 || n < 0 || k > n) return 0;
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt multinomial(long n, long a, long b) {
  if (a < 0 || b < 0 || a + b > n) throw std::domain_error("multinomial: invalid parts");
  return factorial(n) / (factorial(a) * factorial(b) * factorial(n - a - b));
}

PiScalar gamma_half(HalfInt h) {
  if (h.twice <= 0) throw std::domain_error("gamma_half: argument must be positive");
  if (h.is_integer()) return {Rational(factorial(h.twice / 2 - 1)), 0};
  // Gamma(j + 1/2) = (2j)! / (4^j j!) * sqrt(pi)
  const long j = (h.twice - 1) / 2;
  const BigInt four_j = BigInt(1) << static_cast<mp_bitcnt_t>(2 * j);
  return {Rational(factorial(2 * j), four_j * factorial(j)), 1};
}

PiScalar gamma_value(HalfInt h) {
  if (h.twice > 0) return gamma_half(h);
  if (h.is_integer()) throw std::domain_error("gamma_value: pole at " + h.str());
  // Gamma(x) = Gamma(x + m) / (x (x+1) ... (x+m-1)) with x + m = 1/2.
  const long m = (1 - h.twice) / 2;
  return gamma_half(HalfInt{1}) * pochhammer(h.value(), m).inverse();
}

}  // namespace qrel
