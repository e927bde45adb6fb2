#include "qrel/arithmetic.hpp"

#include <stdexcept>

#include "qrel/integer_utils.hpp"

namespace qrel {

namespace {

BigInt power(std::int64_t d, int k) {
  BigInt r;
  mpz_ui_pow_ui(r.get_mpz_t(), static_cast<unsigned long>(d), static_cast<unsigned long>(k));
  return r;
}

void require_positive(std::int64_t n, const char* what) {
  if (n < 1) throw std::domain_error(std::string(what) + ": n must be positive");
}

}  // namespace

BigInt sigma_k(std::int64_t n, int k) {
  require_positive(n, "sigma_k");
  if (k < 0) throw std::domain_error("sigma_k: negative k");
  BigInt total = 0;
  for (const auto d : divisors(n)) total += power(d, k);
  return total;
}

Rational lambda_k(std::int64_t n, int k) {
  require_positive(n, "lambda_k");
  BigInt total = 0;
  for (const auto d : divisors(n)) total += power(std::min(d, n / d), k);
  return Rational(total, 2);
}

Rational lambda_k_pa(std::int64_t n, int k, std::int64_t p, std::int64_t a) {
  require_positive(n, "lambda_k_pa");
  if (p != 1 && (p < 3 || !is_prime(p)))
    throw std::domain_error("lambda_k_pa: p must be an odd prime or 1");
  if (a < 0 || a >= p) throw std::domain_error("lambda_k_pa: need 0 <= a < p");
  BigInt total = 0;
  for (const auto d : divisors(n)) {
    if (d * d > n) break;
    if (mod(d + a, p) == 0) total += power(d, k);
    if (d * d < n && mod(d - a, p) == 0) total += power(d, k);
  }
  return Rational(total);
}

}  // namespace qrel
