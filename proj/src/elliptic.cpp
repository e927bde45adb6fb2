#include "qrel/elliptic.hpp"

#include <stdexcept>
#include <string>

#include "qrel/integer_utils.hpp"

namespace qrel {

std::int64_t ec_ap(std::int64_t a4, std::int64_t a6, std::int64_t p) {
  if (p < 5) throw std::domain_error("ec_ap: short Weierstrass counting needs p >= 5");
  if (!is_prime(p)) throw std::domain_error("ec_ap: p must be prime");
  // 4 a4^3 + 27 a6^2 == 0 (mod p) means bad reduction.
  const std::int64_t A = mod(a4, p), B = mod(a6, p);
  const std::int64_t disc = mod(4 * (A * A % p) % p * A + 27 * (B * B % p), p);
  if (disc == 0) throw std::domain_error("ec_ap: bad reduction at p = " + std::to_string(p));
  std::int64_t sum = 0;
  for (std::int64_t x = 0; x < p; ++x) sum += legendre((x * x % p * x + A * x + B) % p, p);
  return -sum;
}

PartialSeries::PartialSeries(std::vector<BigInt> values, std::vector<bool> defined)
    : values_(std::move(values)), defined_(std::move(defined)) {
  if (values_.size() != defined_.size() || values_.empty())
    throw std::invalid_argument("PartialSeries: mismatched tables");
}

bool PartialSeries::is_defined(std::int64_t n) const {
  return n >= 0 && n <= trunc() && defined_[static_cast<std::size_t>(n)];
}

const BigInt& PartialSeries::at(std::int64_t n) const {
  if (!is_defined(n))
    throw std::domain_error("PartialSeries: coefficient " + std::to_string(n) + " is undefined");
  return values_[static_cast<std::size_t>(n)];
}

std::vector<std::int64_t> PartialSeries::defined_indices() const {
  std::vector<std::int64_t> out;
  for (std::int64_t n = 0; n <= trunc(); ++n)
    if (defined_[static_cast<std::size_t>(n)]) out.push_back(n);
  return out;
}

PartialSeries hecke_extend(const std::map<std::int64_t, std::int64_t>& ap, std::int64_t T,
                           const HeckeOptions& options) {
  if (T < 1) throw std::invalid_argument("hecke_extend: T must be positive");
  std::vector<BigInt> values(static_cast<std::size_t>(T + 1), 0);
  std::vector<bool> defined(static_cast<std::size_t>(T + 1), false);
  values[1] = 1;
  defined[1] = true;
  for (std::int64_t n = 2; n <= T; ++n) {
    const auto fac = factorize(n);
    BigInt a = 1;
    bool ok = true;
    for (const auto& [p, e] : fac) {
      if (options.unknown_primes.count(p)) {
        ok = false;
        break;
      }
      const auto it = ap.find(p);
      if (it == ap.end())
        throw std::invalid_argument("hecke_extend: missing a_p for p = " + std::to_string(p));
      const BigInt a_p = it->second;
      BigInt prev = 1, cur = a_p;
      if (p == options.bad_prime) {
        mpz_pow_ui(cur.get_mpz_t(), a_p.get_mpz_t(), static_cast<unsigned long>(e));
      } else {
        BigInt pk;
        mpz_ui_pow_ui(pk.get_mpz_t(), static_cast<unsigned long>(p),
                      static_cast<unsigned long>(options.weight - 1));
        for (int k = 1; k < e; ++k) {
          BigInt next = a_p * cur - pk * prev;
          prev = cur;
          cur = next;
        }
      }
      a *= cur;
    }
    if (ok) {
      values[static_cast<std::size_t>(n)] = a;
      defined[static_cast<std::size_t>(n)] = true;
    }
  }
  return {std::move(values), std::move(defined)};
}

}  // namespace qrel
