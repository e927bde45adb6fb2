#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace qrel {

/// floor(sqrt(n)) for n >= 0.
std::int64_t isqrt(std::int64_t n);
bool is_square(std::int64_t n);
/// sqrt(n) when n is a perfect square.
std::optional<std::int64_t> exact_sqrt(std::int64_t n);

/// Least nonnegative residue of a modulo m (m > 0).
constexpr std::int64_t mod(std::int64_t a, std::int64_t m) {
  const std::int64_t r = a % m;
  return r < 0 ? r + m : r;
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m);
/// Inverse of a modulo m; throws std::domain_error if gcd(a, m) != 1.
std::int64_t invmod(std::int64_t a, std::int64_t m);

bool is_prime(std::int64_t n);
/// Prime factorization by trial division, n >= 1.
std::map<std::int64_t, int> factorize(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);

/// n = core * root^2 with core squarefree (n > 0).
struct SquarefreeSplit {
  std::int64_t core;
  std::int64_t root;
};
SquarefreeSplit squarefree_split(std::int64_t n);

/// Legendre symbol (a / p) for an odd prime p.
int legendre(std::int64_t a, std::int64_t p);
/// Kronecker symbol (d / n) for any integers d, n.
int kronecker(std::int64_t d, std::int64_t n);

}  // namespace qrel
