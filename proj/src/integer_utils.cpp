#include "qrel/integer_utils.hpp"

#include <cmath>
#include <numeric>
#include <stdexcept>

namespace qrel {

namespace {
__extension__ typedef __int128 Wide;
}  // namespace

std::int64_t isqrt(std::int64_t n) {
  if (n < 0) throw std::domain_error("isqrt: negative argument");
  auto r = static_cast<std::int64_t>(std::sqrt(static_cast<double>(n)));
  while (r > 0 && static_cast<Wide>(r) * r > n) --r;
  while (static_cast<Wide>(r + 1) * (r + 1) <= n) ++r;
  return r;
}

bool is_square(std::int64_t n) { return n >= 0 && isqrt(n) * isqrt(n) == n; }

std::optional<std::int64_t> exact_sqrt(std::int64_t n) {
  if (n < 0) return std::nullopt;
  const auto r = isqrt(n);
  if (r * r != n) return std::nullopt;
  return r;
}

std::int64_t powmod(std::int64_t base, std::int64_t exp, std::int64_t m) {
  if (m == 1) return 0;
  Wide result = 1;
  Wide b = mod(base, m);
  while (exp > 0) {
    if (exp & 1) result = result * b % m;
    b = b * b % m;
    exp >>= 1;
  }
  return static_cast<std::int64_t>(result);
}

std::int64_t invmod(std::int64_t a, std::int64_t m) {
  std::int64_t old_r = mod(a, m), r = m, old_s = 1, s = 0;
  while (r != 0) {
    const std::int64_t q = old_r / r;
    old_r -= q * r;
    std::swap(old_r, r);
    old_s -= q * s;
    std::swap(old_s, s);
  }
  if (old_r != 1) throw std::domain_error("invmod: not invertible");
  return mod(old_s, m);
}

bool is_prime(std::int64_t n) {
  if (n < 2) return false;
  if (n % 2 == 0) return n == 2;
  for (std::int64_t d = 3; d * d <= n; d += 2)
    if (n % d == 0) return false;
  return true;
}

std::map<std::int64_t, int> factorize(std::int64_t n) {
  if (n < 1) throw std::domain_error("factorize: n must be positive");
  std::map<std::int64_t, int> out;
  for (std::int64_t p = 2; p * p <= n; ++p) {
    while (n % p == 0) {
      ++out[p];
      n /= p;
    }
  }
  if (n > 1) ++out[n];
  return out;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::domain_error("divisors: n must be positive");
  std::vector<std::int64_t> small, large;
  for (std::int64_t d = 1; d * d <= n; ++d) {
    if (n % d != 0) continue;
    small.push_back(d);
    if (d * d != n) large.push_back(n / d);
  }
  small.insert(small.end(), large.rbegin(), large.rend());
  return small;
}

SquarefreeSplit squarefree_split(std::int64_t n) {
  if (n < 1) throw std::domain_error("squarefree_split: n must be positive");
  SquarefreeSplit s{1, 1};
  for (const auto& [p, e] : factorize(n)) {
    for (int i = 0; i < e / 2; ++i) s.root *= p;
    if (e % 2) s.core *= p;
  }
  return s;
}

int legendre(std::int64_t a, std::int64_t p) {
  const auto r = mod(a, p);
  if (r == 0) return 0;
  return powmod(r, (p - 1) / 2, p) == 1 ? 1 : -1;
}

namespace {

// Jacobi symbol (a / n) for odd n > 0.
int jacobi(std::int64_t a, std::int64_t n) {
  a = mod(a, n);
  int result = 1;
  while (a != 0) {
    while (a % 2 == 0) {
      a /= 2;
      const auto r = n % 8;
      if (r == 3 || r == 5) result = -result;
    }
    std::swap(a, n);
    if (a % 4 == 3 && n % 4 == 3) result = -result;
    a %= n;
  }
  return n == 1 ? result : 0;
}

}  // namespace

int kronecker(std::int64_t d, std::int64_t n) {
  if (n == 0) return (d == 1 || d == -1) ? 1 : 0;
  int result = 1;
  if (n < 0) {
    n = -n;
    if (d < 0) result = -result;
  }
  int twos = 0;
  while (n % 2 == 0) {
    n /= 2;
    ++twos;
  }
  if (twos > 0) {
    if (d % 2 == 0) return 0;
    const auto r = mod(d, 8);
    if ((r == 3 || r == 5) && (twos % 2 == 1)) result = -result;
  }
  if (n == 1) return result;
  return result * jacobi(d, n);
}

}  // namespace qrel
