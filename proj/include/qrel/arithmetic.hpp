#pragma once

#include <cstdint>

#include "qrel/rational.hpp"

namespace qrel {

/// sum_{d | n} d^k, n >= 1.
BigInt sigma_k(std::int64_t n, int k);

/// (1/2) sum_{d | n} min(d, n/d)^k, n >= 1.
Rational lambda_k(std::int64_t n, int k);

/// sum_{d | n, d <= sqrt(n), d == -a (p)} d^k + sum_{d | n, d < sqrt(n), d == a (p)} d^k.
/// p must be an odd prime or 1 (p = 1 gives 2 lambda_k(n)); 0 <= a < p.
Rational lambda_k_pa(std::int64_t n, int k, std::int64_t p, std::int64_t a);

}  // namespace qrel
