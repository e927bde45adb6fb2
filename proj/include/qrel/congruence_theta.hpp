#pragma once

#include <cstdint>

#include "qrel/qseries.hpp"

namespace qrel {

/// Lambda^{(p,a)}_nu: sum over residues +-a (a single class when a == 0) of
///   2 sum_{m > n >= 1, m == +-a (p)} (m - n)^{2nu+1} q^{m^2 - n^2} + sum_{m >= 1, m == +-a (p)} m^{2nu+1} q^{m^2}.
/// p odd prime or 1, 0 <= a < p.
RSeries lambda_pa(std::int64_t p, std::int64_t a, int nu, std::int64_t T);

/// sum_{n=1}^{T} lambda_k^{(p,a)}(n) q^n; p = 1 allowed (then a = 0).
RSeries d_pa_series(std::int64_t p, std::int64_t a, int k, std::int64_t T);

enum class LambdaPaU4Form {
  /// As stated.
  Stated,
  /// Both classes +-(a-b)/2 in the pair terms and an explicit p | d divisor
  /// sum in place of the V(p) term; only differs from Stated for a != 0.
  Corrected,
};

/// Right-hand side of the operator identity for (Lambda^{(p,a)}_nu | U(4)), k = 2nu+1.
RSeries lambda_pa_u4_rhs(std::int64_t p, std::int64_t a, int nu, std::int64_t T, LambdaPaU4Form form);

/// 2 sum_{d | n, d^2 < n, p | d, n/d == +-a (p)} d^k.
RSeries lambda_pa_divisor_term(std::int64_t p, std::int64_t a, int k, std::int64_t T);

}  // namespace qrel
