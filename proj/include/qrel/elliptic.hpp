#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "qrel/rational.hpp"

namespace qrel {

/// a_p of y^2 = x^3 + a4 x + a6 by Legendre-symbol point counting.
/// Requires p >= 5 prime with good reduction.
std::int64_t ec_ap(std::int64_t a4, std::int64_t a6, std::int64_t p);

/// Coefficients known on a subset of indices.
class PartialSeries {
 public:
  PartialSeries(std::vector<BigInt> values, std::vector<bool> defined);

  std::int64_t trunc() const { return static_cast<std::int64_t>(values_.size()) - 1; }
  bool is_defined(std::int64_t n) const;
  /// Throws std::domain_error when a(n) is undefined.
  const BigInt& at(std::int64_t n) const;
  std::vector<std::int64_t> defined_indices() const;

 private:
  std::vector<BigInt> values_;
  std::vector<bool> defined_;
};

struct HeckeOptions {
  int weight = 2;
  /// Prime of multiplicative reduction: a(p^k) = a(p)^k.
  std::int64_t bad_prime = 0;
  /// Primes whose data is deliberately absent; indices divisible by them stay undefined.
  std::set<std::int64_t> unknown_primes;
};

/// Extends prime data a(p) to a(1..T) by multiplicativity and the Hecke
/// recursion a(p^{k+1}) = a(p) a(p^k) - p^{w-1} a(p^{k-1}).
/// Throws std::invalid_argument if a prime <= T has neither data nor is unknown.
PartialSeries hecke_extend(const std::map<std::int64_t, std::int64_t>& ap, std::int64_t T,
                           const HeckeOptions& options = {});

}  // namespace qrel
