#include <stdexcept>
#include <vector>

#include "qrel/qseries.hpp"

namespace qrel {

RSeries euler_product(std::int64_t T) {
  // sum_k (-1)^k q^{k(3k-1)/2} over all integers k.
  RSeries f(T);
  f.set(0, Rational(1));
  for (std::int64_t k = 1;; ++k) {
    const std::int64_t e1 = k * (3 * k - 1) / 2;
    const std::int64_t e2 = k * (3 * k + 1) / 2;
    if (e1 > T) break;
    const Rational sign(k % 2 ? -1 : 1);
    f.set(e1, sign);
    if (e2 <= T) f.set(e2, sign);
  }
  return f;
}

RSeries eta_product(const std::vector<std::pair<std::int64_t, std::int64_t>>& factors,
                    std::int64_t T) {
  if (T < 0) throw std::invalid_argument("eta_product: negative truncation");
  std::int64_t weight_sum = 0;
  for (const auto& [d, e] : factors) {
    if (d < 1) throw std::invalid_argument("eta_product: level factors must be positive");
    weight_sum += d * e;
  }
  if (weight_sum < 0 || weight_sum % 24 != 0)
    throw std::invalid_argument("eta_product: leading power " + std::to_string(weight_sum) +
                                "/24 is not a nonnegative integer");
  const std::int64_t lead = weight_sum / 24;
  RSeries out(T);
  if (lead > T) return out;
  const std::int64_t M = T - lead;

  // Logarithmic derivative: n a(n) = -sum_{k=1}^{n} c(k) a(n-k),
  // c(k) = sum_{d | k} e_d d sigma_1(k/d).
  std::vector<std::int64_t> sigma(static_cast<std::size_t>(M + 1), 0);
  for (std::int64_t d = 1; d <= M; ++d)
    for (std::int64_t m = d; m <= M; m += d) sigma[static_cast<std::size_t>(m)] += d;
  std::vector<std::int64_t> c(static_cast<std::size_t>(M + 1), 0);
  for (const auto& [d, e] : factors)
    for (std::int64_t k = d; k <= M; k += d)
      c[static_cast<std::size_t>(k)] += e * d * sigma[static_cast<std::size_t>(k / d)];

  std::vector<BigInt> a(static_cast<std::size_t>(M + 1));
  a[0] = 1;
  BigInt acc;
  for (std::int64_t n = 1; n <= M; ++n) {
    acc = 0;
    for (std::int64_t k = 1; k <= n; ++k) {
      const std::int64_t ck = c[static_cast<std::size_t>(k)];
      if (ck == 0) continue;
      const BigInt& prev = a[static_cast<std::size_t>(n - k)];
      if (ck > 0)
        mpz_addmul_ui(acc.get_mpz_t(), prev.get_mpz_t(), static_cast<unsigned long>(ck));
      else
        mpz_submul_ui(acc.get_mpz_t(), prev.get_mpz_t(), static_cast<unsigned long>(-ck));
    }
    mpz_divexact_ui(acc.get_mpz_t(), acc.get_mpz_t(), static_cast<unsigned long>(n));
    a[static_cast<std::size_t>(n)] = -acc;
  }
  for (std::int64_t n = 0; n <= M; ++n)
    if (a[static_cast<std::size_t>(n)] != 0) out.set(n + lead, Rational(a[static_cast<std::size_t>(n)]));
  return out;
}

}  // namespace qrel
