#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "qrel/character.hpp"
#include "qrel/elliptic.hpp"
#include "qrel/piscalar.hpp"
#include "qrel/qseries.hpp"

namespace qrel {

/// sum_{n <= T} H(n) q^n
RSeries hurwitz_series(std::int64_t T);
/// sum_{n in Z} q^{n^2}
RSeries theta_classical(std::int64_t T);
/// sum_{n in Z} chi(n) q^{s n^2}; chi must be even.
RSeries theta_half(std::int64_t s, const DirichletCharacter& chi, std::int64_t T);
/// sum_{n in Z} n chi(n) q^{s n^2}; chi must be odd.
RSeries theta_three_half(std::int64_t s, const DirichletCharacter& chi, std::int64_t T);
/// sum_{n == a (p)} q^{n^2}
RSeries theta_congruence(std::int64_t p, std::int64_t a, std::int64_t T);
/// -1/24 + sum sigma_1(n) q^n
RSeries eisenstein_g2(std::int64_t T);
/// eta(tau)^24
RSeries delta12(std::int64_t T);
/// eta(2 tau)^12
RSeries eta2_pow12(std::int64_t T);

/// Curve y^2 = x^3 - 2835 x - 71442 attached to g7.
inline constexpr std::int64_t kG7A4 = -2835;
inline constexpr std::int64_t kG7A6 = -71442;
/// Weight 2 newform of the curve above, defined on indices whose prime
/// factors are all >= 5 and != 7.
PartialSeries g7(std::int64_t T);
bool g7_supported(std::int64_t n);

struct NamedSeries {
  std::string id;
  HalfInt weight;
  std::int64_t level = 1;
};

/// A catalog series; `defined` is empty when every coefficient is known.
struct CatalogSeries {
  NamedSeries info;
  RSeries series;
  std::vector<bool> defined;

  bool is_defined(std::int64_t n) const {
    return defined.empty() || defined[static_cast<std::size_t>(n)];
  }
};

/// Ids: H, theta, theta_half:s:chi, theta32:s:chi, theta_pa:p:a, G2, Delta,
/// eta2_12, g7. Results are memoized per (id, T). Throws std::invalid_argument
/// for unknown ids.
std::shared_ptr<const CatalogSeries> catalog_series(const std::string& id, std::int64_t T);
/// Metadata without building; throws for unknown ids.
NamedSeries describe_series(const std::string& id);
std::vector<std::string> catalog_ids();

}  // namespace qrel
