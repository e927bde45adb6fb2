#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <vector>

#include "qrel/rational.hpp"

namespace qrel {

/// Integral binary quadratic form a x^2 + b xy + c y^2.
struct Form {
  std::int64_t a, b, c;
  friend bool operator==(const Form&, const Form&) = default;
};

/// Reduced forms of discriminant -n (|b| <= a <= c, b >= 0 if |b| = a or a = c),
/// imprimitive forms included. Requires n > 0, n == 0, 3 (mod 4).
std::vector<Form> reduced_forms(std::int64_t n);

/// Weight of a reduced form in H(n): 1/3 for multiples of (1,1,1), 1/2 for
/// multiples of (1,0,1), else 1.
Rational form_weight(const Form& f);

/// H(n) from reduced_forms; -1/12 at 0, 0 for n < 0 and n == 1, 2 (mod 4).
Rational hurwitz(std::int64_t n);

/// Number of primitive reduced forms of discriminant disc < 0.
std::int64_t class_number(std::int64_t disc);

/// H(n) as sum over f^2 | n of weighted class numbers h_w(-n/f^2).
Rational hurwitz_by_class_numbers(std::int64_t n);

/// Immutable table of H(0..max_n).
class HurwitzTable {
 public:
  /// One sweep over all reduced forms with discriminant >= -max_n.
  static HurwitzTable build(std::int64_t max_n);
  static HurwitzTable from_values(std::vector<Rational> values);

  std::int64_t max_n() const { return static_cast<std::int64_t>(values_.size()) - 1; }
  /// H(n); 0 for n < 0, throws std::out_of_range above max_n.
  const Rational& operator()(std::int64_t n) const;
  const std::vector<Rational>& values() const { return values_; }

  /// Copy with H(n) replaced by v (for fault-injection tests).
  HurwitzTable with_override(std::int64_t n, const Rational& v) const;

 private:
  std::vector<Rational> values_;
};

/// CSV persistence of H(0..N) as "n,num,den" lines, sorted by n.
class HurwitzCache {
 public:
  explicit HurwitzCache(std::filesystem::path dir);

  /// $QREL_CACHE_DIR, else ./.qrel-cache
  static std::filesystem::path default_dir();

  const std::filesystem::path& dir() const { return dir_; }
  std::filesystem::path file() const { return dir_ / "hurwitz.csv"; }

  /// Persisted table, or nullptr when no cache file exists.
  std::shared_ptr<const HurwitzTable> load() const;

  /// Table covering max_n. Reuses the file when it already covers max_n,
  /// otherwise builds and rewrites it. Sets *rebuilt accordingly.
  std::shared_ptr<const HurwitzTable> ensure(std::int64_t max_n, bool* rebuilt = nullptr);

 private:
  std::filesystem::path dir_;
  mutable std::shared_mutex mutex_;
  std::shared_ptr<const HurwitzTable> current_;
};

/// Process-wide table covering at least max_n. Persists through HurwitzCache
/// only when QREL_CACHE_DIR is set.
std::shared_ptr<const HurwitzTable> hurwitz_table(std::int64_t max_n);

}  // namespace qrel
