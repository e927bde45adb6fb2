#include "qrel/hurwitz.hpp"

#include <cstdlib>
#include <fstream>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "qrel/integer_utils.hpp"
#include "qrel/qseries.hpp"

namespace qrel {

namespace {

bool is_reduced(std::int64_t a, std::int64_t b, std::int64_t c) {
  if (std::abs(b) > a || a > c) return false;
  if (b < 0 && (-b == a || a == c)) return false;
  return true;
}

}  // namespace

std::vector<Form> reduced_forms(std::int64_t n) {
  if (n <= 0 || (n % 4 != 0 && n % 4 != 3))
    throw std::domain_error("reduced_forms: need n > 0 with n == 0, 3 (mod 4)");
  std::vector<Form> out;
  for (std::int64_t a = 1; 3 * a * a <= n; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b + n;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (is_reduced(a, b, c)) out.push_back({a, b, c});
    }
  }
  return out;
}

Rational form_weight(const Form& f) {
  if (f.a == f.b && f.b == f.c) return Rational(1, 3);
  if (f.b == 0 && f.a == f.c) return Rational(1, 2);
  return Rational(1);
}

Rational hurwitz(std::int64_t n) {
  if (n < 0) return Rational(0);
  if (n == 0) return Rational(-1, 12);
  if (n % 4 == 1 || n % 4 == 2) return Rational(0);
  Rational total;
  for (const auto& f : reduced_forms(n)) total += form_weight(f);
  return total;
}

std::int64_t class_number(std::int64_t disc) {
  if (disc >= 0 || mod(disc, 4) > 1) throw std::domain_error("class_number: bad discriminant");
  const std::int64_t n = -disc;
  std::int64_t count = 0;
  for (std::int64_t a = 1; 3 * a * a <= n; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      const std::int64_t num = b * b + n;
      if (num % (4 * a) != 0) continue;
      const std::int64_t c = num / (4 * a);
      if (!is_reduced(a, b, c)) continue;
      if (std::gcd(std::gcd(a, std::abs(b)), c) == 1) ++count;
    }
  }
  return count;
}

Rational hurwitz_by_class_numbers(std::int64_t n) {
  if (n < 0) return Rational(0);
  if (n == 0) return Rational(-1, 12);
  Rational total;
  for (std::int64_t f = 1; f * f <= n; ++f) {
    if (n % (f * f) != 0) continue;
    const std::int64_t m = n / (f * f);
    if (m % 4 != 0 && m % 4 != 3) continue;
    const auto h = class_number(-m);
    if (m == 3)
      total += Rational(h, 3);
    else if (m == 4)
      total += Rational(h, 2);
    else
      total += Rational(h);
  }
  return total;
}

HurwitzTable HurwitzTable::build(std::int64_t max_n) {
  if (max_n < 0) throw std::invalid_argument("HurwitzTable: negative bound");
  // Count in sixths so the sweep stays in machine integers.
  std::vector<std::int64_t> sixths(static_cast<std::size_t>(max_n + 1), 0);
  for (std::int64_t a = 1; 3 * a * a <= max_n; ++a) {
    for (std::int64_t b = -a + 1; b <= a; ++b) {
      for (std::int64_t c = a;; ++c) {
        const std::int64_t n = 4 * a * c - b * b;
        if (n > max_n) break;
        if (!is_reduced(a, b, c)) continue;
        const Form f{a, b, c};
        std::int64_t w = 6;
        if (f.a == f.b && f.b == f.c)
          w = 2;
        else if (f.b == 0 && f.a == f.c)
          w = 3;
        sixths[static_cast<std::size_t>(n)] += w;
      }
    }
  }
  std::vector<Rational> values(static_cast<std::size_t>(max_n + 1));
  values[0] = Rational(-1, 12);
  for (std::int64_t n = 1; n <= max_n; ++n)
    values[static_cast<std::size_t>(n)] = Rational(sixths[static_cast<std::size_t>(n)], 6);
  return from_values(std::move(values));
}

HurwitzTable HurwitzTable::from_values(std::vector<Rational> values) {
  if (values.empty()) throw std::invalid_argument("HurwitzTable: empty table");
  HurwitzTable t;
  t.values_ = std::move(values);
  return t;
}

const Rational& HurwitzTable::operator()(std::int64_t n) const {
  static const Rational zero;
  if (n < 0) return zero;
  if (n > max_n())
    throw std::out_of_range("HurwitzTable: H(" + std::to_string(n) + ") beyond table bound " +
                            std::to_string(max_n()));
  return values_[static_cast<std::size_t>(n)];
}

HurwitzTable HurwitzTable::with_override(std::int64_t n, const Rational& v) const {
  if (n < 0 || n > max_n()) throw std::out_of_range("HurwitzTable: override outside table");
  HurwitzTable t = *this;
  t.values_[static_cast<std::size_t>(n)] = v;
  return t;
}

HurwitzCache::HurwitzCache(std::filesystem::path dir) : dir_(std::move(dir)) {}

std::filesystem::path HurwitzCache::default_dir() {
  if (const char* env = std::getenv("QREL_CACHE_DIR"); env && *env) return env;
  return std::filesystem::path(".qrel-cache");
}

std::shared_ptr<const HurwitzTable> HurwitzCache::load() const {
  std::ifstream in(file());
  if (!in) return nullptr;
  const RSeries rows = read_csv_rational(in);
  std::vector<Rational> values = rows.dense();
  if (values.empty() || values[0] != Rational(-1, 12))
    throw std::runtime_error("HurwitzCache: malformed cache file " + file().string());
  return std::make_shared<const HurwitzTable>(HurwitzTable::from_values(std::move(values)));
}

std::shared_ptr<const HurwitzTable> HurwitzCache::ensure(std::int64_t max_n, bool* rebuilt) {
  {
    std::shared_lock lock(mutex_);
    if (current_ && current_->max_n() >= max_n) {
      if (rebuilt) *rebuilt = false;
      return current_;
    }
  }
  std::unique_lock lock(mutex_);
  if (!current_) current_ = load();
  if (current_ && current_->max_n() >= max_n) {
    if (rebuilt) *rebuilt = false;
    return current_;
  }
  auto table = std::make_shared<const HurwitzTable>(HurwitzTable::build(max_n));
  std::filesystem::create_directories(dir_);
  const auto tmp = file().string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::trunc);
    if (!out) throw std::runtime_error("HurwitzCache: cannot write " + tmp);
    write_csv(out, RSeries::from_dense(table->values()));
    if (!out) throw std::runtime_error("HurwitzCache: write failed for " + tmp);
  }
  std::filesystem::rename(tmp, file());
  current_ = table;
  if (rebuilt) *rebuilt = true;
  return current_;
}

std::shared_ptr<const HurwitzTable> hurwitz_table(std::int64_t max_n) {
  static std::mutex mutex;
  static std::shared_ptr<const HurwitzTable> table;
  static std::unique_ptr<HurwitzCache> cache;
  std::lock_guard lock(mutex);
  if (table && table->max_n() >= max_n) return table;
  if (const char* env = std::getenv("QREL_CACHE_DIR"); env && *env) {
    if (!cache) cache = std::make_unique<HurwitzCache>(env);
    table = cache->ensure(max_n);
  } else {
    table = std::make_shared<const HurwitzTable>(HurwitzTable::build(max_n));
  }
  return table;
}

}  // namespace qrel
