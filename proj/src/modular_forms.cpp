#include "qrel/modular_forms.hpp"

#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <stdexcept>

#include "qrel/arithmetic.hpp"
#include "qrel/hurwitz.hpp"
#include "qrel/integer_utils.hpp"

namespace qrel {

RSeries hurwitz_series(std::int64_t T) {
  if (T < 0) throw std::invalid_argument("hurwitz_series: negative truncation");
  const auto H = hurwitz_table(T);
  RSeries f(T);
  for (std::int64_t n = 0; n <= T; ++n) f.set(n, (*H)(n));
  return f;
}

RSeries theta_classical(std::int64_t T) { return theta_half(1, DirichletCharacter::trivial(), T); }

RSeries theta_half(std::int64_t s, const DirichletCharacter& chi, std::int64_t T) {
  if (s < 1) throw std::invalid_argument("theta_half: s must be positive");
  if (!chi.is_even()) throw std::invalid_argument("theta_half: character must be even");
  RSeries f(T);
  if (chi(0) != 0) f.set(0, Rational(chi(0)));
  for (std::int64_t n = 1; s * n * n <= T; ++n) f.set(s * n * n, Rational(2 * chi(n)));
  return f;
}

RSeries theta_three_half(std::int64_t s, const DirichletCharacter& chi, std::int64_t T) {
  if (s < 1) throw std::invalid_argument("theta_three_half: s must be positive");
  if (chi.is_even()) throw std::invalid_argument("theta_three_half: character must be odd");
  RSeries f(T);
  for (std::int64_t n = 1; s * n * n <= T; ++n) f.set(s * n * n, Rational(2 * n * chi(n)));
  return f;
}

RSeries theta_congruence(std::int64_t p, std::int64_t a, std::int64_t T) {
  if (p < 3 || !is_prime(p)) throw std::invalid_argument("theta_congruence: p must be an odd prime");
  if (a < 0 || a >= p) throw std::invalid_argument("theta_congruence: need 0 <= a < p");
  RSeries f(T);
  const std::int64_t r = isqrt(T);
  for (std::int64_t n = -r; n <= r; ++n)
    if (mod(n - a, p) == 0) f.add_to(n * n, Rational(1));
  return f;
}

RSeries eisenstein_g2(std::int64_t T) {
  RSeries f(T);
  f.set(0, Rational(-1, 24));
  for (std::int64_t n = 1; n <= T; ++n) f.set(n, Rational(sigma_k(n, 1)));
  return f;
}

RSeries delta12(std::int64_t T) { return eta_product({{1, 24}}, T); }

RSeries eta2_pow12(std::int64_t T) { return eta_product({{2, 12}}, T); }

bool g7_supported(std::int64_t n) {
  if (n < 1) return false;
  for (const auto& [p, e] : factorize(n))
    if (p < 5 || p == 7) return false;
  return true;
}

PartialSeries g7(std::int64_t T) {
  if (T < 1) throw std::invalid_argument("g7: T must be positive");
  std::map<std::int64_t, std::int64_t> ap;
  for (std::int64_t p = 5; p <= T; ++p)
    if (p != 7 && is_prime(p)) ap[p] = ec_ap(kG7A4, kG7A6, p);
  HeckeOptions opts;
  opts.unknown_primes = {2, 3, 7};
  return hecke_extend(ap, T, opts);
}

namespace {

std::vector<std::string> split(const std::string& id) {
  std::vector<std::string> parts;
  std::stringstream ss(id);
  std::string part;
  while (std::getline(ss, part, ':')) parts.push_back(part);
  if (!id.empty() && id.back() == ':') parts.emplace_back();
  return parts;
}

std::int64_t parse_int(const std::string& text, const std::string& id) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size())
    throw std::invalid_argument("series id '" + id + "': '" + text + "' is not an integer");
  return v;
}

struct Spec {
  NamedSeries info;
  std::function<CatalogSeries(std::int64_t)> build;
};

Spec parse_spec(const std::string& id) {
  const auto parts = split(id);
  const auto plain = [&](HalfInt w, std::int64_t level, auto fn) {
    if (parts.size() != 1) throw std::invalid_argument("series id '" + id + "' takes no parameters");
    NamedSeries info{id, w, level};
    return Spec{info, [info, fn](std::int64_t T) { return CatalogSeries{info, fn(T), {}}; }};
  };
  const std::string& head = parts.empty() ? id : parts[0];
  if (head == "H") return plain(HalfInt{3}, 4, hurwitz_series);
  if (head == "theta") return plain(HalfInt{1}, 4, theta_classical);
  if (head == "G2") return plain(HalfInt::of(2), 1, eisenstein_g2);
  if (head == "Delta") return plain(HalfInt::of(12), 1, delta12);
  if (head == "eta2_12") return plain(HalfInt::of(6), 4, eta2_pow12);
  if (head == "g7") {
    if (parts.size() != 1) throw std::invalid_argument("series id 'g7' takes no parameters");
    NamedSeries info{id, HalfInt::of(2), 49};
    return {info, [info](std::int64_t T) {
              const auto g = g7(std::max<std::int64_t>(T, 1));
              RSeries f(T);
              std::vector<bool> defined(static_cast<std::size_t>(T + 1), false);
              for (std::int64_t n = 0; n <= T; ++n)
                if (g.is_defined(n)) {
                  f.set(n, Rational(g.at(n)));
                  defined[static_cast<std::size_t>(n)] = true;
                }
              return CatalogSeries{info, std::move(f), std::move(defined)};
            }};
  }
  if (head == "theta_half" || head == "theta32") {
    if (parts.size() != 3)
      throw std::invalid_argument("series id '" + id + "' needs the form " + head + ":s:chi");
    const std::int64_t s = parse_int(parts[1], id);
    const auto chi = character_from_name(parts[2]);
    const bool half = head == "theta_half";
    if (s < 1) throw std::invalid_argument("series id '" + id + "': s must be positive");
    if (half != chi.is_even())
      throw std::invalid_argument("series id '" + id + "': character parity does not fit");
    NamedSeries info{id, HalfInt{half ? 1 : 3}, 4 * s * chi.conductor() * chi.conductor()};
    return {info, [info, s, chi, half](std::int64_t T) {
              return CatalogSeries{info, half ? theta_half(s, chi, T) : theta_three_half(s, chi, T), {}};
            }};
  }
  if (head == "theta_pa") {
    if (parts.size() != 3) throw std::invalid_argument("series id '" + id + "' needs theta_pa:p:a");
    const std::int64_t p = parse_int(parts[1], id);
    const std::int64_t a = parse_int(parts[2], id);
    if (p < 3 || !is_prime(p) || a < 0 || a >= p)
      throw std::invalid_argument("series id '" + id + "': need odd prime p and 0 <= a < p");
    NamedSeries info{id, HalfInt{1}, 4 * p * p};
    return {info, [info, p, a](std::int64_t T) {
              return CatalogSeries{info, theta_congruence(p, a, T), {}};
            }};
  }
  throw std::invalid_argument("unknown series id '" + id + "'");
}

}  // namespace

NamedSeries describe_series(const std::string& id) { return parse_spec(id).info; }

std::vector<std::string> catalog_ids() {
  return {"H", "theta", "theta_half:s:chi", "theta32:s:chi", "theta_pa:p:a",
          "G2", "Delta", "eta2_12", "g7"};
}

std::shared_ptr<const CatalogSeries> catalog_series(const std::string& id, std::int64_t T) {
  if (T < 0) throw std::invalid_argument("catalog_series: negative truncation");
  static std::mutex mutex;
  static std::map<std::pair<std::string, std::int64_t>, std::shared_ptr<const CatalogSeries>> memo;
  const auto spec = parse_spec(id);
  {
    std::lock_guard lock(mutex);
    if (const auto it = memo.find({id, T}); it != memo.end()) return it->second;
  }
  auto built = std::make_shared<const CatalogSeries>(spec.build(T));
  std::lock_guard lock(mutex);
  return memo.try_emplace({id, T}, std::move(built)).first->second;
}

}  // namespace qrel
