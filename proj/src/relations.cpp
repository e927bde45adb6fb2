#include "qrel/relations.hpp"

#include <algorithm>
#include <stdexcept>

#include "qrel/arithmetic.hpp"
#include "qrel/character.hpp"
#include "qrel/congruence_theta.hpp"
#include "qrel/integer_utils.hpp"
#include "qrel/modular_forms.hpp"
#include "relations_internal.hpp"

namespace qrel {

using detail::ReportBuilder;

std::string to_string(Status s) {
  switch (s) {
    case Status::Pass:
      return "pass";
    case Status::Fail:
      return "fail";
    case Status::Partial:
      return "partial";
  }
  return "partial";
}

std::vector<std::int64_t> RelationReport::failing_indices(const std::string& label) const {
  std::vector<std::int64_t> out;
  for (const auto& f : failures)
    if (label.empty() || f.label == label) out.push_back(f.n);
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void detail::require_table(const HurwitzTable& H, std::int64_t need, const char* who) {
  if (H.max_n() < need)
    throw std::out_of_range(std::string(who) + ": Hurwitz table covers " +
                            std::to_string(H.max_n()) + ", need " + std::to_string(need));
}

RSeries hurwitz_series(const HurwitzTable& H, std::int64_t T) {
  detail::require_table(H, T, "hurwitz_series");
  RSeries f(T);
  for (std::int64_t n = 0; n <= T; ++n) f.set(n, H(n));
  return f;
}

BigInt trace_weight(int nu, std::int64_t s, std::int64_t n, int c) {
  BigInt prev = 0, cur = 1;
  for (int i = 1; i <= 2 * nu; ++i) {
    BigInt next = BigInt(c * s) * cur - BigInt(n) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

std::optional<Rational> ha5_table(std::int64_t a, std::int64_t l) {
  const std::int64_t A = mod(a, 5), L = mod(l, 5);
  if (A == 0) {
    if (L == 1) return Rational(l + 1, 2);
    if (L == 2 || L == 3) return Rational(l + 1, 3);
  } else if (A == 1 || A == 4) {
    if (L == 1 || L == 2) return Rational(l + 1, 3);
    if (L == 4) return Rational(5 * l + 5, 12);
  } else {
    if (L == 1) return Rational(5 * l - 7, 12);
    if (L == 3 || L == 4) return Rational(l + 1, 3);
  }
  return std::nullopt;
}

namespace {

// sum_{s in Z} w(s) H(N - s^2)
template <class W>
Rational class_sum(const HurwitzTable& H, std::int64_t N, W&& w) {
  Rational total;
  for (std::int64_t s = -isqrt(N); s * s <= N; ++s) {
    const Rational& h = H(N - s * s);
    if (!h.is_zero()) total += w(s) * h;
  }
  return total;
}

}  // namespace

RelationReport check_eichler(const HurwitzTable& H, std::int64_t max_n) {
  detail::require_table(H, max_n, "check_eichler");
  ReportBuilder b("eichler", 1, max_n, "odd n in [1, max]");
  for (std::int64_t n = 1; n <= max_n; n += 2) {
    const Rational lhs = class_sum(H, n, [](std::int64_t) { return Rational(1); }) + lambda_k(n, 1);
    b.compare(n, lhs, Rational(sigma_k(n, 1)) / Rational(3));
  }
  return b.finish();
}

RelationReport check_cohen(const HurwitzTable& H, std::int64_t max_n) {
  detail::require_table(H, max_n, "check_cohen");
  ReportBuilder b("cohen", 1, max_n, "odd n in [1, max]");
  for (std::int64_t n = 1; n <= max_n; n += 2) {
    const Rational lhs =
        class_sum(H, n, [n](std::int64_t s) { return Rational(4 * s * s - n); }) + lambda_k(n, 3);
    b.compare(n, lhs, Rational(0));
  }
  return b.finish();
}

RelationReport check_kronecker_hurwitz(const HurwitzTable& H, std::int64_t max_n) {
  detail::require_table(H, 4 * max_n, "check_kronecker_hurwitz");
  ReportBuilder b("kronecker_hurwitz", 1, max_n, "n in [1, max]");
  std::vector<Failure> plus, minus;
  for (std::int64_t n = 1; n <= max_n; ++n) {
    b.count();
    const Rational S = class_sum(H, 4 * n, [](std::int64_t) { return Rational(1); });
    const Rational l = Rational(2) * lambda_k(n, 1);
    const Rational rhs = Rational(2) * Rational(sigma_k(n, 1));
    if (S + l != rhs) plus.push_back({n, (S + l).str(), rhs.str(), "+2lambda1"});
    if (S - l != rhs) minus.push_back({n, (S - l).str(), rhs.str(), "-2lambda1"});
  }
  auto first = [](const std::vector<Failure>& f) {
    return f.empty() ? std::string("none") : std::to_string(f.front().n);
  };
  b.detail("stated_variant", "sum H(4n-s^2) - 2 lambda_1(n) = 2 sigma_1(n)");
  b.detail("plus_variant_first_failure", first(plus));
  b.detail("minus_variant_first_failure", first(minus));
  if (plus.empty() != minus.empty()) {
    b.detail("holding_variant", plus.empty() ? "+2lambda1" : "-2lambda1");
    if (!minus.empty())
      b.note("stated sign fails (first at n=" + first(minus) + "); the +2 lambda_1(n) variant holds");
  } else if (max_n < 1) {
    b.detail("holding_variant", "undetermined");
  } else {
    b.detail("holding_variant", plus.empty() ? "both" : "none");
    for (auto& f : plus) b.report().failures.push_back(std::move(f));
    if (plus.empty()) b.fail(0, "both variants hold", "exactly one variant");
  }
  return b.finish();
}

RelationReport check_trace_level1(const HurwitzTable& H, int nu, std::int64_t max_n) {
  if (nu < 1 || nu > 5) throw std::invalid_argument("check_trace_level1: nu must be in 1..5");
  detail::require_table(H, 4 * max_n, "check_trace_level1");
  ReportBuilder b("trace_level1", 1, max_n, "n in [1, max]");
  b.detail("nu", std::to_string(nu));
  b.detail("rhs", nu == 5 ? "tau(n) from eta^24" : "0 (no cusp forms of weight " +
                                                       std::to_string(2 * nu + 2) + " on SL2(Z))");
  std::shared_ptr<const CatalogSeries> delta;
  if (nu == 5) delta = catalog_series("Delta", max_n);
  const std::string label = "nu=" + std::to_string(nu);
  for (std::int64_t n = 1; n <= max_n; ++n) {
    const Rational sum = class_sum(H, 4 * n, [&](std::int64_t s) { return Rational(trace_weight(nu, s, n, 1)); });
    const Rational lhs = -sum / Rational(2) - lambda_k(n, 2 * nu + 1);
    const Rational rhs = delta ? delta->series.coeff(n) : Rational(0);
    b.compare(n, lhs, rhs, label);
  }
  return b.finish();
}

RelationReport check_trace_level4(const HurwitzTable& H, int nu, std::int64_t max_n) {
  if (nu < 0 || nu > 2) throw std::invalid_argument("check_trace_level4: nu must be in 0..2");
  detail::require_table(H, max_n, "check_trace_level4");
  ReportBuilder b("trace_level4", 1, max_n, "odd n in [1, max]");
  b.detail("nu", std::to_string(nu));
  b.detail("rhs", nu == 0   ? "-sigma_1(n)"
                  : nu == 1 ? "0 (no cusp forms of weight 4 on Gamma0(4))"
                            : "eta(2 tau)^12");
  std::shared_ptr<const CatalogSeries> eta;
  if (nu == 2) eta = catalog_series("eta2_12", max_n);
  const std::string label = "nu=" + std::to_string(nu);
  for (std::int64_t n = 1; n <= max_n; n += 2) {
    const Rational sum = class_sum(H, n, [&](std::int64_t s) { return Rational(trace_weight(nu, s, n, 2)); });
    const Rational lhs = Rational(-3) * sum - Rational(3) * lambda_k(n, 2 * nu + 1);
    Rational rhs;
    if (nu == 0) rhs = -Rational(sigma_k(n, 1));
    if (nu == 2) rhs = eta->series.coeff(n);
    b.compare(n, lhs, rhs, label);
  }
  return b.finish();
}

RelationReport check_hap_table(const HurwitzTable& H, std::int64_t max_prime) {
  detail::require_table(H, 4 * max_prime, "check_hap_table");
  ReportBuilder b("hap_table", 2, max_prime,
                  "primes l in [2, max], l != 5, residues a mod 5 with a table case");
  std::int64_t uncovered = 0;
  std::string uncovered_list;
  for (std::int64_t l = 2; l <= max_prime; ++l) {
    if (!is_prime(l) || l == 5) continue;
    for (std::int64_t a = 0; a < 5; ++a) {
      const Rational value = class_sum(H, 4 * l, [a](std::int64_t s) { return Rational(mod(s - a, 5) == 0 ? 1 : 0); });
      const auto expected = ha5_table(a, l);
      if (!expected) {
        ++uncovered;
        if (uncovered <= 12)
          uncovered_list += (uncovered_list.empty() ? "" : " ") + std::string("(a=") +
                            std::to_string(a) + ",l=" + std::to_string(l) + ")";
        continue;
      }
      b.compare(l, value, *expected, "a=" + std::to_string(a));
    }
  }
  b.detail("uncovered_pairs", std::to_string(uncovered));
  if (uncovered) {
    b.detail("uncovered_examples", uncovered_list);
    b.note("the table has no case for (a = 0, l = 4), (a = +-1, l = 3), (a = +-2, l = 2) mod 5; those pairs are not checked");
  }
  return b.finish();
}

namespace {

RSeries hurwitz_theta_u4(const HurwitzTable& H, std::int64_t p, std::int64_t T) {
  const RSeries prod = hurwitz_series(H, 4 * T) * theta_congruence(p, 0, 4 * T);
  return u_op(prod, 4);
}

RSeries v_trunc(const RSeries& f, std::int64_t N, std::int64_t T) { return v_op(f, N).truncated(T); }

RSeries twist_chi_one_minus_chi(const RSeries& f, const DirichletCharacter& chi) {
  return twist_by(f, [&](std::int64_t n) { return chi(n) * (1 - chi(n)); });
}

RSeries twist_difference(const RSeries& f, const DirichletCharacter& chi) {
  return twist(f, chi) - twist(f, chi * chi);
}

std::int64_t first_mismatch(const RSeries& a, const RSeries& b, std::int64_t lo) {
  for (std::int64_t n = lo; n <= std::min(a.trunc(), b.trunc()); ++n)
    if (a.coeff(n) != b.coeff(n)) return n;
  return -1;
}

}  // namespace

RelationReport check_level25_g2(const HurwitzTable& H, std::int64_t max_n) {
  const std::int64_t T = max_n;
  detail::require_table(H, 4 * T, "check_level25_g2");
  ReportBuilder b("level25_g2", 0, T, "n in [0, max]");
  const RSeries common = hurwitz_theta_u4(H, 5, T) +
                         scale(Rational(5), v_trunc(d_pa_series(1, 0, 1, T), 25, T)) +
                         scale(Rational(2), sieve(d_pa_series(5, 1, 1, T), 5, 4));
  const RSeries d52 = scale(Rational(2), d_pa_series(5, 2, 1, T));
  const RSeries lhs = common + sieve(d52, 5, 1);
  const RSeries lhs_stated = common + sieve(d52, 5, 4);

  const DirichletCharacter chi5 = character_from_name("chi5");
  const RSeries G2 = eisenstein_g2(T);
  const RSeries base = scale(Rational(1, 2), G2) - v_trunc(G2, 5, T) +
                       scale(Rational(5, 2), v_trunc(G2, 25, T));
  const RSeries rhs_a = base + scale(Rational(1, 12), twist_chi_one_minus_chi(G2, chi5));
  const RSeries rhs_b = base + scale(Rational(1, 12), twist_difference(G2, chi5));

  for (std::int64_t n = 0; n <= T; ++n) b.compare(n, lhs.coeff(n), rhs_a.coeff(n));

  const auto show_first = [](std::int64_t n) { return n < 0 ? std::string("none") : std::to_string(n); };
  b.detail("tensor_reading", "G2 twisted by n -> chi5(n)(1 - chi5(n))");
  b.detail("tensor_readings_coincide", rhs_a == rhs_b ? "yes" : "no");
  b.detail("reading_chi_times_one_minus_chi_first_failure", show_first(first_mismatch(lhs, rhs_a, 0)));
  b.detail("reading_difference_of_twists_first_failure", show_first(first_mismatch(lhs, rhs_b, 0)));
  b.detail("sieve_on_D52", "S_{5,1}");
  b.detail("stated_sieve_S54_first_failure", show_first(first_mismatch(lhs_stated, rhs_a, 0)));
  b.note("checked with S_{5,1} on the D_1^{(5,2)} term, as produced by the p = 5, a = 0 operator identity; the stated S_{5,4} fails");
  return b.finish();
}

RelationReport check_level49_g7(const HurwitzTable& H, std::int64_t max_n) {
  const std::int64_t T = max_n;
  detail::require_table(H, 4 * T, "check_level49_g7");
  ReportBuilder b("level49_g7", 1, T, "n in [1, max] with all prime factors >= 5 and != 7");
  const RSeries lhs = hurwitz_theta_u4(H, 7, T) +
                      scale(Rational(7), v_trunc(d_pa_series(1, 0, 1, T), 49, T)) +
                      scale(Rational(2), sieve(d_pa_series(7, 2, 1, T), 7, 3)) +
                      scale(Rational(2), sieve(d_pa_series(7, 4, 1, T), 7, 5)) +
                      scale(Rational(2), sieve(d_pa_series(7, 1, 1, T), 7, 6));
  const DirichletCharacter chi7 = character_from_name("chi7");
  const RSeries G2 = eisenstein_g2(T);
  const RSeries known = scale(Rational(1, 4), G2) -
                        scale(Rational(1, 24), twist_chi_one_minus_chi(G2, chi7));
  if (T >= 1) {
    const PartialSeries g = g7(T);
    for (std::int64_t n = 1; n <= T; ++n) {
      if (!g.is_defined(n)) continue;
      b.compare(n, lhs.coeff(n), known.coeff(n) + Rational(g.at(n)) / Rational(4));
    }
  }
  b.detail("g7", "y^2 = x^3 - 2835 x - 71442, a_p by point counting, Hecke recursion");
  if (T >= 0 && lhs.coeff(0) != known.coeff(0))
    b.note("n = 0 lies outside the policy set: constant terms " + lhs.coeff(0).str() + " vs " +
           known.coeff(0).str());
  return b.finish();
}

namespace {

RelationReport merge(const std::string& id, std::vector<RelationReport> parts) {
  ReportBuilder b(id, parts.front().lo, parts.front().hi, parts.front().policy);
  auto& r = b.report();
  std::int64_t elapsed = 0;
  for (auto& p : parts) {
    r.checked += p.checked;
    elapsed += p.elapsed_ms;
    for (auto& f : p.failures) r.failures.push_back(std::move(f));
    for (auto& n : p.notes) r.notes.push_back(std::move(n));
    const std::string prefix = p.details.count("nu") ? "nu=" + p.details["nu"] + ":" : "";
    for (auto& [k, v] : p.details)
      if (k != "nu") r.details[prefix + k] = v;
  }
  RelationReport out = b.finish();
  out.elapsed_ms = std::max(out.elapsed_ms, elapsed);
  return out;
}

std::int64_t same(std::int64_t m) { return m; }
std::int64_t four(std::int64_t m) { return 4 * m; }
std::int64_t none(std::int64_t) { return 0; }

}  // namespace

const std::vector<RelationInfo>& relation_registry() {
  static const std::vector<RelationInfo> registry = [] {
    std::vector<RelationInfo> r;
    r.push_back({"eichler", "sum_s H(n - s^2) + lambda_1(n) = sigma_1(n)/3, odd n", 2000, same,
                 [](const HurwitzTable& H, std::int64_t m) { return check_eichler(H, m); }});
    r.push_back({"cohen", "sum_s (4s^2 - n) H(n - s^2) + lambda_3(n) = 0, odd n", 2000, same,
                 [](const HurwitzTable& H, std::int64_t m) { return check_cohen(H, m); }});
    r.push_back({"kronecker_hurwitz", "sum_s H(4n - s^2) +- 2 lambda_1(n) = 2 sigma_1(n)", 2000, four,
                 [](const HurwitzTable& H, std::int64_t m) { return check_kronecker_hurwitz(H, m); }});
    r.push_back({"trace_level1", "Eichler-Selberg traces on SL2(Z), nu = 1..5", 500, four,
                 [](const HurwitzTable& H, std::int64_t m) {
                   std::vector<RelationReport> parts;
                   for (int nu = 1; nu <= 5; ++nu) parts.push_back(check_trace_level1(H, nu, m));
                   return merge("trace_level1", std::move(parts));
                 }});
    r.push_back({"trace_level4", "traces on Gamma0(4), odd n, nu = 0..2", 999, same,
                 [](const HurwitzTable& H, std::int64_t m) {
                   std::vector<RelationReport> parts;
                   for (int nu = 0; nu <= 2; ++nu) parts.push_back(check_trace_level4(H, nu, m));
                   return merge("trace_level4", std::move(parts));
                 }});
    r.push_back({"hap_table", "H_{a,5}(l) table for primes l", 200, four,
                 [](const HurwitzTable& H, std::int64_t m) { return check_hap_table(H, m); }});
    r.push_back({"level25_g2", "weight 2 quasimodular identity on Gamma0(25)", 1000, four,
                 [](const HurwitzTable& H, std::int64_t m) { return check_level25_g2(H, m); }});
    r.push_back({"level49_g7", "weight 2 identity on Gamma0(49) with g7", 500, four,
                 [](const HurwitzTable& H, std::int64_t m) { return check_level49_g7(H, m); }});
    r.push_back({"identities", "binomial, polynomial and kappa identities", 0, none,
                 [](const HurwitzTable&, std::int64_t) { return check_identities(); }});
    r.push_back({"lambda_pa_u4", "Lambda^{(p,a)} | U(4) operator identity as stated", 500, none,
                 [](const HurwitzTable&, std::int64_t m) { return check_lambda_pa_u4(m); }});
    r.push_back({"lambda_pa_u4_corrected", "Lambda^{(p,a)} | U(4) operator identity, corrected form", 500, none,
                 [](const HurwitzTable&, std::int64_t m) { return check_lambda_pa_u4_corrected(m); }});
    r.push_back({"operator_laws", "U/V/S laws and Lambda | U(4), Lambda | S_{2,1}", 1000, none,
                 [](const HurwitzTable&, std::int64_t m) { return check_operator_laws(m); }});
    r.push_back({"projection_cross_oracle", "correction_b against closed-form Lambda and Delta", 200, none,
                 [](const HurwitzTable&, std::int64_t m) { return check_projection_cross_oracle(m); }});
    r.push_back({"pell_orbits", "orbit closed form against enumeration plus tail", 50, none,
                 [](const HurwitzTable&, std::int64_t m) { return check_pell_orbits(m); }});
    return r;
  }();
  return registry;
}

const RelationInfo* find_relation(const std::string& id) {
  for (const auto& r : relation_registry())
    if (r.id == id) return &r;
  return nullptr;
}

std::int64_t verify_all_hurwitz_bound(std::optional<std::int64_t> max_n) {
  std::int64_t need = 0;
  for (const auto& r : relation_registry())
    need = std::max(need, r.hurwitz_bound(max_n.value_or(r.default_max)));
  return need;
}

std::vector<RelationReport> verify_all(const HurwitzTable& H, std::optional<std::int64_t> max_n) {
  std::vector<RelationReport> out;
  for (const auto& r : relation_registry()) out.push_back(r.run(H, max_n.value_or(r.default_max)));
  return out;
}

std::vector<RelationReport> verify_all(std::optional<std::int64_t> max_n) {
  const auto H = hurwitz_table(verify_all_hurwitz_bound(max_n));
  return verify_all(*H, max_n);
}

}  // namespace qrel
