#include <doctest.h>
#include <json.hpp>

#include <algorithm>

#include "qrel/arithmetic.hpp"
#include "qrel/hurwitz.hpp"
#include "qrel/integer_utils.hpp"
#include "qrel/relations.hpp"

using namespace qrel;

namespace {

const HurwitzTable& table() {
  static const HurwitzTable t = HurwitzTable::build(8200);
  return t;
}

Rational class_sum(std::int64_t n) {
  Rational total;
  for (std::int64_t s = -isqrt(n); s * s <= n; ++s) total += table()(n - s * s);
  return total;
}

Rational ha5(std::int64_t a, std::int64_t l) {
  Rational total;
  for (std::int64_t s = -isqrt(4 * l); s * s <= 4 * l; ++s)
    if (mod(s - a, 5) == 0) total += table()(4 * l - s * s);
  return total;
}

}  // namespace

TEST_CASE("class number relation examples") {
  CHECK(class_sum(1) + lambda_k(1, 1) == Rational(1, 3));
  CHECK(class_sum(3) + lambda_k(3, 1) == Rational(4, 3));
  CHECK(class_sum(4) == 1);
  CHECK(class_sum(4) + 2 * lambda_k(1, 1) == 2 * Rational(sigma_k(1, 1)));
  CHECK(class_sum(8) + 2 * lambda_k(2, 1) == 2 * Rational(sigma_k(2, 1)));

  const RelationReport e = check_eichler(table(), 2000);
  CHECK(e.passed());
  CHECK(e.checked == 1000);
  CHECK(check_cohen(table(), 2000).passed());

  const RelationReport kh = check_kronecker_hurwitz(table(), 2000);
  CHECK(kh.passed());
  CHECK(kh.details.at("holding_variant") == "+2lambda1");
  CHECK(kh.details.at("minus_variant_first_failure") == "1");
}

TEST_CASE("trace formula weights") {
  // Taylor coefficients of 1/(1 - c s X + n X^2) by series inversion
  for (const int c : {1, 2})
    for (std::int64_t n = 1; n <= 12; ++n)
      for (std::int64_t s = -7; s <= 7; ++s) {
        RSeries den(10);
        den.set(0, Rational(1));
        den.set(1, Rational(-c * s));
        den.set(2, Rational(n));
        const RSeries inv = inverse(den);
        for (int nu = 0; nu <= 5; ++nu) CHECK(Rational(trace_weight(nu, s, n, c)) == inv[2 * nu]);
      }
}

TEST_CASE("trace formulas") {
  for (int nu = 1; nu <= 5; ++nu) CHECK(check_trace_level1(table(), nu, 200).passed());
  for (int nu = 0; nu <= 2; ++nu) CHECK(check_trace_level4(table(), nu, 301).passed());
  CHECK_THROWS(check_trace_level1(table(), 6, 10));
  CHECK_THROWS(check_trace_level4(table(), 3, 10));
}

TEST_CASE("the H_{a,5} table") {
  CHECK(ha5_table(0, 11) == Rational(6));
  CHECK(ha5_table(1, 11) == Rational(4));
  CHECK(ha5_table(2, 11) == Rational(4));
  CHECK(ha5(0, 11) == 6);
  CHECK(ha5(1, 11) == 4);
  CHECK(ha5(2, 11) == 4);
  CHECK(ha5(4, 11) == ha5(1, 11));
  const RelationReport r = check_hap_table(table(), 200);
  CHECK(r.passed());
  CHECK(r.details.count("uncovered_pairs") == 1);
  for (std::int64_t n = 1; n <= 1000; ++n) {
    Rational parts;
    for (std::int64_t a = 0; a < 5; ++a) parts += ha5(a, n);
    CHECK(parts == class_sum(4 * n));
  }
}

TEST_CASE("level 25 and level 49 identities") {
  const RelationReport i = check_level25_g2(table(), 300);
  CHECK(i.passed());
  CHECK(i.details.at("tensor_readings_coincide") == "yes");
  const RelationReport ii = check_level49_g7(table(), 300);
  CHECK(ii.passed());
  CHECK(ii.checked > 0);
}

TEST_CASE("empty ranges are partial") {
  for (const RelationReport& r : verify_all(table(), 0)) {
    // relations whose range starts at 0 still check the constant term
    CHECK(r.status != Status::Fail);
    if (r.checked == 0) CHECK(r.status == Status::Partial);
    if (r.lo > r.hi) CHECK(r.checked == 0);
  }
}

TEST_CASE("registry and json reports") {
  const auto& reg = relation_registry();
  CHECK(reg.size() == 14);
  CHECK(reg.front().id == "eichler");
  CHECK(find_relation("bogus") == nullptr);
  REQUIRE(find_relation("cohen") != nullptr);

  RelationReport r = check_eichler(table(), 21);
  r.failures.push_back({5, "1/3", "2/3+1*sqrt(2)", ""});
  const auto j = nlohmann::json::parse(report_to_json(r));
  for (const char* key : {"relation", "range", "policy", "status", "failures", "elapsed_ms"})
    CHECK(j.contains(key));
  CHECK(j["relation"] == "eichler");
  CHECK(j["range"] == nlohmann::json::array({1, 21}));
  CHECK(j["failures"][0]["n"] == 5);
  CHECK(j["failures"][0]["rhs"] == "2/3+1*sqrt(2)");
  CHECK(j["elapsed_ms"].is_number_integer());
  const auto all = nlohmann::json::parse(reports_to_json({r, r}));
  CHECK(all.is_array());
  CHECK(all.size() == 2);
  CHECK(report_to_text(r).find("eichler") != std::string::npos);
}

TEST_CASE("a perturbed class number breaks exactly its dependents") {
  const HurwitzTable bad = table().with_override(23, table()(23) + 1);
  auto odd_23_plus_square = [](std::int64_t max) {
    std::vector<std::int64_t> out;
    for (std::int64_t n = 1; n <= max; n += 2)
      if (n >= 23 && is_square(n - 23)) out.push_back(n);
    return out;
  };
  CHECK(check_eichler(bad, 300).failing_indices() == odd_23_plus_square(300));
  CHECK(check_cohen(bad, 300).failing_indices() == odd_23_plus_square(300));
  std::vector<std::int64_t> kh;
  for (std::int64_t n = 1; n <= 300; ++n)
    if (is_square(4 * n - 23)) kh.push_back(n);
  const RelationReport k = check_kronecker_hurwitz(bad, 300);
  CHECK(k.details.at("holding_variant") == "none");
  CHECK(k.failing_indices("+2lambda1") == kh);
  CHECK(check_identities().passed());
  CHECK(check_eichler(bad, 21).passed());
}
