#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "qrel/hurwitz.hpp"
#include "qrel/qseries.hpp"

namespace qrel {

enum class Status { Pass, Fail, Partial };
std::string to_string(Status s);

struct Failure {
  std::int64_t n = 0;
  std::string lhs;
  std::string rhs;
  /// Sub-check the failure belongs to (e.g. "nu=3"); empty for single checks.
  std::string label;
};

struct RelationReport {
  std::string relation;
  std::int64_t lo = 0, hi = 0;
  std::string policy;
  Status status = Status::Partial;
  std::vector<Failure> failures;
  std::vector<std::string> notes;
  std::map<std::string, std::string> details;
  std::int64_t checked = 0;
  std::int64_t elapsed_ms = 0;

  bool passed() const { return status == Status::Pass; }
  /// Indices of failures carrying the given label (all failures when label is empty).
  std::vector<std::int64_t> failing_indices(const std::string& label = {}) const;
};

/// Series sum_{n <= T} H(n) q^n read from a table.
RSeries hurwitz_series(const HurwitzTable& H, std::int64_t T);

/// Coefficient of X^{2nu} in 1/(1 - c s X + n X^2), c = 1 (level 1) or 2 (level 4).
BigInt trace_weight(int nu, std::int64_t s, std::int64_t n, int c);

/// The table value for H_{a,5}(l), or nothing when the table has no case.
std::optional<Rational> ha5_table(std::int64_t a, std::int64_t l);

// Each check reads class numbers only from H, which must cover the range it needs.
RelationReport check_eichler(const HurwitzTable& H, std::int64_t max_n);
RelationReport check_cohen(const HurwitzTable& H, std::int64_t max_n);
/// Tests both sign variants; passes when exactly one holds on the whole range.
RelationReport check_kronecker_hurwitz(const HurwitzTable& H, std::int64_t max_n);
/// nu in 1..5; failures labelled "nu=<nu>".
RelationReport check_trace_level1(const HurwitzTable& H, int nu, std::int64_t max_n);
/// nu in 0..2 on odd n; nu = 0 has right-hand side -sigma_1(n).
RelationReport check_trace_level4(const HurwitzTable& H, int nu, std::int64_t max_n);
RelationReport check_hap_table(const HurwitzTable& H, std::int64_t max_prime);
/// Judged with the sieve S_{5,1} on the D^{(5,2)} term; the stated S_{5,4} is reported alongside.
RelationReport check_level25_g2(const HurwitzTable& H, std::int64_t max_n);
RelationReport check_level49_g7(const HurwitzTable& H, std::int64_t max_n);

/// Exact rational and polynomial identity suite (no class numbers involved).
RelationReport check_identities();
/// p in {5, 7}, all a, nu in {0, 1}; failures labelled "p=..,a=..,nu=..".
RelationReport check_lambda_pa_u4(std::int64_t max_n);
RelationReport check_lambda_pa_u4_corrected(std::int64_t max_n);
/// U(4) V(4) = id, sieve partition, Lambda | U(4) and Lambda | S_{2,1} for nu <= 2.
RelationReport check_operator_laws(std::int64_t max_n);
/// correction_b (+ kappa term) against the closed-form Lambda / Delta coefficients,
/// and delta_indef against the double sum.
RelationReport check_projection_cross_oracle(std::int64_t max_r);
/// Orbit closed form against enumeration with m <= 10^4 plus a bounded tail.
RelationReport check_pell_orbits(std::int64_t max_r);

struct RelationInfo {
  std::string id;
  std::string description;
  std::int64_t default_max;
  /// Largest class number index needed for a given max.
  std::function<std::int64_t(std::int64_t)> hurwitz_bound;
  std::function<RelationReport(const HurwitzTable&, std::int64_t)> run;
};

/// Registered relations in their fixed reporting order.
const std::vector<RelationInfo>& relation_registry();
const RelationInfo* find_relation(const std::string& id);

/// Runs every registered relation. max_n overrides all default ranges when set.
std::vector<RelationReport> verify_all(const HurwitzTable& H, std::optional<std::int64_t> max_n = {});
std::vector<RelationReport> verify_all(std::optional<std::int64_t> max_n = {});
/// Hurwitz bound required by verify_all with the given override.
std::int64_t verify_all_hurwitz_bound(std::optional<std::int64_t> max_n = {});

std::string report_to_json(const RelationReport& r, int indent = 2);
std::string reports_to_json(const std::vector<RelationReport>& rs, int indent = 2);
std::string report_to_text(const RelationReport& r);

}  // namespace qrel
