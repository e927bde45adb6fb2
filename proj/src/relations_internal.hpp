#pragma once

#include <chrono>
#include <string>

#include "qrel/quadext.hpp"
#include "qrel/relations.hpp"

namespace qrel::detail {

inline std::string show(const Rational& x) { return x.str(); }
inline std::string show(const QuadExt& x) { return x.str(); }
inline std::string show(const std::string& x) { return x; }

/// Accumulates one report; finish() fixes status and timing.
class ReportBuilder {
 public:
  ReportBuilder(std::string relation, std::int64_t lo, std::int64_t hi, std::string policy)
      : start_(std::chrono::steady_clock::now()) {
    r_.relation = std::move(relation);
    r_.lo = lo;
    r_.hi = hi;
    r_.policy = std::move(policy);
  }

  template <class A, class B>
  bool compare(std::int64_t n, const A& lhs, const B& rhs, const std::string& label = {}) {
    ++r_.checked;
    if (lhs == rhs) return true;
    fail(n, show(lhs), show(rhs), label);
    return false;
  }

  void fail(std::int64_t n, std::string lhs, std::string rhs, const std::string& label = {}) {
    r_.failures.push_back({n, std::move(lhs), std::move(rhs), label});
  }
  void count() { ++r_.checked; }
  void note(std::string text) { r_.notes.push_back(std::move(text)); }
  void detail(const std::string& key, std::string value) { r_.details[key] = std::move(value); }
  RelationReport& report() { return r_; }

  RelationReport finish() {
    if (!r_.failures.empty())
      r_.status = Status::Fail;
    else
      r_.status = r_.checked > 0 ? Status::Pass : Status::Partial;
    r_.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                        std::chrono::steady_clock::now() - start_)
                        .count();
    return r_;
  }

 private:
  RelationReport r_;
  std::chrono::steady_clock::time_point start_;
};

/// Throws std::out_of_range when the table does not reach `need`.
void require_table(const HurwitzTable& H, std::int64_t need, const char* who);

}  // namespace qrel::detail
