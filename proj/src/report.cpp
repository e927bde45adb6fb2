#include <sstream>

#include <json.hpp>

#include "qrel/relations.hpp"

namespace qrel {

namespace {

nlohmann::ordered_json to_json(const RelationReport& r) {
  nlohmann::ordered_json j;
  j["relation"] = r.relation;
  j["range"] = {r.lo, r.hi};
  j["policy"] = r.policy;
  j["status"] = to_string(r.status);
  auto failures = nlohmann::ordered_json::array();
  for (const auto& f : r.failures) {
    nlohmann::ordered_json e;
    e["n"] = f.n;
    e["lhs"] = f.lhs;
    e["rhs"] = f.rhs;
    if (!f.label.empty()) e["label"] = f.label;
    failures.push_back(std::move(e));
  }
  j["failures"] = std::move(failures);
  j["checked"] = r.checked;
  j["notes"] = r.notes;
  j["details"] = r.details;
  j["elapsed_ms"] = r.elapsed_ms;
  return j;
}

}  // namespace

std::string report_to_json(const RelationReport& r, int indent) { return to_json(r).dump(indent); }

std::string reports_to_json(const std::vector<RelationReport>& rs, int indent) {
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : rs) arr.push_back(to_json(r));
  return arr.dump(indent);
}

std::string report_to_text(const RelationReport& r) {
  std::ostringstream os;
  os << r.relation << ": " << to_string(r.status) << " (" << r.checked << " checks, range [" << r.lo
     << ", " << r.hi << "], " << r.policy << ")\n";
  for (const auto& [k, v] : r.details) os << "  " << k << ": " << v << "\n";
  for (const auto& n : r.notes) os << "  note: " << n << "\n";
  constexpr std::size_t kShown = 20;
  for (std::size_t i = 0; i < r.failures.size() && i < kShown; ++i) {
    const auto& f = r.failures[i];
    os << "  FAIL n=" << f.n;
    if (!f.label.empty()) os << " [" << f.label << "]";
    os << ": lhs=" << f.lhs << " rhs=" << f.rhs << "\n";
  }
  if (r.failures.size() > kShown) os << "  ... " << r.failures.size() - kShown << " more failures\n";
  return os.str();
}

}  // namespace qrel
