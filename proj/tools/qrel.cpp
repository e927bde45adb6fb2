// qrel command-line front end.
#include <CLI11.hpp>
#include <json.hpp>

#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "qrel/character.hpp"
#include "qrel/holproj.hpp"
#include "qrel/hurwitz.hpp"
#include "qrel/indefinite_theta.hpp"
#include "qrel/modular_forms.hpp"
#include "qrel/relations.hpp"

namespace {

using namespace qrel;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitFailed = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// A printable series: rational coefficients with an optional defined mask, or
// QuadExt coefficients scaled by sqrt(outer).
struct Printable {
  std::string id;
  std::optional<RSeries> rational;
  std::vector<bool> defined;
  std::optional<QESeries> quad;
  std::int64_t outer = 1;

  std::int64_t trunc() const { return rational ? rational->trunc() : quad->trunc(); }
  bool is_defined(std::int64_t n) const { return defined.empty() || defined[static_cast<std::size_t>(n)]; }
  std::string coeff(std::int64_t n) const {
    if (rational) return rational->coeff(n).str();
    const QuadExt c = quad->coeff(n);
    if (outer == 1 || c.is_zero()) return c.str();
    return "sqrt(" + std::to_string(outer) + ")*(" + c.str() + ")";
  }
};

std::vector<std::string> split(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string part;
  while (std::getline(ss, part, ':')) out.push_back(part);
  return out;
}

std::string join(const std::vector<std::string>& parts, std::size_t from, std::size_t to) {
  std::string out;
  for (std::size_t i = from; i < to; ++i) out += (i == from ? "" : ":") + parts[i];
  return out;
}

std::int64_t to_int(const std::string& text, const std::string& what) {
  std::size_t pos = 0;
  std::int64_t v = 0;
  try {
    v = std::stoll(text, &pos);
  } catch (const std::exception&) {
    pos = 0;
  }
  if (pos == 0 || pos != text.size()) throw UsageError(what + ": '" + text + "' is not an integer");
  return v;
}

bool is_catalog_id(const std::string& id) {
  try {
    describe_series(id);
    return true;
  } catch (const std::invalid_argument&) {
    return false;
  }
}

Printable bracket_series(const std::string& f_id, const std::string& g_id, const BracketSpec& spec,
                         std::int64_t terms, const std::string& id) {
  const auto f = catalog_series(f_id, terms);
  const auto g = catalog_series(g_id, terms);
  if (!f->defined.empty() || !g->defined.empty())
    throw UsageError("bracket inputs must be fully defined series");
  Printable p;
  p.id = id;
  p.rational = rankin_cohen(f->series, g->series, spec);
  return p;
}

Printable build_series(const std::string& id, std::int64_t terms) {
  const auto parts = split(id);
  if (!parts.empty() && (parts[0] == "lambda" || parts[0] == "delta")) {
    if (parts.size() != 6) throw UsageError("'" + id + "': expected " + parts[0] + ":s:t:chi:psi:nu");
    const std::int64_t s = to_int(parts[1], "s"), t = to_int(parts[2], "t");
    const int nu = static_cast<int>(to_int(parts[5], "nu"));
    const auto chi = character_from_name(parts[3]), psi = character_from_name(parts[4]);
    const IndefiniteTheta L = parts[0] == "lambda" ? lambda_indef(s, t, chi, psi, nu, terms)
                                                   : delta_indef(s, t, chi, psi, nu, terms);
    Printable p;
    p.id = id;
    p.quad = L.series;
    p.outer = L.outer;
    return p;
  }
  if (!parts.empty() && parts[0] == "bracket") {
    if (parts.size() < 6) throw UsageError("'" + id + "': expected bracket:f:g:k:l:nu");
    const std::size_t tail = parts.size() - 3;
    const BracketSpec spec{HalfInt::parse(parts[tail]), HalfInt::parse(parts[tail + 1]),
                           static_cast<int>(to_int(parts[tail + 2], "nu"))};
    for (std::size_t cut = 2; cut < tail; ++cut) {
      const std::string f = join(parts, 1, cut), g = join(parts, cut, tail);
      if (is_catalog_id(f) && is_catalog_id(g)) return bracket_series(f, g, spec, terms, id);
    }
    throw UsageError("'" + id + "': cannot split into two catalog series ids");
  }
  if (!is_catalog_id(id)) throw UsageError("unknown series id '" + id + "'");
  const auto c = catalog_series(id, terms);
  Printable p;
  p.id = id;
  p.rational = c->series;
  p.defined = c->defined;
  return p;
}

void print_series(const Printable& p, const std::string& format, std::ostream& os) {
  const std::int64_t T = p.trunc();
  if (format == "text") {
    for (std::int64_t n = 0; n <= T; ++n)
      os << (n ? ", " : "") << (p.is_defined(n) ? p.coeff(n) : std::string("undefined"));
    os << "\n";
  } else if (format == "csv") {
    if (p.outer != 1) os << "# coefficients are multiplied by sqrt(" << p.outer << ")\n";
    if (!p.defined.empty()) os << "# indices without a line are undefined\n";
    for (std::int64_t n = 0; n <= T; ++n) {
      if (!p.is_defined(n)) continue;
      if (p.rational) {
        const Rational c = p.rational->coeff(n);
        os << n << "," << c.num().get_str() << "," << c.den().get_str() << "\n";
      } else {
        const QuadExt c = p.quad->coeff(n);
        os << n << "," << c.a().num().get_str() << "," << c.a().den().get_str() << ","
           << c.b().num().get_str() << "," << c.b().den().get_str() << "," << c.D() << "\n";
      }
    }
  } else {
    nlohmann::ordered_json j;
    j["id"] = p.id;
    j["terms"] = T;
    if (p.outer != 1) j["outer_sqrt"] = p.outer;
    auto arr = nlohmann::ordered_json::array();
    for (std::int64_t n = 0; n <= T; ++n) {
      if (p.is_defined(n))
        arr.push_back(p.coeff(n));
      else
        arr.push_back(nullptr);
    }
    j["coefficients"] = std::move(arr);
    os << j.dump(2) << "\n";
  }
}

std::shared_ptr<const HurwitzTable> cached_table(const std::string& cache_dir, std::int64_t need) {
  HurwitzCache cache(cache_dir.empty() ? HurwitzCache::default_dir() : std::filesystem::path(cache_dir));
  return cache.ensure(std::max<std::int64_t>(need, 0));
}

int exit_for(const std::vector<RelationReport>& reports) {
  for (const auto& r : reports)
    if (r.status == Status::Fail) return kExitFailed;
  return kExitOk;
}

void print_reports(const std::vector<RelationReport>& reports, bool json, std::ostream& os) {
  if (json) {
    os << (reports.size() == 1 ? report_to_json(reports.front()) : reports_to_json(reports)) << "\n";
    return;
  }
  for (const auto& r : reports) os << report_to_text(r);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact q-expansions and class number relation checks"};
  app.require_subcommand(1);
  std::string cache_dir;
  app.add_option("--cache-dir", cache_dir, "Hurwitz cache directory (default: $QREL_CACHE_DIR or ./.qrel-cache)");

  std::string format = "text";
  const auto formats = CLI::IsMember({"text", "csv", "json"});

  auto* series = app.add_subcommand("series", "Print coefficients 0..terms of a series");
  std::string name;
  std::int64_t terms = 10;
  series->add_option("--name,name", name,
                     "Catalog id (H, theta, theta_half:s:chi, theta32:s:chi, theta_pa:p:a, G2, Delta, "
                     "eta2_12, g7) or lambda:s:t:chi:psi:nu, delta:s:t:chi:psi:nu, bracket:f:g:k:l:nu")
      ->required();
  series->add_option("--terms", terms, "Largest exponent printed")->check(CLI::NonNegativeNumber)->capture_default_str();
  series->add_option("--format", format, "Output format")->check(formats)->capture_default_str();

  auto* bracket = app.add_subcommand("bracket", "Rankin-Cohen bracket of two catalog series");
  std::string f_id, g_id, k_text = "3/2", l_text = "1/2";
  int nu = 0;
  bracket->add_option("--f", f_id, "First series id")->required();
  bracket->add_option("--g", g_id, "Second series id")->required();
  bracket->add_option("--k", k_text, "Weight of f")->capture_default_str();
  bracket->add_option("--l", l_text, "Weight of g")->capture_default_str();
  bracket->add_option("--nu", nu, "Degree")->check(CLI::NonNegativeNumber)->capture_default_str();
  bracket->add_option("--terms", terms, "Largest exponent printed")->check(CLI::NonNegativeNumber)->capture_default_str();
  bracket->add_option("--format", format, "Output format")->check(formats)->capture_default_str();

  auto* hurwitz = app.add_subcommand("hurwitz", "Write or extend the Hurwitz class number cache");
  std::int64_t hmax = 1000;
  std::string out_dir;
  hurwitz->add_option("--max", hmax, "Largest n in the table")->check(CLI::NonNegativeNumber)->capture_default_str();
  hurwitz->add_option("--out", out_dir, "Cache directory (overrides --cache-dir)");

  auto* verify = app.add_subcommand("verify", "Check one relation");
  std::string relation;
  std::optional<std::int64_t> vmax;
  bool json = false;
  verify->add_option("relation", relation, "Relation id")->required();
  verify->add_option("--max", vmax, "Range bound (default depends on the relation)")->check(CLI::NonNegativeNumber);
  verify->add_flag("--json", json, "JSON report");

  auto* verify_all_cmd = app.add_subcommand("verify-all", "Check every registered relation");
  verify_all_cmd->add_option("--max", vmax, "Override every range bound")->check(CLI::NonNegativeNumber);
  verify_all_cmd->add_flag("--json", json, "JSON reports");

  auto* list = app.add_subcommand("list", "List series ids and relation ids");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*series) {
      print_series(build_series(name, terms), format, std::cout);
    } else if (*bracket) {
      const BracketSpec spec{HalfInt::parse(k_text), HalfInt::parse(l_text), nu};
      const std::string id = "bracket:" + f_id + ":" + g_id + ":" + k_text + ":" + l_text + ":" + std::to_string(nu);
      if (!is_catalog_id(f_id) || !is_catalog_id(g_id)) throw UsageError("unknown series id in bracket");
      print_series(bracket_series(f_id, g_id, spec, terms, id), format, std::cout);
    } else if (*hurwitz) {
      const std::string dir = out_dir.empty() ? cache_dir : out_dir;
      HurwitzCache cache(dir.empty() ? HurwitzCache::default_dir() : std::filesystem::path(dir));
      bool rebuilt = false;
      const auto table = cache.ensure(hmax, &rebuilt);
      std::cout << cache.file().string() << " covers 0.." << table->max_n() << (rebuilt ? " (written)" : " (reused)")
                << "\n";
    } else if (*verify) {
      const RelationInfo* info = find_relation(relation);
      if (!info) {
        std::cerr << "unknown relation '" << relation << "'; known:";
        for (const auto& r : relation_registry()) std::cerr << " " << r.id;
        std::cerr << "\n";
        return kExitUsage;
      }
      const std::int64_t m = vmax.value_or(info->default_max);
      const auto table = cached_table(cache_dir, info->hurwitz_bound(m));
      const std::vector<RelationReport> reports{info->run(*table, m)};
      print_reports(reports, json, std::cout);
      return exit_for(reports);
    } else if (*verify_all_cmd) {
      const auto table = cached_table(cache_dir, verify_all_hurwitz_bound(vmax));
      const auto reports = verify_all(*table, vmax);
      print_reports(reports, json, std::cout);
      return exit_for(reports);
    } else if (*list) {
      std::cout << "series:";
      for (const auto& id : catalog_ids()) std::cout << " " << id;
      std::cout << " lambda:s:t:chi:psi:nu delta:s:t:chi:psi:nu bracket:f:g:k:l:nu\nrelations:";
      for (const auto& r : relation_registry()) std::cout << " " << r.id;
      std::cout << "\n";
    }
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitOk;
}
