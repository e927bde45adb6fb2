#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <optional>

#include "qrel/arithmetic.hpp"
#include "qrel/character.hpp"
#include "qrel/elliptic.hpp"
#include "qrel/holproj.hpp"
#include "qrel/hurwitz.hpp"
#include "qrel/indefinite_theta.hpp"
#include "qrel/modular_forms.hpp"
#include "qrel/relations.hpp"

namespace py = pybind11;
using namespace qrel;

namespace {

std::vector<std::string> coefficients(const RSeries& f) {
  std::vector<std::string> out;
  for (std::int64_t n = 0; n <= f.trunc(); ++n) out.push_back(f.coeff(n).str());
  return out;
}

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Exact q-expansions and class number relations; rationals are returned as 'p/q' strings";

  m.def("hurwitz", [](std::int64_t n) { return hurwitz(n).str(); }, py::arg("n"));
  m.def("sigma_k", [](std::int64_t n, int k) { return sigma_k(n, k).get_str(); }, py::arg("n"), py::arg("k"));
  m.def("lambda_k", [](std::int64_t n, int k) { return lambda_k(n, k).str(); }, py::arg("n"), py::arg("k"));
  m.def("ec_ap", &ec_ap, py::arg("a4"), py::arg("a6"), py::arg("p"));

  m.def(
      "series",
      [](const std::string& id, std::int64_t terms) {
        py::gil_scoped_release release;
        const auto c = catalog_series(id, terms);
        std::vector<std::optional<std::string>> out;
        for (std::int64_t n = 0; n <= terms; ++n) {
          if (c->is_defined(n))
            out.emplace_back(c->series.coeff(n).str());
          else
            out.emplace_back(std::nullopt);
        }
        return out;
      },
      py::arg("id"), py::arg("terms"));

  m.def(
      "bracket",
      [](const std::string& f, const std::string& g, const std::string& k, const std::string& l, int nu,
         std::int64_t terms) {
        py::gil_scoped_release release;
        const BracketSpec spec{HalfInt::parse(k), HalfInt::parse(l), nu};
        return coefficients(rankin_cohen(catalog_series(f, terms)->series, catalog_series(g, terms)->series, spec));
      },
      py::arg("f"), py::arg("g"), py::arg("k"), py::arg("l"), py::arg("nu"), py::arg("terms"));

  m.def(
      "kappa",
      [](const std::string& k, const std::string& l, int nu) {
        const PiScalar v = kappa({HalfInt::parse(k), HalfInt::parse(l), nu});
        return py::make_tuple(v.r.str(), v.e);
      },
      py::arg("k"), py::arg("l"), py::arg("nu"));

  auto indefinite = [](bool odd) {
    return [odd](std::int64_t s, std::int64_t t, const std::string& chi, const std::string& psi, int nu,
                 std::int64_t terms) {
      py::gil_scoped_release release;
      const auto c = character_from_name(chi), p = character_from_name(psi);
      const IndefiniteTheta L = odd ? delta_indef(s, t, c, p, nu, terms) : lambda_indef(s, t, c, p, nu, terms);
      std::vector<std::tuple<std::string, std::string, std::int64_t>> out;
      for (std::int64_t n = 0; n <= terms; ++n) {
        const QuadExt x = L.coeff(n);
        out.emplace_back(x.a().str(), x.b().str(), x.D());
      }
      py::gil_scoped_acquire acquire;
      return py::make_tuple(L.outer, out);
    };
  };
  m.def("lambda_indef", indefinite(false), py::arg("s"), py::arg("t"), py::arg("chi"), py::arg("psi"),
        py::arg("nu"), py::arg("terms"));
  m.def("delta_indef", indefinite(true), py::arg("s"), py::arg("t"), py::arg("chi"), py::arg("psi"),
        py::arg("nu"), py::arg("terms"));

  m.def(
      "pell_orbit",
      [](std::int64_t s, std::int64_t t, std::int64_t r) {
        const PellOrbitData P = pell_orbit(s, t, r);
        py::dict d;
        d["x"] = P.x.get_str();
        d["y"] = P.y.get_str();
        d["D"] = P.D;
        d["c"] = P.c;
        d["representatives"] = P.representatives;
        return d;
      },
      py::arg("s"), py::arg("t"), py::arg("r"));

  m.def(
      "verify",
      [](const std::string& relation, std::optional<std::int64_t> max_n) {
        std::string json;
        {
          py::gil_scoped_release release;
          const RelationInfo* info = find_relation(relation);
          if (!info) throw std::invalid_argument("unknown relation '" + relation + "'");
          const std::int64_t mx = max_n.value_or(info->default_max);
          const auto H = hurwitz_table(info->hurwitz_bound(mx));
          json = report_to_json(info->run(*H, mx));
        }
        return json;
      },
      py::arg("relation"), py::arg("max_n") = py::none());

  m.def(
      "verify_all",
      [](std::optional<std::int64_t> max_n) {
        py::gil_scoped_release release;
        return reports_to_json(verify_all(max_n));
      },
      py::arg("max_n") = py::none());

  m.def("relation_ids", [] {
    std::vector<std::string> ids;
    for (const auto& r : relation_registry()) ids.push_back(r.id);
    return ids;
  });
}
