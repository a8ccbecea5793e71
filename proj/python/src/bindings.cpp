#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "oddfact/discover.hpp"
#include "oddfact/error.hpp"
#include "oddfact/orders.hpp"
#include "oddfact/report.hpp"
#include "oddfact/suites.hpp"
#include "oddfact/verifier.hpp"

namespace py = pybind11;
using namespace oddfact;

namespace {

std::string resolve_data(const std::string& data_dir) { return data_dir.empty() ? oddfact::data_dir() : data_dir; }

std::string order_text(const std::string& family, const std::vector<long long>& params) {
  return to_string(order_of(parse_family(family), params));
}

// Report lines (header first) for the selected rows, as the CLI writes them.
std::string verify_jsonl(const std::vector<int>& rows, const std::vector<long long>& qs, std::optional<int> m,
                         const std::string& mode, std::uint64_t seed, bool stretch, bool controls, bool suites,
                         const std::string& data_dir) {
  RunOptions opt;
  opt.mode = parse_mode(mode);
  opt.stretch = stretch;
  std::vector<CaseReport> reports;
  {
    py::gil_scoped_release release;
    Workspace ws(seed, "", resolve_data(data_dir));
    for (long long q : qs) {
      auto part = verify_rows(ws, rows, q, m, opt);
      reports.insert(reports.end(), part.begin(), part.end());
    }
    if (controls) {
      auto ctl = run_negative_controls(ws, opt);
      reports.insert(reports.end(), ctl.begin(), ctl.end());
    }
    if (suites)
      for (const SuiteReport& s : run_all_suites(ws)) reports.push_back(to_case_report(s, seed));
  }
  std::ostringstream out;
  write_reports(out, reports, "python verify");
  return out.str();
}

py::list suite_list(std::uint64_t seed) {
  std::vector<SuiteReport> all;
  {
    py::gil_scoped_release release;
    Workspace ws(seed, "", "");
    all = run_all_suites(ws);
  }
  py::list out;
  for (const SuiteReport& s : all) {
    py::list checks;
    for (const SuiteCheck& c : s.checks)
      checks.append(py::dict(py::arg("name") = c.name, py::arg("passed") = c.passed, py::arg("asserted") = c.asserted,
                             py::arg("detail") = c.detail));
    out.append(py::dict(py::arg("name") = s.name, py::arg("passed") = s.passed(), py::arg("checks") = checks));
  }
  return out;
}

py::list audit_list(long long q) {
  py::list out;
  for (const Identity& id : audit_identities_for(q)) {
    py::list terms;
    for (const auto& [text, value] : id.terms) terms.append(py::make_tuple(text, to_string(value)));
    out.append(py::dict(py::arg("id") = id.id, py::arg("text") = id.text, py::arg("holds") = id.holds(),
                        py::arg("terms") = terms));
  }
  return out;
}

std::pair<std::string, std::string> orbit_of(int m, long long q, const std::string& group, const std::string& point,
                                          const std::string& action, std::uint64_t seed) {
  py::gil_scoped_release release;
  Workspace ws(seed, "", "");
  const OrthSpace& V = ws.space(m, q);
  const Field& F = *V.field;
  const CertifiedGroup* g = nullptr;
  if (group == "omega") g = &ws.omega(m, q);
  if (group == "g2") {
    if (m != 3) throw Error(ErrorCode::BadParams, "G2 lives in dimension 7 (m = 3)");
    g = &build::g2(ws, q, 'A');
  }
  if (!g) throw Error(ErrorCode::BadParams, "group must be omega or g2");
  Vec v;
  if (point == "e1") v = V.e(1);
  else if (point == "d") v = V.d();
  else if (point == "v-") v = minus_point(V);
  else if (point == "v+") v = plus_point(V);
  Point p;
  if (v.empty()) p = parse_point(F, point);
  else if (action == "line") p = line_point(F, v);
  else if (action == "vector") p = vector_point(v);
  else throw Error(ErrorCode::BadParams, "action must be vector or line");
  const Suborbit s = point_suborbit(*g, p, ws.seed_for("orbit"));
  return {to_string(s.orbit_size), to_string(s.stabilizer.order())};
}

std::string discover_json(const std::string& target, int m, long long q, const std::vector<int>& hints, int attempts,
                     std::uint64_t seed) {
  py::gil_scoped_release release;
  Workspace ws(seed, "", "");
  const CertifiedGroup& z = ws.omega(m, q);
  DiscoverOptions opt;
  opt.target = BigInt(target);
  opt.hints = hints;
  opt.attempts = attempts;
  opt.seed = seed;
  const Discovered d = discover_subgroup(z, opt);
  return fingerprint_json(fingerprint(d.group, ws.seed_for("discover:fingerprint")));
}

}  // namespace

PYBIND11_MODULE(_oddfact, mod) {
  mod.doc() = "Factorizations of odd-dimensional orthogonal groups: exact verification core";

  py::register_exception<Error>(mod, "OddfactError");

  mod.attr("SCHEMA_VERSION") = kSchemaVersion;
  mod.def("order", &order_text, py::arg("family"), py::arg("params"), "Closed-form group order as a decimal string.");
  mod.def("verify_jsonl", &verify_jsonl, py::arg("rows"), py::arg("qs"), py::arg("m") = std::nullopt,
          py::arg("mode") = "both", py::arg("seed") = 20240601, py::arg("stretch") = false, py::arg("controls") = false,
          py::arg("suites") = false, py::arg("data_dir") = "");
  mod.def("suites", &suite_list, py::arg("seed") = 20240601);
  mod.def("audit", &audit_list, py::arg("q"));
  mod.def("orbit", &orbit_of, py::arg("m") = 3, py::arg("q") = 3, py::arg("group") = "omega", py::arg("point") = "e1",
          py::arg("action") = "vector", py::arg("seed") = 20240601);
  mod.def("discover", &discover_json, py::arg("target"), py::arg("m") = 3, py::arg("q") = 3,
          py::arg("hints") = std::vector<int>{2, 3}, py::arg("attempts") = 200, py::arg("seed") = 20240601);
}
