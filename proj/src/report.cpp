#include "oddfact/report.hpp"

#include <json.hpp>

namespace oddfact {

namespace {

using nlohmann::json;

json fp_obj(const Fingerprint& f) {
  json j;
  j["order"] = to_string(f.order);
  j["derivedOrder"] = to_string(f.derived_order);
  j["isPerfect"] = f.is_perfect();
  j["centerOrder"] = f.center_order ? json(to_string(*f.center_order)) : json(nullptr);
  j["abelianInvariants"] = f.abelian_invariants;
  if (f.histogram) {
    json h = json::object();
    for (const auto& [k, v] : *f.histogram) h[std::to_string(k)] = v;
    j["histogram"] = h;
  } else {
    j["histogram"] = nullptr;
  }
  return j;
}

json opt_str(const std::optional<BigInt>& v) { return v ? json(to_string(*v)) : json(nullptr); }

}  // namespace

std::string fingerprint_json(const Fingerprint& f) { return fp_obj(f).dump(); }

std::string report_json(const CaseReport& r, bool timings) {
  json j;
  j["schemaVersion"] = kSchemaVersion;
  j["caseId"] = r.case_id;
  j["params"] = r.params;
  j["verdict"] = r.verdict;
  j["reason"] = r.reason;
  j["seed"] = r.seed;
  j["expectation"] = {{"verdict", to_string(r.expect)}, {"matches", r.matches}};
  if (!r.expect_reason.empty()) j["expectation"]["reason"] = r.expect_reason;
  if (r.construction_error) j["constructionError"] = true;

  if (!r.case_id.starts_with("audit/")) {
    json e;
    e["x"] = r.x_label;
    e["y"] = r.y_label;
    e["zOrder"] = to_string(r.z_order);
    e["xOrder"] = to_string(r.x_order);
    e["yOrder"] = to_string(r.y_order);
    e["index"] = to_string(r.index);
    if (r.expected_intersection > 0) {
      e["intersection"] = {{"order", to_string(r.expected_intersection)}, {"structure", r.intersection_label}};
      if (r.reference) e["intersection"]["reference"] = *r.reference;
      if (r.reference_fingerprint) e["intersection"]["fingerprint"] = fp_obj(*r.reference_fingerprint);
    }
    j["expected"] = e;

    if (r.measured_z) {
      json m;
      m["zOrder"] = opt_str(r.measured_z);
      m["xOrder"] = opt_str(r.measured_x);
      m["yOrder"] = opt_str(r.measured_y);
      m["index"] = r.measured_z && r.measured_y ? json(to_string(*r.measured_z / *r.measured_y)) : json(nullptr);
      m["orbitSize"] = opt_str(r.orbit_size);
      m["acting"] = r.acting;
      m["intersection"] = r.intersection ? fp_obj(*r.intersection) : json(nullptr);
      if (!r.fingerprint_mismatches.empty()) m["fingerprintMismatches"] = r.fingerprint_mismatches;
      json opts = json::array();
      for (const OptionResult& o : r.options)
        opts.push_back({{"label", o.label},
                        {"orbitSize", to_string(o.orbit_size)},
                        {"required", to_string(o.required)},
                        {"intersectionOrder", to_string(o.intersection)},
                        {"transitive", o.transitive}});
      m["classesTried"] = opts;
      m["chosen"] = r.chosen_option;
      if (!r.provenance.empty()) m["provenance"] = r.provenance;
      if (!r.note.empty()) m["note"] = r.note;
      j["measured"] = m;
    }
  }
  if (timings)
    j["timings"] = {{"buildMs", r.timings.build_ms}, {"bsgsMs", r.timings.bsgs_ms}, {"cosetMs", r.timings.coset_ms}};
  return j.dump();
}

void write_reports(std::ostream& out, const std::vector<CaseReport>& reports, const std::string& command, bool timings) {
  const Summary s = summarize(reports);
  json h;
  h["schemaVersion"] = kSchemaVersion;
  h["command"] = command;
  h["summary"] = {{"total", s.total},     {"holds", s.holds},         {"fails", s.fails},
                  {"arithmeticOnly", s.arithmetic_only}, {"skipped", s.skipped}, {"mismatches", s.mismatches},
                  {"constructionErrors", s.construction_errors}};
  out << h.dump() << '\n';
  for (const CaseReport& r : reports) out << report_json(r, timings) << '\n';
}

Summary summarize(const std::vector<CaseReport>& reports) {
  Summary s;
  for (const CaseReport& r : reports) {
    ++s.total;
    if (r.verdict == "holds") ++s.holds;
    if (r.verdict == "fails") ++s.fails;
    if (r.verdict == "arithmetic-only") ++s.arithmetic_only;
    if (r.verdict == "skipped") ++s.skipped;
    if (!r.matches) ++s.mismatches;
    if (r.construction_error) ++s.construction_errors;
  }
  return s;
}

}  // namespace oddfact
