#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "oddfact/verifier.hpp"

namespace oddfact {

inline constexpr const char* kSchemaVersion = "oddfact-report/1";

/// JSON text of one report (keys sorted, orders as decimal strings). Timings
/// are omitted unless requested so that reports are byte-stable.
std::string report_json(const CaseReport& r, bool timings = false);
std::string fingerprint_json(const Fingerprint& f);

/// Header line followed by one line per case.
void write_reports(std::ostream& out, const std::vector<CaseReport>& reports, const std::string& command,
                   bool timings = false);

struct Summary {
  int total = 0, holds = 0, fails = 0, arithmetic_only = 0, skipped = 0, mismatches = 0, construction_errors = 0;
};
Summary summarize(const std::vector<CaseReport>& reports);

}  // namespace oddfact
