#pragma once

#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "oddfact/fingerprint.hpp"
#include "oddfact/registry.hpp"

namespace oddfact {

enum class Mode { Arithmetic, Constructive, Both };
Mode parse_mode(const std::string& s);
std::string to_string(Mode m);

struct RunOptions {
  Mode mode = Mode::Both;
  bool stretch = false;
  std::size_t cap_points = kDefaultPointCap;
  std::size_t cap_cosets = kDefaultCosetCap;
};

struct OptionResult {
  std::string label;
  BigInt orbit_size;
  BigInt required;  // |Z| / |stabilized side|
  BigInt intersection;
  bool transitive = false;
};

struct Timings {
  long long build_ms = 0, bsgs_ms = 0, coset_ms = 0;
};

struct CaseReport {
  std::string case_id;
  int row = 0;
  std::map<std::string, std::string> params;
  std::string verdict;  // holds, fails, arithmetic-only, skipped
  std::string reason;
  Expect expect = Expect::Holds;
  std::string expect_reason;
  bool matches = true;       // verdict agrees with the expectation (skipped counts as agreeing)
  bool construction_error = false;

  std::string x_label, y_label, acting;  // acting: "X" or "Y"
  // closed forms
  BigInt z_order, x_order, y_order, index;
  BigInt expected_intersection;
  std::string intersection_label;
  std::optional<std::string> reference;
  std::optional<Fingerprint> reference_fingerprint;
  // measured (constructive runs)
  std::optional<BigInt> measured_z, measured_x, measured_y, orbit_size;
  std::optional<Fingerprint> intersection;
  std::vector<std::string> fingerprint_mismatches;
  std::vector<OptionResult> options;
  std::string chosen_option;
  std::string provenance, note;

  Timings timings;
  std::uint64_t seed = 0;
};

/// Arithmetic screen plus (depending on mode and scope) the constructive check.
CaseReport run_case(Workspace& ws, const FactorCase& c, const RunOptions& opt);

/// One report per ratio identity.
CaseReport audit_report(const Identity& id, std::uint64_t seed);

/// Selected rows for one q: audit identities (unless mode is constructive)
/// followed by the cases. Identities are matched to rows by their id.
std::vector<CaseReport> verify_rows(Workspace& ws, const std::vector<int>& rows, long long q, std::optional<int> m,
                                    const RunOptions& opt);

std::vector<CaseReport> run_negative_controls(Workspace& ws, const RunOptions& opt);

/// A unit of work in registry order: a finished report (audit identity or a
/// row without cases) or a case still to run.
struct PlannedItem {
  std::optional<CaseReport> done;
  std::optional<FactorCase> todo;
};
std::vector<PlannedItem> plan_rows(const std::vector<int>& rows, long long q, std::optional<int> m, const RunOptions& opt,
                                   std::uint64_t seed);
std::vector<PlannedItem> plan_controls();

/// Runs the planned cases on `jobs` workers, each with its own workspace from
/// `make_workspace`. Reports come back in plan order; `stats` (optional)
/// receives the summed cache counters.
std::vector<CaseReport> execute(const std::vector<PlannedItem>& plan,
                                const std::function<std::unique_ptr<Workspace>()>& make_workspace,
                                const RunOptions& opt, int jobs = 1, Workspace::CacheStats* stats = nullptr);

}  // namespace oddfact
