#pragma once

#include <string>
#include <vector>

#include "oddfact/registry.hpp"
#include "oddfact/verifier.hpp"

namespace oddfact {

struct SuiteCheck {
  std::string name;
  bool passed = false;
  bool asserted = true;  // probes outside a hypothesis are recorded only
  std::string detail;
};

struct SuiteReport {
  std::string name;
  std::vector<SuiteCheck> checks;
  bool passed() const;
};

/// Ω_6^+(3) against G_2(3) in Ω_7(3), re-run on `pairs` conjugates (X^x, Y^y)
/// with x, y random in Z; the pair (1, 1) comes first. Conjugation by the
/// reflection r_d (not in Z) is recorded without being asserted.
SuiteReport conjugation_suite(Workspace& ws, int pairs = 20);

/// R = q^{m(m-1)/2}.q^m: |R'| = |Z(R)| = q^{m(m-1)/2}, R' = Z(R), p-th powers
/// and commutators lie in R', |R/R'| = q^m.
SuiteReport special_group_suite(Workspace& ws, int m, long long q);

/// M = R:T and K = Z_v: |R ∩ K| and the group M ∩ K induces on U.
SuiteReport stabilizer_meet_suite(Workspace& ws, int m, long long q);

/// h(a) k(a) = σ(a) for every a, all three isometries, identities at a = 0.
SuiteReport proof_element_suite(long long q);

/// ρ and σ_2: isometries fixing e_1, ρ of order p, σ_2 an involution.
SuiteReport rho_sigma_suite(long long q);

/// Every suite with its default parameters, in a fixed order.
std::vector<SuiteReport> run_all_suites(Workspace& ws);

/// Report entry: verdict holds when every asserted check passes.
CaseReport to_case_report(const SuiteReport& s, std::uint64_t seed);

}  // namespace oddfact
