#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "oddfact/engine.hpp"

namespace oddfact {

/// Structural invariants of a certified group. The center and the
/// element-order histogram need full enumeration and are only filled in when
/// |G| <= enumerate_limit.
struct Fingerprint {
  BigInt order;
  BigInt derived_order;
  std::optional<BigInt> center_order;
  /// Invariants of G/G' as prime powers in ascending order.
  std::vector<long long> abelian_invariants;
  /// Elements of order k for k <= 40.
  std::optional<std::map<int, long long>> histogram;

  bool is_perfect() const { return derived_order == order; }
};

constexpr long long kEnumerateLimit = 1000000;

/// G' as the normal closure of the commutators of the generators.
CertifiedGroup derived_subgroup(const CertifiedGroup& g, std::uint64_t seed);

Fingerprint fingerprint(const CertifiedGroup& g, std::uint64_t seed, long long enumerate_limit = kEnumerateLimit);

/// Field-by-field comparison of the invariants both sides know. Returns the
/// list of differing field names (empty when they agree).
std::vector<std::string> fingerprint_mismatches(const Fingerprint& measured, const Fingerprint& expected);

}  // namespace oddfact
