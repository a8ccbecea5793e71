#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "oddfact/engine.hpp"

namespace oddfact {

struct DiscoverOptions {
  BigInt target;
  /// Orders of the sampled generators (one generator per entry).
  std::vector<int> hints{2, 3};
  int attempts = 200;
  std::uint64_t seed = 20240601;
  /// Extra acceptance test on a group of the target order.
  std::function<bool(const CertifiedGroup&)> accept;
};

struct Discovered {
  CertifiedGroup group;
  int attempt = 0;
};

/// Random search for a subgroup of the target order generated by elements of
/// the hinted orders. Throws BadParams when the target does not divide |Z| and
/// NotFound when the attempts run out.
Discovered discover_subgroup(const CertifiedGroup& z, const DiscoverOptions& opt);

/// Random element of exact order k (a power of a uniform element), or an
/// empty matrix after `tries` failures.
Mat random_element_of_order(const Bsgs& z, std::mt19937_64& rng, int k, int tries = 200);

}  // namespace oddfact
