#include "oddfact/discover.hpp"

namespace oddfact {

Mat random_element_of_order(const Bsgs& z, std::mt19937_64& rng, int k, int tries) {
  for (int t = 0; t < tries; ++t) {
    Mat x = z.random_element(rng);
    const long long o = element_order(x, 1 << 16);
    if (o > 0 && o % k == 0) return x.power(o / k);
  }
  return {};
}

Discovered discover_subgroup(const CertifiedGroup& z, const DiscoverOptions& opt) {
  if (opt.target < 1 || z.order() % opt.target != 0)
    throw Error(ErrorCode::BadParams, "target " + to_string(opt.target) + " does not divide " + to_string(z.order()));
  std::mt19937_64 rng(opt.seed);
  for (int attempt = 0; attempt < opt.attempts; ++attempt) {
    std::vector<Mat> gens;
    for (int h : opt.hints) {
      Mat x = random_element_of_order(z.bsgs, rng, h);
      if (x.rows() == 0) break;
      gens.push_back(std::move(x));
    }
    if (gens.size() != opt.hints.size()) continue;
    BsgsOptions bo;
    bo.seed = opt.seed + static_cast<std::uint64_t>(attempt);
    bo.order_cap = opt.target;
    Bsgs b;
    try {
      b = Bsgs::build(z.bsgs.field(), z.bsgs.dim(), gens, bo);
    } catch (const Error& e) {
      if (e.code() == ErrorCode::CapExceeded) continue;
      throw;
    }
    if (b.order() != opt.target) continue;
    CertifiedGroup g{std::move(gens), std::move(b)};
    if (opt.accept && !opt.accept(g)) continue;
    return Discovered{std::move(g), attempt};
  }
  throw Error(ErrorCode::NotFound, "no subgroup of order " + to_string(opt.target) + " after " +
                                       std::to_string(opt.attempts) + " attempts");
}

}  // namespace oddfact
