#include "oddfact/fingerprint.hpp"

#include <algorithm>

namespace oddfact {

namespace {

Mat commutator(const Mat& a, const Mat& b) { return a.inverse() * b.inverse() * a * b; }

// Normal closure in <gens> of the group generated by `seeds`.
CertifiedGroup normal_closure(const FieldPtr& F, int n, const std::vector<Mat>& gens, std::vector<Mat> seeds,
                              std::uint64_t seed) {
  std::erase_if(seeds, [](const Mat& m) { return m.is_identity(); });
  BsgsOptions opt;
  opt.seed = seed;
  Bsgs d = Bsgs::build(F, n, seeds, opt);
  std::vector<Mat> current = seeds;
  std::vector<Mat> inv;
  for (const Mat& g : gens) inv.push_back(g.inverse());
  for (std::size_t i = 0; i < current.size(); ++i)
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Mat c = inv[j] * current[i] * gens[j];
      if (d.contains(c)) continue;
      d.extend({c}, opt);
      current.push_back(std::move(c));
    }
  return CertifiedGroup{current, std::move(d)};
}

std::vector<std::pair<long long, int>> factorize(BigInt n) {
  std::vector<std::pair<long long, int>> out;
  for (long long p = 2; BigInt(p) * p <= n; ++p) {
    int e = 0;
    while (n % p == 0) n /= p, ++e;
    if (e) out.push_back({p, e});
  }
  if (n > 1) out.push_back({static_cast<long long>(n), 1});
  return out;
}

// |<G', g_i^k>| / |G'| = |A^k| for A = G/G'.
BigInt power_subgroup_order(const CertifiedGroup& g, const CertifiedGroup& derived, const BigInt& k,
                            std::uint64_t seed) {
  std::vector<Mat> more;
  for (const Mat& x : g.gens) {
    Mat y = x.power(static_cast<long long>(k));
    if (!derived.bsgs.contains(y)) more.push_back(std::move(y));
  }
  if (more.empty()) return 1;
  Bsgs b = derived.bsgs;
  BsgsOptions opt;
  opt.seed = seed;
  b.extend(more, opt);
  return b.order() / derived.order();
}

}  // namespace

CertifiedGroup derived_subgroup(const CertifiedGroup& g, std::uint64_t seed) {
  std::vector<Mat> comms;
  for (std::size_t i = 0; i < g.gens.size(); ++i)
    for (std::size_t j = i + 1; j < g.gens.size(); ++j) comms.push_back(commutator(g.gens[i], g.gens[j]));
  return normal_closure(g.bsgs.field(), g.bsgs.dim(), g.gens, std::move(comms), seed);
}

Fingerprint fingerprint(const CertifiedGroup& g, std::uint64_t seed, long long enumerate_limit) {
  Fingerprint fp;
  fp.order = g.order();
  const CertifiedGroup d = derived_subgroup(g, seed);
  fp.derived_order = d.order();

  const BigInt quotient = fp.order / fp.derived_order;
  for (const auto& [r, e] : factorize(quotient)) {
    BigInt rpart = 1;
    for (int i = 0; i < e; ++i) rpart *= r;
    const BigInt cofactor = quotient / rpart;
    // sizes of the r-parts of A^{r^k}
    std::vector<BigInt> layer{rpart};
    BigInt rk = 1;
    while (layer.back() > 1) {
      rk *= r;
      layer.push_back(power_subgroup_order(g, d, rk * cofactor, seed));
    }
    // cyclic factors of order >= r^{k+1}: log_r(layer[k] / layer[k+1])
    std::vector<int> at_least;
    for (std::size_t k = 0; k + 1 < layer.size(); ++k) {
      BigInt ratio = layer[k] / layer[k + 1];
      int c = 0;
      while (ratio > 1) ratio /= r, ++c;
      at_least.push_back(c);
    }
    for (std::size_t k = 0; k < at_least.size(); ++k) {
      const int next = k + 1 < at_least.size() ? at_least[k + 1] : 0;
      long long pw = 1;
      for (std::size_t i = 0; i <= k; ++i) pw *= r;
      for (int c = 0; c < at_least[k] - next; ++c) fp.abelian_invariants.push_back(pw);
    }
  }
  std::sort(fp.abelian_invariants.begin(), fp.abelian_invariants.end());

  if (fp.order <= enumerate_limit) {
    long long center = 0;
    std::map<int, long long> hist;
    g.bsgs.for_each_element([&](const Mat& x) {
      bool central = true;
      for (const Mat& h : g.gens)
        if (!(x * h == h * x)) {
          central = false;
          break;
        }
      center += central;
      Mat y = x;
      for (int k = 1; k <= 40; ++k) {
        if (y.is_identity()) {
          ++hist[k];
          break;
        }
        y = y * x;
      }
    });
    fp.center_order = center;
    fp.histogram = std::move(hist);
  }
  return fp;
}

std::vector<std::string> fingerprint_mismatches(const Fingerprint& measured, const Fingerprint& expected) {
  std::vector<std::string> out;
  if (measured.order != expected.order) out.push_back("order");
  if (measured.derived_order != expected.derived_order) out.push_back("derivedOrder");
  if (measured.abelian_invariants != expected.abelian_invariants) out.push_back("abelianInvariants");
  if (measured.center_order && expected.center_order && *measured.center_order != *expected.center_order)
    out.push_back("centerOrder");
  if (measured.histogram && expected.histogram && *measured.histogram != *expected.histogram)
    out.push_back("histogram");
  return out;
}

}  // namespace oddfact
