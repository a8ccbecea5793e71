#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "oddfact/atlas.hpp"
#include "oddfact/discover.hpp"
#include "oddfact/fingerprint.hpp"

namespace oddfact {

/// Memoized constructions shared by all cases of a run. Every cached object
/// gets a seed derived from the run seed and its own key, so results do not
/// depend on which cases ran before.
class Workspace {
 public:
  explicit Workspace(std::uint64_t seed = 20240601, std::string cache_dir = {}, std::string data_dir = oddfact::data_dir());

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t seed_for(const std::string& key) const;
  const std::string& cache_dir() const noexcept { return cache_dir_; }

  const OrthSpace& space(int m, long long q);
  /// Ω_{2m+1}(q), certified against its closed-form order.
  const CertifiedGroup& omega(int m, long long q);
  /// Certified group under `key`, built once.
  const CertifiedGroup& group(const std::string& key, const std::function<CertifiedGroup()>& make);
  /// Point (or point tuple) under `key`, built once.
  const std::vector<Point>& points(const std::string& key, const std::function<std::vector<Point>()>& make);

  /// Stabilizer chain of a point tuple in a certified group.
  CertifiedGroup stabilizer_of(const CertifiedGroup& g, const std::vector<Point>& pts, const std::string& key);

  /// Certification through the BSGS cache when a cache directory is set.
  CertifiedGroup certify_cached(const Group& g, const std::string& key, const std::optional<BigInt>& bound = std::nullopt);

  /// Stored generators (data/groups/<key>.gens) or a fresh seeded search.
  /// `provenance` receives "stored-data" or "discovered seed=..".
  /// `gram` (may be null) is the form stored generators must preserve.
  const CertifiedGroup& discovered(const std::string& key, const CertifiedGroup& ambient, const Mat* gram,
                                   DiscoverOptions opt, std::string* provenance = nullptr);

  /// Groups this workspace found by a fresh search (not loaded from data),
  /// keyed by data name, with the search seed as provenance.
  const std::map<std::string, Group>& fresh_discoveries() const noexcept { return fresh_; }

  const Fingerprint& reference_fingerprint(const std::string& name);

  struct CacheStats {
    int hits = 0, misses = 0, rejected = 0;
  };
  const CacheStats& cache_stats() const noexcept { return stats_; }

 private:
  std::uint64_t seed_;
  std::string cache_dir_;
  std::string data_dir_;
  std::map<std::pair<int, long long>, OrthSpace> spaces_;
  std::map<std::string, std::unique_ptr<CertifiedGroup>> groups_;
  std::map<std::string, std::vector<Point>> points_;
  std::map<std::string, Fingerprint> references_;
  std::map<std::string, std::string> provenance_;
  std::map<std::string, Group> fresh_;
  CacheStats stats_;
};

enum class Expect { Holds, Fails, Either };
std::string to_string(Expect e);

/// One side is given as the Z-stabilizer of a point tuple; the other side acts
/// on that tuple. Z = XY iff the acting side is transitive on the Z-orbit of
/// the tuple, and the stabilizer in the acting side is X ∩ Y.
struct Option {
  std::string label;
  CertifiedGroup acting;
  std::vector<Point> points;
  BigInt fixed_order;  // certified order of the stabilized side
};

struct Built {
  bool x_acts = true;
  BigInt z_order;
  std::vector<Option> options;  // alternatives (conjugacy classes), tried in order
  std::string provenance;
  std::string note;
};

struct FactorCase {
  std::string id;
  int row = 0;
  int m = 0;
  long long q = 0;
  std::string x_label, y_label;
  std::map<std::string, std::string> params;
  BigInt z_order, x_order, y_order;  // closed forms
  BigInt expected_intersection;
  std::string intersection_label;
  std::optional<std::string> reference;  // reference group for the fingerprint
  Expect expect = Expect::Holds;
  std::string expect_reason;
  bool constructive = false;
  bool stretch = false;
  std::string arithmetic_only_reason;
  std::function<Built(Workspace&)> build;

  BigInt index() const { return z_order / y_order; }
};

/// Cases of a row for the given q (and m for Row 1). Empty when the row does
/// not apply to q; `why` then says why.
std::vector<FactorCase> cases_for(int row, long long q, std::optional<int> m, std::string* why = nullptr);

/// Pairs that must not factorize.
std::vector<FactorCase> negative_controls();

/// Arithmetic screen: empty when |X| is a multiple of |Z:Y|, else the reason.
std::string order_obstruction(const BigInt& x_order, const BigInt& index);

/// Every ratio identity of the arithmetic audit for a given q.
/// A chain of expressions that must all be equal.
struct Identity {
  std::string id;
  std::string text;
  std::vector<std::pair<std::string, BigInt>> terms;
  bool holds() const;
};
std::vector<Identity> audit_identities_for(long long q);

/// Shared constructions used by the registry, the suites and the tests.
namespace build {
/// G_2(q) < Ω_7(q) as a tensor stabilizer. cls: 'A' octonion tensor, 'B' its
/// image under the reflection r_d, 'K' the least tensor of the Ω_7-orbit of
/// 'A' fixed by every k(a).
const CertifiedGroup& g2(Workspace& ws, long long q, char cls);
Point g2_tensor(Workspace& ws, long long q, char cls);
const CertifiedGroup& omega6(Workspace& ws, int m, long long q, char eps);  // '+' or '-'
const CertifiedGroup& rt_group(Workspace& ws, int m, long long q, int a, int b, ExtKind kind);
/// R:S for S given by generators of SL_m(q) (m x m, acting on U).
const CertifiedGroup& rs_group(Workspace& ws, const std::string& key, int m, long long q, const std::vector<Mat>& s_gens,
                               const BigInt& s_order);
/// Dimension of the space of vectors fixed by every generator.
int fixed_space_dim(const std::vector<Mat>& gens);
}  // namespace build

}  // namespace oddfact
