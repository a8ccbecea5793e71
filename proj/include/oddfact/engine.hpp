#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <unordered_map>
#include <vector>

#include "oddfact/mat.hpp"
#include "oddfact/orders.hpp"
#include "oddfact/point.hpp"

namespace oddfact {

constexpr std::size_t kDefaultPointCap = 5000000;
constexpr std::size_t kDefaultCosetCap = 1000000;

/// Orbit with a Schreier vector: points[i] = points[parent[i]] * gens[via[i]].
struct Orbit {
  std::vector<Point> points;
  std::vector<int> parent;
  std::vector<int> via;
  std::unordered_map<Point, int, PointHash> index;

  std::size_t size() const noexcept { return points.size(); }
  int find(const Point& p) const {
    auto it = index.find(p);
    return it == index.end() ? -1 : it->second;
  }
};

/// Breadth-first orbit in generator order. Throws DomainOverflow past cap.
Orbit orbit(const Field& F, const std::vector<Mat>& gens, const Point& x0, std::size_t cap = kDefaultPointCap);

/// Element u with points[0] * u == points[i], as a word in gens.
Mat orbit_transversal(const Orbit& o, const std::vector<Mat>& gens, int i);

/// Product-replacement random elements (seeded, fixed burn-in).
class RandomElements {
 public:
  RandomElements(const std::vector<Mat>& gens, std::uint64_t seed, int burn_in = 50);
  Mat next();

 private:
  std::vector<Mat> slots_;
  Mat acc_;
  std::mt19937_64 rng_;
};

struct BsgsOptions {
  std::uint64_t seed = 20240601;
  /// Base points placed first, in order.
  std::vector<Point> base_prefix;
  /// A proven upper bound on the group order. Reaching it certifies the chain
  /// without the Schreier-generator pass; exceeding it is an error.
  std::optional<BigInt> known_order;
  /// Abort with CapExceeded as soon as the order exceeds this bound.
  std::optional<BigInt> order_cap;
  std::size_t point_cap = kDefaultPointCap;
  int quiet_rounds = 20;
  /// Run the deterministic Schreier-generator pass when the known order is
  /// not reached. When false the chain may describe a proper subgroup.
  bool verify = true;
};

/// Base and strong generating set for a matrix group acting on points.
class Bsgs {
 public:
  Bsgs() = default;
  /// Throws CertificationFailure if a known order is given and not attained.
  static Bsgs build(const FieldPtr& field, int n, const std::vector<Mat>& gens, const BsgsOptions& opt = {});

  /// Rebuild from stored base and strong generators and re-verify every
  /// Schreier generator. Throws CertificationFailure on any inconsistency.
  static Bsgs from_chain(const FieldPtr& field, int n, const std::vector<Point>& base, const std::vector<Mat>& strong,
                         std::size_t point_cap = kDefaultPointCap);

  /// Extends the group by more generators (randomized phase plus verification).
  void extend(const std::vector<Mat>& more, const BsgsOptions& opt);

  const FieldPtr& field() const noexcept { return field_; }
  int dim() const noexcept { return n_; }
  BigInt order() const;
  bool contains(const Mat& g) const;
  bool is_trivial() const noexcept { return levels_.empty(); }

  std::size_t level_count() const noexcept { return levels_.size(); }
  std::vector<Point> base() const;
  std::vector<std::size_t> orbit_sizes() const;
  const std::vector<Mat>& strong_generators() const noexcept { return strong_; }
  /// Generators of the pointwise stabilizer of the first `level` base points.
  std::vector<Mat> level_generators(std::size_t level) const;
  /// Order of that stabilizer.
  BigInt level_order(std::size_t level) const;
  const std::vector<Point>& level_orbit(std::size_t level) const { return levels_.at(level).pts; }

  /// Uniform random element of the stabilizer of the first `level` base points.
  Mat random_element(std::mt19937_64& rng, std::size_t level = 0) const;
  /// Calls f on every element (use only for small groups).
  void for_each_element(const std::function<void(const Mat&)>& f) const;
  /// Element mapping base point `level` to its orbit point `i`.
  Mat transversal(std::size_t level, int i) const;

 private:
  struct Level {
    Point base;
    std::vector<int> gens;  // indices into strong_
    std::vector<Point> pts;
    std::unordered_map<Point, int, PointHash> idx;
    std::vector<int> parent, via;  // via indexes strong_
    mutable std::vector<Mat> fwd, inv;
  };

  struct Sifted {
    Mat residue;
    std::size_t level;
  };

  Sifted sift(Mat g, std::size_t start) const;
  const Mat& inverse_transversal(std::size_t level, int i) const;
  const Mat& forward_transversal(std::size_t level, int i) const;
  void add_level(const Point& base);
  void add_strong(const Mat& g, std::size_t fail_level);
  void extend_orbit(Level& L, int new_gen);
  Point new_base_point(const Mat& g) const;
  bool absorb(const Mat& g);  // sift and add residue; returns true if the group grew
  void random_phase(const std::vector<Mat>& gens, const BsgsOptions& opt);
  bool verify_once();
  void check_caps(const BsgsOptions& opt) const;
  void canonicalize();

  FieldPtr field_;
  int n_ = 0;
  std::size_t point_cap_ = kDefaultPointCap;
  std::vector<Mat> strong_, strong_inv_;
  std::vector<Level> levels_;
};

/// Group given by generators together with its certified chain.
struct CertifiedGroup {
  std::vector<Mat> gens;
  Bsgs bsgs;
  BigInt order() const { return bsgs.order(); }
};

/// Stabilizer of x via base change; the order is certified as |G| / |x^G|.
CertifiedGroup stabilizer(const Bsgs& g, const Point& x, std::uint64_t seed);

/// Small generating set for the group described by b (same order, certified).
std::vector<Mat> reduce_generators(const Bsgs& b, std::uint64_t seed, int start = 2);

/// Outcome of the X-orbit of a point or coset whose Z-stabilizer is Y.
struct Suborbit {
  BigInt orbit_size;
  CertifiedGroup stabilizer;  // X ∩ Y
};

/// X-orbit of p and the stabilizer X_p (certified with order |X| / |p^X|).
Suborbit point_suborbit(const CertifiedGroup& x, const Point& p, std::uint64_t seed, std::size_t cap = kDefaultPointCap);

/// Right cosets Yg of a certified subgroup Y. Cosets are bucketed by the image
/// of a Y-invariant vector set and compared exactly by membership.
class CosetOracle {
 public:
  CosetOracle(const CertifiedGroup& y, std::uint64_t seed);
  std::uint64_t signature(const Mat& g) const;
  bool same(const Mat& g, const Mat& h) const;
  std::size_t invariant_set_size() const noexcept { return set_.size(); }

 private:
  const CertifiedGroup* y_;
  std::vector<Vec> set_;
};

/// X-orbit of the trivial coset Y and X ∩ Y.
Suborbit coset_suborbit(const CertifiedGroup& x, const CosetOracle& y, std::uint64_t seed,
                        std::size_t cap = kDefaultCosetCap);

/// Full enumeration of Z/Y through the coset oracle (representatives).
std::vector<Mat> enumerate_cosets(const CertifiedGroup& z, const CosetOracle& y, std::size_t cap = kDefaultCosetCap);

/// BSGS cache text format (versioned); returns the text.
std::string serialize_bsgs(const Bsgs& b, const std::string& name);
/// Parses and re-verifies; throws ParseError or CertificationFailure.
Bsgs deserialize_bsgs(const std::string& text, std::string* name = nullptr);

}  // namespace oddfact
