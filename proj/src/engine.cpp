#include "oddfact/engine.hpp"

#include <algorithm>
#include <sstream>

namespace oddfact {

Orbit orbit(const Field& F, const std::vector<Mat>& gens, const Point& x0, std::size_t cap) {
  Orbit o;
  o.points.push_back(x0);
  o.parent.push_back(-1);
  o.via.push_back(-1);
  o.index.emplace(x0, 0);
  for (std::size_t i = 0; i < o.points.size(); ++i) {
    for (std::size_t j = 0; j < gens.size(); ++j) {
      Point y = act(F, o.points[i], gens[j]);
      if (o.index.count(y)) continue;
      if (o.points.size() >= cap) throw Error(ErrorCode::DomainOverflow, "orbit exceeds point cap");
      o.index.emplace(y, static_cast<int>(o.points.size()));
      o.points.push_back(std::move(y));
      o.parent.push_back(static_cast<int>(i));
      o.via.push_back(static_cast<int>(j));
    }
  }
  return o;
}

Mat orbit_transversal(const Orbit& o, const std::vector<Mat>& gens, int i) {
  std::vector<int> word;
  for (int k = i; o.parent[k] >= 0; k = o.parent[k]) word.push_back(o.via[k]);
  if (word.empty()) {
    const int n = gens.empty() ? 0 : gens[0].rows();
    return Mat::identity(gens.empty() ? FieldPtr{} : gens[0].field(), n);
  }
  Mat u = gens[word.back()];
  for (auto it = word.rbegin() + 1; it != word.rend(); ++it) u = u * gens[*it];
  return u;
}

RandomElements::RandomElements(const std::vector<Mat>& gens, std::uint64_t seed, int burn_in) : rng_(seed) {
  if (gens.empty()) throw Error(ErrorCode::BadParams, "random elements need at least one generator");
  const std::size_t slots = std::max<std::size_t>(10, gens.size());
  for (std::size_t i = 0; i < slots; ++i) slots_.push_back(gens[i % gens.size()]);
  acc_ = Mat::identity(gens[0].field(), gens[0].rows());
  for (int i = 0; i < burn_in; ++i) next();
}

Mat RandomElements::next() {
  std::uniform_int_distribution<std::size_t> pick(0, slots_.size() - 1);
  std::size_t i = pick(rng_), j = pick(rng_);
  while (j == i) j = pick(rng_);
  if (rng_() & 1)
    slots_[i] = slots_[i] * slots_[j];
  else
    slots_[i] = slots_[j] * slots_[i];
  acc_ = acc_ * slots_[i];
  return acc_;
}

// ---------------------------------------------------------------------------

void Bsgs::add_level(const Point& base) {
  Level L;
  L.base = base;
  L.pts.push_back(base);
  L.idx.emplace(base, 0);
  L.parent.push_back(-1);
  L.via.push_back(-1);
  levels_.push_back(std::move(L));
}

void Bsgs::extend_orbit(Level& L, int new_gen) {
  const Field& F = *field_;
  const std::size_t old = L.pts.size();
  for (std::size_t i = 0; i < L.pts.size(); ++i) {
    auto apply = [&](int k) {
      Point y = act(F, L.pts[i], strong_[k]);
      if (L.idx.count(y)) return;
      if (L.pts.size() >= point_cap_) throw Error(ErrorCode::DomainOverflow, "basic orbit exceeds point cap");
      L.idx.emplace(y, static_cast<int>(L.pts.size()));
      L.pts.push_back(std::move(y));
      L.parent.push_back(static_cast<int>(i));
      L.via.push_back(k);
    };
    if (i < old)
      apply(new_gen);
    else
      for (int k : L.gens) apply(k);
  }
}

void Bsgs::add_strong(const Mat& g, std::size_t fail_level) {
  if (fail_level == levels_.size()) add_level(new_base_point(g));
  const int k = static_cast<int>(strong_.size());
  strong_.push_back(g);
  strong_inv_.push_back(g.inverse());
  for (std::size_t l = 0; l <= fail_level; ++l) {
    levels_[l].gens.push_back(k);
    extend_orbit(levels_[l], k);
  }
}

Point Bsgs::new_base_point(const Mat& g) const {
  for (int i = 0; i < n_; ++i) {
    Point e = vector_point(unit_vector(n_, i));
    if (!(act(*field_, e, g) == e)) return e;
  }
  throw Error(ErrorCode::NotFaithful, "nonidentity element fixes every basis vector");
}

const Mat& Bsgs::inverse_transversal(std::size_t level, int i) const {
  const Level& L = levels_[level];
  if (L.inv.size() < L.pts.size()) L.inv.resize(L.pts.size());
  if (L.inv[0].rows() == 0) L.inv[0] = Mat::identity(field_, n_);
  std::vector<int> chain;
  for (int k = i; L.inv[k].rows() == 0; k = L.parent[k]) chain.push_back(k);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) L.inv[*it] = strong_inv_[L.via[*it]] * L.inv[L.parent[*it]];
  return L.inv[i];
}

const Mat& Bsgs::forward_transversal(std::size_t level, int i) const {
  const Level& L = levels_[level];
  if (L.fwd.size() < L.pts.size()) L.fwd.resize(L.pts.size());
  if (L.fwd[0].rows() == 0) L.fwd[0] = Mat::identity(field_, n_);
  std::vector<int> chain;
  for (int k = i; L.fwd[k].rows() == 0; k = L.parent[k]) chain.push_back(k);
  for (auto it = chain.rbegin(); it != chain.rend(); ++it) L.fwd[*it] = L.fwd[L.parent[*it]] * strong_[L.via[*it]];
  return L.fwd[i];
}

Mat Bsgs::transversal(std::size_t level, int i) const { return forward_transversal(level, i); }

Bsgs::Sifted Bsgs::sift(Mat g, std::size_t start) const {
  const Field& F = *field_;
  for (std::size_t l = start; l < levels_.size(); ++l) {
    const Level& L = levels_[l];
    auto it = L.idx.find(act(F, L.base, g));
    if (it == L.idx.end()) return {std::move(g), l};
    if (it->second != 0) g = g * inverse_transversal(l, it->second);
  }
  return {std::move(g), levels_.size()};
}

bool Bsgs::absorb(const Mat& g) {
  Sifted s = sift(g, 0);
  if (s.level == levels_.size() && s.residue.is_identity()) return false;
  add_strong(s.residue, s.level);
  return true;
}

BigInt Bsgs::order() const {
  BigInt r = 1;
  for (const Level& L : levels_) r *= L.pts.size();
  return r;
}

bool Bsgs::contains(const Mat& g) const {
  if (g.rows() != n_ || g.cols() != n_) return false;
  Sifted s = sift(g, 0);
  return s.level == levels_.size() && s.residue.is_identity();
}

std::vector<Point> Bsgs::base() const {
  std::vector<Point> b;
  for (const Level& L : levels_) b.push_back(L.base);
  return b;
}

std::vector<std::size_t> Bsgs::orbit_sizes() const {
  std::vector<std::size_t> s;
  for (const Level& L : levels_) s.push_back(L.pts.size());
  return s;
}

std::vector<Mat> Bsgs::level_generators(std::size_t level) const {
  std::vector<Mat> g;
  if (level >= levels_.size()) return g;
  for (int k : levels_[level].gens) g.push_back(strong_[k]);
  return g;
}

BigInt Bsgs::level_order(std::size_t level) const {
  BigInt r = 1;
  for (std::size_t l = level; l < levels_.size(); ++l) r *= levels_[l].pts.size();
  return r;
}

Mat Bsgs::random_element(std::mt19937_64& rng, std::size_t level) const {
  Mat g = Mat::identity(field_, n_);
  for (std::size_t l = levels_.size(); l-- > level;) {
    std::uniform_int_distribution<int> pick(0, static_cast<int>(levels_[l].pts.size()) - 1);
    const int i = pick(rng);
    if (i) g = g * forward_transversal(l, i);
  }
  return g;
}

void Bsgs::for_each_element(const std::function<void(const Mat&)>& f) const {
  std::function<void(std::size_t, const Mat&)> rec = [&](std::size_t l, const Mat& acc) {
    if (l == 0) {
      f(acc);
      return;
    }
    const Level& L = levels_[l - 1];
    for (int i = 0; i < static_cast<int>(L.pts.size()); ++i) rec(l - 1, i ? acc * forward_transversal(l - 1, i) : acc);
  };
  rec(levels_.size(), Mat::identity(field_, n_));
}

void Bsgs::check_caps(const BsgsOptions& opt) const {
  if (opt.order_cap && order() > *opt.order_cap) throw Error(ErrorCode::CapExceeded, "group order exceeds cap");
  if (opt.known_order && order() > *opt.known_order)
    throw Error(ErrorCode::CertificationFailure, "group order exceeds its proven bound");
}

void Bsgs::random_phase(const std::vector<Mat>& gens, const BsgsOptions& opt) {
  if (gens.empty()) return;
  RandomElements R(gens, opt.seed);
  int quiet = 0;
  while (quiet < opt.quiet_rounds) {
    if (opt.known_order && order() == *opt.known_order) return;
    if (absorb(R.next())) {
      quiet = 0;
      check_caps(opt);
    } else {
      ++quiet;
    }
  }
}

bool Bsgs::verify_once() {
  const Field& F = *field_;
  for (std::size_t l = levels_.size(); l-- > 0;) {
    const Level& L = levels_[l];
    const std::vector<int> gens = L.gens;
    const std::size_t npts = L.pts.size();
    for (std::size_t i = 0; i < npts; ++i) {
      for (int k : gens) {
        const Level& LL = levels_[l];
        const int j = LL.idx.at(act(F, LL.pts[i], strong_[k]));
        Mat h = forward_transversal(l, static_cast<int>(i)) * strong_[k] * inverse_transversal(l, j);
        Sifted s = sift(std::move(h), l + 1);
        if (s.level == levels_.size() && s.residue.is_identity()) continue;
        add_strong(s.residue, s.level);
        return true;
      }
    }
  }
  return false;
}

Bsgs Bsgs::build(const FieldPtr& field, int n, const std::vector<Mat>& gens, const BsgsOptions& opt) {
  Bsgs B;
  B.field_ = field;
  B.n_ = n;
  B.point_cap_ = opt.point_cap;
  for (const Point& p : opt.base_prefix) B.add_level(p);
  std::vector<Mat> nontrivial;
  for (const Mat& g : gens) {
    if (g.rows() != n || g.cols() != n) throw Error(ErrorCode::DimensionMismatch, "generator size");
    if (!g.is_identity()) nontrivial.push_back(g);
  }
  for (const Mat& g : nontrivial) {
    if (opt.known_order && B.order() == *opt.known_order) break;
    if (B.absorb(g)) B.check_caps(opt);
  }
  B.random_phase(nontrivial, opt);
  if (!(opt.known_order && B.order() == *opt.known_order) && opt.verify) {
    BsgsOptions again = opt;
    while (B.verify_once()) {
      B.check_caps(opt);
      if (opt.known_order && B.order() == *opt.known_order) break;
      again.seed += 1;
      B.random_phase(B.strong_, again);
    }
  }
  if (opt.known_order && opt.verify && B.order() != *opt.known_order)
    throw Error(ErrorCode::CertificationFailure,
                "generated order " + to_string(B.order()) + " differs from " + to_string(*opt.known_order));
  // Drop trailing prefix levels that carry no information.
  while (!B.levels_.empty() && B.levels_.back().pts.size() == 1 && B.levels_.back().gens.empty()) B.levels_.pop_back();
  B.canonicalize();
  return B;
}

void Bsgs::extend(const std::vector<Mat>& more, const BsgsOptions& opt) {
  bool grew = false;
  for (const Mat& g : more)
    if (!g.is_identity() && absorb(g)) {
      grew = true;
      check_caps(opt);
    }
  if (!grew) return;
  random_phase(strong_, opt);
  if (!(opt.known_order && order() == *opt.known_order) && opt.verify) {
    BsgsOptions again = opt;
    while (verify_once()) {
      check_caps(opt);
      if (opt.known_order && order() == *opt.known_order) break;
      again.seed += 1;
      random_phase(strong_, again);
    }
  }
  canonicalize();
}

// Fresh breadth-first orbits in strong-generator order, so a chain read back
// from its stored base and strong generators has identical Schreier trees.
void Bsgs::canonicalize() {
  const Field& F = *field_;
  for (Level& L : levels_) {
    const Point base = L.base;
    L.pts.assign(1, base);
    L.idx.clear();
    L.idx.emplace(base, 0);
    L.parent.assign(1, -1);
    L.via.assign(1, -1);
    L.fwd.clear();
    L.inv.clear();
    for (std::size_t i = 0; i < L.pts.size(); ++i)
      for (int k : L.gens) {
        Point y = act(F, L.pts[i], strong_[k]);
        if (L.idx.count(y)) continue;
        if (L.pts.size() >= point_cap_) throw Error(ErrorCode::DomainOverflow, "basic orbit exceeds point cap");
        L.idx.emplace(y, static_cast<int>(L.pts.size()));
        L.pts.push_back(std::move(y));
        L.parent.push_back(static_cast<int>(i));
        L.via.push_back(k);
      }
  }
}

Bsgs Bsgs::from_chain(const FieldPtr& field, int n, const std::vector<Point>& base, const std::vector<Mat>& strong,
                      std::size_t point_cap) {
  Bsgs B;
  B.field_ = field;
  B.n_ = n;
  B.point_cap_ = point_cap;
  for (const Point& p : base) B.add_level(p);
  for (const Mat& g : strong) {
    if (g.rows() != n || g.cols() != n) throw Error(ErrorCode::DimensionMismatch, "generator size");
    std::size_t depth = 0;
    while (depth < B.levels_.size() && act(*field, B.levels_[depth].base, g) == B.levels_[depth].base) ++depth;
    if (depth == B.levels_.size()) throw Error(ErrorCode::CertificationFailure, "strong generator fixes the whole base");
    const int k = static_cast<int>(B.strong_.size());
    B.strong_.push_back(g);
    B.strong_inv_.push_back(g.inverse());
    for (std::size_t l = 0; l <= depth; ++l) B.levels_[l].gens.push_back(k);
  }
  B.canonicalize();
  if (B.verify_once()) throw Error(ErrorCode::CertificationFailure, "stored chain fails Schreier-generator check");
  return B;
}

// ---------------------------------------------------------------------------

namespace {

Bsgs chain_of(const FieldPtr& F, int n, const std::vector<Mat>& gens, const BigInt& order, std::uint64_t seed,
              bool verify) {
  BsgsOptions opt;
  opt.seed = seed;
  opt.known_order = order;
  opt.verify = verify;
  return Bsgs::build(F, n, gens, opt);
}

}  // namespace

std::vector<Mat> reduce_generators(const Bsgs& b, std::uint64_t seed, int start) {
  if (b.is_trivial()) return {};
  std::mt19937_64 rng(seed);
  const BigInt target = b.order();
  std::vector<Mat> gens;
  for (int i = 0; i < start; ++i) gens.push_back(b.random_element(rng));
  for (int round = 0; round < 64; ++round) {
    Bsgs t = chain_of(b.field(), b.dim(), gens, target, seed + round, false);
    if (t.order() == target) return gens;
    gens.push_back(b.random_element(rng));
  }
  return b.strong_generators();
}

CertifiedGroup stabilizer(const Bsgs& g, const Point& x, std::uint64_t seed) {
  BsgsOptions opt;
  opt.seed = seed;
  opt.base_prefix = {x};
  opt.known_order = g.order();
  Bsgs chain = Bsgs::build(g.field(), g.dim(), g.strong_generators(), opt);
  const BigInt target = chain.level_order(1);
  const std::vector<Mat> sgens = chain.level_generators(1);
  CertifiedGroup out;
  if (sgens.empty()) {
    out.bsgs = Bsgs::build(g.field(), g.dim(), {}, {});
    return out;
  }
  out.bsgs = chain_of(g.field(), g.dim(), sgens, target, seed ^ 0x5bd1e995u, true);
  out.gens = reduce_generators(out.bsgs, seed + 17);
  return out;
}

namespace {

// Random Schreier generators for the stabilizer of the orbit's root until the
// proven order is reached.
template <class Locate>
CertifiedGroup stabilizer_from_orbit(const CertifiedGroup& x, const BigInt& target, std::uint64_t seed,
                                     Locate&& locate_inverse) {
  CertifiedGroup out;
  const FieldPtr& F = x.bsgs.field();
  const int n = x.bsgs.dim();
  if (target == 1) {
    out.bsgs = Bsgs::build(F, n, {}, {});
    return out;
  }
  std::mt19937_64 rng(seed);
  std::vector<Mat> s;
  auto draw = [&](int count) {
    for (int c = 0; c < count; ++c) {
      const Mat r = x.bsgs.random_element(rng);
      Mat h = r * locate_inverse(r);
      if (!h.is_identity()) s.push_back(std::move(h));
    }
  };
  draw(4);
  for (int round = 0; round < 200; ++round) {
    if (!s.empty()) {
      BsgsOptions opt;
      opt.seed = seed + round;
      opt.known_order = target;
      opt.verify = false;
      Bsgs b = Bsgs::build(F, n, s, opt);
      if (b.order() == target) {
        out.bsgs = std::move(b);
        out.gens = reduce_generators(out.bsgs, seed + 31);
        return out;
      }
    }
    draw(2);
  }
  throw Error(ErrorCode::CertificationFailure, "stabilizer did not reach its certified order");
}

BigInt exact_quotient(const BigInt& a, const BigInt& b) {
  if (b == 0 || a % b != 0)
    throw Error(ErrorCode::CertificationFailure, "orbit size " + to_string(b) + " does not divide " + to_string(a));
  return a / b;
}

}  // namespace

Suborbit point_suborbit(const CertifiedGroup& x, const Point& p, std::uint64_t seed, std::size_t cap) {
  const Field& F = *x.bsgs.field();
  Orbit o = orbit(F, x.gens, p, cap);
  Suborbit out;
  out.orbit_size = o.size();
  const BigInt target = exact_quotient(x.order(), out.orbit_size);
  out.stabilizer = stabilizer_from_orbit(x, target, seed, [&](const Mat& r) {
    const int i = o.find(act(F, p, r));
    if (i < 0) throw Error(ErrorCode::CertificationFailure, "orbit not closed under the group");
    return orbit_transversal(o, x.gens, i).inverse();
  });
  return out;
}

// ---------------------------------------------------------------------------

namespace {

std::uint64_t vec_code(const Vec& v, int q) {
  std::uint64_t c = 0;
  for (Elt e : v) c = c * static_cast<std::uint64_t>(q) + e;
  return c;
}

}  // namespace

CosetOracle::CosetOracle(const CertifiedGroup& y, std::uint64_t /*seed*/) : y_(&y) {
  const FieldPtr& Fp = y.bsgs.field();
  const Field& F = *Fp;
  const int n = y.bsgs.dim();
  std::vector<Vec> candidates;
  for (int i = 0; i < n; ++i) candidates.push_back(unit_vector(n, i));
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j) {
      Vec v = unit_vector(n, i);
      v[j] = 1;
      candidates.push_back(v);
      v[j] = F.neg(1);
      candidates.push_back(v);
    }
  std::vector<std::vector<Vec>> orbits;
  std::unordered_map<Point, int, PointHash> seen;
  for (const Vec& c : candidates) {
    if (seen.count(vector_point(c))) continue;
    Orbit o;
    try {
      o = orbit(F, y.gens, vector_point(c), 4096);
    } catch (const Error&) {
      continue;
    }
    std::vector<Vec> pts;
    for (const Point& p : o.points) {
      seen.emplace(p, 1);
      pts.push_back(p.data);
    }
    orbits.push_back(std::move(pts));
  }
  std::stable_sort(orbits.begin(), orbits.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
  for (const auto& o : orbits) {
    if (set_.size() >= static_cast<std::size_t>(2 * n) && set_.size() + o.size() > 512) break;
    set_.insert(set_.end(), o.begin(), o.end());
    if (set_.size() >= static_cast<std::size_t>(4 * n)) break;
  }
  if (set_.empty()) throw Error(ErrorCode::StrategyUnavailable, "no small invariant vector set for coset signatures");
}

std::uint64_t CosetOracle::signature(const Mat& g) const {
  const int q = g.field()->order();
  std::vector<std::uint64_t> codes;
  codes.reserve(set_.size());
  for (const Vec& v : set_) codes.push_back(vec_code(vec_mul(v, g), q));
  std::sort(codes.begin(), codes.end());
  std::uint64_t h = 1469598103934665603ull;
  for (std::uint64_t c : codes) {
    h ^= c + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    h *= 1099511628211ull;
  }
  return h;
}

bool CosetOracle::same(const Mat& g, const Mat& h) const { return y_->bsgs.contains(g * h.inverse()); }

namespace {

struct CosetOrbit {
  std::vector<Mat> reps;
  std::unordered_map<std::uint64_t, std::vector<int>> buckets;

  int find(const CosetOracle& y, const Mat& g, std::uint64_t sig) const {
    auto it = buckets.find(sig);
    if (it == buckets.end()) return -1;
    for (int c : it->second)
      if (y.same(g, reps[c])) return c;
    return -1;
  }
};

CosetOrbit coset_orbit(const std::vector<Mat>& gens, const CosetOracle& y, const Mat& identity, std::size_t cap) {
  CosetOrbit o;
  o.reps.push_back(identity);
  o.buckets[y.signature(identity)].push_back(0);
  for (std::size_t i = 0; i < o.reps.size(); ++i)
    for (const Mat& g : gens) {
      Mat r = o.reps[i] * g;
      const std::uint64_t sig = y.signature(r);
      if (o.find(y, r, sig) >= 0) continue;
      if (o.reps.size() >= cap) throw Error(ErrorCode::IndexOverflow, "coset orbit exceeds coset cap");
      o.buckets[sig].push_back(static_cast<int>(o.reps.size()));
      o.reps.push_back(std::move(r));
    }
  return o;
}

}  // namespace

Suborbit coset_suborbit(const CertifiedGroup& x, const CosetOracle& y, std::uint64_t seed, std::size_t cap) {
  const Mat id = Mat::identity(x.bsgs.field(), x.bsgs.dim());
  CosetOrbit o = coset_orbit(x.gens, y, id, cap);
  Suborbit out;
  out.orbit_size = o.reps.size();
  const BigInt target = exact_quotient(x.order(), out.orbit_size);
  out.stabilizer = stabilizer_from_orbit(x, target, seed, [&](const Mat& r) {
    const int i = o.find(y, r, y.signature(r));
    if (i < 0) throw Error(ErrorCode::CertificationFailure, "coset orbit not closed under the group");
    return o.reps[i].inverse();
  });
  return out;
}

std::vector<Mat> enumerate_cosets(const CertifiedGroup& z, const CosetOracle& y, std::size_t cap) {
  return coset_orbit(z.gens, y, Mat::identity(z.bsgs.field(), z.bsgs.dim()), cap).reps;
}

// ---------------------------------------------------------------------------

std::string serialize_bsgs(const Bsgs& b, const std::string& name) {
  std::ostringstream out;
  out << "ODDFACT-BSGS 1\n";
  out << "NAME " << name << "\n";
  out << b.field()->serialize() << "\n";
  out << "DIM " << b.dim() << "\n";
  const auto base = b.base();
  out << "BASE " << base.size() << "\n";
  for (const Point& p : base) out << to_string(*b.field(), p) << "\n";
  out << "STRONG " << b.strong_generators().size() << "\n";
  for (const Mat& g : b.strong_generators()) out << g.to_string() << "\n";
  out << "ORBITS";
  for (std::size_t s : b.orbit_sizes()) out << " " << s;
  out << "\nORDER " << to_string(b.order()) << "\n";
  return out.str();
}

Bsgs deserialize_bsgs(const std::string& text, std::string* name) {
  std::istringstream in(text);
  std::string line;
  auto next = [&](const std::string& what) {
    if (!std::getline(in, line)) throw Error(ErrorCode::ParseError, "BSGS cache truncated before " + what);
    return line;
  };
  auto value = [&](const std::string& key) {
    next(key);
    if (line.rfind(key + " ", 0) != 0) throw Error(ErrorCode::ParseError, "expected " + key);
    return line.substr(key.size() + 1);
  };
  if (next("header") != "ODDFACT-BSGS 1") throw Error(ErrorCode::ParseError, "unsupported BSGS cache version");
  const std::string nm = value("NAME");
  if (name) *name = nm;
  FieldPtr F = Field::parse(next("field"));
  const int n = std::stoi(value("DIM"));
  const int nb = std::stoi(value("BASE"));
  std::vector<Point> base;
  for (int i = 0; i < nb; ++i) base.push_back(parse_point(*F, next("base point")));
  const int ns = std::stoi(value("STRONG"));
  std::vector<Mat> strong;
  for (int i = 0; i < ns; ++i) strong.push_back(Mat::parse(F, next("strong generator")));
  next("orbits");
  if (line.rfind("ORBITS", 0) != 0) throw Error(ErrorCode::ParseError, "expected ORBITS");
  std::istringstream os(line.substr(6));
  std::vector<std::size_t> sizes;
  for (std::size_t s; os >> s;) sizes.push_back(s);
  const std::string order = value("ORDER");
  Bsgs b = Bsgs::from_chain(F, n, base, strong);
  if (b.orbit_sizes() != sizes || to_string(b.order()) != order)
    throw Error(ErrorCode::CertificationFailure, "cached orbit sizes disagree with recomputation");
  return b;
}

}  // namespace oddfact
