#include "oddfact/registry.hpp"

#include <algorithm>
#include <filesystem>
#include <thread>
#include <fstream>
#include <iomanip>
#include <set>
#include <sstream>

#include "oddfact/error.hpp"

namespace oddfact {

namespace fs = std::filesystem;

namespace {

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

std::uint64_t splitmix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

std::string slug(const std::string& key) {
  std::string out;
  for (char c : key) out += std::isalnum(static_cast<unsigned char>(c)) || c == '-' || c == '.' ? c : '_';
  return out;
}

std::string hex(std::uint64_t h) {
  std::ostringstream os;
  os << std::hex << std::setw(16) << std::setfill('0') << h;
  return os.str();
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

BigInt qpow(long long q, long long e) { return ipow(BigInt(q), static_cast<unsigned>(e)); }

std::string qs(long long q) { return std::to_string(q); }

}  // namespace

// ---------------------------------------------------------------------------
// Workspace

Workspace::Workspace(std::uint64_t seed, std::string cache_dir, std::string data_dir)
    : seed_(seed), cache_dir_(std::move(cache_dir)), data_dir_(std::move(data_dir)) {}

std::uint64_t Workspace::seed_for(const std::string& key) const { return splitmix(fnv1a(key) ^ seed_); }

const OrthSpace& Workspace::space(int m, long long q) {
  auto it = spaces_.find({m, q});
  if (it != spaces_.end()) return it->second;
  auto [p, f] = prime_power(q);
  return spaces_.emplace(std::make_pair(m, q), standard_space(m, Field::make(static_cast<int>(p), f))).first->second;
}

const CertifiedGroup& Workspace::omega(int m, long long q) {
  const std::string key = "Omega" + std::to_string(2 * m + 1) + "(" + qs(q) + ")";
  return group(key, [&] {
    Group g = omega_group(space(m, q));
    return certify_cached(g, key, g.claimed_order);
  });
}

const CertifiedGroup& Workspace::group(const std::string& key, const std::function<CertifiedGroup()>& make) {
  auto it = groups_.find(key);
  if (it != groups_.end()) return *it->second;
  auto made = std::make_unique<CertifiedGroup>(make());
  return *groups_.emplace(key, std::move(made)).first->second;
}

const std::vector<Point>& Workspace::points(const std::string& key, const std::function<std::vector<Point>()>& make) {
  auto it = points_.find(key);
  if (it != points_.end()) return it->second;
  return points_.emplace(key, make()).first->second;
}

CertifiedGroup Workspace::stabilizer_of(const CertifiedGroup& g, const std::vector<Point>& pts, const std::string& key) {
  CertifiedGroup cur = g;
  for (std::size_t i = 0; i < pts.size(); ++i) cur = stabilizer(cur.bsgs, pts[i], seed_for(key + "#" + std::to_string(i)));
  return cur;
}

CertifiedGroup Workspace::certify_cached(const Group& g, const std::string& key, const std::optional<BigInt>& bound) {
  if (cache_dir_.empty() || g.gens.empty()) return certify(g, seed_for(key), bound);
  const FieldPtr& F = g.gens.front().field();
  std::uint64_t h = fnv1a(F->serialize());
  for (const Mat& m : g.gens) h = splitmix(h ^ m.hash());
  const int n = g.gens.front().rows();
  const fs::path path = fs::path(cache_dir_) / (slug(key) + "_p" + std::to_string(F->p()) + "f" +
                                                std::to_string(F->degree()) + "_n" + std::to_string(n) + "_" + hex(h) +
                                                ".bsgs");
  if (fs::exists(path)) {
    try {
      Bsgs b = deserialize_bsgs(read_file(path));
      if (b.dim() != n || b.field()->serialize() != F->serialize())
        throw Error(ErrorCode::CertificationFailure, "cache field or dimension mismatch");
      for (const Mat& m : g.gens)
        if (!b.contains(m)) throw Error(ErrorCode::CertificationFailure, "cached chain misses a generator");
      if (g.claimed_order && b.order() != *g.claimed_order)
        throw Error(ErrorCode::CertificationFailure, "cached order differs from the claimed order");
      if (bound && b.order() > *bound) throw Error(ErrorCode::CertificationFailure, "cached order exceeds the bound");
      ++stats_.hits;
      return CertifiedGroup{g.gens, std::move(b)};
    } catch (const Error&) {
      ++stats_.rejected;
    }
  }
  ++stats_.misses;
  CertifiedGroup c = certify(g, seed_for(key), bound);
  std::error_code ec;
  fs::create_directories(path.parent_path(), ec);
  // write then rename so concurrent readers never see a partial file
  const fs::path tmp = path.string() + ".tmp" + hex(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream out(tmp, std::ios::binary);
    if (out) out << serialize_bsgs(c.bsgs, key);
  }
  fs::rename(tmp, path, ec);
  if (ec) fs::remove(tmp, ec);
  return c;
}

const CertifiedGroup& Workspace::discovered(const std::string& key, const CertifiedGroup& ambient, const Mat* gram,
                                            DiscoverOptions opt, std::string* provenance) {
  const std::string gkey = "discovered:" + key;
  auto it = groups_.find(gkey);
  if (it == groups_.end()) {
    std::string prov;
    std::optional<CertifiedGroup> found;
    const fs::path path = fs::path(data_dir_) / "groups" / (key + ".gens");
    if (!data_dir_.empty() && fs::exists(path)) {
      try {
        Group g = parse_group(read_file(path), gram);
        if (!g.claimed_order) g.claimed_order = opt.target;
        if (*g.claimed_order != opt.target) throw Error(ErrorCode::CertificationFailure, "stored order differs");
        CertifiedGroup c = certify(g, seed_for(gkey));
        for (const Mat& m : c.gens)
          if (!ambient.bsgs.contains(m)) throw Error(ErrorCode::CertificationFailure, "stored generator outside ambient");
        if (opt.accept && !opt.accept(c)) throw Error(ErrorCode::CertificationFailure, "stored group fails the filter");
        found = std::move(c);
        prov = "stored-data " + g.provenance;
      } catch (const Error& e) {
        prov = std::string("stored-data rejected (") + e.what() + "); ";
      }
    }
    if (!found) {
      opt.seed = seed_for("discover:" + key);
      Discovered d = discover_subgroup(ambient, opt);
      const std::string origin = "discovered seed=" + std::to_string(opt.seed) + " attempt=" + std::to_string(d.attempt);
      prov += origin;
      Group g;
      g.name = key;
      g.gram = gram ? *gram : Mat::identity(ambient.bsgs.field(), ambient.bsgs.dim());
      g.gens = d.group.gens;
      g.claimed_order = d.group.order();
      g.provenance = origin;
      fresh_[key] = std::move(g);
      found = std::move(d.group);
    }
    provenance_[gkey] = prov;
    it = groups_.emplace(gkey, std::make_unique<CertifiedGroup>(std::move(*found))).first;
  }
  if (provenance) *provenance = provenance_[gkey];
  return *it->second;
}

const Fingerprint& Workspace::reference_fingerprint(const std::string& name) {
  auto it = references_.find(name);
  if (it != references_.end()) return it->second;
  CertifiedGroup g = certify(reference_group(name), seed_for("reference:" + name));
  return references_.emplace(name, fingerprint(g, seed_for("fingerprint:" + name))).first->second;
}

std::string to_string(Expect e) {
  switch (e) {
    case Expect::Holds: return "holds";
    case Expect::Fails: return "fails";
    case Expect::Either: return "either";
  }
  return "?";
}

std::string order_obstruction(const BigInt& x_order, const BigInt& index) {
  if (x_order < index) return "order obstruction " + to_string(x_order) + " < " + to_string(index);
  if (x_order % index != 0) return "order obstruction: " + to_string(index) + " does not divide " + to_string(x_order);
  return {};
}

bool Identity::holds() const {
  for (const auto& t : terms)
    if (t.second != terms.front().second) return false;
  return true;
}

// ---------------------------------------------------------------------------
// Shared constructions

namespace build {

int fixed_space_dim(const std::vector<Mat>& gens) {
  if (gens.empty()) return 0;
  const FieldPtr& F = gens.front().field();
  const int n = gens.front().rows();
  Mat stacked(F, n, n * static_cast<int>(gens.size()));
  for (std::size_t k = 0; k < gens.size(); ++k)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        stacked(i, static_cast<int>(k) * n + j) = F->sub(gens[k](i, j), i == j ? 1 : 0);
  return left_kernel(stacked).rows();
}


Point g2_tensor(Workspace& ws, long long q, char cls) {
  const std::string key = std::string("tensor:") + cls + "(" + qs(q) + ")";
  return ws.points(key, [&]() -> std::vector<Point> {
    const OrthSpace& V = ws.space(3, q);
    const Field& F = *V.field;
    const Point t = octonion_tensor(V);
    switch (cls) {
      case 'A': return {t};
      case 'B': return {act(F, t, reflection(V.gram, V.d()))};
      case 'K': {
        const XBasis xb = x_basis(V);
        std::vector<Mat> ks;
        for (Elt a = 1; a < F.order(); ++a) ks.push_back(xb.carry(proof_elements(xb, a).k));
        const Orbit o = orbit(F, ws.omega(3, q).gens, t);
        std::optional<Point> best;
        for (const Point& p : o.points) {
          bool fixed = std::all_of(ks.begin(), ks.end(), [&](const Mat& k) { return act(F, p, k) == p; });
          if (fixed && (!best || p < *best)) best = p;
        }
        if (!best) throw Error(ErrorCode::ConstructionFailure, "no tensor in the orbit is fixed by k(a)");
        return {*best};
      }
    }
    throw Error(ErrorCode::BadParams, std::string("unknown G2 class ") + cls);
  })[0];
}

const CertifiedGroup& g2(Workspace& ws, long long q, char cls) {
  const std::string key = std::string("G2") + cls + "(" + qs(q) + ")";
  return ws.group(key, [&] { return ws.stabilizer_of(ws.omega(3, q), {g2_tensor(ws, q, cls)}, key); });
}

const CertifiedGroup& omega6(Workspace& ws, int m, long long q, char eps) {
  const std::string key = std::string("Omega") + std::to_string(2 * m) + eps + "(" + qs(q) + ")";
  return ws.group(key, [&] {
    const OrthSpace& V = ws.space(m, q);
    const Vec v = eps == '-' ? minus_point(V) : plus_point(V);
    return ws.stabilizer_of(ws.omega(m, q), {vector_point(v)}, key);
  });
}

namespace {

const CertifiedGroup& r_group(Workspace& ws, int m, long long q) {
  const std::string key = "R" + std::to_string(m) + "(" + qs(q) + ")";
  return ws.group(key, [&] {
    Group r = parabolic_rt(ws.space(m, q)).R;
    return ws.certify_cached(r, key, r.claimed_order);
  });
}

// ⟨R, S⟩ = R:S when S normalizes R and meets it trivially (S acts faithfully
// on U, R trivially), so |R||S| bounds the order.
CertifiedGroup semidirect(Workspace& ws, const std::string& key, const CertifiedGroup& R, const Group& S) {
  const CertifiedGroup s = ws.certify_cached(S, key + ":S", S.claimed_order);
  for (const Mat& x : S.gens) {
    const Mat xi = x.inverse();
    for (const Mat& r : R.gens)
      if (!R.bsgs.contains(xi * r * x)) throw Error(ErrorCode::ConstructionFailure, key + ": S does not normalize R");
  }
  std::vector<Mat> gens = R.gens;
  gens.insert(gens.end(), S.gens.begin(), S.gens.end());
  const BigInt bound = R.order() * s.order();
  Group x = make_group(key, S.gram, std::move(gens), bound);
  return ws.certify_cached(x, key, bound);
}

}  // namespace

const CertifiedGroup& rt_group(Workspace& ws, int m, long long q, int a, int b, ExtKind kind) {
  const std::string key = "R:" + to_string(kind) + std::to_string(a) + "(" + qs(q) + "^" + std::to_string(b) + ")";
  return ws.group(key, [&] {
    const OrthSpace& V = ws.space(m, q);
    return semidirect(ws, key, r_group(ws, m, q), embed_field_ext(a, b, kind, V));
  });
}

const CertifiedGroup& rs_group(Workspace& ws, const std::string& key, int m, long long q, const std::vector<Mat>& s_gens,
                               const BigInt& s_order) {
  return ws.group(key, [&] {
    const OrthSpace& V = ws.space(m, q);
    std::vector<Mat> lifted;
    for (const Mat& a : s_gens) lifted.push_back(levi_element(V, a));
    Group s = make_group(key + ":S", V.gram, std::move(lifted), s_order);
    return semidirect(ws, key, r_group(ws, m, q), s);
  });
}

}  // namespace build

// ---------------------------------------------------------------------------
// Cases

namespace {

using build::fixed_space_dim;

std::string pw(long long q, long long e) { return qs(q) + "^" + std::to_string(e); }

// Rows with a fixed ambient dimension keep m out of the id and params.
FactorCase make_case(int row, long long q, int m, bool m_varies, const std::string& tag) {
  FactorCase c;
  c.row = row;
  c.q = q;
  c.m = m;
  c.id = "row" + std::to_string(row) + "/q=" + qs(q) + (m_varies ? "/m=" + std::to_string(m) : "") + "/" + tag;
  c.params["q"] = qs(q);
  if (m_varies) c.params["m"] = std::to_string(m);
  return c;
}

Option option(std::string label, const CertifiedGroup& acting, std::vector<Point> pts, BigInt fixed) {
  return Option{std::move(label), acting, std::move(pts), std::move(fixed)};
}

bool has_vector_orbit(const Field& F, const std::vector<Mat>& gens, int n, std::size_t len) {
  std::set<Vec> seen;
  const long long total = static_cast<long long>(ipow(BigInt(F.order()), n));
  for (long long code = 1; code < total; ++code) {
    Vec v(n);
    long long x = code;
    for (int i = 0; i < n; ++i, x /= F.order()) v[i] = static_cast<Elt>(x % F.order());
    if (seen.count(v)) continue;
    const Orbit o = orbit(F, gens, vector_point(v));
    for (const Point& p : o.points) seen.insert(p.data);
    if (o.size() == len) return true;
  }
  return false;
}

Point subspace_u(const OrthSpace& V) {
  std::vector<Vec> rows;
  for (int i = 1; i <= V.m; ++i) rows.push_back(V.e(i));
  return subspace_point(Mat::from_rows(V.field, rows, V.dim()));
}

const CertifiedGroup& plain_group(Workspace& ws, const std::string& key, const std::function<Group()>& make) {
  return ws.group(key, [&] {
    Group g = make();
    return ws.certify_cached(g, key);
  });
}

const CertifiedGroup& linear_group(Workspace& ws, const std::string& key, int n, const FieldPtr& F, bool symplectic,
                                   BigInt order) {
  return ws.group(key, [&] {
    Group g{key, Mat::identity(F, n), symplectic ? sp_generators(n, F) : sl_generators(n, F), order};
    return ws.certify_cached(g, key, order);
  });
}

const CertifiedGroup& e_s_group(Workspace& ws, long long q) {
  const std::string key = "E:S(" + qs(q) + ")";
  return ws.group(key, [&] {
    Group x = es_subgroup(ws.space(3, q)).X;
    return ws.certify_cached(x, key, x.claimed_order);
  });
}

// ---- Row 1 ---------------------------------------------------------------

std::vector<FactorCase> row1(long long q, int m) {
  std::vector<FactorCase> out;
  const BigInt z = order_of(Family::OmegaOdd, {m, q});
  const BigInt y = order_of(Family::OmegaMinus, {m, q});
  const bool prime = prime_power(q).second == 1;
  const bool small = m <= 4 && qpow(q, 2 * m + 1) <= BigInt(kDefaultPointCap);
  for (ExtKind kind : {ExtKind::SL, ExtKind::Sp}) {
    for (int a = m; a >= 1; --a) {
      if (m % a || (kind == ExtKind::Sp && a % 2)) continue;
      const int b = m / a;
      const long long qb = static_cast<long long>(qpow(q, b));
      const std::string s_label = to_string(kind) + "_" + std::to_string(a) + "(" + pw(q, b) + ")";
      FactorCase c = make_case(1, q, m, true, to_string(kind) + "(" + std::to_string(a) + "," + std::to_string(b) + ")");
      c.params["a"] = std::to_string(a);
      c.params["b"] = std::to_string(b);
      c.params["kind"] = to_string(kind);
      const BigInt s_order = order_of(kind == ExtKind::SL ? Family::SL : Family::Sp, {a, qb});
      c.x_label = "(" + pw(q, m * (m - 1) / 2) + "." + pw(q, m) + "):" + s_label;
      c.y_label = "Omega_" + std::to_string(2 * m) + "^-(" + qs(q) + ")";
      c.z_order = z;
      c.y_order = y;
      c.x_order = qpow(q, m * (m + 1) / 2) * s_order;
      const long long p_exp = (m - 1) * (m - 2) / 2 + (m - 1) + (m - b);
      if (kind == ExtKind::SL && a == 1) {
        c.expect = Expect::Fails;
        c.expect_reason = "SL_1 is trivial, so " + order_obstruction(c.x_order, c.index());
      } else if (kind == ExtKind::SL) {
        c.expected_intersection = qpow(q, p_exp) * order_of(Family::SL, {a - 1, qb});
        c.intersection_label = "(" + pw(q, (m - 1) * (m - 2) / 2) + "." + pw(q, m - 1) + "." + pw(q, m - b) + "):SL_" +
                               std::to_string(a - 1) + "(" + pw(q, b) + ")";
      } else {
        c.expected_intersection = qpow(q, p_exp) * order_of(Family::Sp, {a - 2, qb});
        c.intersection_label = "(" + pw(q, (m - 1) * (m - 2) / 2) + "." + pw(q, m - 1) + ".[" + pw(q, m - b) + "]):Sp_" +
                               std::to_string(a - 2) + "(" + pw(q, b) + ")";
      }
      c.constructive = prime && small;
      if (!c.constructive)
        c.arithmetic_only_reason = prime ? "domain " + pw(q, 2 * m + 1) + " beyond the constructive scope"
                                         : "field-extension embedding implemented for prime q";
      c.build = [q, m, a, b, kind](Workspace& ws) {
        Built r;
        r.z_order = ws.omega(m, q).order();
        const OrthSpace& V = ws.space(m, q);
        r.options.push_back(option("Z_v, v = e1 + lambda f1", build::rt_group(ws, m, q, a, b, kind),
                                   {vector_point(minus_point(V))}, build::omega6(ws, m, q, '-').order()));
        return r;
      };
      out.push_back(std::move(c));
    }
  }
  return out;
}

// ---- Row 2 ---------------------------------------------------------------

std::vector<FactorCase> row2(long long q) {
  std::vector<FactorCase> out;
  const BigInt z = order_of(Family::OmegaOdd, {3, q});
  const BigInt y = order_of(Family::G2, {q});
  struct XChoice {
    std::string tag, x_label;
    BigInt x_order, inter;
    std::string inter_label, reference;
    char g2_class;
  };
  const std::vector<XChoice> choices = {
      {"Omega6+", "Omega_6^+(q)", order_of(Family::OmegaPlus, {3, q}), order_of(Family::SL, {3, q}), "SL_3(q)", "SL3(3)", 'A'},
      {"Omega6-", "Omega_6^-(q)", order_of(Family::OmegaMinus, {3, q}), order_of(Family::SU, {3, q}), "SU_3(q)", "SU3(3)", 'A'},
      {"Omega5", "Omega_5(q)", order_of(Family::OmegaOdd, {2, q}), order_of(Family::SL, {2, q}), "SL_2(q)", "SL2(3)", 'A'},
      {"q^5:Omega5", "q^5:Omega_5(q)", qpow(q, 5) * order_of(Family::OmegaOdd, {2, q}),
       qpow(q, 5) * order_of(Family::SL, {2, q}), "[q^5]:SL_2(q)", "", 'A'},
      {"q^4:Omega4-", "q^4:Omega_4^-(q)", qpow(q, 4) * order_of(Family::OmegaMinus, {2, q}), qpow(q, 3), "[q^3]", "", 'K'},
  };
  for (const XChoice& s : choices) {
    FactorCase c = make_case(2, q, 3, false, s.tag);
    c.x_label = s.x_label;
    c.y_label = "G_2(q)";
    c.z_order = z;
    c.x_order = s.x_order;
    c.y_order = y;
    c.expected_intersection = s.inter;
    c.intersection_label = s.inter_label;
    if (q == 3 && !s.reference.empty()) c.reference = s.reference;
    c.constructive = q == 3;
    if (!c.constructive) c.arithmetic_only_reason = "constructive scope is q = 3";
    const std::string tag = s.tag;
    const char cls = s.g2_class;
    c.build = [q, tag, cls](Workspace& ws) {
      Built r;
      const CertifiedGroup& Z = ws.omega(3, q);
      r.z_order = Z.order();
      const OrthSpace& V = ws.space(3, q);
      const CertifiedGroup* x = nullptr;
      if (tag == "Omega6+") x = &build::omega6(ws, 3, q, '+');
      if (tag == "Omega6-") x = &build::omega6(ws, 3, q, '-');
      if (tag == "Omega5")
        x = &ws.group("Omega5(" + qs(q) + ")",
                      [&] { return ws.stabilizer_of(Z, {vector_point(V.e(1)), vector_point(V.f(1))}, "Omega5"); });
      if (tag == "q^5:Omega5")
        x = &ws.group("Z_e1(" + qs(q) + ")", [&] { return ws.stabilizer_of(Z, {vector_point(V.e(1))}, "Z_e1"); });
      if (tag == "q^4:Omega4-") x = &e_s_group(ws, q);
      r.options.push_back(option(std::string("G2 class ") + cls, *x, {build::g2_tensor(ws, q, cls)},
                                 build::g2(ws, q, cls).order()));
      r.note = cls == 'K' ? "G2 chosen to contain the elements k(a)" : "";
      return r;
    };
    out.push_back(std::move(c));
  }
  return out;
}

// ---- Rows 3 and 4 --------------------------------------------------------

DiscoverOptions dopt(BigInt target, std::vector<int> hints, std::function<bool(const CertifiedGroup&)> accept = {},
                     int attempts = 400) {
  DiscoverOptions o;
  o.target = std::move(target);
  o.hints = std::move(hints);
  o.attempts = attempts;
  o.accept = std::move(accept);
  return o;
}

const CertifiedGroup& twisted_g2(Workspace& ws, std::string* prov) {
  const CertifiedGroup& G2 = build::g2(ws, 3, 'A');
  return ws.discovered("2G2_in_G2A_q3", G2, &ws.space(3, 3).gram,
                       dopt(order_of(Family::TwistedG2, {3}), {2, 9},
                            [&ws](const CertifiedGroup& g) {
                              return derived_subgroup(g, ws.seed_for("2G2'")).order() == 504;
                            }),
                       prov);
}

std::vector<FactorCase> row3(long long q) {
  std::vector<FactorCase> out;
  const auto [p, f] = prime_power(q);
  const BigInt z = order_of(Family::OmegaOdd, {3, q});
  const BigInt y = order_of(Family::OmegaPlus, {3, q});
  {
    FactorCase c = make_case(3, q, 3, false, "SU3");
    c.x_label = "SU_3(q)";
    c.y_label = "Omega_6^+(q)";
    c.z_order = z;
    c.x_order = order_of(Family::SU, {3, q});
    c.y_order = y;
    c.expected_intersection = BigInt(q * q - 1);
    c.intersection_label = "q^2-1";
    if (q == 3) c.reference = "C8";
    c.constructive = q == 3;
    if (!c.constructive) c.arithmetic_only_reason = "constructive scope is q = 3";
    c.build = [](Workspace& ws) {
      Built r;
      r.z_order = ws.omega(3, 3).order();
      const OrthSpace& V = ws.space(3, 3);
      const CertifiedGroup& G2 = build::g2(ws, 3, 'A');
      std::string prov;
      const CertifiedGroup& irr = ws.discovered(
          "SU3_in_G2A_q3", G2, &V.gram,
          dopt(order_of(Family::SU, {3, 3}), {2, 7}, [](const CertifiedGroup& g) { return fixed_space_dim(g.gens) == 0; }),
          &prov);
      const CertifiedGroup& vstab = ws.group("G2A_v-(3)", [&] {
        return ws.stabilizer_of(G2, {vector_point(minus_point(V))}, "G2A_v-");
      });
      const Point v = vector_point(plus_point(V));
      const BigInt fixed = build::omega6(ws, 3, 3, '+').order();
      r.options.push_back(option("SU3 without fixed vectors", irr, {v}, fixed));
      r.options.push_back(option("SU3 = G2 cap Z_v (v minus type)", vstab, {v}, fixed));
      r.provenance = prov;
      return r;
    };
    out.push_back(std::move(c));
  }
  if (f % 2 == 1) {
    const bool base = q == 3;
    FactorCase c = make_case(3, q, 3, false, base ? "2G2" : "2G2'");
    c.x_label = base ? "2G2(3)" : "2G2(q)'";
    c.y_label = "Omega_6^+(q)";
    c.z_order = z;
    c.x_order = order_of(Family::TwistedG2, {q});
    c.y_order = y;
    c.expected_intersection = BigInt(q - 1);
    c.intersection_label = "(q-1)/2.2";
    if (base) c.reference = "C2";
    c.constructive = base;
    if (!base) c.arithmetic_only_reason = "constructive scope is q = 3";
    c.build = [](Workspace& ws) {
      Built r;
      r.z_order = ws.omega(3, 3).order();
      const OrthSpace& V = ws.space(3, 3);
      const CertifiedGroup& x = twisted_g2(ws, &r.provenance);
      r.options.push_back(option("2G2(3) in G2 class A", x, {vector_point(plus_point(V))},
                                 build::omega6(ws, 3, 3, '+').order()));
      r.note = "2G2(3)' has order 504 < 756; the full 2G2(3) is used at q = 3";
      return r;
    };
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<FactorCase> row4(long long q) {
  FactorCase c = make_case(4, q, 3, false, "SL3");
  c.x_label = "SL_3(q)";
  c.y_label = "Omega_6^-(q)";
  c.z_order = order_of(Family::OmegaOdd, {3, q});
  c.x_order = order_of(Family::SL, {3, q});
  c.y_order = order_of(Family::OmegaMinus, {3, q});
  c.expected_intersection = BigInt(q * q - 1);
  c.intersection_label = "q^2-1";
  if (q == 3) c.reference = "C8";
  c.constructive = q == 3;
  if (!c.constructive) c.arithmetic_only_reason = "constructive scope is q = 3";
  c.build = [](Workspace& ws) {
    Built r;
    r.z_order = ws.omega(3, 3).order();
    const OrthSpace& V = ws.space(3, 3);
    const CertifiedGroup& G2 = build::g2(ws, 3, 'A');
    const CertifiedGroup& irr = ws.discovered(
        "SL3_in_G2A_q3", G2, &V.gram,
        dopt(order_of(Family::SL, {3, 3}), {2, 13}, [](const CertifiedGroup& g) { return fixed_space_dim(g.gens) == 0; }),
        &r.provenance);
    const CertifiedGroup& vstab =
        ws.group("G2A_v+(3)", [&] { return ws.stabilizer_of(G2, {vector_point(plus_point(V))}, "G2A_v+"); });
    const Point v = vector_point(minus_point(V));
    const BigInt fixed = build::omega6(ws, 3, 3, '-').order();
    r.options.push_back(option("SL3 without fixed vectors", irr, {v}, fixed));
    r.options.push_back(option("SL3 = G2 cap Z_v (v plus type)", vstab, {v}, fixed));
    return r;
  };
  return {c};
}

// ---- Rows 5 and 6 --------------------------------------------------------

std::vector<FactorCase> row5(long long q) {
  FactorCase c = make_case(5, q, 6, false, "PSp6");
  c.x_label = "PSp_6(q)";
  c.y_label = "Omega_12^-(q)";
  c.z_order = order_of(Family::OmegaOdd, {6, q});
  c.x_order = order_of(Family::PSp, {6, q});
  c.y_order = order_of(Family::OmegaMinus, {6, q});
  c.expected_intersection = order_of(Family::SL, {2, q}) * order_of(Family::SL, {2, q * q}) / 2;
  c.intersection_label = "(SL_2(q) x SL_2(q^2))/2";
  c.constructive = q == 3;
  c.stretch = true;
  if (!c.constructive) c.arithmetic_only_reason = "constructive scope is q = 3";
  c.build = [](Workspace& ws) {
    Built r;
    r.z_order = order_of(Family::OmegaOdd, {6, 3});
    const OrthSpace& V = ws.space(6, 3);
    const CertifiedGroup& x = ws.group("PSp6(3) wedge", [&] {
      Group g = wedge_embedding(V.field).X;
      return ws.certify_cached(g, "PSp6(3) wedge", g.claimed_order);
    });
    r.options.push_back(option("Z_v, v = e1 + lambda f1", x, {vector_point(minus_point(V))},
                               order_of(Family::OmegaMinus, {6, 3})));
    r.note = "|Z| and |Y| from the closed forms";
    return r;
  };
  return {c};
}

std::vector<FactorCase> row6(long long q) {
  FactorCase c = make_case(6, q, 12, false, "F4");
  c.x_label = "F_4(q)";
  c.y_label = "Omega_24^-(q)";
  c.z_order = order_of(Family::OmegaOdd, {12, q});
  c.x_order = order_of(Family::F4, {q});
  c.y_order = order_of(Family::OmegaMinus, {12, q});
  c.expected_intersection = order_of(Family::SpinMinus8, {q});
  c.intersection_label = "Spin_8^-(q)";
  c.arithmetic_only_reason = "too large: domain " + pw(q, 25) + " exceeds the point cap";
  return {c};
}

// ---- Row 7 ---------------------------------------------------------------

std::vector<Option> g2_options(Workspace& ws, const CertifiedGroup& x) {
  std::vector<Option> out;
  for (char cls : {'A', 'B'})
    out.push_back(option(std::string("G2 class ") + cls, x, {build::g2_tensor(ws, 3, cls)}, build::g2(ws, 3, cls).order()));
  return out;
}

const CertifiedGroup& s5_class(Workspace& ws, bool with_orbit5, std::string* prov) {
  const OrthSpace& V = ws.space(3, 3);
  const Field& F = *V.field;
  const ESGroups es = es_subgroup(V);
  const CertifiedGroup& s6 = ws.group("Omega(W1)_<w>(3)", [&] {
    return ws.stabilizer_of(ws.omega(3, 3), {vector_point(es.x1), vector_point(es.x8), line_point(F, es.w)}, "S6");
  });
  const CertifiedGroup& s5 =
      ws.discovered(with_orbit5 ? "S5a_in_S6_q3" : "S5b_in_S6_q3", s6, &V.gram,
                    dopt(BigInt(120), {2, 5},
                         [&F, with_orbit5](const CertifiedGroup& g) {
                           return has_vector_orbit(F, g.gens, 7, 5) == with_orbit5;
                         }),
                    prov);
  const std::string key = with_orbit5 ? "3^4:S5a" : "3^4:S5b";
  return ws.group(key, [&] {
    std::vector<Mat> gens = es.E.gens;
    gens.insert(gens.end(), s5.gens.begin(), s5.gens.end());
    Group g = make_group(key, V.gram, gens, BigInt(81 * 120));
    return ws.certify_cached(g, key);
  });
}

std::vector<FactorCase> row7(long long q) {
  if (q != 3) return {};
  std::vector<FactorCase> out;
  const BigInt z = order_of(Family::OmegaOdd, {3, 3});
  const BigInt y = order_of(Family::G2, {3});
  auto base = [&](const std::string& tag, const std::string& label, BigInt xo, BigInt inter, std::string il,
                  std::optional<std::string> ref) {
    FactorCase c = make_case(7, 3, 3, false, tag);
    c.x_label = label;
    c.y_label = "G_2(3)";
    c.z_order = z;
    c.x_order = std::move(xo);
    c.y_order = y;
    c.expected_intersection = std::move(inter);
    c.intersection_label = std::move(il);
    c.reference = std::move(ref);
    c.constructive = true;
    return c;
  };
  for (bool with5 : {true, false}) {
    FactorCase c = base(with5 ? "3^4:S5(a)" : "3^4:S5(b)", "3^4:S5", BigInt(9720), BigInt(9), "3^2", "3^2");
    c.params["class"] = with5 ? "S5 with an orbit of length 5 on vectors" : "S5 without an orbit of length 5 on vectors";
    if (!with5) {
      c.expect = Expect::Either;
      c.expect_reason = "only some classes of 3^4:S5 factorize; this class is reported as found";
    }
    c.build = [with5](Workspace& ws) {
      Built r;
      r.z_order = ws.omega(3, 3).order();
      r.options = g2_options(ws, s5_class(ws, with5, &r.provenance));
      return r;
    };
    out.push_back(std::move(c));
  }
  {
    FactorCase c = base("3^5:2^4:A5", "3^5:2^4:A5", BigInt(243 * 960), BigInt(216), "ASL_2(3)", "ASL2(3)");
    c.build = [](Workspace& ws) {
      Built r;
      r.z_order = ws.omega(3, 3).order();
      r.options = g2_options(ws, plain_group(ws, "3^5:2^4:A5", [&] { return monomial_3_5_2_4_a5(ws.space(3, 3)); }));
      return r;
    };
    out.push_back(std::move(c));
  }
  {
    FactorCase c = base("3^4:A6", "3^4:A6", BigInt(81 * 360), BigInt(27), "3^(1+2)_+", "3^(1+2)");
    c.build = [](Workspace& ws) {
      Built r;
      r.z_order = ws.omega(3, 3).order();
      r.options = g2_options(ws, e_s_group(ws, 3));
      return r;
    };
    out.push_back(std::move(c));
  }
  return out;
}

// ---- Rows 8 and 9 --------------------------------------------------------

const CertifiedGroup& perm_group(Workspace& ws, int points, bool full) {
  const std::string key = std::string(full ? "S" : "A") + std::to_string(points) + " (sum-zero module)";
  return plain_group(ws, key, [&] { return permutation_module_group(ws.space(3, 3), points, full); });
}

const CertifiedGroup& sp6_2(Workspace& ws) {
  return plain_group(ws, "Sp6(2) = W(E7)+", [&] { return weyl_e7_plus(ws.space(3, 3)); });
}

std::vector<FactorCase> row8(long long q) {
  if (q != 3) return {};
  std::vector<FactorCase> out;
  struct XSpec {
    std::string tag, label;
    BigInt order;
  };
  const std::vector<XSpec> xs = {{"3^3:SL3", "3^3:SL_3(3)", BigInt(27) * 5616},
                                 {"Omega6+", "Omega_6^+(3)", order_of(Family::OmegaPlus, {3, 3})},
                                 {"G2", "G_2(3)", order_of(Family::G2, {3})}};
  struct YSpec {
    std::string tag;
    BigInt order;
    std::vector<BigInt> inter;
    std::vector<std::string> labels, refs;
  };
  const std::vector<YSpec> ys = {
      {"A9", BigInt(181440), {6, 240, 168}, {"S_3", "2 x S_5", "PSL_2(7)"}, {"S3", "2xS5", "PSL2(7)"}},
      {"Sp6(2)", BigInt(1451520), {48, 1920, 1344}, {"GL_2(3)", "2^4.S_5", "2^3.PSL_2(7)"}, {"GL2(3)", "", ""}}};
  for (const YSpec& ys_ : ys) {
    for (std::size_t i = 0; i < xs.size(); ++i) {
      FactorCase c = make_case(8, 3, 3, false, "X=" + xs[i].tag + ",Y=" + ys_.tag);
      c.x_label = xs[i].label;
      c.y_label = ys_.tag;
      c.z_order = order_of(Family::OmegaOdd, {3, 3});
      c.x_order = xs[i].order;
      c.y_order = ys_.order;
      c.expected_intersection = ys_.inter[i];
      c.intersection_label = ys_.labels[i];
      if (!ys_.refs[i].empty()) c.reference = ys_.refs[i];
      c.constructive = true;
      const std::string xt = xs[i].tag, yt = ys_.tag;
      c.build = [xt, yt](Workspace& ws) {
        Built r;
        r.x_acts = false;
        const CertifiedGroup& Z = ws.omega(3, 3);
        r.z_order = Z.order();
        const OrthSpace& V = ws.space(3, 3);
        const CertifiedGroup& Y = yt == "A9" ? perm_group(ws, 9, false) : sp6_2(ws);
        if (xt == "3^3:SL3") {
          std::vector<Point> pts{subspace_u(V), vector_point(V.d())};
          const CertifiedGroup& x = ws.group("Z_{U,d}(3)", [&] { return ws.stabilizer_of(Z, pts, "Z_{U,d}"); });
          r.options.push_back(option("Y on (U, d)", Y, pts, x.order()));
        } else if (xt == "Omega6+") {
          r.options.push_back(
              option("Y on v (plus type)", Y, {vector_point(plus_point(V))}, build::omega6(ws, 3, 3, '+').order()));
        } else {
          for (char cls : {'A', 'B'})
            r.options.push_back(option(std::string("Y on the tensor of G2 class ") + cls, Y,
                                       {build::g2_tensor(ws, 3, cls)}, build::g2(ws, 3, cls).order()));
        }
        return r;
      };
      out.push_back(std::move(c));
    }
  }
  return out;
}

std::vector<FactorCase> row9(long long q) {
  if (q != 3) return {};
  std::vector<FactorCase> out;
  struct XSpec {
    std::string tag, label;
    BigInt order, inter;
    std::string il, ref;
  };
  const std::vector<XSpec> xs = {
      {"2^6:A7", "2^6:A_7", BigInt(161280), BigInt(144), "6.S_4", ""},
      {"A8", "A_8", BigInt(20160), BigInt(18), "", ""},
      {"S8", "S_8", BigInt(40320), BigInt(36), "S_3 x S_3", "S3xS3"},
      {"A9", "A_9", BigInt(181440), BigInt(162), "3^3:S_3", ""},
      {"2.PSL3(4)", "2.PSL_3(4)", BigInt(40320), BigInt(36), "3^2:4", ""},
      {"Sp6(2)", "Sp_6(2)", BigInt(1451520), BigInt(1296), "SU_3(2):S_3", ""},
  };
  for (const XSpec& x : xs) {
    FactorCase c = make_case(9, 3, 3, false, x.tag);
    c.x_label = x.label;
    c.y_label = "3^(3+3):SL_3(3)";
    c.z_order = order_of(Family::OmegaOdd, {3, 3});
    c.x_order = x.order;
    c.y_order = BigInt(729) * 5616;
    c.expected_intersection = x.inter;
    c.intersection_label = x.il;
    if (!x.ref.empty()) c.reference = x.ref;
    c.constructive = true;
    if (x.tag == "A8" || x.tag == "S8") c.params["note"] = "A8 and S8 are both tested";
    const std::string tag = x.tag;
    c.build = [tag](Workspace& ws) {
      Built r;
      const CertifiedGroup& Z = ws.omega(3, 3);
      r.z_order = Z.order();
      const OrthSpace& V = ws.space(3, 3);
      const Point U = subspace_u(V);
      const CertifiedGroup& P3 = ws.group("P3(3)", [&] { return ws.stabilizer_of(Z, {U}, "P3"); });
      const CertifiedGroup* x = nullptr;
      if (tag == "2^6:A7") x = &plain_group(ws, "2^6:A7", [&] { return monomial_2_6_a7(V); });
      if (tag == "A8") x = &perm_group(ws, 8, false);
      if (tag == "S8") x = &perm_group(ws, 8, true);
      if (tag == "A9") x = &perm_group(ws, 9, false);
      if (tag == "Sp6(2)") x = &sp6_2(ws);
      if (tag == "2.PSL3(4)")
        x = &ws.discovered("2PSL34_in_Omega6-_q3", build::omega6(ws, 3, 3, '-'), &V.gram,
                           dopt(BigInt(40320), {2, 7}, [&ws](const CertifiedGroup& g) {
                             return derived_subgroup(g, ws.seed_for("2.PSL3(4)'")).order() == g.order();
                           }),
                           &r.provenance);
      r.options.push_back(option("X on U = <e1,e2,e3>", *x, {U}, P3.order()));
      return r;
    };
    out.push_back(std::move(c));
  }
  return out;
}

// ---- Rows 10 and 11 ------------------------------------------------------

bool dual_transitive(const CertifiedGroup& s) {
  const Mat& g0 = s.gens.front();
  const int n = g0.rows();
  std::vector<Mat> d;
  for (const Mat& x : s.gens) d.push_back(x.inverse().transpose());
  const BigInt total = ipow(BigInt(g0.field()->order()), n) - 1;
  return BigInt(orbit(*g0.field(), d, vector_point(unit_vector(n, 0))).size()) == total;
}

struct SGens {
  std::vector<Mat> gens;
  BigInt order;
};

SGens row10_s(Workspace& ws, const std::string& tag, std::string* prov) {
  const FieldPtr F = ws.space(4, 3).field;
  if (tag == "2.S5") {
    const CertifiedGroup& sl4 = linear_group(ws, "SL4(3)", 4, F, false, order_of(Family::SL, {4, 3}));
    const CertifiedGroup& s =
        ws.discovered("2S5_in_SL4_q3", sl4, nullptr,
                      dopt(BigInt(240), {4, 5}, [&ws](const CertifiedGroup& g) {
                        return dual_transitive(g) && derived_subgroup(g, ws.seed_for("2.S5'")).order() == 120;
                      }),
                      prov);
    return {s.gens, s.order()};
  }
  if (tag == "8.A5") {
    const FieldPtr F9 = ws.space(2, 9).field;
    const CertifiedGroup& sl29 = linear_group(ws, "SL2(9)", 2, F9, false, BigInt(720));
    const CertifiedGroup& s = ws.discovered("SL25_in_SL29", sl29, nullptr, dopt(BigInt(120), {3, 5}), prov);
    std::vector<Mat> gens;
    for (const Mat& x : s.gens) gens.push_back(restrict_scalars(x, F));
    Mat zeta(F9, 2, 2);
    zeta(0, 0) = zeta(1, 1) = F9->primitive();
    gens.push_back(restrict_scalars(zeta, F));
    return {gens, BigInt(480)};
  }
  const CertifiedGroup& sp4 = linear_group(ws, "Sp4(3)", 4, F, true, order_of(Family::Sp, {4, 3}));
  const CertifiedGroup& s = ws.discovered("2^(1+4)A5_in_Sp4_q3", sp4, nullptr, dopt(BigInt(1920), {4, 5}), prov);
  return {s.gens, s.order()};
}

std::vector<FactorCase> row10(long long q) {
  if (q != 3) return {};
  std::vector<FactorCase> out;
  struct Spec {
    std::string tag;
    BigInt s_order, inter;
    std::string il;
  };
  const std::vector<Spec> specs = {{"2.S5", BigInt(240), BigInt(2187), "3^(3+3):3"},
                                   {"8.A5", BigInt(480), BigInt(729) * 6, "3^(3+3):S_3"},
                                   {"2^(1+4).A5", BigInt(1920), BigInt(729) * 24, "3^(3+3):SL_2(3)"}};
  for (const Spec& s : specs) {
    FactorCase c = make_case(10, 3, 4, true, s.tag);
    c.x_label = "3^(6+4):" + s.tag;
    c.y_label = "Omega_8^-(3)";
    c.z_order = order_of(Family::OmegaOdd, {4, 3});
    c.x_order = qpow(3, 10) * s.s_order;
    c.y_order = order_of(Family::OmegaMinus, {4, 3});
    c.expected_intersection = s.inter;
    c.intersection_label = s.il;
    c.constructive = true;
    if (s.tag == "2.S5") c.params["class"] = "transitive on the nonzero vectors of U*";
    const std::string tag = s.tag;
    const BigInt so = s.s_order;
    c.build = [tag, so](Workspace& ws) {
      Built r;
      r.z_order = ws.omega(4, 3).order();
      const SGens sg = row10_s(ws, tag, &r.provenance);
      if (sg.order != so) throw Error(ErrorCode::ConstructionFailure, tag + " has the wrong order");
      const CertifiedGroup& x = build::rs_group(ws, "R:" + tag, 4, 3, sg.gens, sg.order);
      r.options.push_back(option("Z_v, v = e1 + lambda f1", x, {vector_point(minus_point(ws.space(4, 3)))},
                                 build::omega6(ws, 4, 3, '-').order()));
      return r;
    };
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<FactorCase> row11(long long q) {
  if (q != 3) return {};
  FactorCase c = make_case(11, 3, 6, true, "SL2(13)");
  c.x_label = "3^(15+6):SL_2(13)";
  c.y_label = "Omega_12^-(3)";
  c.z_order = order_of(Family::OmegaOdd, {6, 3});
  c.x_order = qpow(3, 21) * 2184;
  c.y_order = order_of(Family::OmegaMinus, {6, 3});
  c.expected_intersection = qpow(3, 16);
  c.intersection_label = "3^(10+5).3";
  c.constructive = true;
  c.stretch = true;
  c.build = [](Workspace& ws) {
    Built r;
    r.z_order = order_of(Family::OmegaOdd, {6, 3});
    const Group s = sl2_13_gf3();
    const CertifiedGroup& x = build::rs_group(ws, "R:SL2(13)", 6, 3, s.gens, BigInt(2184));
    r.options.push_back(option("Z_v, v = e1 + lambda f1", x, {vector_point(minus_point(ws.space(6, 3)))},
                               order_of(Family::OmegaMinus, {6, 3})));
    r.note = "|Z| and |Y| from the closed forms";
    r.provenance = s.provenance;
    return r;
  };
  return {c};
}

}  // namespace

std::vector<FactorCase> cases_for(int row, long long q, std::optional<int> m, std::string* why) {
  const auto [p, f] = prime_power(q);
  auto none = [&](const std::string& reason) {
    if (why) *why = reason;
    return std::vector<FactorCase>{};
  };
  switch (row) {
    case 1: {
      if (m && *m < 2) throw Error(ErrorCode::BadParams, "Row 1 needs m >= 2");
      std::vector<FactorCase> out;
      std::vector<int> ms = m ? std::vector<int>{*m} : q == 3 ? std::vector<int>{3, 4} : std::vector<int>{3};
      for (int mm : ms)
        for (FactorCase& c : row1(q, mm)) out.push_back(std::move(c));
      return out;
    }
    case 2: return row2(q);
    case 3: return p == 3 ? row3(q) : none("needs q = 3^f");
    case 4: return p == 3 ? row4(q) : none("needs q = 3^f");
    case 5: return p == 3 ? row5(q) : none("needs q = 3^f");
    case 6: return p == 3 ? row6(q) : none("needs q = 3^f");
    case 7: return q == 3 ? row7(q) : none("needs q = 3");
    case 8: return q == 3 ? row8(q) : none("needs q = 3");
    case 9: return q == 3 ? row9(q) : none("needs q = 3");
    case 10: return q == 3 ? row10(q) : none("needs q = 3");
    case 11: return q == 3 ? row11(q) : none("needs q = 3");
  }
  throw Error(ErrorCode::BadParams, "rows are numbered 1 to 11");
}

std::vector<FactorCase> negative_controls() {
  std::vector<FactorCase> out;
  const BigInt z = order_of(Family::OmegaOdd, {3, 3});
  {
    FactorCase c = make_case(0, 3, 3, false, "control:2G2'");
    c.id = "control/2G2(3)'";
    c.x_label = "2G2(3)'";
    c.y_label = "Omega_6^+(3)";
    c.z_order = z;
    c.x_order = BigInt(504);
    c.y_order = order_of(Family::OmegaPlus, {3, 3});
    c.expect = Expect::Fails;
    c.expect_reason = order_obstruction(c.x_order, c.index());
    c.constructive = true;
    c.build = [](Workspace& ws) {
      Built r;
      r.z_order = ws.omega(3, 3).order();
      const CertifiedGroup& full = twisted_g2(ws, &r.provenance);
      const CertifiedGroup& x = ws.group("2G2(3)'", [&] { return derived_subgroup(full, ws.seed_for("2G2'")); });
      r.options.push_back(option("derived group of 2G2(3)", x, {vector_point(plus_point(ws.space(3, 3)))},
                                 build::omega6(ws, 3, 3, '+').order()));
      return r;
    };
    out.push_back(std::move(c));
  }
  {
    FactorCase c = make_case(0, 3, 3, false, "control:X<=Y");
    c.id = "control/X<=Y";
    c.x_label = "Omega_5(3) < Z_v";
    c.y_label = "Z_v = Omega_6^-(3)";
    c.z_order = z;
    c.x_order = order_of(Family::OmegaOdd, {2, 3});
    c.y_order = order_of(Family::OmegaMinus, {3, 3});
    c.expect = Expect::Fails;
    c.expect_reason = "X is contained in Y";
    c.constructive = true;
    c.build = [](Workspace& ws) {
      Built r;
      r.z_order = ws.omega(3, 3).order();
      const OrthSpace& V = ws.space(3, 3);
      const CertifiedGroup& Y = build::omega6(ws, 3, 3, '-');
      const Vec u = vec_add(*V.field, V.e(2), V.f(2));
      const CertifiedGroup& x =
          ws.group("Z_{v,u}(3)", [&] { return ws.stabilizer_of(Y, {vector_point(u)}, "Z_{v,u}"); });
      r.options.push_back(option("X on v", x, {vector_point(minus_point(V))}, Y.order()));
      return r;
    };
    out.push_back(std::move(c));
  }
  return out;
}

// ---------------------------------------------------------------------------
// Arithmetic audit

std::vector<Identity> audit_identities_for(long long q) {
  const auto [p, f] = prime_power(q);
  std::vector<Identity> out;
  auto O = [](Family fam, std::vector<long long> params) { return order_of(fam, std::move(params)); };
  auto add = [&](std::string id, std::string text, std::vector<std::pair<std::string, BigInt>> terms) {
    out.push_back(Identity{"q=" + qs(q) + "/" + std::move(id), std::move(text), std::move(terms)});
  };
  const BigInt om7 = O(Family::OmegaOdd, {3, q});

  // Row 1: |X| / |X cap Y| = q^m (q^m - 1) = |Omega_{2m+1}| / |Omega_{2m}^-|.
  for (int m = 2; m <= 6; ++m) {
    const BigInt zy = O(Family::OmegaOdd, {m, q}) / O(Family::OmegaMinus, {m, q});
    const BigInt closed = qpow(q, m) * (qpow(q, m) - 1);
    for (ExtKind kind : {ExtKind::SL, ExtKind::Sp}) {
      for (int a = m; a >= 2; --a) {
        if (m % a || (kind == ExtKind::Sp && a % 2)) continue;
        const int b = m / a;
        const long long qb = static_cast<long long>(qpow(q, b));
        const bool sl = kind == ExtKind::SL;
        const BigInt x = qpow(q, m * (m + 1) / 2) * O(sl ? Family::SL : Family::Sp, {a, qb});
        const BigInt xy = qpow(q, (m - 1) * (m - 2) / 2 + (m - 1) + (m - b)) *
                          O(sl ? Family::SL : Family::Sp, {sl ? a - 1 : a - 2, qb});
        add("row1/m=" + std::to_string(m) + "/" + to_string(kind) + "(" + std::to_string(a) + "," + std::to_string(b) + ")",
            "|X|/|X cap Y| = q^m(q^m-1) = |Omega_2m+1(q)|/|Omega_2m^-(q)|",
            {{"|X|/|X cap Y|", x % xy == 0 ? x / xy : BigInt(-1)}, {"q^m(q^m-1)", closed}, {"|Z|/|Y|", zy}});
      }
    }
  }

  // Row 2.
  for (int eps : {+1, -1}) {
    const Family om6 = eps > 0 ? Family::OmegaPlus : Family::OmegaMinus;
    const Family sl3 = eps > 0 ? Family::SL : Family::SU;
    add(std::string("row2/Omega6") + (eps > 0 ? "+" : "-"), "|Omega_7|/|Omega_6^e| = q^3(q^3+e) = |G_2|/|SL_3^e|",
        {{"|Z|/|X|", om7 / O(om6, {3, q})},
         {"q^3(q^3+e)", qpow(q, 3) * (qpow(q, 3) + eps)},
         {"|Y|/|X cap Y|", O(Family::G2, {q}) / O(sl3, {3, q})}});
  }
  add("row2/Omega5", "|G_2|/|SL_2| = q^5(q^6-1) = |Omega_7|/|Omega_5|",
      {{"|Y|/|X cap Y|", O(Family::G2, {q}) / O(Family::SL, {2, q})},
       {"q^5(q^6-1)", qpow(q, 5) * (qpow(q, 6) - 1)},
       {"|Z|/|X|", om7 / O(Family::OmegaOdd, {2, q})}});
  add("row2/q^5:Omega5", "|G_2|/|q^5:SL_2| = q^6-1 = |Omega_7|/|q^5:Omega_5|",
      {{"|Y|/|X cap Y|", O(Family::G2, {q}) / (qpow(q, 5) * O(Family::SL, {2, q}))},
       {"q^6-1", qpow(q, 6) - 1},
       {"|Z|/|X|", om7 / (qpow(q, 5) * O(Family::OmegaOdd, {2, q}))}});
  {
    const BigInt prod = qpow(q, 4) * O(Family::OmegaMinus, {2, q}) * O(Family::G2, {q});
    add("row2/q^4:Omega4-", "|X||Y|/|Z| = q^3",
        {{"|X||Y|/|Z|", prod % om7 == 0 ? prod / om7 : BigInt(-1)}, {"q^3", qpow(q, 3)}});
  }

  if (p == 3) {
    // Rows 3 and 4: |SL_3^{-e}(q)|/(q^2-1) = q^3(q^3+e) = |Omega_7|/|Omega_6^e|.
    for (int eps : {+1, -1}) {
      const Family om6 = eps > 0 ? Family::OmegaPlus : Family::OmegaMinus;
      const Family x = eps > 0 ? Family::SU : Family::SL;
      add(eps > 0 ? "row3/SU3" : "row4/SL3", "|SL_3^-e(q)|/(q^2-1) = q^3(q^3+e) = |Omega_7|/|Omega_6^e|",
          {{"|X|/|X cap Y|", O(x, {3, q}) / (q * q - 1)},
           {"q^3(q^3+e)", qpow(q, 3) * (qpow(q, 3) + eps)},
           {"|Z|/|Y|", om7 / O(om6, {3, q})}});
    }
    if (f % 2 == 1)
      add("row3/2G2", "|2G_2(q)|/(q-1) = q^3(q^3+1) = |Omega_7|/|Omega_6^+|",
          {{"|X|/|X cap Y|", O(Family::TwistedG2, {q}) / (q - 1)},
           {"q^3(q^3+1)", qpow(q, 3) * (qpow(q, 3) + 1)},
           {"|Z|/|Y|", om7 / O(Family::OmegaPlus, {3, q})}});
    add("row5/PSp6", "|PSp_6(q)|/|(SL_2(q) x SL_2(q^2))/2| = q^6(q^6-1) = |Omega_13|/|Omega_12^-|",
        {{"|X|/|X cap Y|", O(Family::PSp, {6, q}) * 2 / (O(Family::SL, {2, q}) * O(Family::SL, {2, q * q}))},
         {"q^6(q^6-1)", qpow(q, 6) * (qpow(q, 6) - 1)},
         {"|Z|/|Y|", O(Family::OmegaOdd, {6, q}) / O(Family::OmegaMinus, {6, q})}});
    add("row6/F4", "|F_4(q)|/|2.Omega_8^-(q)| = q^12(q^12-1) = |Omega_25|/|Omega_24^-|",
        {{"|X|/|X cap Y|", O(Family::F4, {q}) / O(Family::SpinMinus8, {q})},
         {"q^12(q^12-1)", qpow(q, 12) * (qpow(q, 12) - 1)},
         {"|Z|/|Y|", O(Family::OmegaOdd, {12, q}) / O(Family::OmegaMinus, {12, q})}});
  }

  if (q == 3) {
    const BigInt zy9 = O(Family::OmegaOdd, {4, 3}) / O(Family::OmegaMinus, {4, 3});
    const std::vector<std::tuple<std::string, long long, long long>> row10 = {
        {"2.S5", 240, 3}, {"8.A5", 480, 6}, {"2^(1+4).A5", 1920, 24}};
    for (const auto& [tag, s, stab] : row10)
      add("row10/" + tag, "|3^(6+4):S|/|3^(3+3).S_(U1,e1+U1)| = 3^4(3^4-1) = |Omega_9(3)|/|Omega_8^-(3)|",
          {{"|X|/|X cap Y|", qpow(3, 10) * s / (qpow(3, 6) * stab)}, {"3^4(3^4-1)", BigInt(81 * 80)}, {"|Z|/|Y|", zy9}});
    add("row11/SL2(13)", "|3^(15+6):SL_2(13)|/|3^(10+5).3| = 3^6(3^6-1) = |Omega_13(3)|/|Omega_12^-(3)|",
        {{"|X|/|X cap Y|", qpow(3, 21) * O(Family::SL, {2, 13}) / qpow(3, 16)},
         {"3^6(3^6-1)", BigInt(729 * 728)},
         {"|Z|/|Y|", O(Family::OmegaOdd, {6, 3}) / O(Family::OmegaMinus, {6, 3})}});
  }
  return out;
}

}  // namespace oddfact
