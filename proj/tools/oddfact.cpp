// Command-line frontend: verify, orders, discover, orbit, bsgs-cache.

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "oddfact/atlas.hpp"
#include "oddfact/discover.hpp"
#include "oddfact/error.hpp"
#include "oddfact/registry.hpp"
#include "oddfact/report.hpp"
#include "oddfact/suites.hpp"
#include "oddfact/verifier.hpp"

namespace fs = std::filesystem;
using namespace oddfact;

namespace {

constexpr int kExitMismatch = 1;
constexpr int kExitError = 2;
constexpr int kExitNotFound = 3;

std::vector<long long> parse_list(const std::string& text, const std::string& what) {
  std::vector<long long> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    try {
      const auto dash = item.find('-', 1);
      if (dash == std::string::npos) {
        out.push_back(std::stoll(item));
      } else {
        const long long lo = std::stoll(item.substr(0, dash)), hi = std::stoll(item.substr(dash + 1));
        if (hi < lo) throw Error(ErrorCode::BadParams, "empty range " + item);
        for (long long v = lo; v <= hi; ++v) out.push_back(v);
      }
    } catch (const std::logic_error&) {
      throw Error(ErrorCode::BadParams, "cannot parse " + what + " '" + item + "'");
    }
  }
  if (out.empty()) throw Error(ErrorCode::BadParams, "no " + what + " given");
  return out;
}

std::string resolve_cache_dir(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("ODDFACT_CACHE")) return env;
  return {};
}

std::string read_file(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct VerifyConfig {
  std::string rows = "1-11";
  std::string q = "3";
  std::optional<int> m;
  std::string mode = "both";
  bool stretch = false;
  std::uint64_t seed = 20240601;
  std::string cache_dir;
  std::string out;
  std::size_t cap_points = kDefaultPointCap;
  std::size_t cap_cosets = kDefaultCosetCap;
  int jobs = 1;
  bool timings = false;
  bool controls = false;
  bool suites = false;
  bool quiet = false;
};

// Normalized command line for the report header; leaves out options that
// must not influence the report (output path, cache, jobs).
std::string describe(const VerifyConfig& c) {
  std::string s = "verify --rows " + c.rows + " --q " + c.q;
  if (c.m) s += " --m " + std::to_string(*c.m);
  s += " --mode " + c.mode + " --seed " + std::to_string(c.seed);
  if (c.stretch) s += " --stretch";
  if (c.controls) s += " --controls";
  if (c.suites) s += " --suites";
  if (c.cap_points != kDefaultPointCap) s += " --cap-points " + std::to_string(c.cap_points);
  if (c.cap_cosets != kDefaultCosetCap) s += " --cap-cosets " + std::to_string(c.cap_cosets);
  return s;
}

int cmd_verify(const VerifyConfig& c) {
  RunOptions opt;
  opt.mode = parse_mode(c.mode);
  opt.stretch = c.stretch;
  opt.cap_points = c.cap_points;
  opt.cap_cosets = c.cap_cosets;
  const std::string cache = resolve_cache_dir(c.cache_dir);

  std::vector<int> rows;
  for (long long r : parse_list(c.rows, "row")) rows.push_back(static_cast<int>(r));
  std::vector<PlannedItem> plan;
  for (long long q : parse_list(c.q, "q")) {
    std::vector<PlannedItem> part = plan_rows(rows, q, c.m, opt, c.seed);
    std::move(part.begin(), part.end(), std::back_inserter(plan));
  }
  if (c.controls) {
    std::vector<PlannedItem> part = plan_controls();
    std::move(part.begin(), part.end(), std::back_inserter(plan));
  }

  Workspace::CacheStats stats;
  std::vector<CaseReport> reports =
      execute(plan, [&] { return std::make_unique<Workspace>(c.seed, cache); }, opt, c.jobs, &stats);
  if (c.suites) {
    Workspace ws(c.seed, cache);
    for (const SuiteReport& s : run_all_suites(ws)) reports.push_back(to_case_report(s, c.seed));
  }

  if (c.out.empty() || c.out == "-") {
    write_reports(std::cout, reports, describe(c), c.timings);
  } else {
    std::ofstream f(c.out, std::ios::binary);
    if (!f) throw Error(ErrorCode::MissingData, "cannot write " + c.out);
    write_reports(f, reports, describe(c), c.timings);
  }

  if (!c.quiet)
    for (const CaseReport& r : reports) {
      std::cerr << (r.matches ? "  " : "! ") << r.verdict << "  " << r.case_id;
      if (r.intersection) std::cerr << "  |X cap Y| = " << to_string(r.intersection->order);
      if (r.verdict != "holds" || !r.matches) std::cerr << "  (" << r.reason << ")";
      std::cerr << '\n';
    }
  const Summary s = summarize(reports);
  std::cerr << "total " << s.total << ", holds " << s.holds << ", fails " << s.fails << ", arithmetic-only "
            << s.arithmetic_only << ", skipped " << s.skipped << ", mismatches " << s.mismatches
            << ", construction errors " << s.construction_errors << '\n';
  if (!cache.empty())
    std::cerr << "cache " << cache << ": hits " << stats.hits << ", misses " << stats.misses << ", rejected "
              << stats.rejected << '\n';
  if (s.construction_errors > 0) return kExitError;
  if (s.mismatches > 0) return kExitMismatch;
  return 0;
}

int cmd_orders(const std::string& family, const std::vector<long long>& params) {
  const OrderFormula f{parse_family(family), params};
  std::cout << to_string(order_of(f)) << '\n' << "= " << order_factors(f) << '\n';
  return 0;
}

struct DiscoverConfig {
  std::string target;
  int m = 3;
  long long q = 3;
  std::string hints = "2,3";
  int attempts = 200;
  std::uint64_t seed = 20240601;
  std::string out;
  std::string name;
  bool registry = false;
  std::string out_dir;
};

int cmd_discover_registry(const DiscoverConfig& c) {
  // no data directory: every registry group is searched for afresh
  Workspace ws(c.seed, {}, {});
  RunOptions opt;
  opt.mode = Mode::Constructive;
  for (const CaseReport& r : verify_rows(ws, {3, 4, 7, 9, 10}, 3, std::nullopt, opt))
    if (r.construction_error) throw Error(ErrorCode::ConstructionFailure, r.case_id + ": " + r.reason);
  const fs::path dir = c.out_dir.empty() ? fs::path(data_dir()) / "groups" : fs::path(c.out_dir);
  fs::create_directories(dir);
  for (const auto& [key, g] : ws.fresh_discoveries()) {
    store_group(g, (dir / (key + ".gens")).string());
    std::cout << key << ": order " << to_string(*g.claimed_order) << ", " << g.provenance << '\n';
  }
  return 0;
}

int cmd_discover(const DiscoverConfig& c) {
  if (c.registry) return cmd_discover_registry(c);
  if (c.target.empty()) throw Error(ErrorCode::BadParams, "a target order is required");
  BigInt target;
  try {
    target = BigInt(c.target);
  } catch (const std::exception&) {
    throw Error(ErrorCode::BadParams, "target order '" + c.target + "' is not an integer");
  }
  const BigInt z_order = order_of(Family::OmegaOdd, {c.m, c.q});
  if (target <= 0 || z_order % target != 0)
    throw Error(ErrorCode::BadParams, c.target + " does not divide |Omega_" + std::to_string(2 * c.m + 1) + "(" +
                                          std::to_string(c.q) + ")| = " + to_string(z_order));
  Workspace ws(c.seed);
  const CertifiedGroup& z = ws.omega(c.m, c.q);
  DiscoverOptions opt;
  opt.target = target;
  opt.hints.clear();
  for (long long h : parse_list(c.hints, "hint")) opt.hints.push_back(static_cast<int>(h));
  opt.attempts = c.attempts;
  opt.seed = c.seed;
  const Discovered d = discover_subgroup(z, opt);

  Group g;
  g.name = c.name.empty() ? "order" + c.target + "_in_Omega" + std::to_string(2 * c.m + 1) + "_q" + std::to_string(c.q)
                          : c.name;
  g.gram = ws.space(c.m, c.q).gram;
  g.gens = d.group.gens;
  g.claimed_order = d.group.order();
  g.provenance = "discovered seed=" + std::to_string(c.seed) + " attempt=" + std::to_string(d.attempt) +
                 " hints=" + c.hints;
  const std::string path = c.out.empty() ? g.name + ".gens" : c.out;
  store_group(g, path);
  std::cerr << "wrote " << path << '\n';
  std::cout << fingerprint_json(fingerprint(d.group, c.seed)) << '\n';
  return 0;
}

struct OrbitConfig {
  int m = 3;
  long long q = 3;
  std::string group = "omega";
  std::string point = "e1";
  std::string action = "vector";
  std::uint64_t seed = 20240601;
};

int cmd_orbit(const OrbitConfig& c) {
  Workspace ws(c.seed);
  const OrthSpace& V = ws.space(c.m, c.q);
  const Field& F = *V.field;
  const CertifiedGroup* g = nullptr;
  if (c.group == "omega") g = &ws.omega(c.m, c.q);
  if (c.group == "g2") {
    if (c.m != 3) throw Error(ErrorCode::BadParams, "G2 lives in dimension 7 (m = 3)");
    g = &build::g2(ws, c.q, 'A');
  }
  if (!g) throw Error(ErrorCode::BadParams, "group must be omega or g2");
  Vec v;
  if (c.point == "e1") v = V.e(1);
  else if (c.point == "d") v = V.d();
  else if (c.point == "v-") v = minus_point(V);
  else if (c.point == "v+") v = plus_point(V);
  Point p;
  if (v.empty()) p = parse_point(F, c.point);
  else if (c.action == "line") p = line_point(F, v);
  else if (c.action == "vector") p = vector_point(v);
  else throw Error(ErrorCode::BadParams, "action must be vector or line");
  const Suborbit s = point_suborbit(*g, p, ws.seed_for("orbit"));
  std::cout << "orbit " << to_string(s.orbit_size) << '\n'
            << "stabilizer " << to_string(s.stabilizer.order()) << '\n';
  return 0;
}

std::string require_cache(const std::string& flag) {
  const std::string dir = resolve_cache_dir(flag);
  if (dir.empty()) throw Error(ErrorCode::BadParams, "no cache directory (use --cache-dir or ODDFACT_CACHE)");
  return dir;
}

int cmd_cache_check(const std::string& dir) {
  int bad = 0, good = 0;
  if (!fs::exists(dir)) {
    std::cout << "no cache at " << dir << '\n';
    return 0;
  }
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir))
    if (e.path().extension() == ".bsgs") files.push_back(e.path());
  std::sort(files.begin(), files.end());
  for (const fs::path& f : files) {
    try {
      std::string name;
      const Bsgs b = deserialize_bsgs(read_file(f), &name);
      std::cout << "ok   " << f.filename().string() << "  " << name << "  order " << to_string(b.order()) << '\n';
      ++good;
    } catch (const Error& e) {
      std::cout << "bad  " << f.filename().string() << "  " << e.what() << '\n';
      ++bad;
    }
  }
  std::cout << good << " valid, " << bad << " invalid\n";
  return bad > 0 ? kExitMismatch : 0;
}

int cmd_cache_clear(const std::string& dir) {
  int n = 0;
  if (fs::exists(dir))
    for (const auto& e : fs::directory_iterator(dir))
      if (e.path().extension() == ".bsgs") n += fs::remove(e.path()) ? 1 : 0;
  std::cout << "removed " << n << " cache files from " << dir << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Factorizations of almost simple orthogonal groups in odd dimension"};
  app.require_subcommand(1);
  int rc = 0;

  VerifyConfig vc;
  auto* verify = app.add_subcommand("verify", "Audit identities and constructive checks for rows of the classification");
  verify->add_option("--rows", vc.rows, "Rows, e.g. 1-11 or 2,7")->capture_default_str();
  verify->add_option("--q", vc.q, "Field sizes, e.g. 3 or 3,5,9,27")->capture_default_str();
  verify->add_option("--m", vc.m, "Rank m for Row 1 (dimension 2m+1)");
  verify->add_option("--mode", vc.mode, "arithmetic, constructive or both")
      ->check(CLI::IsMember({"arithmetic", "constructive", "both"}))
      ->capture_default_str();
  verify->add_flag("--stretch", vc.stretch, "Also run the constructive checks in dimension 13");
  verify->add_option("--seed", vc.seed, "Run seed")->capture_default_str();
  verify->add_option("--cache-dir", vc.cache_dir, "BSGS cache directory (default: $ODDFACT_CACHE)");
  verify->add_option("--out", vc.out, "Report file (default: standard output)");
  verify->add_option("--cap-points", vc.cap_points, "Largest point orbit")->capture_default_str();
  verify->add_option("--cap-cosets", vc.cap_cosets, "Largest coset orbit")->capture_default_str();
  verify->add_option("--jobs", vc.jobs, "Worker threads (cases run in parallel)")->check(CLI::PositiveNumber);
  verify->add_flag("--timings", vc.timings, "Include timings in the report");
  verify->add_flag("--controls", vc.controls, "Append the negative controls");
  verify->add_flag("--suites", vc.suites, "Append the property suites");
  verify->add_flag("--quiet", vc.quiet, "No per-case lines on standard error");
  verify->callback([&] { rc = cmd_verify(vc); });

  std::string family;
  std::vector<long long> params;
  auto* orders = app.add_subcommand("orders", "Closed-form group orders");
  orders->add_option("family", family, "OmegaOdd, OmegaPlus, OmegaMinus, SL, SU, Sp, PSp, G2, TwistedG2, F4, ...")
      ->required();
  orders->add_option("params", params, "Parameters, e.g. m q or n q or q");
  orders->callback([&] { rc = cmd_orders(family, params); });

  DiscoverConfig dc;
  auto* discover = app.add_subcommand("discover", "Random search for a subgroup of Omega_{2m+1}(q) of given order");
  discover->add_option("target", dc.target, "Target order");
  discover->add_option("--m", dc.m, "Rank")->capture_default_str();
  discover->add_option("--q", dc.q, "Field size")->capture_default_str();
  discover->add_option("--hints", dc.hints, "Orders of the sampled generators")->capture_default_str();
  discover->add_option("--attempts", dc.attempts, "Attempts before giving up")->capture_default_str();
  discover->add_option("--seed", dc.seed, "Search seed")->capture_default_str();
  discover->add_option("--out", dc.out, "Generator file (default: <name>.gens)");
  discover->add_option("--name", dc.name, "Group name recorded in the file");
  discover->add_flag("--registry", dc.registry, "Search for every stored group the registry uses and write them");
  discover->add_option("--out-dir", dc.out_dir, "Directory for --registry (default: the data directory)");
  discover->callback([&] { rc = cmd_discover(dc); });

  OrbitConfig oc;
  auto* orbit = app.add_subcommand("orbit", "Orbit and stabilizer of a point");
  orbit->add_option("--m", oc.m, "Rank")->capture_default_str();
  orbit->add_option("--q", oc.q, "Field size")->capture_default_str();
  orbit->add_option("--group", oc.group, "omega or g2")->capture_default_str();
  orbit->add_option("--point", oc.point, "e1, d, v-, v+ or a point in text form (V:..., L:...)")
      ->capture_default_str();
  orbit->add_option("--action", oc.action, "vector or line (named points only)")->capture_default_str();
  orbit->add_option("--seed", oc.seed, "Seed")->capture_default_str();
  orbit->callback([&] { rc = cmd_orbit(oc); });

  std::string cache_flag;
  VerifyConfig bc;
  bc.rows = "1-4,7-10";
  bc.mode = "constructive";
  bc.quiet = true;
  auto* cache = app.add_subcommand("bsgs-cache", "Manage the BSGS cache");
  cache->require_subcommand(1);
  cache->fallthrough();
  cache->add_option("--cache-dir", cache_flag, "Cache directory (default: $ODDFACT_CACHE)");
  auto* cbuild = cache->add_subcommand("build", "Populate the cache by a constructive run");
  cbuild->add_option("--rows", bc.rows, "Rows")->capture_default_str();
  cbuild->add_option("--q", bc.q, "Field sizes")->capture_default_str();
  cbuild->add_option("--seed", bc.seed, "Run seed")->capture_default_str();
  cbuild->add_option("--jobs", bc.jobs, "Worker threads")->check(CLI::PositiveNumber);
  cbuild->callback([&] {
    bc.cache_dir = require_cache(cache_flag);
    bc.out = (fs::temp_directory_path() / "oddfact-cache-build.jsonl").string();
    rc = cmd_verify(bc);
  });
  cache->add_subcommand("check", "Re-verify every cached chain")->callback([&] {
    rc = cmd_cache_check(require_cache(cache_flag));
  });
  cache->add_subcommand("clear", "Delete the cached chains")->callback([&] {
    rc = cmd_cache_clear(require_cache(cache_flag));
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : kExitError;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return e.code() == ErrorCode::NotFound ? kExitNotFound : kExitError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return rc;
}
