#include "oddfact/verifier.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <exception>
#include <thread>

#include "oddfact/error.hpp"

namespace oddfact {

namespace {

using Clock = std::chrono::steady_clock;

long long ms_since(Clock::time_point t0) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - t0).count();
}

bool agrees(Expect e, const std::string& verdict) {
  if (verdict == "skipped") return true;
  switch (e) {
    case Expect::Holds: return verdict == "holds" || verdict == "arithmetic-only";
    case Expect::Fails: return verdict == "fails";
    case Expect::Either: return true;
  }
  return false;
}

struct Evaluated {
  OptionResult result;
  CertifiedGroup intersection;
};

Evaluated evaluate(Workspace& ws, const std::string& case_id, const Option& o, const BigInt& z_order,
                   std::size_t cap) {
  Evaluated e;
  e.result.label = o.label;
  e.result.required = z_order / o.fixed_order;
  BigInt total = 1;
  CertifiedGroup cur = o.acting;
  for (std::size_t i = 0; i < o.points.size(); ++i) {
    Suborbit s = point_suborbit(cur, o.points[i], ws.seed_for(case_id + "|" + o.label + "|" + std::to_string(i)), cap);
    total *= s.orbit_size;
    cur = std::move(s.stabilizer);
  }
  e.result.orbit_size = total;
  e.result.intersection = cur.order();
  e.result.transitive = z_order % o.fixed_order == 0 && total == e.result.required;
  e.intersection = std::move(cur);
  return e;
}

void finish(CaseReport& r) { r.matches = agrees(r.expect, r.verdict); }

}  // namespace

Mode parse_mode(const std::string& s) {
  if (s == "arithmetic") return Mode::Arithmetic;
  if (s == "constructive") return Mode::Constructive;
  if (s == "both") return Mode::Both;
  throw Error(ErrorCode::BadParams, "mode must be arithmetic, constructive or both");
}

std::string to_string(Mode m) {
  switch (m) {
    case Mode::Arithmetic: return "arithmetic";
    case Mode::Constructive: return "constructive";
    case Mode::Both: return "both";
  }
  return "?";
}

CaseReport run_case(Workspace& ws, const FactorCase& c, const RunOptions& opt) {
  CaseReport r;
  r.case_id = c.id;
  r.row = c.row;
  r.params = c.params;
  r.expect = c.expect;
  r.expect_reason = c.expect_reason;
  r.x_label = c.x_label;
  r.y_label = c.y_label;
  r.z_order = c.z_order;
  r.x_order = c.x_order;
  r.y_order = c.y_order;
  r.index = c.index();
  r.expected_intersection = c.expected_intersection;
  r.intersection_label = c.intersection_label;
  r.reference = c.reference;
  r.seed = ws.seed();

  if (c.expected_intersection > 0 && r.index * c.expected_intersection != c.x_order) {
    r.verdict = "fails";
    r.reason = "registry inconsistency: index * expected intersection != |X|";
    r.matches = false;
    return r;
  }

  const std::string screen = c.z_order % c.y_order == 0 ? order_obstruction(c.x_order, r.index) : "|Y| does not divide |Z|";
  const std::string arith_verdict = screen.empty() ? "arithmetic-only" : "fails";

  if (opt.mode == Mode::Arithmetic) {
    r.verdict = arith_verdict;
    r.reason = screen.empty() ? "order identity |X| = |Z:Y| |X cap Y| consistent" : screen;
    finish(r);
    return r;
  }
  if (!c.constructive || (c.stretch && !opt.stretch)) {
    const std::string why = !c.constructive ? c.arithmetic_only_reason : "stretch case (enable with --stretch)";
    if (opt.mode == Mode::Constructive) {
      r.verdict = "skipped";
      r.reason = why;
    } else {
      r.verdict = arith_verdict;
      r.reason = why;
    }
    finish(r);
    return r;
  }

  if (c.reference) r.reference_fingerprint = ws.reference_fingerprint(*c.reference);

  try {
    auto t0 = Clock::now();
    Built b = c.build(ws);
    r.timings.build_ms = ms_since(t0);
    r.provenance = b.provenance;
    r.note = b.note;
    r.acting = b.x_acts ? "X" : "Y";
    r.measured_z = b.z_order;
    if (b.z_order != c.z_order) throw Error(ErrorCode::ConstructionFailure, "certified |Z| differs from the closed form");

    t0 = Clock::now();
    std::vector<Evaluated> evals;
    for (const Option& o : b.options) {
      const BigInt& acting_expected = b.x_acts ? c.x_order : c.y_order;
      const BigInt& fixed_expected = b.x_acts ? c.y_order : c.x_order;
      if (o.acting.order() != acting_expected)
        throw Error(ErrorCode::ConstructionFailure, o.label + ": certified order " + to_string(o.acting.order()) +
                                                        " differs from the closed form " + to_string(acting_expected));
      if (o.fixed_order != fixed_expected)
        throw Error(ErrorCode::ConstructionFailure, o.label + ": stabilized side has order " + to_string(o.fixed_order));
      evals.push_back(evaluate(ws, c.id, o, b.z_order, opt.cap_points));
      r.options.push_back(evals.back().result);
    }
    r.timings.coset_ms = ms_since(t0);
    if (evals.empty()) throw Error(ErrorCode::ConstructionFailure, "no construction");

    std::size_t pick = 0;
    for (std::size_t i = 0; i < evals.size(); ++i)
      if (evals[i].result.transitive) {
        pick = i;
        break;
      }
    const Evaluated& e = evals[pick];
    r.chosen_option = e.result.label;
    r.measured_x = b.x_acts ? b.options[pick].acting.order() : b.options[pick].fixed_order;
    r.measured_y = b.x_acts ? b.options[pick].fixed_order : b.options[pick].acting.order();
    r.orbit_size = e.result.orbit_size;

    t0 = Clock::now();
    r.intersection = fingerprint(e.intersection, ws.seed_for(c.id + "|fingerprint"));
    r.timings.bsgs_ms = ms_since(t0);

    const bool product_ok = *r.measured_x * *r.measured_y == b.z_order * r.intersection->order;
    if (e.result.transitive && product_ok) {
      r.verdict = "holds";
      r.reason = "orbit of length " + to_string(e.result.orbit_size) + " = |Z:" + (b.x_acts ? "Y" : "X") + "|";
    } else {
      r.verdict = "fails";
      r.reason = "orbit of length " + to_string(e.result.orbit_size) + " < " + to_string(e.result.required);
    }
    if (r.verdict == "holds") {
      if (c.expected_intersection > 0 && r.intersection->order != c.expected_intersection)
        r.fingerprint_mismatches.push_back("order");
      if (r.reference_fingerprint)
        for (const std::string& f : fingerprint_mismatches(*r.intersection, *r.reference_fingerprint))
          if (f != "order" || c.expected_intersection == 0) r.fingerprint_mismatches.push_back(f);
    }
  } catch (const Error& err) {
    r.verdict = "skipped";
    r.reason = err.what();
    r.construction_error = err.code() != ErrorCode::CapExceeded && err.code() != ErrorCode::DomainOverflow;
  }
  if (!screen.empty() && !r.construction_error && r.verdict != "skipped") {
    if (r.verdict == "holds") {
      r.verdict = "fails";
      r.reason = "inconsistent: " + screen + " but " + r.reason;
    } else {
      r.reason = screen + "; " + r.reason;
    }
  }
  finish(r);
  if (!r.fingerprint_mismatches.empty()) r.matches = false;
  if (r.construction_error) r.matches = false;
  return r;
}

CaseReport audit_report(const Identity& id, std::uint64_t seed) {
  CaseReport r;
  r.case_id = "audit/" + id.id;
  r.params["identity"] = id.text;
  for (const auto& [name, value] : id.terms) r.params["term " + name] = to_string(value);
  r.verdict = id.holds() ? "holds" : "fails";
  r.reason = id.holds() ? "exact equality" : "terms differ";
  r.seed = seed;
  finish(r);
  return r;
}

std::vector<PlannedItem> plan_rows(const std::vector<int>& rows, long long q, std::optional<int> m, const RunOptions& opt,
                                   std::uint64_t seed) {
  std::vector<PlannedItem> out;
  for (int row : rows) {
    if (opt.mode != Mode::Constructive) {
      const std::string prefix = "row" + std::to_string(row) + "/";
      const std::string mtag = m ? prefix + "m=" + std::to_string(*m) + "/" : "";
      for (const Identity& id : audit_identities_for(q)) {
        const std::string rest = id.id.substr(id.id.find('/') + 1);
        if (rest.rfind(prefix, 0) != 0) continue;
        if (row == 1 && m && rest.rfind(mtag, 0) != 0) continue;
        out.push_back({audit_report(id, seed), std::nullopt});
      }
    }
    std::string why;
    std::vector<FactorCase> cases = cases_for(row, q, m, &why);
    if (cases.empty()) {
      CaseReport r;
      r.case_id = "row" + std::to_string(row) + "/q=" + std::to_string(q);
      r.row = row;
      r.params["q"] = std::to_string(q);
      r.verdict = "skipped";
      r.reason = why;
      r.seed = seed;
      out.push_back({std::move(r), std::nullopt});
      continue;
    }
    for (FactorCase& c : cases) out.push_back({std::nullopt, std::move(c)});
  }
  return out;
}

std::vector<PlannedItem> plan_controls() {
  std::vector<PlannedItem> out;
  for (FactorCase& c : negative_controls()) out.push_back({std::nullopt, std::move(c)});
  return out;
}

std::vector<CaseReport> execute(const std::vector<PlannedItem>& plan,
                                const std::function<std::unique_ptr<Workspace>()>& make_workspace,
                                const RunOptions& opt, int jobs, Workspace::CacheStats* stats) {
  std::vector<CaseReport> out(plan.size());
  std::vector<std::size_t> todo;
  for (std::size_t i = 0; i < plan.size(); ++i) {
    if (plan[i].done)
      out[i] = *plan[i].done;
    else
      todo.push_back(i);
  }
  const int workers = std::max(1, std::min<int>(jobs, static_cast<int>(todo.size())));
  std::atomic<std::size_t> next{0};
  std::vector<Workspace::CacheStats> worker_stats(workers);
  std::vector<std::exception_ptr> errors(workers);
  auto work = [&](int w) {
    try {
      std::unique_ptr<Workspace> ws = make_workspace();
      for (std::size_t k = next++; k < todo.size(); k = next++) out[todo[k]] = run_case(*ws, *plan[todo[k]].todo, opt);
      worker_stats[w] = ws->cache_stats();
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> threads;
    for (int w = 0; w < workers; ++w) threads.emplace_back(work, w);
    for (std::thread& t : threads) t.join();
  }
  for (const std::exception_ptr& e : errors)
    if (e) std::rethrow_exception(e);
  if (stats) {
    *stats = {};
    for (const Workspace::CacheStats& s : worker_stats) {
      stats->hits += s.hits;
      stats->misses += s.misses;
      stats->rejected += s.rejected;
    }
  }
  return out;
}

std::vector<CaseReport> verify_rows(Workspace& ws, const std::vector<int>& rows, long long q, std::optional<int> m,
                                    const RunOptions& opt) {
  std::vector<CaseReport> out;
  for (const PlannedItem& item : plan_rows(rows, q, m, opt, ws.seed()))
    out.push_back(item.done ? *item.done : run_case(ws, *item.todo, opt));
  return out;
}

std::vector<CaseReport> run_negative_controls(Workspace& ws, const RunOptions& opt) {
  std::vector<CaseReport> out;
  for (const FactorCase& c : negative_controls()) out.push_back(run_case(ws, c, opt));
  return out;
}

}  // namespace oddfact
