#pragma once

// Property suites.  Each suite draws random instances from per-instance
// seeds, optionally filters them on an antecedent, checks a property on the
// kept ones and reports counts.  Instances run in parallel; results are
// aggregated in index order so a report depends on the configuration only.

#include "mtlsample/behavior.hpp"
#include "mtlsample/behavior_io.hpp"
#include "mtlsample/formula.hpp"
#include "mtlsample/formula_io.hpp"
#include "mtlsample/generators.hpp"
#include "mtlsample/oracle.hpp"
#include "mtlsample/semantics.hpp"
#include "mtlsample/transform.hpp"
#include "mtlsample/verify.hpp"

#include <json.hpp>

#include <atomic>
#include <chrono>
#include <functional>
#include <map>
#include <mutex>
#include <sstream>
#include <string>
#include <thread>
#include <tuple>
#include <vector>

namespace mtlsample {

struct SuiteReport {
  std::string name;
  std::uint64_t seed = 0;
  /// Kept instances requested.
  int target = 0;
  /// Instances generated (kept or filtered out).
  int attempts = 0;
  int kept = 0;
  long checks = 0;
  long violations = 0;
  /// Whether kept instances are selected by an antecedent.
  bool filtered = false;
  /// Filtered suites need at least this many kept instances to count.
  int min_kept = 50;
  std::string filter;
  std::map<std::string, long> counters;
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  double seconds = 0;

  bool underpowered() const { return filtered && kept < min_kept; }
  bool complete() const { return kept >= target; }
  bool passed() const { return violations == 0 && !underpowered() && complete(); }
  std::string status() const {
    if (violations) return "FAIL";
    if (underpowered()) return "UNDERPOWERED";
    if (!complete()) return "INCOMPLETE";
    return "PASS";
  }

  std::string text(bool full = false) const {
    std::ostringstream o;
    o << "suite " << name << " seed=" << seed << "\n";
    o << "  instances: " << kept << " kept of " << attempts << " generated (target " << target << ")\n";
    if (filtered) {
      const double rate = attempts ? 100.0 * kept / attempts : 0.0;
      o << "  filter: " << filter << ", satisfied by " << kept << "/" << attempts << " (" << std::fixed;
      o.precision(1);
      o << rate << "%)\n";
      o.unsetf(std::ios::fixed);
    }
    o << "  checks: " << checks << ", violations: " << violations << "\n";
    for (const auto& [k, v] : counters) o << "  " << k << ": " << v << "\n";
    for (const auto& n : notes) o << "  note: " << n << "\n";
    const std::size_t shown = full ? failures.size() : std::min<std::size_t>(failures.size(), 3);
    for (std::size_t i = 0; i < shown; ++i) o << "  violation: " << failures[i] << "\n";
    if (shown < failures.size()) o << "  (" << failures.size() - shown << " more violations)\n";
    o << "  status: " << status() << "\n";
    return o.str();
  }

  nlohmann::json summary() const {
    nlohmann::json j;
    j["suite"] = name;
    j["seed"] = seed;
    j["target"] = target;
    j["generated"] = attempts;
    j["kept"] = kept;
    j["checks"] = checks;
    j["violations"] = violations;
    j["underpowered"] = underpowered();
    j["status"] = status();
    j["seconds"] = seconds;
    for (const auto& [k, v] : counters) j["counters"][k] = v;
    return j;
  }
};

namespace detail {

struct Instance {
  bool kept = false;
  long checks = 0;
  std::vector<std::string> violations;
  std::map<std::string, long> counters;
  /// Optional sample description surfaced as a report note.
  std::string example;

  void check(bool ok, const std::function<std::string()>& describe) {
    ++checks;
    if (!ok) violations.push_back(describe());
  }
};

using InstanceFn = std::function<Instance(std::uint64_t index, Rng& rng)>;

inline void parallel_for(std::size_t begin, std::size_t end, unsigned threads,
                         const std::function<void(std::size_t)>& body) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::size_t>(threads, end > begin ? end - begin : 1));
  std::atomic<std::size_t> next{begin};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= end) return;
      try {
        body(i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!error) error = std::current_exception();
        next.store(end);
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();
  if (error) std::rethrow_exception(error);
}

// Generates instances in batches until `target` of them are kept or the
// attempt budget is spent.  The kept set is the first `target` kept indices,
// so it does not depend on scheduling.
inline void run_instances(SuiteReport& rep, const GenConfig& cfg, int target, long max_attempts, const InstanceFn& fn) {
  const auto t0 = std::chrono::steady_clock::now();
  rep.seed = cfg.seed;
  rep.target = target;
  const std::size_t batch = static_cast<std::size_t>(std::max(64, target));
  std::size_t start = 0;
  while (rep.kept < target && static_cast<long>(start) < max_attempts) {
    const std::size_t end = std::min<std::size_t>(start + batch, static_cast<std::size_t>(max_attempts));
    std::vector<Instance> out(end - start);
    parallel_for(start, end, cfg.threads, [&](std::size_t i) {
      Rng rng(derive_seed(cfg.seed, i));
      out[i - start] = fn(i, rng);
    });
    for (std::size_t i = start; i < end && rep.kept < target; ++i) {
      Instance& r = out[i - start];
      ++rep.attempts;
      for (const auto& [k, v] : r.counters) rep.counters[k] += v;
      rep.checks += r.checks;
      rep.violations += static_cast<long>(r.violations.size());
      for (auto& v : r.violations) rep.failures.push_back("instance " + std::to_string(i) + ": " + v);
      if (r.kept) ++rep.kept;
      if (!r.example.empty() && rep.notes.empty()) rep.notes.push_back("instance " + std::to_string(i) + ": " + r.example);
    }
    start = end;
  }
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

inline long budget(const GenConfig& cfg) {
  return static_cast<long>(std::max(1, cfg.instances)) * std::max(1, cfg.attempts_per_instance);
}

inline Rat pick_delta(Rng& rng, const GenConfig& cfg) { return cfg.deltas[pick(rng, cfg.deltas.size())]; }

// A sampling period in the granularity set of f: its largest element divided
// by 1, 2 or 3; any pool value when f has no non-zero finite end-point.
inline Rat delta_in_D(Rng& rng, const GenConfig& cfg, const Formula& f) {
  if (auto m = max_D(f)) return *m / Rat(static_cast<long>(1 + pick(rng, 3)));
  return pick_delta(rng, cfg);
}

inline std::string show(const Formula& f) { return to_string(f); }
inline std::string show(const DenseBehavior& b) {
  std::string s = to_text(b);
  for (auto& c : s)
    if (c == '\n') c = ';';
  return s;
}
inline std::string show(const DiscreteBehavior& d) { return to_line(d); }

// Completions used by the inverse-sampling suites: the aligned one when it
// exists and distinct jittered ones.
inline std::vector<DenseBehavior> completions(const DiscreteBehavior& d, const SamplingParams& s, std::uint64_t seed,
                                              std::map<std::string, long>& counters) {
  std::vector<DenseBehavior> out = dense_completions(d, s, CompletionStrategy::aligned, 1);
  counters["completions aligned"] += static_cast<long>(out.size());
  for (auto& b : dense_completions(d, s, CompletionStrategy::jittered, 4, seed)) {
    if (std::find(out.begin(), out.end(), b) != out.end()) continue;
    out.push_back(std::move(b));
    ++counters["completions jittered"];
  }
  return out;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Individual suites.

/// Closure under sampling of adapt_R: every global dense model samples to a
/// global discrete model of the adapted formula, for several origins.  The
/// instant-wise statement behind it (truth at z + k delta carries over to k)
/// is measured on every generated instance and reported as a counter.
inline SuiteReport suite_cus(const GenConfig& cfg) {
  SuiteReport rep;
  rep.name = "cus";
  rep.filtered = true;
  rep.filter = "globally_sat_dense(phi, b)";
  GenConfig g = cfg;
  g.max_depth = std::min(cfg.max_depth, 1);
  detail::run_instances(rep, cfg, cfg.instances, detail::budget(cfg), [&](std::uint64_t, Rng& rng) {
    detail::Instance r;
    const Formula f = gen_flat_formula(rng, g, EndpointKind::dense);
    const Rat delta = detail::pick_delta(rng, cfg);
    const DenseBehavior b = gen_non_berkeley(rng, cfg, delta);
    const Formula a = adapt_R(f, delta);
    const bool global = globally_sat_dense(f, b);
    r.kept = global;
    const DenseBehavior tb = truth_behavior(f, b, "_phi");
    for (const Rat& z : gen_origins(rng, b, delta, cfg.origins)) {
      const SamplingParams s{delta, z};
      const DiscreteBehavior d = sample(b, s);
      const IntSet sat = sat_seq(a, d);
      const IntSet held = sample(tb, s).letter_set("_phi");
      ++r.counters["pointwise checks"];
      if (!held.minus(sat).is_empty()) {
        ++r.counters["pointwise losses"];
        if (r.example.empty())
          r.example = detail::show(f) + " delta=" + to_string(delta) + " z=" + to_string(z) + " b=" +
                      detail::show(b) + " lost at " + held.minus(sat).str();
      }
      if (global) {
        ++r.counters["origins checked"];
        r.check(sat.is_universe(), [&] {
          return detail::show(f) + " -> " + detail::show(a) + " delta=" + to_string(delta) + " z=" + to_string(z) +
                 " b=" + detail::show(b) + " sample=" + detail::show(d);
        });
      }
    }
    return r;
  });
  return rep;
}

/// Closure under inverse sampling of adapt_Z: every dense completion of a
/// global discrete model globally satisfies the adapted formula.
inline SuiteReport suite_cuis(const GenConfig& cfg) {
  SuiteReport rep;
  rep.name = "cuis";
  rep.filtered = true;
  rep.filter = "globally_sat_discrete(phi, d) with two or more completions";
  GenConfig g = cfg;
  g.max_depth = std::min(cfg.max_depth, 1);
  detail::run_instances(rep, cfg, cfg.instances, detail::budget(cfg), [&](std::uint64_t i, Rng& rng) {
    detail::Instance r;
    const Formula f = gen_flat_formula(rng, g, EndpointKind::discrete);
    const DiscreteBehavior d = gen_discrete(rng, cfg);
    if (!globally_sat_discrete(f, d)) return r;
    const Rat delta = detail::pick_delta(rng, cfg);
    const Rat z = delta * make_rat(static_cast<long>(detail::pick(rng, 4)), 4);
    const SamplingParams s{delta, z};
    const auto bs = detail::completions(d, s, derive_seed(cfg.seed ^ 0x5eed, i), r.counters);
    if (bs.size() < 2) return r;
    r.kept = true;
    const Formula a = adapt_Z(f, delta);
    for (const auto& b : bs) {
      r.check(globally_sat_dense(a, b), [&] {
        return detail::show(f) + " -> " + detail::show(a) + " d=" + detail::show(d) + " delta=" + to_string(delta) +
               " z=" + to_string(z) + " b=" + detail::show(b);
      });
    }
    return r;
  });
  return rep;
}

/// Under-approximation preserves counterexamples: samples of global dense
/// models globally satisfy under_approx.  Also checks that it coincides
/// with adapt_R inside the granularity set.
inline SuiteReport suite_under(const GenConfig& cfg) {
  SuiteReport rep;
  rep.name = "under";
  rep.filtered = true;
  rep.filter = "globally_sat_dense(phi, b)";
  GenConfig g = cfg;
  g.max_depth = std::min(cfg.max_depth, 1);
  detail::run_instances(rep, cfg, cfg.instances, detail::budget(cfg), [&](std::uint64_t, Rng& rng) {
    detail::Instance r;
    const Formula f = gen_flat_formula(rng, g, EndpointKind::dense);
    const Rat delta = detail::delta_in_D(rng, cfg, f);
    const Formula u = under_approx(f, delta);
    r.check(closed_integer_form(u) == closed_integer_form(adapt_R(f, delta)), [&] {
      return "under_approx differs from adapt_R: " + detail::show(f) + " delta=" + to_string(delta);
    });
    const DenseBehavior b = gen_non_berkeley(rng, cfg, delta);
    if (!globally_sat_dense(f, b)) return r;
    r.kept = true;
    for (const Rat& z : gen_origins(rng, b, delta, cfg.origins)) {
      const DiscreteBehavior d = sample(b, {delta, z});
      r.check(globally_sat_discrete(u, d), [&] {
        return detail::show(f) + " -> " + detail::show(u) + " delta=" + to_string(delta) + " z=" + to_string(z) +
               " b=" + detail::show(b);
      });
    }
    return r;
  });
  return rep;
}

/// Over-approximation preserves models: completions of a global discrete
/// model of over_approx globally satisfy the original formula.  On every
/// generated instance it also checks the chain adapt_Z(over_approx) => id
/// over the completions.
inline SuiteReport suite_over(const GenConfig& cfg) {
  SuiteReport rep;
  rep.name = "over";
  rep.filtered = true;
  rep.filter = "globally_sat_discrete(over_approx(phi), d) with a completion";
  GenConfig g = cfg;
  g.max_depth = std::min(cfg.max_depth, 1);
  detail::run_instances(rep, cfg, cfg.instances, detail::budget(cfg), [&](std::uint64_t i, Rng& rng) {
    detail::Instance r;
    const Formula f = gen_flat_formula(rng, g, EndpointKind::dense);
    const Rat delta = detail::delta_in_D(rng, cfg, f);
    const Formula o = over_approx(f, delta);
    const Formula back = adapt_Z(o, delta);
    const DiscreteBehavior d = gen_discrete(rng, cfg);
    const Rat z = delta * make_rat(static_cast<long>(detail::pick(rng, 3)), 3);
    const auto bs = detail::completions(d, {delta, z}, derive_seed(cfg.seed ^ 0x0e7e, i), r.counters);
    for (const auto& b : bs) {
      const bool strong = globally_sat_dense(back, b);
      const bool orig = globally_sat_dense(f, b);
      ++r.counters["chain checks"];
      r.check(!strong || orig, [&] {
        return "chain: " + detail::show(back) + " holds but " + detail::show(f) + " fails on " + detail::show(b);
      });
    }
    if (bs.empty() || !globally_sat_discrete(o, d)) return r;
    r.kept = true;
    for (const auto& b : bs) {
      r.check(globally_sat_dense(f, b), [&] {
        return detail::show(f) + " over " + detail::show(o) + " delta=" + to_string(delta) + " d=" +
               detail::show(d) + " b=" + detail::show(b);
      });
    }
    return r;
  });
  return rep;
}

/// Change-point lemma: around an instant where a propositional formula
/// holds there is a constancy interval of length at least delta whose ends
/// satisfy the boundary conditions.
inline SuiteReport suite_lemma28(const GenConfig& cfg) {
  SuiteReport rep;
  rep.name = "lemma28";
  rep.filtered = true;
  rep.filter = "pi holds at t";
  detail::run_instances(rep, cfg, cfg.instances, detail::budget(cfg), [&](std::uint64_t, Rng& rng) {
    detail::Instance r;
    const Rat delta = detail::pick_delta(rng, cfg);
    const DenseBehavior b = gen_non_berkeley(rng, cfg, delta);
    const Formula pi = detail::gen_propositional(rng, b.alphabet());
    const Rat t = gen_instant(rng, b, pi);
    const RealSet s = sat_set(pi, b);
    if (!s.contains(t)) return r;
    r.kept = true;
    const TimeInterval* comp = nullptr;
    for (const auto& c : s.components())
      if (c.contains(t)) comp = &c;
    Rat cp, cn;
    if (comp->lo.is_finite() && comp->hi.is_finite()) {
      cp = comp->lo.value();
      cn = comp->hi.value();
    } else if (comp->lo.is_finite()) {
      cp = comp->lo.value();
      cn = std::max<Rat>(t, cp + delta) + delta;
    } else if (comp->hi.is_finite()) {
      cn = comp->hi.value();
      cp = std::min<Rat>(t, cn - delta) - delta;
    } else {
      cp = t - delta;
      cn = t + delta;
    }
    auto where = [&] {
      return detail::show(pi) + " t=" + to_string(t) + " delta=" + to_string(delta) + " c_p=" + to_string(cp) +
             " c_n=" + to_string(cn) + " b=" + detail::show(b);
    };
    r.check(cn - cp >= delta && cp <= t && t <= cn, [&] { return "interval too short: " + where(); });
    const TimeInterval inside = TimeInterval::open(cp, cn);
    r.check(s.intersect(inside) == RealSet::of(inside), [&] { return "not constant inside: " + where(); });
    const TimeInterval window = TimeInterval::open(Rat(0), delta);
    const Formula at_n = disj(globally(window, negate(pi)), globally(TimeInterval::nonnegative(), pi));
    const Formula at_p = disj(globally_past(window, negate(pi)), globally_past(TimeInterval::nonnegative(), pi));
    r.check(eval_dense(at_n, b, cn), [&] { return "right boundary condition: " + where(); });
    r.check(eval_dense(at_p, b, cp), [&] { return "left boundary condition: " + where(); });
    if (cn - cp == delta) {
      r.check(s.contains(cn) && s.contains(cp), [&] { return "exact-length interval not closed: " + where(); });
      ++r.counters["exact-length intervals"];
    }
    return r;
  });
  return rep;
}

/// Shiftability of qualitative formulas: the truth behaviour of an LTL
/// formula over a non-Berkeley behaviour stays non-Berkeley and changes only
/// where the behaviour does.  Also confirms that the transition detector of
/// the non-flattenable example is not shiftable.
inline SuiteReport suite_shiftability(const GenConfig& cfg) {
  SuiteReport rep;
  rep.name = "shiftability";
  detail::run_instances(rep, cfg, cfg.instances, detail::budget(cfg), [&](std::uint64_t i, Rng& rng) {
    detail::Instance r;
    r.kept = true;
    const Formula f = gen_ltl(rng, cfg, 1 + static_cast<int>(i % 2));
    const Rat eps = detail::pick_delta(rng, cfg);
    const DenseBehavior b = gen_non_berkeley(rng, cfg, eps);
    r.check(check_shiftable_on(f, b, eps), [&] {
      return detail::show(f) + " eps=" + to_string(eps) + " b=" + detail::show(b);
    });
    const DenseBehavior tb = truth_behavior(f, b, "_phi");
    bool subset = true;
    for (const auto& x : tb.points())
      if (!std::binary_search(b.points().begin(), b.points().end(), x)) subset = false;
    r.check(subset, [&] { return "new change instant: " + detail::show(f) + " b=" + detail::show(b); });
    return r;
  });
  const Formula lambda = parse_formula("upto(!p) & now(p)");
  const Alphabet ap(std::vector<std::string>{"p"});
  const DenseBehavior step(ap, {Rat(0)}, {0}, {0, 1});
  for (const auto& eps : cfg.deltas) {
    const bool shiftable = check_shiftable_on(lambda, step, eps);
    ++rep.checks;
    ++rep.counters["non-shiftable witness checks"];
    if (shiftable) {
      ++rep.violations;
      rep.failures.push_back("upto(!p) & now(p) reported shiftable on the step at eps=" + to_string(eps));
    }
  }
  rep.notes.push_back("upto(!p) & now(p) holds only at the switching instant of the step behaviour");
  return rep;
}

/// Table of approximations for the incompleteness example at delta = 1/k:
/// the raw approximations agree with their simplified forms on random
/// discrete behaviours (the system formula under global satisfaction).
inline SuiteReport suite_table3(const GenConfig& cfg) {
  SuiteReport rep;
  rep.name = "table3";
  const Formula sys1 = parse_formula("Som(p) & Som(!p)");
  const Formula sys2 = parse_formula("p -> G(p)");
  const Formula prop = parse_formula("p -> F[1,1](p)");
  const Formula both_tails = parse_formula("Alw(p) | Alw(!p)");
  const Alphabet ap(std::vector<std::string>{"p"});
  GenConfig g = cfg;
  g.alphabet_size = 1;
  long o1_mismatch = 0;
  for (long k = 1; k <= 3; ++k) {
    const Rat delta = make_rat(1, k);
    const Formula o2 = over_approx(sys2, delta);
    const Formula oprop = over_approx(prop, delta);
    const Formula o1 = over_approx(sys1, delta);
    const Formula w1 = under_approx(sys1, delta), w2 = under_approx(sys2, delta), wprop = under_approx(prop, delta);
    const Formula wprop_simple = implies(parse_formula("p"), eventually(TimeInterval::point(Rat(k)), parse_formula("p")));
    SuiteReport part;
    detail::run_instances(part, cfg, cfg.instances, cfg.instances, [&](std::uint64_t, Rng& rng) {
      detail::Instance r;
      r.kept = true;
      const DiscreteBehavior d = gen_discrete(rng, g, 8, ap);
      auto same = [&](const Formula& x, const Formula& y, const char* what) {
        r.check(sat_seq(x, d) == sat_seq(y, d), [&] {
          return std::string(what) + " at delta=1/" + std::to_string(k) + ": " + detail::show(x) + " vs " +
                 detail::show(y) + " on " + detail::show(d);
        });
      };
      same(always(o2), always(both_tails), "O[sys2] under Alw");
      same(oprop, parse_formula("!p"), "O[prop]");
      same(w1, sys1, "Omega[sys1]");
      same(w2, sys2, "Omega[sys2]");
      same(wprop, wprop_simple, "Omega[prop]");
      if (sat_seq(always(o1), d) != sat_seq(always(sys1), d)) ++r.counters["O[sys1] differs under Alw"];
      return r;
    });
    rep.attempts += part.attempts;
    rep.kept += part.kept;
    rep.checks += part.checks;
    rep.violations += part.violations;
    rep.failures.insert(rep.failures.end(), part.failures.begin(), part.failures.end());
    for (const auto& [c, v] : part.counters) rep.counters[c] += v;
    o1_mismatch += part.counters["O[sys1] differs under Alw"];
    rep.seconds += part.seconds;
  }
  rep.seed = cfg.seed;
  rep.target = 3 * cfg.instances;
  rep.counters.erase("O[sys1] differs under Alw");
  rep.notes.push_back("raw O[Som(p) & Som(!p)] asks for witnesses at other instants; it differs from Som(p) & Som(!p) "
                      "under Alw on " + std::to_string(o1_mismatch) + " behaviours (p or !p at a single instant)");
  return rep;
}

namespace detail {

inline SuiteReport verdict_suite(const std::string& name, const GenConfig& cfg,
                                 const std::vector<std::tuple<Rat, SystemSpec, int, Outcome>>& cases) {
  SuiteReport rep;
  rep.name = name;
  rep.seed = cfg.seed;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& [delta, spec, k, want] : cases) {
    const Verdict v = mtl_verify(delta, spec, k);
    ++rep.attempts;
    ++rep.kept;
    ++rep.checks;
    std::string line = "delta=" + to_string(delta) + " -> " + v.summary();
    if (!v.over_check.valid) line += ", over-model witness " + to_line(*v.over_check.witness);
    if (v.under_check) line += v.under_check->valid ? ", under-model valid" : ", under-model invalid";
    rep.notes.push_back(line);
    if (v.outcome != want) {
      ++rep.violations;
      rep.failures.push_back("expected " + std::string(outcome_name(want)) + ": " + line);
    }
  }
  rep.target = rep.kept;
  rep.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return rep;
}

}  // namespace detail

/// The incompleteness example fails for every tried sampling period.
inline SuiteReport suite_example44(const GenConfig& cfg) {
  const auto spec = make_spec({parse_formula("Som(p) & Som(!p)"), parse_formula("p -> G(p)")},
                              parse_formula("p -> F[1,1](p)"));
  std::vector<std::tuple<Rat, SystemSpec, int, Outcome>> cases;
  for (long k : {1, 2, 3})
    for (int bound : {3, 5}) cases.emplace_back(make_rat(1, k), spec, bound, Outcome::fail);
  return detail::verdict_suite("example44", cfg, cases);
}

/// The rewritten system is verified; random dense models of the system are
/// checked against the property as a spot check of the soundness claim.
inline SuiteReport suite_example45(const GenConfig& cfg) {
  std::vector<std::tuple<Rat, SystemSpec, int, Outcome>> cases;
  for (long k : {1, 2, 3}) {
    const Rat delta = make_rat(1, k);
    const Formula psi2 = implies(prop("p"), globally(TimeInterval::make(delta, true, Bound::pos_inf(), false), prop("p")));
    cases.emplace_back(delta, make_spec({parse_formula("Som(p) & Som(!p)"), psi2}, parse_formula("p -> G[1,1](p)")), 5,
                       Outcome::verified);
  }
  SuiteReport rep = detail::verdict_suite("example45", cfg, cases);
  const Alphabet ap(std::vector<std::string>{"p"});
  long models = 0, samples = 0;
  for (const auto& [delta, spec, k, want] : cases) {
    (void)k;
    (void)want;
    for (int i = 0; i < std::max(cfg.instances, 1); ++i) {
      Rng rng(derive_seed(cfg.seed, static_cast<std::uint64_t>(i)));
      const DenseBehavior b = gen_non_berkeley(rng, cfg, delta, ap);
      ++samples;
      bool sys = true;
      for (const auto& f : spec.sys) sys = sys && globally_sat_dense(f, b);
      if (!sys) continue;
      ++models;
      ++rep.checks;
      if (!globally_sat_dense(spec.prop, b)) {
        ++rep.violations;
        rep.failures.push_back("dense model of the system violates the property: " + detail::show(b));
      }
    }
  }
  rep.counters["dense system models checked"] = models;
  rep.counters["dense behaviours drawn"] = samples;
  return rep;
}

/// sat sets of a formula and of its negation partition the time line.
inline SuiteReport suite_complement(const GenConfig& cfg) {
  SuiteReport rep;
  rep.name = "complement";
  detail::run_instances(rep, cfg, cfg.instances, detail::budget(cfg), [&](std::uint64_t i, Rng& rng) {
    detail::Instance r;
    r.kept = true;
    const int depth = 1 + static_cast<int>(i % 2);
    if (i % 2 == 0) {
      const Formula f = gen_formula(rng, cfg, depth);
      const DenseBehavior b = gen_non_berkeley(rng, cfg, detail::pick_delta(rng, cfg));
      const RealSet s = sat_set(f, b), n = sat_set(negate(f), b);
      ++r.counters["dense"];
      r.check(n == s.complement() && s.intersect(n).is_empty(),
              [&] { return "dense: " + detail::show(f) + " b=" + detail::show(b); });
    } else {
      const Formula f = gen_formula(rng, cfg, depth, EndpointKind::discrete);
      const DiscreteBehavior d = gen_discrete(rng, cfg);
      const IntSet s = sat_seq(f, d), n = sat_seq(negate(f), d);
      ++r.counters["discrete"];
      r.check(n == s.complement() && s.intersect(n).is_empty(),
              [&] { return "discrete: " + detail::show(f) + " d=" + detail::show(d); });
    }
    return r;
  });
  return rep;
}

/// The set-based dense evaluator against the pointwise grid oracle.
inline SuiteReport suite_oracle(const GenConfig& cfg) {
  SuiteReport rep;
  rep.name = "oracle";
  detail::run_instances(rep, cfg, cfg.instances, detail::budget(cfg), [&](std::uint64_t i, Rng& rng) {
    detail::Instance r;
    r.kept = true;
    const Formula f = gen_formula(rng, cfg, 1 + static_cast<int>(i % 2));
    const DenseBehavior b = gen_non_berkeley(rng, cfg, detail::pick_delta(rng, cfg));
    const Rat t = gen_instant(rng, b, f);
    const bool fast = eval_dense(f, b, t);
    const bool slow = grid_oracle_dense(f, b, t);
    ++r.counters[slow ? "true instances" : "false instances"];
    r.check(fast == slow, [&] {
      return detail::show(f) + " t=" + to_string(t) + " b=" + detail::show(b) + " evaluator=" + (fast ? "1" : "0");
    });
    return r;
  });
  return rep;
}

inline const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cus",      "cuis",      "lemma28",   "shiftability", "under",
                                              "over",     "table3",    "example44", "example45",    "complement",
                                              "oracle"};
  return names;
}

inline SuiteReport run_suite(const std::string& name, const GenConfig& cfg) {
  cfg.validate();
  if (name == "cus") return suite_cus(cfg);
  if (name == "cuis") return suite_cuis(cfg);
  if (name == "lemma28") return suite_lemma28(cfg);
  if (name == "shiftability") return suite_shiftability(cfg);
  if (name == "under") return suite_under(cfg);
  if (name == "over") return suite_over(cfg);
  if (name == "table3") return suite_table3(cfg);
  if (name == "example44") return suite_example44(cfg);
  if (name == "example45") return suite_example45(cfg);
  if (name == "complement") return suite_complement(cfg);
  if (name == "oracle") return suite_oracle(cfg);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

}  // namespace mtlsample
