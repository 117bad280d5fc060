#pragma once

// Verification by discretisation.  The system formulas and the property are
// turned into a discrete-time over-model and under-model; validity of the
// over-model proves the dense-time property, invalidity of the under-model
// refutes it.  Discrete validity is decided by exhaustive enumeration of
// eventually constant behaviours up to a core length bound.

#include "mtlsample/behavior.hpp"
#include "mtlsample/formula.hpp"
#include "mtlsample/formula_io.hpp"
#include "mtlsample/semantics.hpp"
#include "mtlsample/transform.hpp"

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <limits>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace mtlsample {

struct SystemSpec {
  std::vector<Formula> sys;
  Formula prop;
  Alphabet alphabet;

  std::vector<Formula> all() const {
    std::vector<Formula> v = sys;
    v.push_back(prop);
    return v;
  }
};

/// A spec whose alphabet is every letter used by its formulas.
inline SystemSpec make_spec(std::vector<Formula> sys, Formula prop) {
  std::set<std::string> names = letters(prop);
  for (const auto& f : sys) {
    auto l = letters(f);
    names.insert(l.begin(), l.end());
  }
  SystemSpec s{std::move(sys), std::move(prop), Alphabet(std::vector<std::string>(names.begin(), names.end()))};
  return s;
}

struct Models {
  Formula over;
  Formula under;
};

/// Over-model: the under-approximated system implies the over-approximated
/// property.  Under-model: the other way round.  Both are global: every
/// conjunct is wrapped in Alw.
inline Models build_models(const SystemSpec& spec, const Rat& delta) {
  if (delta <= 0) throw std::invalid_argument("delta must be positive");
  if (!in_D(spec.all(), delta))
    throw std::domain_error("sampling period " + to_string(delta) +
                            " does not divide every non-zero endpoint of the system and property");
  std::vector<Formula> omega_sys, o_sys;
  for (const auto& f : spec.sys) {
    omega_sys.push_back(always(under_approx(f, delta)));
    o_sys.push_back(always(over_approx(f, delta)));
  }
  Formula o_prop = always(over_approx(spec.prop, delta));
  Formula omega_prop = always(under_approx(spec.prop, delta));
  if (spec.sys.empty()) return {o_prop, omega_prop};
  return {implies(conj_all(omega_sys), o_prop), implies(conj_all(o_sys), omega_prop)};
}

struct ZValidResult {
  bool valid = true;
  int bound = 0;
  /// First falsifying behaviour in enumeration order, when invalid.
  std::optional<DiscreteBehavior> witness;
  /// Instant of the witness where the formula is false, closest to 0.
  std::int64_t instant = 0;
};

namespace detail {

inline std::int64_t closest_to_zero(const IntSet& s) {
  std::int64_t best = 0;
  bool have = false;
  auto consider = [&](std::int64_t k) {
    if (!have || std::llabs(k) < std::llabs(best) || (std::llabs(k) == std::llabs(best) && k < best)) best = k;
    have = true;
  };
  for (const auto& c : s.components()) {
    if (c.contains(0)) return 0;
    if (c.hi.is_finite() && c.hi.v < 0) consider(c.hi.v);
    if (c.lo.is_finite() && c.lo.v > 0) consider(c.lo.v);
  }
  if (!have) throw std::logic_error("empty set has no closest instant");
  return best;
}

// Enumerates the cores of one shard: fixed length and left tail, every right
// tail, all core words in lexicographic order.  Non-canonical cores are
// skipped since a shift of their canonical form was met at a shorter length.
inline std::optional<std::pair<DiscreteBehavior, std::int64_t>> scan_shard(const Formula& f, const Alphabet& p,
                                                                            int len, Valuation left,
                                                                            const std::atomic<bool>& stop) {
  const Valuation nvals = p.full() + 1;
  std::vector<Valuation> core(static_cast<std::size_t>(len), 0);
  for (Valuation right = 0; right < nvals; ++right) {
    std::fill(core.begin(), core.end(), 0);
    while (true) {
      if (stop.load(std::memory_order_relaxed)) return std::nullopt;
      const bool canonical = len == 0 || (core.front() != left && core.back() != right);
      if (canonical) {
        DiscreteBehavior d(p, left, 0, core, right);
        IntSet sat = sat_seq(f, d);
        if (!sat.is_universe()) return std::make_pair(d, closest_to_zero(sat.complement()));
      }
      // next word, last position fastest
      int i = len - 1;
      while (i >= 0 && core[static_cast<std::size_t>(i)] + 1 == nvals) core[static_cast<std::size_t>(i--)] = 0;
      if (i < 0) break;
      ++core[static_cast<std::size_t>(i)];
    }
  }
  return std::nullopt;
}

}  // namespace detail

/// Bounded validity over discrete time: every eventually constant behaviour
/// over `p` whose core (anchored at 0) has at most `bound` instants is
/// checked.  The reported witness is the first one in the fixed enumeration
/// order (core length, left tail, right tail, core word), independent of the
/// number of threads.
inline ZValidResult z_valid(const Formula& f, const Alphabet& p, int bound, unsigned threads = 0) {
  if (bound < 0) throw std::invalid_argument("bound must be non-negative");
  for (const auto& l : letters(f))
    if (!p.contains(l)) throw std::invalid_argument("letter '" + l + "' is not in the alphabet");
  if (p.size() > 8) throw std::invalid_argument("enumeration supports at most 8 letters");
  require_discrete_endpoints(f);

  struct Shard {
    int len;
    Valuation left;
  };
  std::vector<Shard> shards;
  for (int len = 0; len <= bound; ++len)
    for (Valuation left = 0; left <= p.full(); ++left) shards.push_back({len, left});

  std::vector<std::optional<std::pair<DiscreteBehavior, std::int64_t>>> found(shards.size());
  std::vector<std::atomic<bool>> stop(shards.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_hit{std::numeric_limits<std::size_t>::max()};

  auto worker = [&]() {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= shards.size() || i > first_hit.load()) return;
      auto r = detail::scan_shard(f, p, shards[i].len, shards[i].left, stop[i]);
      if (r) {
        found[i] = std::move(r);
        std::size_t cur = first_hit.load();
        while (i < cur && !first_hit.compare_exchange_weak(cur, i)) {
        }
        // later shards cannot contribute the first witness any more
        for (std::size_t j = i + 1; j < shards.size(); ++j) stop[j].store(true);
      }
    }
  };
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(shards.size()));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  ZValidResult res;
  res.bound = bound;
  const std::size_t hit = first_hit.load();
  if (hit < shards.size()) {
    res.valid = false;
    res.witness = found[hit]->first;
    res.instant = found[hit]->second;
  }
  return res;
}

enum class Outcome { verified, refuted, fail };

inline const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::verified: return "verified";
    case Outcome::refuted: return "refuted";
    default: return "fail";
  }
}

struct Verdict {
  Outcome outcome = Outcome::fail;
  int bound = 0;
  /// "bounded" for verified and fail, "exhaustive-at-bound" for refuted.
  std::string qualifier;
  Models models;
  ZValidResult over_check;
  std::optional<ZValidResult> under_check;
  /// Present exactly when refuted: a model of every over-approximated
  /// system formula falsifying the under-approximated property at `instant`.
  std::optional<DiscreteBehavior> counterexample;
  std::int64_t instant = 0;

  std::string summary() const {
    return std::string(outcome_name(outcome)) + " (" + qualifier + ", k=" + std::to_string(bound) + ")";
  }
};

/// Default core bound: three times one plus the largest endpoint magnitude
/// occurring in the two models.
inline int default_bound(const Models& m) {
  const Rat e = std::max(max_endpoint_magnitude(m.over), max_endpoint_magnitude(m.under));
  return static_cast<int>(3 * (1 + to_int64(ceil_of(e))));
}

inline void require_flat(const SystemSpec& spec) {
  for (const auto& f : spec.all())
    if (!is_flat(f)) throw std::invalid_argument("formula is not flat: " + to_string(f));
}

inline Verdict mtl_verify(const Rat& delta, const SystemSpec& spec, std::optional<int> bound = std::nullopt,
                          unsigned threads = 0) {
  require_flat(spec);
  Verdict v;
  v.models = build_models(spec, delta);
  v.bound = bound ? *bound : default_bound(v.models);
  if (v.bound <= 0) throw std::invalid_argument("bound must be positive");
  v.over_check = z_valid(v.models.over, spec.alphabet, v.bound, threads);
  if (v.over_check.valid) {
    v.outcome = Outcome::verified;
    v.qualifier = "bounded";
    return v;
  }
  v.under_check = z_valid(v.models.under, spec.alphabet, v.bound, threads);
  if (!v.under_check->valid) {
    v.outcome = Outcome::refuted;
    v.qualifier = "exhaustive-at-bound";
    v.counterexample = v.under_check->witness;
    const IntSet bad = sat_seq(under_approx(spec.prop, delta), *v.counterexample).complement();
    v.instant = detail::closest_to_zero(bad);
    return v;
  }
  v.outcome = Outcome::fail;
  v.qualifier = "bounded";
  return v;
}

}  // namespace mtlsample
