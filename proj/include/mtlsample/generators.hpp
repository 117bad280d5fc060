#pragma once

// Seeded random generators for formulas and behaviours.

#include "mtlsample/behavior.hpp"
#include "mtlsample/formula.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtlsample {

using Rng = std::mt19937_64;

struct GenConfig {
  std::uint64_t seed = 1;
  int alphabet_size = 2;  // at most 3
  int max_depth = 1;      // at most 2
  std::vector<Rat> endpoints{make_rat(0), make_rat(1, 2), make_rat(1), make_rat(3, 2), make_rat(2), make_rat(3)};
  std::vector<Rat> deltas{make_rat(1), make_rat(1, 2), make_rat(1, 3)};
  int max_segments = 6;  // at most 8
  int instances = 200;
  /// Generation attempts allowed per requested kept instance.
  int attempts_per_instance = 60;
  int origins = 3;
  bool matching = true;
  unsigned threads = 0;

  void validate() const {
    if (alphabet_size < 1 || alphabet_size > 3) throw std::invalid_argument("alphabet size must be 1..3");
    if (max_depth < 0 || max_depth > 2) throw std::invalid_argument("max depth must be 0..2");
    if (endpoints.empty() || deltas.empty()) throw std::invalid_argument("endpoint and delta pools must be nonempty");
    for (const auto& d : deltas)
      if (d <= 0) throw std::invalid_argument("delta values must be positive");
    if (max_segments < 1 || max_segments > 8) throw std::invalid_argument("segment count must be 1..8");
    if (instances < 0) throw std::invalid_argument("instance count must be non-negative");
  }
};

/// splitmix64; derives independent per-instance seeds from a master seed.
inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  std::uint64_t z = master + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline Alphabet gen_alphabet(int n) {
  static const char* names[] = {"p", "q", "r"};
  std::vector<std::string> v(names, names + n);
  return Alphabet(v);
}

enum class EndpointKind { dense, discrete };

namespace detail {

inline std::size_t pick(Rng& rng, std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); }
inline bool coin(Rng& rng, int num = 1, int den = 2) {
  return std::uniform_int_distribution<int>(0, den - 1)(rng) < num;
}

inline Formula gen_literal(Rng& rng, const Alphabet& ap) {
  const std::string& l = ap.names()[pick(rng, ap.size())];
  return coin(rng) ? prop(l) : neg_prop(l);
}

inline Formula gen_propositional(Rng& rng, const Alphabet& ap) {
  if (coin(rng, 2, 3)) return gen_literal(rng, ap);
  Formula a = gen_literal(rng, ap), b = gen_literal(rng, ap);
  return coin(rng) ? conj(a, b) : disj(a, b);
}

inline std::vector<Rat> endpoint_pool(const GenConfig& cfg, EndpointKind kind) {
  if (kind == EndpointKind::dense) return cfg.endpoints;
  std::vector<Rat> v;
  for (const auto& e : cfg.endpoints)
    if (is_integer(e)) v.push_back(e);
  if (v.empty()) v = {Rat(0), Rat(1), Rat(2)};
  return v;
}

inline TimeInterval gen_interval(Rng& rng, const std::vector<Rat>& pool) {
  Rat a = pool[pick(rng, pool.size())], b = pool[pick(rng, pool.size())];
  if (b < a) std::swap(a, b);
  const bool unbounded = coin(rng, 1, 4);
  const bool lc = coin(rng), hc = coin(rng);
  if (unbounded) return TimeInterval::make(a, lc, Bound::pos_inf(), false);
  if (a == b) return TimeInterval::point(a);
  return TimeInterval::make(a, lc, b, hc);
}

inline Formula gen_modality(Rng& rng, const GenConfig& cfg, const std::vector<Rat>& pool, const Formula& a,
                            const Formula& b) {
  const TimeInterval iv = gen_interval(rng, pool);
  switch (pick(rng, 8)) {
    case 0: return eventually(iv, b);
    case 1: return globally(iv, b);
    case 2: return eventually_past(iv, b);
    case 3: return globally_past(iv, b);
    default: {
      static const Kind kinds[] = {Kind::until, Kind::since, Kind::release, Kind::trigger};
      return modality(kinds[pick(rng, 4)], iv, a, b, cfg.matching && coin(rng, 1, 3));
    }
  }
}

inline Formula combine(Rng& rng, std::vector<Formula> atoms) {
  Formula f = atoms.front();
  for (std::size_t i = 1; i < atoms.size(); ++i) f = coin(rng) ? conj(f, atoms[i]) : disj(f, atoms[i]);
  return f;
}

}  // namespace detail

/// Flat formula in negation normal form: a boolean combination of one to
/// three atoms, each a literal or a modality over propositional arguments.
inline Formula gen_flat_formula(Rng& rng, const GenConfig& cfg, EndpointKind kind) {
  const Alphabet ap = gen_alphabet(cfg.alphabet_size);
  if (cfg.max_depth == 0) return detail::gen_propositional(rng, ap);
  const auto pool = detail::endpoint_pool(cfg, kind);
  const std::size_t n = 1 + detail::pick(rng, 3);
  std::vector<Formula> atoms;
  bool temporal = false;
  for (std::size_t i = 0; i < n; ++i) {
    const bool literal = (temporal || i + 1 < n) && detail::coin(rng, 1, 3);
    if (literal) {
      atoms.push_back(detail::gen_literal(rng, ap));
    } else {
      atoms.push_back(detail::gen_modality(rng, cfg, pool, detail::gen_propositional(rng, ap),
                                           detail::gen_propositional(rng, ap)));
      temporal = true;
    }
  }
  return detail::combine(rng, atoms);
}

/// Formula of temporal depth at most `depth`, nesting allowed.
inline Formula gen_formula(Rng& rng, const GenConfig& cfg, int depth, EndpointKind kind = EndpointKind::dense) {
  const Alphabet ap = gen_alphabet(cfg.alphabet_size);
  const auto pool = detail::endpoint_pool(cfg, kind);
  std::function<Formula(int)> go = [&](int d) -> Formula {
    if (d == 0 || detail::coin(rng, 1, 4)) return detail::gen_propositional(rng, ap);
    if (detail::coin(rng, 1, 4)) {
      Formula a = go(d), b = go(d - 1);
      return detail::coin(rng) ? conj(a, b) : disj(a, b);
    }
    return detail::gen_modality(rng, cfg, pool, go(d - 1), go(d - 1));
  };
  return go(depth);
}

/// Qualitative formula (every interval is [0, inf)) of depth at most `depth`.
inline Formula gen_ltl(Rng& rng, const GenConfig& cfg, int depth) {
  const Alphabet ap = gen_alphabet(cfg.alphabet_size);
  const TimeInterval q = TimeInterval::nonnegative();
  std::function<Formula(int)> go = [&](int d) -> Formula {
    if (d == 0 || detail::coin(rng, 1, 5)) return detail::gen_propositional(rng, ap);
    if (detail::coin(rng, 1, 5)) {
      Formula a = go(d), b = go(d - 1);
      return detail::coin(rng) ? conj(a, b) : disj(a, b);
    }
    Formula a = go(d - 1), b = go(d - 1);
    switch (detail::pick(rng, 10)) {
      case 0: return eventually(q, b);
      case 1: return globally(q, b);
      case 2: return eventually_past(q, b);
      case 3: return globally_past(q, b);
      case 4: return until(q, a, b, true);
      case 5: return release(q, a, b);
      case 6: return since(q, a, b);
      case 7: return trigger(q, a, b);
      case 8: return until(q, a, b);
      default: return since(q, a, b, true);
    }
  };
  return go(depth);
}

/// Non-Berkeley dense behaviour for `delta` with 1..max_segments maximal
/// segments.  Segment lengths are at least delta, and a segment of length
/// exactly delta owns both of its end-points.
inline DenseBehavior gen_non_berkeley(Rng& rng, const GenConfig& cfg, const Rat& delta,
                                      std::optional<Alphabet> alphabet = std::nullopt) {
  if (delta <= 0) throw std::invalid_argument("delta must be positive");
  const Alphabet ap = alphabet ? *alphabet : gen_alphabet(cfg.alphabet_size);
  const std::size_t nseg = 1 + detail::pick(rng, static_cast<std::size_t>(cfg.max_segments));
  std::vector<Valuation> vals{static_cast<Valuation>(detail::pick(rng, ap.full() + 1))};
  while (vals.size() < nseg) {
    if (ap.full() == 0) break;
    Valuation v = static_cast<Valuation>(detail::pick(rng, ap.full()));
    if (v >= vals.back()) ++v;  // uniform over the values other than the last one
    vals.push_back(v);
  }
  if (vals.size() == 1) return DenseBehavior(ap, vals.front());

  // bounded inner segments 1..n-2; lengths delta * (1 + extra)
  static const long extras[][2] = {{0, 1}, {0, 1}, {1, 4}, {1, 3}, {1, 2}, {1, 1}, {2, 1}, {3, 7}};
  const std::size_t inner = vals.size() - 2;
  std::vector<Rat> len(inner);
  for (auto& l : len) {
    const auto& e = extras[detail::pick(rng, 8)];
    l = delta * (1 + make_rat(e[0], e[1]));
  }
  // two adjacent exact segments cannot both own the shared point
  for (std::size_t i = 1; i < inner; ++i)
    if (len[i] == delta && len[i - 1] == delta) len[i] += delta / 2;

  const long den = static_cast<long>(1 + detail::pick(rng, 4));
  Rat start = make_rat(static_cast<long>(detail::pick(rng, 8 * den + 1)) - 4 * den, den);
  std::vector<Rat> pts{start};
  for (const auto& l : len) pts.push_back(pts.back() + l);

  // owner[i]: whether boundary i belongs to the segment on its left
  std::vector<bool> owner(pts.size());
  for (std::size_t i = 0; i < pts.size(); ++i) owner[i] = detail::coin(rng);
  for (std::size_t s = 0; s < inner; ++s) {
    if (len[s] == delta) {
      owner[s] = false;     // left end, boundary s, owned by the segment on its right
      owner[s + 1] = true;  // right end owned by the segment on its left
    }
  }
  std::vector<Valuation> at(pts.size()), gaps(vals.begin(), vals.end());
  for (std::size_t i = 0; i < pts.size(); ++i) at[i] = owner[i] ? vals[i] : vals[i + 1];
  DenseBehavior b(ap, pts, at, gaps);
  if (!is_non_berkeley(b, delta)) throw std::logic_error("generated behaviour is not non-Berkeley");
  return b;
}

/// Discrete behaviour with a core of up to `max_core` instants near 0.
inline DiscreteBehavior gen_discrete(Rng& rng, const GenConfig& cfg, std::size_t max_core = 6,
                                     std::optional<Alphabet> alphabet = std::nullopt) {
  const Alphabet ap = alphabet ? *alphabet : gen_alphabet(cfg.alphabet_size);
  auto val = [&]() { return static_cast<Valuation>(detail::pick(rng, ap.full() + 1)); };
  const std::size_t n = detail::pick(rng, max_core + 1);
  std::vector<Valuation> core(n);
  for (auto& v : core) v = val();
  const std::int64_t k0 = static_cast<std::int64_t>(detail::pick(rng, 5)) - 3;
  return DiscreteBehavior(ap, val(), k0, std::move(core), val());
}

/// Sampling origins: 0, delta/2, and random rationals in [0, delta), one of
/// them aligned with a change instant of b when b has one.
inline std::vector<Rat> gen_origins(Rng& rng, const DenseBehavior& b, const Rat& delta, int count) {
  std::vector<Rat> zs{Rat(0), delta / 2};
  if (!b.points().empty()) {
    const Rat t = b.points()[detail::pick(rng, b.points().size())];
    zs.push_back(t - delta * Rat(floor_of(Rat(t / delta))));
  }
  while (static_cast<int>(zs.size()) < count || zs.size() < 3) {
    const long den = static_cast<long>(2 + detail::pick(rng, 6));
    zs.push_back(delta * make_rat(static_cast<long>(detail::pick(rng, static_cast<std::size_t>(den))), den));
  }
  std::sort(zs.begin(), zs.end());
  zs.erase(std::unique(zs.begin(), zs.end()), zs.end());
  while (static_cast<int>(zs.size()) < std::max(count, 3)) zs.push_back(zs.back() + delta / 7);
  return zs;
}

/// Candidate evaluation instants: change instants, their shifts by interval
/// end-points, midpoints and a few random rationals.
inline Rat gen_instant(Rng& rng, const DenseBehavior& b, const Formula& f) {
  std::vector<Rat> shifts{Rat(0)};
  for_each_interval(core(f), [&](const TimeInterval& i) {
    for (const Bound* x : {&i.lo, &i.hi})
      if (x->is_finite()) {
        shifts.push_back(x->value());
        shifts.push_back(-x->value());
      }
  });
  const auto& pts = b.points();
  switch (detail::pick(rng, 4)) {
    case 0:
      if (!pts.empty()) return pts[detail::pick(rng, pts.size())] + shifts[detail::pick(rng, shifts.size())];
      break;
    case 1:
      if (pts.size() >= 2) {
        const std::size_t i = detail::pick(rng, pts.size() - 1);
        return midpoint(pts[i], pts[i + 1]) + shifts[detail::pick(rng, shifts.size())];
      }
      break;
    case 2:
      if (!pts.empty()) return pts[detail::pick(rng, pts.size())] + shifts[detail::pick(rng, shifts.size())] / 2;
      break;
    default: break;
  }
  const long den = static_cast<long>(1 + detail::pick(rng, 6));
  return make_rat(static_cast<long>(detail::pick(rng, static_cast<std::size_t>(16 * den + 1))) - 8 * den, den);
}

}  // namespace mtlsample
