#pragma once

// Piecewise-constant dense-time behaviours and eventually-constant
// discrete-time behaviours, canonical sampling between them, and generation
// of dense behaviours that sample to a given discrete one.

#include "mtlsample/sets.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace mtlsample {

/// A set of letters, bit i standing for alphabet()[i].
using Valuation = std::uint32_t;

class Alphabet {
 public:
  Alphabet() = default;
  explicit Alphabet(std::vector<std::string> names) : names_(std::move(names)) {
    std::sort(names_.begin(), names_.end());
    names_.erase(std::unique(names_.begin(), names_.end()), names_.end());
    if (names_.size() > 32) throw std::invalid_argument("at most 32 letters are supported");
  }
  template <class It>
  Alphabet(It first, It last) : Alphabet(std::vector<std::string>(first, last)) {}

  const std::vector<std::string>& names() const { return names_; }
  std::size_t size() const { return names_.size(); }
  /// Index of a letter, or -1.
  int index(const std::string& name) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), name);
    if (it == names_.end() || *it != name) return -1;
    return static_cast<int>(it - names_.begin());
  }
  bool contains(const std::string& name) const { return index(name) >= 0; }
  Valuation full() const { return names_.size() == 32 ? ~Valuation{0} : ((Valuation{1} << names_.size()) - 1); }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

  std::string format(Valuation v) const {
    std::string s = "{";
    bool first = true;
    for (std::size_t i = 0; i < names_.size(); ++i) {
      if (v & (Valuation{1} << i)) {
        if (!first) s += ' ';
        s += names_[i];
        first = false;
      }
    }
    return s + "}";
  }

 private:
  std::vector<std::string> names_;
};

struct Segment {
  TimeInterval interval;
  Valuation value = 0;
  friend bool operator==(const Segment&, const Segment&) = default;
};

enum class Discontinuity : std::uint8_t { left, right, both };

struct TransitionPoint {
  Rat instant;
  Discontinuity kind;
  friend bool operator==(const TransitionPoint&, const TransitionPoint&) = default;
};

/// Bi-infinite, non-Zeno, piecewise-constant behaviour.  Stored as the
/// ordered instants t_0 < ... < t_{n-1}, the value at each instant, and the
/// n+1 values on the open gaps (-inf,t_0), (t_0,t_1), ..., (t_{n-1},inf).
/// In canonical form no instant is surrounded by its own value.
class DenseBehavior {
 public:
  DenseBehavior() = default;
  DenseBehavior(Alphabet alphabet, Valuation constant) : alphabet_(std::move(alphabet)), gaps_{constant} {}
  DenseBehavior(Alphabet alphabet, std::vector<Rat> points, std::vector<Valuation> at_points,
                std::vector<Valuation> gaps)
      : alphabet_(std::move(alphabet)), points_(std::move(points)), at_(std::move(at_points)), gaps_(std::move(gaps)) {
    if (at_.size() != points_.size() || gaps_.size() != points_.size() + 1)
      throw std::invalid_argument("inconsistent dense behaviour shape");
    for (std::size_t i = 1; i < points_.size(); ++i)
      if (!(points_[i - 1] < points_[i])) throw std::invalid_argument("instants must increase strictly");
    canonicalize();
  }

  /// Builds a behaviour from a partition of the time line into intervals.
  /// `segments` must be sorted and contiguous; the tails cover the rest.
  static DenseBehavior from_segments(const Alphabet& alphabet, Valuation left_tail, const std::vector<Segment>& segs,
                                     Valuation right_tail) {
    if (segs.empty()) {
      if (left_tail != right_tail)
        throw std::invalid_argument("tails differ but no boundary is given");
      return DenseBehavior(alphabet, left_tail);
    }
    std::vector<Segment> all;
    const auto& f = segs.front();
    if (!f.interval.lo.is_finite()) throw std::invalid_argument("segments must be bounded");
    all.push_back({TimeInterval::make(Bound::neg_inf(), false, f.interval.lo, !f.interval.lo_closed), left_tail});
    all.insert(all.end(), segs.begin(), segs.end());
    const auto& l = segs.back();
    if (!l.interval.hi.is_finite()) throw std::invalid_argument("segments must be bounded");
    all.push_back({TimeInterval::make(l.interval.hi, !l.interval.hi_closed, Bound::pos_inf(), false), right_tail});
    return from_partition(alphabet, all);
  }

  /// Builds a behaviour from an ordered partition of the whole line.
  static DenseBehavior from_partition(const Alphabet& alphabet, const std::vector<Segment>& parts) {
    std::vector<Segment> ps;
    for (const auto& p : parts)
      if (!p.interval.empty()) ps.push_back(p);
    if (ps.empty() || !ps.front().interval.lo.is_neg_inf() || !ps.back().interval.hi.is_pos_inf())
      throw std::invalid_argument("partition must cover the whole time line");
    std::vector<Rat> pts;
    for (std::size_t i = 0; i + 1 < ps.size(); ++i) {
      const auto& a = ps[i].interval;
      const auto& b = ps[i + 1].interval;
      if (!(a.hi == b.lo) || a.hi_closed == b.lo_closed)
        throw std::invalid_argument("partition intervals must be contiguous and disjoint at " + a.hi.str());
      if (pts.empty() || pts.back() != a.hi.value()) pts.push_back(a.hi.value());
    }
    auto eval = [&](const Rat& t) {
      for (const auto& p : ps)
        if (p.interval.contains(t)) return p.value;
      throw std::logic_error("partition does not cover " + to_string(t));
    };
    std::vector<Valuation> at, gaps;
    gaps.push_back(ps.front().value);
    for (std::size_t i = 0; i < pts.size(); ++i) {
      at.push_back(eval(pts[i]));
      gaps.push_back(i + 1 < pts.size() ? eval(midpoint(pts[i], pts[i + 1])) : ps.back().value);
    }
    return DenseBehavior(alphabet, std::move(pts), std::move(at), std::move(gaps));
  }

  /// Builds the behaviour whose letter `name` holds exactly on `sets[name]`.
  static DenseBehavior from_signals(const Alphabet& alphabet, const std::map<std::string, RealSet>& sets) {
    std::vector<Rat> pts;
    for (const auto& [name, s] : sets) {
      auto b = s.breakpoints();
      pts.insert(pts.end(), b.begin(), b.end());
    }
    std::sort(pts.begin(), pts.end());
    pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
    auto eval = [&](const Rat& t) {
      Valuation v = 0;
      for (const auto& [name, s] : sets) {
        const int i = alphabet.index(name);
        if (i < 0) throw std::invalid_argument("unknown letter " + name);
        if (s.contains(t)) v |= Valuation{1} << i;
      }
      return v;
    };
    std::vector<Valuation> at, gaps;
    for (std::size_t i = 0; i <= pts.size(); ++i) {
      Rat probe;
      if (pts.empty()) {
        probe = 0;
      } else if (i == 0) {
        probe = pts[0] - 1;
      } else if (i == pts.size()) {
        probe = pts.back() + 1;
      } else {
        probe = midpoint(pts[i - 1], pts[i]);
      }
      gaps.push_back(eval(probe));
      if (i < pts.size()) at.push_back(eval(pts[i]));
    }
    return DenseBehavior(alphabet, pts, at, gaps);
  }

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Rat>& points() const { return points_; }
  const std::vector<Valuation>& point_values() const { return at_; }
  const std::vector<Valuation>& gap_values() const { return gaps_; }
  Valuation left_tail() const { return gaps_.front(); }
  Valuation right_tail() const { return gaps_.back(); }

  Valuation value_at(const Rat& t) const {
    auto it = std::lower_bound(points_.begin(), points_.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - points_.begin());
    if (it != points_.end() && *it == t) return at_[i];
    return gaps_[i];
  }

  /// Set of instants where letter `name` holds (empty for unknown letters).
  RealSet letter_set(const std::string& name) const {
    const int idx = alphabet_.index(name);
    if (idx < 0) return RealSet::empty();
    const Valuation bit = Valuation{1} << idx;
    return set_where([bit](Valuation v) { return (v & bit) != 0; });
  }

  template <class Pred>
  RealSet set_where(Pred pred) const {
    std::vector<TimeInterval> parts;
    for (std::size_t i = 0; i <= points_.size(); ++i) {
      if (pred(gaps_[i])) {
        Bound lo = i == 0 ? Bound::neg_inf() : Bound(points_[i - 1]);
        Bound hi = i == points_.size() ? Bound::pos_inf() : Bound(points_[i]);
        parts.push_back(TimeInterval::open(lo, hi));
      }
      if (i < points_.size() && pred(at_[i])) parts.push_back(TimeInterval::point(points_[i]));
    }
    return RealSet(std::move(parts));
  }

  /// Maximal constancy intervals, in order (the canonical interval form).
  std::vector<Segment> segments() const {
    std::vector<Segment> out;
    auto push = [&](TimeInterval iv, Valuation v) {
      if (iv.empty()) return;
      if (!out.empty() && out.back().value == v) {
        out.back().interval.hi = iv.hi;
        out.back().interval.hi_closed = iv.hi_closed;
      } else {
        out.push_back({iv, v});
      }
    };
    for (std::size_t i = 0; i <= points_.size(); ++i) {
      Bound lo = i == 0 ? Bound::neg_inf() : Bound(points_[i - 1]);
      Bound hi = i == points_.size() ? Bound::pos_inf() : Bound(points_[i]);
      push(TimeInterval::open(lo, hi), gaps_[i]);
      if (i < points_.size()) push(TimeInterval::point(points_[i]), at_[i]);
    }
    return out;
  }

  friend bool operator==(const DenseBehavior&, const DenseBehavior&) = default;

 private:
  void canonicalize() {
    std::vector<Rat> p;
    std::vector<Valuation> a;
    std::vector<Valuation> g{gaps_.front()};
    for (std::size_t i = 0; i < points_.size(); ++i) {
      if (at_[i] == g.back() && gaps_[i + 1] == g.back()) continue;
      p.push_back(points_[i]);
      a.push_back(at_[i]);
      g.push_back(gaps_[i + 1]);
    }
    points_ = std::move(p);
    at_ = std::move(a);
    gaps_ = std::move(g);
  }

  Alphabet alphabet_;
  std::vector<Rat> points_;
  std::vector<Valuation> at_;
  std::vector<Valuation> gaps_{0};
};

/// Discontinuity instants with the side on which the value changes.
inline std::vector<TransitionPoint> tau(const DenseBehavior& b) {
  std::vector<TransitionPoint> out;
  const auto& pts = b.points();
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const bool left = b.gap_values()[i] != b.point_values()[i];
    const bool right = b.point_values()[i] != b.gap_values()[i + 1];
    if (left && right) {
      out.push_back({pts[i], Discontinuity::both});
    } else if (left) {
      out.push_back({pts[i], Discontinuity::left});
    } else if (right) {
      out.push_back({pts[i], Discontinuity::right});
    }
  }
  return out;
}

/// Every maximal constancy interval is unbounded, longer than delta, or of
/// length exactly delta and closed.
inline bool is_non_berkeley(const DenseBehavior& b, const Rat& delta) {
  if (delta <= 0) throw std::invalid_argument("delta must be positive");
  for (const auto& s : b.segments()) {
    const auto& iv = s.interval;
    if (!iv.is_bounded()) continue;
    const Rat len = iv.hi.value() - iv.lo.value();
    if (len > delta) continue;
    if (len == delta && iv.lo_closed && iv.hi_closed) continue;
    return false;
  }
  return true;
}

/// Bi-infinite eventually-constant behaviour over the integers.
class DiscreteBehavior {
 public:
  DiscreteBehavior() = default;
  DiscreteBehavior(Alphabet alphabet, Valuation left, std::int64_t k0, std::vector<Valuation> core, Valuation right)
      : alphabet_(std::move(alphabet)), left_(left), k0_(k0), core_(std::move(core)), right_(right) {
    canonicalize();
  }
  static DiscreteBehavior constant(Alphabet alphabet, Valuation v) { return DiscreteBehavior(std::move(alphabet), v, 0, {}, v); }

  const Alphabet& alphabet() const { return alphabet_; }
  Valuation left_tail() const { return left_; }
  Valuation right_tail() const { return right_; }
  /// First index of the core (or the switching index when the core is empty).
  std::int64_t k0() const { return k0_; }
  const std::vector<Valuation>& core() const { return core_; }
  /// One past the last core index.
  std::int64_t k1() const { return k0_ + static_cast<std::int64_t>(core_.size()); }

  Valuation value_at(std::int64_t k) const {
    if (k < k0_) return left_;
    if (k >= k1()) return right_;
    return core_[static_cast<std::size_t>(k - k0_)];
  }

  IntSet letter_set(const std::string& name) const {
    const int idx = alphabet_.index(name);
    if (idx < 0) return IntSet::empty();
    const Valuation bit = Valuation{1} << idx;
    return set_where([bit](Valuation v) { return (v & bit) != 0; });
  }

  template <class Pred>
  IntSet set_where(Pred pred) const {
    std::vector<ZInterval> parts;
    if (pred(left_)) parts.push_back({ZBound::neg_inf(), ZBound::of(k0_ - 1)});
    for (std::size_t i = 0; i < core_.size(); ++i)
      if (pred(core_[i])) parts.push_back({ZBound::of(k0_ + static_cast<std::int64_t>(i)), ZBound::of(k0_ + static_cast<std::int64_t>(i))});
    if (pred(right_)) parts.push_back({ZBound::of(k1()), ZBound::pos_inf()});
    return IntSet(std::move(parts));
  }

  /// Behaviour whose letter `name` holds exactly on `sets[name]`.
  static DiscreteBehavior from_signals(const Alphabet& alphabet, const std::map<std::string, IntSet>& sets) {
    std::int64_t lo = 0, hi = 0;
    bool any = false;
    for (const auto& [name, s] : sets) {
      for (const auto& c : s.components()) {
        for (const ZBound* b : {&c.lo, &c.hi}) {
          if (!b->is_finite()) continue;
          if (!any) {
            lo = hi = b->v;
            any = true;
          }
          lo = std::min(lo, b->v);
          hi = std::max(hi, b->v);
        }
      }
    }
    auto eval = [&](std::int64_t k) {
      Valuation v = 0;
      for (const auto& [name, s] : sets) {
        const int i = alphabet.index(name);
        if (i < 0) throw std::invalid_argument("unknown letter " + name);
        if (s.contains(k)) v |= Valuation{1} << i;
      }
      return v;
    };
    if (!any) return constant(alphabet, eval(0));
    std::vector<Valuation> core;
    for (std::int64_t k = lo; k <= hi + 1; ++k) core.push_back(eval(k));
    return DiscreteBehavior(alphabet, eval(lo - 1), lo, std::move(core), eval(hi + 2));
  }

  friend bool operator==(const DiscreteBehavior&, const DiscreteBehavior&) = default;

 private:
  void canonicalize() {
    std::size_t b = 0, e = core_.size();
    while (b < e && core_[b] == left_) ++b;
    while (e > b && core_[e - 1] == right_) --e;
    k0_ += static_cast<std::int64_t>(b);
    core_ = std::vector<Valuation>(core_.begin() + static_cast<std::ptrdiff_t>(b),
                                   core_.begin() + static_cast<std::ptrdiff_t>(e));
    if (core_.empty() && left_ == right_) k0_ = 0;
  }

  Alphabet alphabet_;
  Valuation left_ = 0;
  std::int64_t k0_ = 0;
  std::vector<Valuation> core_;
  Valuation right_ = 0;
};

struct SamplingParams {
  Rat delta;
  Rat z;
};

/// The discrete behaviour k -> b(z + k delta).
inline DiscreteBehavior sample(const DenseBehavior& b, const SamplingParams& s) {
  if (s.delta <= 0) throw std::invalid_argument("delta must be positive");
  const auto& pts = b.points();
  if (pts.empty()) return DiscreteBehavior::constant(b.alphabet(), b.left_tail());
  const std::int64_t lo = to_int64(floor_of(Rat((pts.front() - s.z) / s.delta))) - 1;
  const std::int64_t hi = to_int64(ceil_of(Rat((pts.back() - s.z) / s.delta))) + 1;
  std::vector<Valuation> core;
  core.reserve(static_cast<std::size_t>(hi - lo + 1));
  for (std::int64_t k = lo; k <= hi; ++k) core.push_back(b.value_at(Rat(s.z + Rat(static_cast<long>(k)) * s.delta)));
  return DiscreteBehavior(b.alphabet(), b.left_tail(), lo, std::move(core), b.right_tail());
}

enum class CompletionStrategy : std::uint8_t { aligned, jittered };

namespace detail {

struct Run {
  std::int64_t first;  // meaningful unless unbounded on the left
  std::int64_t last;   // meaningful unless unbounded on the right
  Valuation value;
};

inline std::vector<Run> runs_of(const DiscreteBehavior& d) {
  std::vector<Run> runs;
  runs.push_back({0, d.k0() - 1, d.left_tail()});
  for (std::int64_t k = d.k0(); k < d.k1(); ++k) {
    const Valuation v = d.value_at(k);
    if (v == runs.back().value) {
      runs.back().last = k;
    } else {
      runs.push_back({k, k, v});
    }
  }
  if (d.right_tail() == runs.back().value) {
    runs.back().last = d.k1();
  } else {
    runs.push_back({d.k1(), d.k1(), d.right_tail()});
  }
  return runs;
}

// Boundary between run r and run r+1 placed at z + (last_r + theta) delta.
// With theta == 0 the instant itself is a sampling instant and belongs to
// run r; with theta == 1 it belongs to run r+1.
struct Boundary {
  Rat theta;
  bool owned_by_left;
};

inline DenseBehavior assemble(const DiscreteBehavior& d, const SamplingParams& s, const std::vector<Run>& runs,
                              const std::vector<Boundary>& bs) {
  std::vector<Rat> pts;
  std::vector<Valuation> at;
  std::vector<Valuation> gaps{runs.front().value};
  for (std::size_t r = 0; r + 1 < runs.size(); ++r) {
    const Rat t = s.z + (Rat(static_cast<long>(runs[r].last)) + bs[r].theta) * s.delta;
    pts.push_back(t);
    at.push_back(bs[r].owned_by_left ? runs[r].value : runs[r + 1].value);
    gaps.push_back(runs[r + 1].value);
  }
  return DenseBehavior(d.alphabet(), std::move(pts), std::move(at), std::move(gaps));
}

}  // namespace detail

/// Dense non-Berkeley behaviours sampling back to `d`.  Every candidate is
/// re-sampled and checked before it is returned, so fewer than `count`
/// (possibly none) may come back.
inline std::vector<DenseBehavior> dense_completions(const DiscreteBehavior& d, const SamplingParams& s,
                                                    CompletionStrategy strategy, std::size_t count,
                                                    std::uint64_t seed = 0) {
  if (s.delta <= 0) throw std::invalid_argument("delta must be positive");
  std::vector<DenseBehavior> out;
  const auto runs = detail::runs_of(d);
  const std::size_t n = runs.size();
  auto single = [&](std::size_t r) { return r > 0 && r + 1 < n && runs[r].first == runs[r].last; };
  auto accept = [&](const DenseBehavior& b) {
    if (sample(b, s) == d && is_non_berkeley(b, s.delta) &&
        std::find(out.begin(), out.end(), b) == out.end())
      out.push_back(b);
  };

  if (strategy == CompletionStrategy::aligned) {
    if (count == 0) return out;
    std::vector<detail::Boundary> bs;
    bool ok = true;
    for (std::size_t r = 0; r + 1 < n; ++r) {
      if (single(r + 1)) {
        if (single(r)) ok = false;
        bs.push_back({Rat(0), true});
      } else if (single(r)) {
        bs.push_back({Rat(1), false});
      } else {
        bs.push_back({Rat(0), true});
      }
    }
    if (ok) accept(detail::assemble(d, s, runs, bs));
    return out;
  }

  std::mt19937_64 rng(seed);
  for (std::size_t attempt = 0; attempt < count; ++attempt) {
    std::vector<detail::Boundary> bs(n > 0 ? n - 1 : 0);
    // Boundaries separated only by single-sample runs form a chain whose
    // offsets must increase strictly.
    std::size_t r = 0;
    while (r + 1 < n) {
      std::size_t e = r;
      while (e + 2 < n && single(e + 1)) ++e;
      const std::size_t len = e - r + 1;
      const long den = static_cast<long>(4 * (len + 1));
      std::uniform_int_distribution<long> pick(1, den - 1);
      std::vector<long> nums;
      while (nums.size() < len) {
        const long v = pick(rng);
        if (std::find(nums.begin(), nums.end(), v) == nums.end()) nums.push_back(v);
      }
      std::sort(nums.begin(), nums.end());
      for (std::size_t i = 0; i < len; ++i) bs[r + i] = {make_rat(nums[i], den), (rng() & 1) != 0};
      r = e + 1;
    }
    accept(detail::assemble(d, s, runs, bs));
  }
  return out;
}

}  // namespace mtlsample
