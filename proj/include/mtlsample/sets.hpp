#pragma once

// Boolean signals as finite unions of intervals, over the reals and over the
// integers.  Both representations keep their components sorted, pairwise
// disjoint and non-adjacent, so equality of sets is equality of vectors.

#include "mtlsample/interval.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace mtlsample {

class RealSet {
 public:
  RealSet() = default;
  explicit RealSet(std::vector<TimeInterval> parts) : parts_(std::move(parts)) { normalize(); }

  static RealSet empty() { return {}; }
  static RealSet universe() { return RealSet({TimeInterval::universe()}); }
  static RealSet of(const TimeInterval& i) { return RealSet(std::vector<TimeInterval>{i}); }

  const std::vector<TimeInterval>& components() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }
  bool is_universe() const {
    return parts_.size() == 1 && parts_[0].lo.is_neg_inf() && parts_[0].hi.is_pos_inf();
  }

  bool contains(const Rat& t) const {
    // Components are sorted; a linear scan is fine for the sizes used here.
    for (const auto& c : parts_) {
      if (c.contains(t)) return true;
      if (Bound(t) < c.lo) return false;
    }
    return false;
  }

  /// Finite endpoints of all components, ascending and without repetition.
  std::vector<Rat> breakpoints() const {
    std::vector<Rat> out;
    for (const auto& c : parts_) {
      if (c.lo.is_finite()) push_unique(out, c.lo.value());
      if (c.hi.is_finite()) push_unique(out, c.hi.value());
    }
    return out;
  }

  friend bool operator==(const RealSet& a, const RealSet& b) { return a.parts_ == b.parts_; }

  RealSet complement() const {
    std::vector<TimeInterval> out;
    Bound cur = Bound::neg_inf();
    bool cur_closed = false;
    bool started_at_neg_inf = true;
    for (const auto& c : parts_) {
      if (!(started_at_neg_inf && c.lo.is_neg_inf())) {
        out.push_back(TimeInterval::make(cur, cur_closed, c.lo, !c.lo_closed));
      }
      started_at_neg_inf = false;
      cur = c.hi;
      cur_closed = !c.hi_closed;
    }
    if (parts_.empty()) return universe();
    if (!cur.is_pos_inf()) out.push_back(TimeInterval::make(cur, cur_closed, Bound::pos_inf(), false));
    return RealSet(std::move(out));
  }

  RealSet unite(const RealSet& o) const {
    std::vector<TimeInterval> all = parts_;
    all.insert(all.end(), o.parts_.begin(), o.parts_.end());
    return RealSet(std::move(all));
  }

  RealSet intersect(const RealSet& o) const {
    std::vector<TimeInterval> out;
    std::size_t i = 0, j = 0;
    while (i < parts_.size() && j < o.parts_.size()) {
      TimeInterval x = mtlsample::intersect(parts_[i], o.parts_[j]);
      if (!x.empty()) out.push_back(x);
      // Advance whichever component ends first.
      if (ends_before(parts_[i], o.parts_[j])) {
        ++i;
      } else {
        ++j;
      }
    }
    return RealSet(std::move(out));
  }

  RealSet intersect(const TimeInterval& i) const { return intersect(of(i)); }
  RealSet minus(const RealSet& o) const { return intersect(o.complement()); }

  /// Image under t -> -t.
  RealSet reversed() const {
    std::vector<TimeInterval> out;
    out.reserve(parts_.size());
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) out.push_back(it->negated());
    return RealSet(std::move(out));
  }

  /// { t | exists d in I with t + d in this set }.
  RealSet shift_back(const TimeInterval& i) const {
    if (i.empty()) return empty();
    std::vector<TimeInterval> out;
    out.reserve(parts_.size());
    for (const auto& k : parts_) {
      out.push_back(TimeInterval::make(k.lo - i.hi, k.lo_closed && i.hi_closed, k.hi - i.lo,
                                       k.hi_closed && i.lo_closed));
    }
    return RealSet(std::move(out));
  }

  std::string str() const {
    if (parts_.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += " ";
      s += parts_[i].str();
    }
    return s;
  }

 private:
  static void push_unique(std::vector<Rat>& v, const Rat& x) {
    if (v.empty() || v.back() != x) v.push_back(x);
  }

  // True when a's upper end is strictly below b's upper end in the order of
  // right endpoints (an open end precedes a closed one at the same value).
  static bool ends_before(const TimeInterval& a, const TimeInterval& b) {
    if (a.hi != b.hi) return a.hi < b.hi;
    return !a.hi_closed && b.hi_closed;
  }

  void normalize() {
    std::vector<TimeInterval> v;
    v.reserve(parts_.size());
    for (auto& p : parts_)
      if (!p.empty()) v.push_back(std::move(p));
    std::sort(v.begin(), v.end(), [](const TimeInterval& a, const TimeInterval& b) {
      if (a.lo != b.lo) return a.lo < b.lo;
      return a.lo_closed && !b.lo_closed;
    });
    std::vector<TimeInterval> out;
    for (auto& p : v) {
      if (!out.empty()) {
        auto& c = out.back();
        const bool joins = p.lo < c.hi || (p.lo == c.hi && (p.lo_closed || c.hi_closed));
        if (joins) {
          if (p.hi > c.hi) {
            c.hi = p.hi;
            c.hi_closed = p.hi_closed;
          } else if (p.hi == c.hi) {
            c.hi_closed = c.hi_closed || p.hi_closed;
          }
          continue;
        }
      }
      out.push_back(std::move(p));
    }
    parts_ = std::move(out);
  }

  std::vector<TimeInterval> parts_;
};

class IntSet {
 public:
  IntSet() = default;
  explicit IntSet(std::vector<ZInterval> parts) : parts_(std::move(parts)) { normalize(); }

  static IntSet empty() { return {}; }
  static IntSet universe() { return IntSet({ZInterval{ZBound::neg_inf(), ZBound::pos_inf()}}); }
  static IntSet of(const ZInterval& i) { return IntSet(std::vector<ZInterval>{i}); }
  static IntSet point(std::int64_t k) { return of({ZBound::of(k), ZBound::of(k)}); }

  const std::vector<ZInterval>& components() const { return parts_; }
  bool is_empty() const { return parts_.empty(); }
  bool is_universe() const {
    return parts_.size() == 1 && parts_[0].lo == ZBound::neg_inf() && parts_[0].hi == ZBound::pos_inf();
  }

  bool contains(std::int64_t k) const {
    for (const auto& c : parts_) {
      if (c.contains(k)) return true;
      if (ZBound::of(k) < c.lo) return false;
    }
    return false;
  }

  friend bool operator==(const IntSet& a, const IntSet& b) { return a.parts_ == b.parts_; }

  IntSet complement() const {
    if (parts_.empty()) return universe();
    std::vector<ZInterval> out;
    ZBound cur = ZBound::neg_inf();
    bool first = true;
    for (const auto& c : parts_) {
      if (!(first && c.lo == ZBound::neg_inf())) {
        out.push_back({first ? ZBound::neg_inf() : cur, c.lo.plus(-1)});
      }
      first = false;
      cur = c.hi == ZBound::pos_inf() ? c.hi : c.hi.plus(1);
    }
    if (cur != ZBound::pos_inf()) out.push_back({cur, ZBound::pos_inf()});
    return IntSet(std::move(out));
  }

  IntSet unite(const IntSet& o) const {
    std::vector<ZInterval> all = parts_;
    all.insert(all.end(), o.parts_.begin(), o.parts_.end());
    return IntSet(std::move(all));
  }

  IntSet intersect(const IntSet& o) const {
    std::vector<ZInterval> out;
    std::size_t i = 0, j = 0;
    while (i < parts_.size() && j < o.parts_.size()) {
      const ZInterval x{std::max(parts_[i].lo, o.parts_[j].lo), std::min(parts_[i].hi, o.parts_[j].hi)};
      if (!x.empty()) out.push_back(x);
      if (parts_[i].hi < o.parts_[j].hi) {
        ++i;
      } else {
        ++j;
      }
    }
    return IntSet(std::move(out));
  }

  IntSet intersect(const ZInterval& i) const { return intersect(of(i)); }
  IntSet minus(const IntSet& o) const { return intersect(o.complement()); }

  IntSet reversed() const {
    std::vector<ZInterval> out;
    for (auto it = parts_.rbegin(); it != parts_.rend(); ++it) out.push_back({-it->hi, -it->lo});
    return IntSet(std::move(out));
  }

  /// { k | exists d in I with k + d in this set }.
  IntSet shift_back(const ZInterval& i) const {
    if (i.empty()) return empty();
    std::vector<ZInterval> out;
    for (const auto& k : parts_) out.push_back({k.lo - i.hi, k.hi - i.lo});
    return IntSet(std::move(out));
  }

  std::string str() const {
    if (parts_.empty()) return "{}";
    std::string s;
    for (std::size_t i = 0; i < parts_.size(); ++i) {
      if (i) s += " ";
      s += "[" + parts_[i].lo.str() + "," + parts_[i].hi.str() + "]";
    }
    return s;
  }

 private:
  void normalize() {
    std::vector<ZInterval> v;
    for (auto& p : parts_)
      if (!p.empty()) v.push_back(p);
    std::sort(v.begin(), v.end(), [](const ZInterval& a, const ZInterval& b) { return a.lo < b.lo; });
    std::vector<ZInterval> out;
    for (auto& p : v) {
      if (!out.empty()) {
        auto& c = out.back();
        const bool joins = c.hi == ZBound::pos_inf() || p.lo <= c.hi.plus(1);
        if (joins) {
          c.hi = std::max(c.hi, p.hi);
          continue;
        }
      }
      out.push_back(p);
    }
    parts_ = std::move(out);
  }

  std::vector<ZInterval> parts_;
};

}  // namespace mtlsample
