#pragma once

#include "mtlsample/rational.hpp"

#include <compare>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

namespace mtlsample {

/// A rational or an infinite interval endpoint.  Arithmetic follows the
/// usual extended-real rules; `x ± inf` is `± inf` and `inf - inf` throws.
class Bound {
 public:
  enum class Kind : std::uint8_t { neg_inf, finite, pos_inf };

  Bound() : kind_(Kind::finite) {}
  Bound(Rat value) : kind_(Kind::finite), value_(std::move(value)) {}  // NOLINT(implicit)
  Bound(long value) : kind_(Kind::finite), value_(value) {}            // NOLINT(implicit)

  static Bound pos_inf() { return Bound(Kind::pos_inf); }
  static Bound neg_inf() { return Bound(Kind::neg_inf); }

  Kind kind() const { return kind_; }
  bool is_finite() const { return kind_ == Kind::finite; }
  bool is_pos_inf() const { return kind_ == Kind::pos_inf; }
  bool is_neg_inf() const { return kind_ == Kind::neg_inf; }

  const Rat& value() const {
    if (!is_finite()) throw std::logic_error("value() of an infinite bound");
    return value_;
  }

  friend bool operator==(const Bound& a, const Bound& b) {
    if (a.kind_ != b.kind_) return false;
    return !a.is_finite() || a.value_ == b.value_;
  }

  friend std::strong_ordering operator<=>(const Bound& a, const Bound& b) {
    if (a.kind_ != b.kind_) return rank(a.kind_) <=> rank(b.kind_);
    if (!a.is_finite()) return std::strong_ordering::equal;
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  Bound operator-() const {
    switch (kind_) {
      case Kind::neg_inf: return pos_inf();
      case Kind::pos_inf: return neg_inf();
      default: return Bound(Rat(-value_));
    }
  }

  friend Bound operator+(const Bound& a, const Bound& b) {
    if (a.is_finite() && b.is_finite()) return Bound(Rat(a.value_ + b.value_));
    if ((a.is_pos_inf() && b.is_neg_inf()) || (a.is_neg_inf() && b.is_pos_inf()))
      throw std::domain_error("inf - inf is undefined");
    return a.is_finite() ? b : a;
  }
  friend Bound operator-(const Bound& a, const Bound& b) { return a + (-b); }

  /// Multiplication by a strictly positive rational.
  Bound scaled(const Rat& factor) const {
    if (factor <= 0) throw std::domain_error("scale factor must be positive");
    return is_finite() ? Bound(Rat(value_ * factor)) : *this;
  }
  Bound divided(const Rat& divisor) const {
    if (divisor <= 0) throw std::domain_error("divisor must be positive");
    return is_finite() ? Bound(Rat(value_ / divisor)) : *this;
  }
  Bound floored() const { return is_finite() ? Bound(Rat(floor_of(value_))) : *this; }
  Bound ceiled() const { return is_finite() ? Bound(Rat(ceil_of(value_))) : *this; }

  std::string str() const {
    switch (kind_) {
      case Kind::neg_inf: return "-inf";
      case Kind::pos_inf: return "inf";
      default: return to_string(value_);
    }
  }

 private:
  explicit Bound(Kind k) : kind_(k) {}
  static int rank(Kind k) { return k == Kind::neg_inf ? 0 : (k == Kind::finite ? 1 : 2); }

  Kind kind_;
  Rat value_;
};

/// Interval of the time line with independently open or closed endpoints.
/// Inverted intervals (lo > hi) are representable and simply empty.
struct TimeInterval {
  Bound lo;
  Bound hi;
  bool lo_closed = true;
  bool hi_closed = true;

  static TimeInterval make(Bound lo, bool lo_closed, Bound hi, bool hi_closed) {
    TimeInterval i{std::move(lo), std::move(hi), lo_closed, hi_closed};
    if (!i.lo.is_finite()) i.lo_closed = false;
    if (!i.hi.is_finite()) i.hi_closed = false;
    if (i.lo.is_pos_inf() || i.hi.is_neg_inf()) {
      // Keep the shape but make sure it is recognised as empty.
      i.lo_closed = i.hi_closed = false;
    }
    return i;
  }
  static TimeInterval closed(Bound lo, Bound hi) { return make(std::move(lo), true, std::move(hi), true); }
  static TimeInterval open(Bound lo, Bound hi) { return make(std::move(lo), false, std::move(hi), false); }
  static TimeInterval point(const Rat& x) { return closed(x, x); }
  static TimeInterval universe() { return open(Bound::neg_inf(), Bound::pos_inf()); }
  /// [0, +inf), the qualitative interval.
  static TimeInterval nonnegative() { return make(Rat(0), true, Bound::pos_inf(), false); }
  /// (0, +inf)
  static TimeInterval positive() { return open(Rat(0), Bound::pos_inf()); }

  bool empty() const {
    if (lo > hi) return true;
    if (lo == hi) return !(lo_closed && hi_closed);
    return false;
  }

  bool contains(const Rat& t) const {
    const Bound b(t);
    const bool above = lo_closed ? lo <= b : lo < b;
    const bool below = hi_closed ? b <= hi : b < hi;
    return above && below;
  }

  Bound length() const {
    if (empty()) return Bound(Rat(0));
    return hi - lo;
  }

  bool is_bounded() const { return lo.is_finite() && hi.is_finite(); }

  TimeInterval negated() const { return make(-hi, hi_closed, -lo, lo_closed); }
  TimeInterval shifted(const Rat& t) const { return make(lo + Bound(t), lo_closed, hi + Bound(t), hi_closed); }

  friend bool operator==(const TimeInterval& a, const TimeInterval& b) {
    return a.lo == b.lo && a.hi == b.hi && a.lo_closed == b.lo_closed && a.hi_closed == b.hi_closed;
  }

  std::string str() const {
    std::string s;
    s += lo_closed ? '[' : '(';
    s += lo.str();
    s += ',';
    s += hi.str();
    s += hi_closed ? ']' : ')';
    return s;
  }
};

/// Intersection of two intervals (may be empty).
inline TimeInterval intersect(const TimeInterval& a, const TimeInterval& b) {
  Bound lo;
  bool lc;
  if (a.lo > b.lo) {
    lo = a.lo;
    lc = a.lo_closed;
  } else if (b.lo > a.lo) {
    lo = b.lo;
    lc = b.lo_closed;
  } else {
    lo = a.lo;
    lc = a.lo_closed && b.lo_closed;
  }
  Bound hi;
  bool hc;
  if (a.hi < b.hi) {
    hi = a.hi;
    hc = a.hi_closed;
  } else if (b.hi < a.hi) {
    hi = b.hi;
    hc = b.hi_closed;
  } else {
    hi = a.hi;
    hc = a.hi_closed && b.hi_closed;
  }
  return TimeInterval::make(lo, lc, hi, hc);
}

/// Integer endpoint with saturating infinities, used for discrete time.
struct ZBound {
  enum class Kind : std::int8_t { neg_inf = -1, finite = 0, pos_inf = 1 };
  Kind kind = Kind::finite;
  std::int64_t v = 0;

  static ZBound of(std::int64_t x) { return {Kind::finite, x}; }
  static ZBound pos_inf() { return {Kind::pos_inf, 0}; }
  static ZBound neg_inf() { return {Kind::neg_inf, 0}; }

  bool is_finite() const { return kind == Kind::finite; }

  friend bool operator==(const ZBound& a, const ZBound& b) {
    return a.kind == b.kind && (!a.is_finite() || a.v == b.v);
  }
  friend std::strong_ordering operator<=>(const ZBound& a, const ZBound& b) {
    if (a.kind != b.kind) return static_cast<int>(a.kind) <=> static_cast<int>(b.kind);
    if (!a.is_finite()) return std::strong_ordering::equal;
    return a.v <=> b.v;
  }
  ZBound operator-() const {
    if (kind == Kind::pos_inf) return neg_inf();
    if (kind == Kind::neg_inf) return pos_inf();
    return of(-v);
  }
  friend ZBound operator+(const ZBound& a, const ZBound& b) {
    if (a.is_finite() && b.is_finite()) {
      std::int64_t r;
      if (__builtin_add_overflow(a.v, b.v, &r)) throw std::overflow_error("discrete time overflow");
      return of(r);
    }
    if (!a.is_finite() && !b.is_finite() && a.kind != b.kind) throw std::domain_error("inf - inf is undefined");
    return a.is_finite() ? b : a;
  }
  friend ZBound operator-(const ZBound& a, const ZBound& b) { return a + (-b); }
  ZBound plus(std::int64_t d) const { return *this + of(d); }

  std::string str() const {
    if (kind == Kind::pos_inf) return "inf";
    if (kind == Kind::neg_inf) return "-inf";
    return std::to_string(v);
  }
};

/// Closed integer interval [lo, hi]; empty when lo > hi.
struct ZInterval {
  ZBound lo;
  ZBound hi;

  bool empty() const { return lo > hi; }
  bool contains(std::int64_t k) const { return lo <= ZBound::of(k) && ZBound::of(k) <= hi; }
  friend bool operator==(const ZInterval&, const ZInterval&) = default;
};

/// The integers of a rational interval, as a closed integer interval.
inline ZInterval integer_points(const TimeInterval& i) {
  ZBound lo, hi;
  if (i.lo.is_neg_inf()) {
    lo = ZBound::neg_inf();
  } else if (i.lo.is_pos_inf()) {
    lo = ZBound::pos_inf();
  } else {
    const Rat& l = i.lo.value();
    if (is_integer(l)) {
      lo = ZBound::of(to_int64(l)).plus(i.lo_closed ? 0 : 1);
    } else {
      lo = ZBound::of(to_int64(ceil_of(l)));
    }
  }
  if (i.hi.is_pos_inf()) {
    hi = ZBound::pos_inf();
  } else if (i.hi.is_neg_inf()) {
    hi = ZBound::neg_inf();
  } else {
    const Rat& u = i.hi.value();
    if (is_integer(u)) {
      hi = ZBound::of(to_int64(u)).plus(i.hi_closed ? 0 : -1);
    } else {
      hi = ZBound::of(to_int64(floor_of(u)));
    }
  }
  return {lo, hi};
}

inline Bound to_bound(const ZBound& z) {
  if (z.kind == ZBound::Kind::pos_inf) return Bound::pos_inf();
  if (z.kind == ZBound::Kind::neg_inf) return Bound::neg_inf();
  return Bound(Rat(static_cast<long>(z.v)));
}

/// Closed rational interval with the endpoints of `z` (infinite ends open).
inline TimeInterval to_time_interval(const ZInterval& z) {
  return TimeInterval::closed(to_bound(z.lo), to_bound(z.hi));
}

}  // namespace mtlsample
