#pragma once

// Brute-force reference evaluator for dense time, used to cross-check the
// set-based evaluator.  It works pointwise and follows the quantifier
// definition of each modality literally.
//
// The truth value of a formula of temporal depth h is constant on the cells
// (single instants and open gaps) of the arrangement B + E^h, where B holds
// the change instants of the behaviour and E = {0} u {+e, -e : e a finite
// interval end-point}.  To evaluate a modality at t the line is cut at the
// grid of its arguments plus t; on every cell the arguments are evaluated
// once at a representative instant, and the existential (or universal)
// choice of the distance d is settled cell by cell.
//
// All instants are scaled to integer ticks first.  The scale makes every
// grid instant a multiple of 2^(h+1), so midpoints stay integral down to the
// propositional level.

#include "mtlsample/behavior.hpp"
#include "mtlsample/formula.hpp"

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <vector>

namespace mtlsample {

namespace detail {

class GridOracle {
 public:
  static constexpr int max_depth = 2;

  GridOracle(const Formula& f, const DenseBehavior& b, const Rat& t) : f_(core(f)), b_(b) {
    depth_ = temporal_depth(f_);
    if (depth_ > max_depth) throw std::invalid_argument("grid oracle supports temporal depth at most 2");

    std::vector<Rat> endpoints;
    for_each_interval(f_, [&](const TimeInterval& i) {
      for (const Bound* x : {&i.lo, &i.hi})
        if (x->is_finite()) endpoints.push_back(x->value());
    });
    BigInt l = t.get_den();
    auto fold = [&](const Rat& x) { mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t()); };
    for (const auto& x : endpoints) fold(x);
    for (const auto& x : b.points()) fold(x);
    scale_ = Rat(l * (BigInt(1) << (depth_ + 1)));

    t_ = tick(t);
    for (const auto& x : b.points()) pts_.push_back(tick(x));
    std::vector<std::int64_t> e{0};
    for (const auto& x : endpoints) {
      e.push_back(tick(x));
      e.push_back(-tick(x));
    }
    std::sort(e.begin(), e.end());
    e.erase(std::unique(e.begin(), e.end()), e.end());

    grids_.push_back(pts_);
    for (int h = 1; h < std::max(depth_, 1); ++h) {
      std::vector<std::int64_t> g;
      for (auto p : grids_.back())
        for (auto d : e) g.push_back(checked(static_cast<__int128>(p) + d));
      std::sort(g.begin(), g.end());
      g.erase(std::unique(g.begin(), g.end()), g.end());
      grids_.push_back(std::move(g));
    }
  }

  bool run() { return eval(f_, t_); }

 private:
  static constexpr std::int64_t ninf = std::numeric_limits<std::int64_t>::min();
  static constexpr std::int64_t pinf = std::numeric_limits<std::int64_t>::max();
  static constexpr std::int64_t limit = std::int64_t{1} << 52;

  struct Span {
    std::int64_t lo, hi;  // ninf / pinf for unbounded ends
    bool lo_closed, hi_closed;
  };
  struct Cell {
    std::int64_t lo, hi;  // equal for an instant, otherwise an open gap
    std::int64_t rep;
    bool point() const { return lo == hi; }
  };

  static std::int64_t checked(__int128 v) {
    if (v >= limit || v <= -limit) throw std::overflow_error("grid oracle: instants too large for tick scaling");
    return static_cast<std::int64_t>(v);
  }

  std::int64_t tick(const Rat& x) const {
    Rat s = x * scale_;
    if (!is_integer(s)) throw std::logic_error("grid oracle: scale does not clear denominators");
    if (!s.get_num().fits_slong_p()) throw std::overflow_error("grid oracle: instants too large for tick scaling");
    return checked(s.get_num().get_si());
  }

  Valuation value(std::int64_t t) const {
    auto it = std::lower_bound(pts_.begin(), pts_.end(), t);
    const std::size_t i = static_cast<std::size_t>(it - pts_.begin());
    if (it != pts_.end() && *it == t) return b_.point_values()[i];
    return b_.gap_values()[i];
  }

  bool letter(const std::string& name, std::int64_t t) const {
    const int idx = b_.alphabet().index(name);
    if (idx < 0) return false;
    return (value(t) >> idx) & 1;
  }

  Span shifted(const TimeInterval& iv, std::int64_t t) const {
    Span s{ninf, pinf, iv.lo_closed, iv.hi_closed};
    if (iv.lo.is_finite()) s.lo = checked(static_cast<__int128>(tick(iv.lo.value())) + t);
    if (iv.lo.is_pos_inf()) s.lo = pinf;
    if (iv.hi.is_finite()) s.hi = checked(static_cast<__int128>(tick(iv.hi.value())) + t);
    if (iv.hi.is_neg_inf()) s.hi = ninf;
    return s;
  }

  static bool meets(const Cell& c, const Span& s) {
    if (c.point()) {
      const std::int64_t x = c.lo;
      const bool above = s.lo == ninf || x > s.lo || (x == s.lo && s.lo_closed);
      const bool below = s.hi == pinf || x < s.hi || (x == s.hi && s.hi_closed);
      return above && below;
    }
    // an open gap (a, b) meets s iff some instant strictly inside it does
    if (s.lo != ninf && c.hi != pinf && s.lo >= c.hi) return false;
    if (s.hi != pinf && c.lo != ninf && s.hi <= c.lo) return false;
    if (s.lo == pinf || s.hi == ninf) return false;
    if (s.lo != ninf && s.hi != pinf) {
      if (s.lo > s.hi) return false;
      if (s.lo == s.hi) return s.lo_closed && s.hi_closed && (c.lo == ninf || s.lo > c.lo) && (c.hi == pinf || s.lo < c.hi);
    }
    return true;
  }

  // Cells of the line cut at every instant of `grid` and at t, in order.
  static std::vector<Cell> cells(const std::vector<std::int64_t>& grid, std::int64_t t, std::size_t& t_index) {
    std::vector<std::int64_t> g = grid;
    g.push_back(t);
    std::sort(g.begin(), g.end());
    g.erase(std::unique(g.begin(), g.end()), g.end());
    std::vector<Cell> out;
    const std::int64_t step = 2;
    out.push_back({ninf, g.front(), g.front() - step});
    for (std::size_t i = 0; i < g.size(); ++i) {
      if (g[i] == t) t_index = out.size();
      out.push_back({g[i], g[i], g[i]});
      if (i + 1 < g.size()) {
        if ((g[i] + g[i + 1]) % 2 != 0) throw std::logic_error("grid oracle: midpoint off the tick lattice");
        out.push_back({g[i], g[i + 1], (g[i] + g[i + 1]) / 2});
      }
    }
    out.push_back({g.back(), pinf, g.back() + step});
    return out;
  }

  bool eval(const Formula& f, std::int64_t t) {
    switch (f.kind()) {
      case Kind::prop: return letter(f.letter(), t);
      case Kind::neg_prop: return !letter(f.letter(), t);
      case Kind::conj: return eval(f.lhs(), t) && eval(f.rhs(), t);
      case Kind::disj: return eval(f.lhs(), t) || eval(f.rhs(), t);
      case Kind::until:
      case Kind::since:
      case Kind::release:
      case Kind::trigger: return modality(f, t);
      default: throw std::logic_error("grid oracle expects an expanded formula");
    }
  }

  bool modality(const Formula& f, std::int64_t t) {
    const int h = temporal_depth(f);
    std::size_t ti = 0;
    const std::vector<Cell> cs = cells(grids_[static_cast<std::size_t>(h - 1)], t, ti);
    const Kind k = f.kind();
    const bool future = k == Kind::until || k == Kind::release;
    // for the past operators the witness lies at t - d
    TimeInterval iv = future ? f.interval() : f.interval().negated();
    const Span window = shifted(iv, t);

    std::vector<signed char> v1(cs.size(), -1), v2(cs.size(), -1);
    auto a1 = [&](std::size_t i) {
      if (v1[i] < 0) v1[i] = eval(f.lhs(), cs[i].rep);
      return v1[i] != 0;
    };
    auto a2 = [&](std::size_t i) {
      if (v2[i] < 0) v2[i] = eval(f.rhs(), cs[i].rep);
      return v2[i] != 0;
    };
    // whether the first argument holds on every cell strictly between the
    // witness cell i and t, on t itself when the path is non-empty, and on
    // cell i when i is a gap
    auto path_all = [&](std::size_t i) {
      if (i == ti) return true;
      const std::size_t lo = i < ti ? i + 1 : ti;
      const std::size_t hi = i < ti ? ti : i - 1;
      for (std::size_t j = lo; j <= hi; ++j)
        if (!a1(j)) return false;
      return cs[i].point() || a1(i);
    };
    auto path_any = [&](std::size_t i) {
      if (i == ti) return false;
      const std::size_t lo = i < ti ? i + 1 : ti;
      const std::size_t hi = i < ti ? ti : i - 1;
      for (std::size_t j = lo; j <= hi; ++j)
        if (a1(j)) return true;
      return !cs[i].point() && a1(i);
    };
    // cells on the side of t where d <= 0 need no path condition
    auto vacuous = [&](std::size_t i) { return future ? i <= ti : i >= ti; };

    const bool existential = k == Kind::until || k == Kind::since;
    for (std::size_t i = 0; i < cs.size(); ++i) {
      if (!meets(cs[i], window)) continue;
      if (existential) {
        const bool target = a2(i) && (!f.matching() || a1(i));
        if (target && (vacuous(i) || path_all(i))) return true;
      } else {
        const bool target = a2(i) || (f.matching() && a1(i));
        if (!target && (vacuous(i) || !path_any(i))) return false;
      }
    }
    return !existential;
  }

  Formula f_;
  const DenseBehavior& b_;
  int depth_ = 0;
  Rat scale_;
  std::int64_t t_ = 0;
  std::vector<std::int64_t> pts_;
  std::vector<std::vector<std::int64_t>> grids_;
};

}  // namespace detail

/// Truth of f at t over b by pointwise brute force; f must have temporal
/// depth at most 2.
inline bool grid_oracle_dense(const Formula& f, const DenseBehavior& b, const Rat& t) {
  return detail::GridOracle(f, b, t).run();
}

}  // namespace mtlsample
