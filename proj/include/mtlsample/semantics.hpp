#pragma once

// Evaluation of formulas over dense and discrete behaviours.
//
// Satisfaction sets are computed bottom-up.  For an until over a set S1 of
// disjoint intervals, a witness distance d > 0 requires [t, t+d) to stay in
// one component J of S1, that is t in J and t+d <= sup J (t+d <= sup J + 1
// over the integers).  Distances d <= 0 need no first argument at all.  So
//
//   sat(U_I(S1,S2)) = (S2 (-) I<=0)  u  U_J  J n ((S2 n (-inf, sup J]) (-) I>0)
//
// where X (-) K = { t | t+k in X for some k in K }.  Since is until on the
// reversed time line; release and trigger are the complements of until and
// since over the complemented arguments.

#include "mtlsample/behavior.hpp"
#include "mtlsample/formula.hpp"

#include <map>
#include <stdexcept>
#include <unordered_map>

namespace mtlsample {

namespace detail {

struct DenseDomain {
  using Set = RealSet;
  using Interval = TimeInterval;
  static Interval nonpositive(const TimeInterval& i) {
    return intersect(i, TimeInterval::make(Bound::neg_inf(), false, Rat(0), true));
  }
  static Interval positive(const TimeInterval& i) { return intersect(i, TimeInterval::positive()); }
  static Set up_to(const TimeInterval& j) {
    if (j.hi.is_pos_inf()) return Set::universe();
    return Set::of(TimeInterval::make(Bound::neg_inf(), false, j.hi, true));
  }
  static Set restrict(const Set& s, const TimeInterval& j) { return s.intersect(j); }
};

struct DiscreteDomain {
  using Set = IntSet;
  using Interval = ZInterval;
  static Interval nonpositive(const ZInterval& i) { return {i.lo, std::min(i.hi, ZBound::of(0))}; }
  static Interval positive(const ZInterval& i) { return {std::max(i.lo, ZBound::of(1)), i.hi}; }
  static Set up_to(const ZInterval& j) {
    if (j.hi == ZBound::pos_inf()) return Set::universe();
    return Set::of({ZBound::neg_inf(), j.hi.plus(1)});
  }
  static Set restrict(const Set& s, const ZInterval& j) { return s.intersect(j); }
};

template <class D>
typename D::Set until_set(const typename D::Set& s1, const typename D::Set& s2, const typename D::Interval& iv) {
  typename D::Set res = s2.shift_back(D::nonpositive(iv));
  const auto pos = D::positive(iv);
  if (pos.empty()) return res;
  for (const auto& j : s1.components()) {
    const auto reach = s2.intersect(D::up_to(j)).shift_back(pos);
    res = res.unite(D::restrict(reach, j));
  }
  return res;
}

template <class D>
typename D::Set modality_set(Kind k, bool matching, const typename D::Set& s1, typename D::Set s2,
                             const typename D::Interval& iv) {
  switch (k) {
    case Kind::until:
      if (matching) s2 = s2.intersect(s1);
      return until_set<D>(s1, s2, iv);
    case Kind::since:
      if (matching) s2 = s2.intersect(s1);
      return until_set<D>(s1.reversed(), s2.reversed(), iv).reversed();
    case Kind::release:
      if (matching) s2 = s2.unite(s1);
      return until_set<D>(s1.complement(), s2.complement(), iv).complement();
    case Kind::trigger:
      if (matching) s2 = s2.unite(s1);
      return until_set<D>(s1.complement().reversed(), s2.complement().reversed(), iv).reversed().complement();
    default: throw std::logic_error("not a modality");
  }
}

}  // namespace detail

/// Closed integer form of a discrete-endpoint interval; throws on a
/// non-integer endpoint.
inline ZInterval discrete_interval(const TimeInterval& i) {
  for (const Bound* b : {&i.lo, &i.hi})
    if (b->is_finite() && !is_integer(b->value()))
      throw std::invalid_argument("non-integer endpoint " + b->str() + " in a discrete-time formula");
  return integer_points(i);
}

inline void require_discrete_endpoints(const Formula& f) {
  for_each_interval(f, [](const TimeInterval& i) { (void)discrete_interval(i); });
}

// ---------------------------------------------------------------------------
// Dense time.

class DenseEvaluator {
 public:
  explicit DenseEvaluator(const DenseBehavior& b) : b_(b) {}

  const RealSet& sat(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second.second;
    RealSet r = compute(f);
    auto [it, ok] = memo_.emplace(f.id(), std::make_pair(f, std::move(r)));
    return it->second.second;
  }

 private:
  RealSet compute(const Formula& f) {
    switch (f.kind()) {
      case Kind::prop: return b_.letter_set(f.letter());
      case Kind::neg_prop: return b_.letter_set(f.letter()).complement();
      case Kind::conj: return sat(f.lhs()).intersect(sat(f.rhs()));
      case Kind::disj: return sat(f.lhs()).unite(sat(f.rhs()));
      case Kind::until:
      case Kind::since:
      case Kind::release:
      case Kind::trigger:
        return detail::modality_set<detail::DenseDomain>(f.kind(), f.matching(), sat(f.lhs()), sat(f.rhs()),
                                                         f.interval());
      default: return sat(f.expansion());
    }
  }

  const DenseBehavior& b_;
  // The formula is kept alive next to its set so node addresses stay unique.
  std::unordered_map<const Node*, std::pair<Formula, RealSet>> memo_;
};

inline RealSet sat_set(const Formula& f, const DenseBehavior& b) { return DenseEvaluator(b).sat(f); }
inline bool eval_dense(const Formula& f, const DenseBehavior& b, const Rat& t) { return sat_set(f, b).contains(t); }
inline bool globally_sat_dense(const Formula& f, const DenseBehavior& b) { return sat_set(f, b).is_universe(); }

/// The behaviour b extended with a letter that holds exactly where f does.
inline DenseBehavior truth_behavior(const Formula& f, const DenseBehavior& b, const std::string& name = "phi") {
  if (b.alphabet().contains(name)) throw std::invalid_argument("letter " + name + " already in the alphabet");
  std::vector<std::string> names = b.alphabet().names();
  names.push_back(name);
  Alphabet ext(names);
  std::map<std::string, RealSet> sets;
  for (const auto& n : b.alphabet().names()) sets.emplace(n, b.letter_set(n));
  sets.emplace(name, sat_set(f, b));
  return DenseBehavior::from_signals(ext, sets);
}

/// Whether the truth behaviour of f over b stays non-Berkeley for epsilon.
inline bool check_shiftable_on(const Formula& f, const DenseBehavior& b, const Rat& eps) {
  if (!is_non_berkeley(b, eps)) throw std::invalid_argument("behaviour is not non-Berkeley for the given epsilon");
  return is_non_berkeley(truth_behavior(f, b, "_phi"), eps);
}

// ---------------------------------------------------------------------------
// Discrete time.

class DiscreteEvaluator {
 public:
  explicit DiscreteEvaluator(const DiscreteBehavior& d) : d_(d) {}

  const IntSet& sat(const Formula& f) {
    if (auto it = memo_.find(f.id()); it != memo_.end()) return it->second.second;
    IntSet r = compute(f);
    auto [it, ok] = memo_.emplace(f.id(), std::make_pair(f, std::move(r)));
    return it->second.second;
  }

 private:
  IntSet compute(const Formula& f) {
    switch (f.kind()) {
      case Kind::prop: return d_.letter_set(f.letter());
      case Kind::neg_prop: return d_.letter_set(f.letter()).complement();
      case Kind::conj: return sat(f.lhs()).intersect(sat(f.rhs()));
      case Kind::disj: return sat(f.lhs()).unite(sat(f.rhs()));
      case Kind::until:
      case Kind::since:
      case Kind::release:
      case Kind::trigger:
        return detail::modality_set<detail::DiscreteDomain>(f.kind(), f.matching(), sat(f.lhs()), sat(f.rhs()),
                                                            discrete_interval(f.interval()));
      default: return sat(f.expansion());
    }
  }

  const DiscreteBehavior& d_;
  std::unordered_map<const Node*, std::pair<Formula, IntSet>> memo_;
};

inline IntSet sat_seq(const Formula& f, const DiscreteBehavior& d) { return DiscreteEvaluator(d).sat(f); }
inline bool globally_sat_discrete(const Formula& f, const DiscreteBehavior& d) { return sat_seq(f, d).is_universe(); }

/// Satisfaction sequence as a one-letter discrete behaviour.
inline DiscreteBehavior sat_seq_behavior(const Formula& f, const DiscreteBehavior& d, const std::string& name = "phi") {
  Alphabet a(std::vector<std::string>{name});
  return DiscreteBehavior::from_signals(a, {{name, sat_seq(f, d)}});
}

/// Sum over the modalities of their largest finite endpoint magnitude.
inline std::int64_t horizon(const Formula& f) {
  std::int64_t h = 0;
  for_each_interval(f, [&](const TimeInterval& i) {
    Rat m = 0;
    for (const Bound* b : {&i.lo, &i.hi})
      if (b->is_finite()) m = std::max<Rat>(m, abs(b->value()));
    h += to_int64(ceil_of(m));
  });
  return h;
}

/// Direct, point-by-point reading of the discrete semantics.  Quantifiers
/// over unbounded distance ranges are cut where every subformula has become
/// constant, which is at most horizon(f) steps past the behaviour's core.
class NaiveDiscreteEvaluator {
 public:
  NaiveDiscreteEvaluator(const Formula& f, const DiscreteBehavior& d) : d_(d) {
    require_discrete_endpoints(f);
    const std::int64_t h = horizon(f);
    lo_ = d.k0() - 2 * h - 2;
    hi_ = d.k1() + 2 * h + 2;
  }

  bool eval(const Formula& f, std::int64_t k) {
    const auto key = std::make_pair(f.id(), k);
    if (auto it = memo_.find(key); it != memo_.end()) return it->second;
    const bool v = compute(f, k);
    memo_.emplace(key, v);
    keep_.push_back(f);
    return v;
  }

 private:
  bool compute(const Formula& f, std::int64_t k) {
    switch (f.kind()) {
      case Kind::prop:
      case Kind::neg_prop: {
        const int i = d_.alphabet().index(f.letter());
        const bool holds = i >= 0 && (d_.value_at(k) & (Valuation{1} << i)) != 0;
        return f.kind() == Kind::prop ? holds : !holds;
      }
      case Kind::conj: return eval(f.lhs(), k) && eval(f.rhs(), k);
      case Kind::disj: return eval(f.lhs(), k) || eval(f.rhs(), k);
      case Kind::until:
      case Kind::since:
      case Kind::release:
      case Kind::trigger: return modality(f, k);
      default: return eval(f.expansion(), k);
    }
  }

  // Second argument, including the matching variant's extra conjunct or
  // disjunct.
  bool second(const Formula& f, std::int64_t t) {
    const bool b = eval(f.rhs(), t);
    if (!f.matching()) return b;
    const bool existential = f.kind() == Kind::until || f.kind() == Kind::since;
    return existential ? (b && eval(f.lhs(), t)) : (b || eval(f.lhs(), t));
  }

  bool modality(const Formula& f, std::int64_t k) {
    const ZInterval iv = discrete_interval(f.interval());
    if (iv.empty()) return f.kind() == Kind::release || f.kind() == Kind::trigger;
    const bool future = f.kind() == Kind::until || f.kind() == Kind::release;
    // Distances d are cut to [a, b]; far-away instants all look alike.
    std::int64_t a, b;
    const std::int64_t far_future = future ? hi_ - k : k - lo_;
    const std::int64_t far_past = future ? lo_ - k : k - hi_;  // most negative distance still distinct
    if (iv.hi.is_finite()) {
      b = iv.hi.v;
    } else {
      b = std::max(iv.lo.is_finite() ? iv.lo.v : std::int64_t{0}, far_future);
      b = std::max(b, std::int64_t{0});
    }
    if (iv.lo.is_finite()) {
      a = iv.lo.v;
    } else {
      const std::int64_t floor_ = std::min<std::int64_t>(far_past, 0);
      a = b < floor_ ? b : floor_;
    }
    if (iv.lo.is_finite() && !iv.hi.is_finite()) b = std::max(b, a);
    const bool existential = f.kind() == Kind::until || f.kind() == Kind::since;
    for (std::int64_t dist = a; dist <= b; ++dist) {
      const std::int64_t target = future ? k + dist : k - dist;
      // Instants strictly between k and target (k included, target excluded
      // on the future side; the mirror image on the past side).
      bool side;
      if (existential) {
        side = second(f, target);
        for (std::int64_t j = 0; side && j < dist; ++j) side = eval(f.lhs(), future ? k + j : k - j);
        if (side) return true;
      } else {
        side = second(f, target);
        for (std::int64_t j = 0; !side && j < dist; ++j) side = eval(f.lhs(), future ? k + j : k - j);
        if (!side) return false;
      }
    }
    return !existential;
  }

  const DiscreteBehavior& d_;
  std::int64_t lo_ = 0;
  std::int64_t hi_ = 0;
  std::map<std::pair<const Node*, std::int64_t>, bool> memo_;
  std::vector<Formula> keep_;
};

inline bool eval_discrete(const Formula& f, const DiscreteBehavior& d, std::int64_t k) {
  return NaiveDiscreteEvaluator(f, d).eval(f, k);
}

}  // namespace mtlsample
