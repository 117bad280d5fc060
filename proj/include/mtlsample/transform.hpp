#pragma once

// Interval rescalings between dense-endpoint and discrete-endpoint formulas:
// the canonical adaptations (reals to integers and back) and the under- and
// over-approximations used for verification.

#include "mtlsample/formula.hpp"

#include <stdexcept>

namespace mtlsample {

namespace detail {

inline void require_positive(const Rat& delta) {
  if (delta <= 0) throw std::invalid_argument("delta must be positive");
}

inline Bound div_floor(const Bound& b, const Rat& d) { return b.divided(d).floored(); }
inline Bound div_ceil(const Bound& b, const Rat& d) { return b.divided(d).ceiled(); }

inline bool is_existential(Kind k) { return k == Kind::until || k == Kind::since; }

inline void require_in_D(const Formula& f, const Rat& delta) {
  require_positive(delta);
  if (!in_D(f, delta))
    throw std::domain_error("sampling period " + to_string(delta) +
                            " does not divide every non-zero endpoint of the formula");
}

}  // namespace detail

/// Discrete-time interval in closed form: (l,u) becomes [l+1,u-1] and so on.
inline TimeInterval closed_integer_interval(const TimeInterval& i) {
  for (const Bound* b : {&i.lo, &i.hi})
    if (b->is_finite() && !is_integer(b->value()))
      throw std::invalid_argument("non-integer endpoint " + b->str() + " in a discrete-endpoint formula");
  return to_time_interval(integer_points(i));
}

/// Rewrites every interval of a discrete-endpoint formula to closed form.
inline Formula closed_integer_form(const Formula& f) {
  return map_modalities(f, [](const Formula& n, Formula a, Formula b) {
    return modality(n.kind(), closed_integer_interval(n.interval()), a, b, n.matching());
  });
}

/// Reals-to-integers canonical adaptation.
inline Formula adapt_R(const Formula& f, const Rat& delta) {
  detail::require_positive(delta);
  return map_modalities(f, [&](const Formula& n, Formula a, Formula b) {
    const TimeInterval& i = n.interval();
    if (detail::is_existential(n.kind())) {
      return modality(n.kind(), TimeInterval::closed(detail::div_floor(i.lo, delta), detail::div_ceil(i.hi, delta)), a,
                      b, n.matching());
    }
    const Bound lo = i.lo_closed ? detail::div_ceil(i.lo, delta) : detail::div_floor(i.lo, delta);
    const Bound hi = i.hi_closed ? detail::div_floor(i.hi, delta) : detail::div_ceil(i.hi, delta);
    return modality(n.kind(), TimeInterval::make(lo, i.lo_closed, hi, i.hi_closed), a, b, n.matching());
  });
}

/// Integers-to-reals canonical adaptation.  Intervals are first put in
/// closed integer form; a matching release or trigger is written out as the
/// plain operator over the explicit disjunction before the plain clause
/// applies.
inline Formula adapt_Z(const Formula& f, const Rat& delta) {
  detail::require_positive(delta);
  return map_modalities(f, [&](const Formula& n, Formula a, Formula b) {
    const TimeInterval c = closed_integer_interval(n.interval());
    const Kind k = n.kind();
    if (detail::is_existential(k)) {
      if (n.matching()) {
        return modality(k, TimeInterval::open((c.lo + Bound(-1)).scaled(delta), (c.hi + Bound(1)).scaled(delta)), a, b,
                        true);
      }
      Formula b2 = k == Kind::until ? becf(b) : becp(b);
      return modality(k, TimeInterval::open((c.lo + Bound(-2)).scaled(delta), (c.hi + Bound(1)).scaled(delta)), a, b2,
                      false);
    }
    Formula b2 = n.matching() ? disj(b, a) : b;
    return modality(k, TimeInterval::closed((c.lo + Bound(1)).scaled(delta), (c.hi + Bound(-1)).scaled(delta)), a, b2,
                    false);
  });
}

/// Under-approximation; defined when delta divides every non-zero endpoint.
inline Formula under_approx(const Formula& f, const Rat& delta) {
  detail::require_in_D(f, delta);
  return map_modalities(f, [&](const Formula& n, Formula a, Formula b) {
    const TimeInterval& i = n.interval();
    if (detail::is_existential(n.kind()))
      return modality(n.kind(), TimeInterval::closed(i.lo.divided(delta), i.hi.divided(delta)), a, b, n.matching());
    return modality(n.kind(), TimeInterval::make(i.lo.divided(delta), i.lo_closed, i.hi.divided(delta), i.hi_closed),
                    a, b, n.matching());
  });
}

/// Over-approximation; defined when delta divides every non-zero endpoint.
/// Until and since become their matching variants.
inline Formula over_approx(const Formula& f, const Rat& delta) {
  detail::require_in_D(f, delta);
  return map_modalities(f, [&](const Formula& n, Formula a, Formula b) {
    const TimeInterval& i = n.interval();
    if (detail::is_existential(n.kind())) {
      return modality(n.kind(),
                      TimeInterval::closed(i.lo.divided(delta) + Bound(1), i.hi.divided(delta) + Bound(-1)), a, b,
                      true);
    }
    return modality(n.kind(), TimeInterval::closed(i.lo.divided(delta) + Bound(-1), i.hi.divided(delta) + Bound(1)),
                    a, b, n.matching());
  });
}

}  // namespace mtlsample
