#include "mtlsample/interval.hpp"
#include "mtlsample/sets.hpp"

#include <gtest/gtest.h>

using namespace mtlsample;

namespace {

Rat q(long n, long d = 1) { return make_rat(n, d); }

}  // namespace

TEST(Rational, ParseAndPrint) {
  EXPECT_EQ(*parse_rat("3/10"), q(3, 10));
  EXPECT_EQ(*parse_rat("-6/4"), q(-3, 2));
  EXPECT_EQ(*parse_rat("+7"), q(7));
  EXPECT_FALSE(parse_rat("0.5").has_value());
  EXPECT_FALSE(parse_rat("1/0").has_value());
  EXPECT_FALSE(parse_rat("").has_value());
  EXPECT_EQ(to_string(q(20, 6)), "10/3");
  EXPECT_EQ(floor_of(q(-1, 2)), -1);
  EXPECT_EQ(ceil_of(q(-1, 2)), 0);
  EXPECT_EQ(ceil_of(q(20, 3)), 7);
}

TEST(Bound, InfinityArithmetic) {
  EXPECT_EQ(Bound::pos_inf() + Bound(q(3)), Bound::pos_inf());
  EXPECT_EQ(Bound::neg_inf() + Bound(q(-3)), Bound::neg_inf());
  EXPECT_EQ(Bound::pos_inf().divided(q(3, 10)), Bound::pos_inf());
  EXPECT_THROW(Bound::pos_inf() + Bound::neg_inf(), std::domain_error);
  EXPECT_LT(Bound::neg_inf(), Bound(q(-100)));
  EXPECT_LT(Bound(q(100)), Bound::pos_inf());
  EXPECT_EQ(-Bound::pos_inf(), Bound::neg_inf());
  EXPECT_EQ(Bound(q(2)).divided(q(3, 10)), Bound(q(20, 3)));
  EXPECT_EQ(Bound(q(20, 3)).floored(), Bound(q(6)));
}

TEST(TimeInterval, EmptinessAndLength) {
  EXPECT_TRUE(TimeInterval::closed(q(2), q(1)).empty());
  EXPECT_TRUE(TimeInterval::make(q(1), true, q(1), false).empty());
  EXPECT_FALSE(TimeInterval::point(q(1)).empty());
  EXPECT_EQ(TimeInterval::closed(q(2), q(1)).length(), Bound(q(0)));
  EXPECT_EQ(TimeInterval::closed(q(1), q(4)).length(), Bound(q(3)));
  EXPECT_EQ(TimeInterval::nonnegative().length(), Bound::pos_inf());
  // infinite ends are never closed
  TimeInterval u = TimeInterval::make(Bound::neg_inf(), true, Bound::pos_inf(), true);
  EXPECT_FALSE(u.lo_closed);
  EXPECT_FALSE(u.hi_closed);
}

TEST(TimeInterval, NegationShiftAndPrint) {
  TimeInterval i = TimeInterval::make(q(1), true, q(3), false);
  EXPECT_EQ(i.negated(), TimeInterval::make(q(-3), false, q(-1), true));
  EXPECT_EQ(i.shifted(q(1, 2)), TimeInterval::make(q(3, 2), true, q(7, 2), false));
  EXPECT_EQ(i.str(), "[1,3)");
  EXPECT_EQ(TimeInterval::positive().str(), "(0,inf)");
  EXPECT_TRUE(i.contains(q(1)));
  EXPECT_FALSE(i.contains(q(3)));
}

TEST(TimeInterval, IntegerPoints) {
  ZInterval z = integer_points(TimeInterval::open(q(0), q(5)));
  EXPECT_EQ(z.lo, ZBound::of(1));
  EXPECT_EQ(z.hi, ZBound::of(4));
  z = integer_points(TimeInterval::closed(q(1, 2), q(7, 2)));
  EXPECT_EQ(z.lo, ZBound::of(1));
  EXPECT_EQ(z.hi, ZBound::of(3));
  z = integer_points(TimeInterval::positive());
  EXPECT_EQ(z.lo, ZBound::of(1));
  EXPECT_EQ(z.hi, ZBound::pos_inf());
  EXPECT_EQ(to_time_interval(z), TimeInterval::make(q(1), true, Bound::pos_inf(), false));
}

TEST(RealSet, NormalizationMergesTouchingPieces) {
  RealSet s({TimeInterval::make(q(0), true, q(1), false), TimeInterval::closed(q(1), q(2))});
  ASSERT_EQ(s.components().size(), 1u);
  EXPECT_EQ(s.components()[0], TimeInterval::closed(q(0), q(2)));
  // (0,1) and (1,2) do not touch: 1 is missing
  RealSet g({TimeInterval::open(q(0), q(1)), TimeInterval::open(q(1), q(2))});
  EXPECT_EQ(g.components().size(), 2u);
  EXPECT_FALSE(g.contains(q(1)));
}

TEST(RealSet, ComplementPartitionsLine) {
  RealSet s({TimeInterval::make(q(0), true, q(1), false), TimeInterval::point(q(3))});
  RealSet c = s.complement();
  EXPECT_TRUE(s.intersect(c).is_empty());
  EXPECT_TRUE(s.unite(c).is_universe());
  EXPECT_TRUE(c.contains(q(1)));
  EXPECT_FALSE(c.contains(q(3)));
  EXPECT_TRUE(c.contains(q(-7)));
  EXPECT_EQ(c.complement(), s);
}

TEST(RealSet, ShiftBack) {
  // {t | t + d in [2,3] for some d in [0,1)} = (1,3]
  RealSet s = RealSet::of(TimeInterval::closed(q(2), q(3)));
  RealSet r = s.shift_back(TimeInterval::make(q(0), true, q(1), false));
  EXPECT_EQ(r, RealSet::of(TimeInterval::make(q(1), false, q(3), true)));
  EXPECT_TRUE(s.shift_back(TimeInterval::closed(q(2), q(1))).is_empty());
}

TEST(RealSet, Reversed) {
  RealSet s = RealSet::of(TimeInterval::make(q(1), true, q(2), false));
  EXPECT_EQ(s.reversed(), RealSet::of(TimeInterval::make(q(-2), false, q(-1), true)));
}

TEST(IntSet, AdjacentMergeAndComplement) {
  IntSet s({ZInterval{ZBound::of(0), ZBound::of(2)}, ZInterval{ZBound::of(3), ZBound::of(5)}});
  ASSERT_EQ(s.components().size(), 1u);
  IntSet c = s.complement();
  EXPECT_TRUE(c.contains(-1));
  EXPECT_TRUE(c.contains(6));
  EXPECT_FALSE(c.contains(4));
  EXPECT_TRUE(s.unite(c).is_universe());
  IntSet sh = IntSet::point(3).shift_back(ZInterval{ZBound::of(1), ZBound::of(2)});
  EXPECT_EQ(sh, IntSet({ZInterval{ZBound::of(1), ZBound::of(2)}}));
}
