#include "mtlsample/formula_io.hpp"
#include "mtlsample/semantics.hpp"
#include "mtlsample/transform.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace mtlsample;

namespace {
Rat q(long n, long d = 1) { return make_rat(n, d); }
Formula P(const char* s) { return parse_formula(s); }
}  // namespace

TEST(AdaptR, Goldens) {
  EXPECT_EQ(adapt_R(P("G[0,2](p)"), q(3, 10)), P("G[0,6](p)"));
  EXPECT_EQ(to_string(adapt_R(P("G[0,2](p)"), q(3, 10))), "G[0,6](p)");
  Formula beta = P("GP(0,inf)(!p) & G(0,inf)(p)");
  for (Rat d : {q(1), q(1, 2), q(7, 3)}) {
    Formula r = adapt_R(beta, d);
    EXPECT_EQ(r, beta);  // openness is kept and 0/d = 0
    EXPECT_EQ(closed_integer_form(r), P("GP[1,inf)(!p) & G[1,inf)(p)"));
  }
  EXPECT_EQ(adapt_R(P("p & !q"), q(1, 3)), P("p & !q"));
}

TEST(AdaptR, RoundingDirections) {
  // until and since widen to the enclosing integers
  EXPECT_EQ(adapt_R(P("F(1/2,5/2)(p)"), q(1)), P("F[0,3](p)"));
  EXPECT_EQ(adapt_R(P("FP[1/3,2/3](p)"), q(1)), P("FP[0,1](p)"));
  // release and trigger shrink: closed ends round inwards, open ends outwards
  EXPECT_EQ(adapt_R(P("G[1/2,5/2](p)"), q(1)), P("G[1,2](p)"));
  EXPECT_EQ(adapt_R(P("G(1/2,5/2)(p)"), q(1)), P("G(0,3)(p)"));
  EXPECT_EQ(adapt_R(P("T[1,4](p, q)"), q(1, 2)), P("T[2,8](p, q)"));
  EXPECT_THROW(adapt_R(P("F[0,1](p)"), q(0)), std::invalid_argument);
  EXPECT_THROW(adapt_R(P("F[0,1](p)"), q(-1)), std::invalid_argument);
}

TEST(AdaptZ, Goldens) {
  EXPECT_EQ(adapt_Z(P("q -> G[2,5](p)"), q(1)), P("q -> G[3,4](p)"));
  EXPECT_EQ(to_string(adapt_Z(P("q -> G[2,5](p)"), q(1))), "!q | G[3,4](p)");
  EXPECT_EQ(adapt_Z(P("UM[1,2](true, p)"), q(3, 10)), P("UM(0,9/10)(true, p)"));
  EXPECT_EQ(adapt_Z(P("p"), q(1, 2)), P("p"));
}

TEST(AdaptZ, UntilUsesBecomesTrue) {
  EXPECT_EQ(adapt_Z(P("U[2,5](p, q)"), q(1)), P("U(0,6)(p, becf(q))"));
  EXPECT_EQ(adapt_Z(P("S[0,1](p, q)"), q(1, 2)), P("S(-1,1)(p, becp(q))"));
  // open discrete intervals are closed first
  EXPECT_EQ(adapt_Z(P("G(1,5)(p)"), q(1)), P("G[3,3](p)"));
  EXPECT_EQ(adapt_Z(P("G(1,inf)(p)"), q(1)), P("G[3,inf)(p)"));
  EXPECT_EQ(adapt_Z(P("F(-inf,0](p)"), q(1)), P("F(-inf,1)(becf(p))"));
  // matching release is written out before the plain clause applies
  EXPECT_EQ(adapt_Z(P("RM[1,3](p, q)"), q(1)), P("R[2,2](p, q | p)"));
  EXPECT_THROW(adapt_Z(P("G[0,3/2](p)"), q(1)), std::invalid_argument);
}

TEST(UnderApprox, Examples) {
  for (long k = 1; k <= 4; ++k) {
    Formula f = under_approx(P("p -> F[1,1](p)"), q(1, k));
    Formula want = implies(prop("p"), eventually(TimeInterval::point(q(k)), prop("p")));
    EXPECT_EQ(f, want);
    EXPECT_EQ(under_approx(P("p -> G(p)"), q(1, k)), P("p -> G(p)"));
  }
  // until bounds become closed, release keeps openness
  EXPECT_EQ(under_approx(P("U(1,2)(p, q) & R(1,2](p, q)"), q(1)), P("U[1,2](p, q) & R(1,2](p, q)"));
  EXPECT_EQ(under_approx(P("Som(p) & Som(!p)"), q(1)), P("Som(p) & Som(!p)"));
  EXPECT_THROW(under_approx(P("F[1,1](p)"), q(2, 3)), std::domain_error);
  EXPECT_EQ(under_approx(P("p"), q(5, 7)), P("p"));
}

TEST(OverApprox, Examples) {
  for (long k = 1; k <= 4; ++k) {
    Formula f = over_approx(P("p -> F[1,1](p)"), q(1, k));
    Formula want = implies(prop("p"), until(TimeInterval::closed(q(k + 1), q(k - 1)), top(), prop("p"), true));
    EXPECT_EQ(f, want);
    EXPECT_EQ(over_approx(P("p -> G(p)"), q(1, k)), P("p -> G[-1,inf)(p)"));
  }
  EXPECT_EQ(over_approx(P("R(0,2)(p, q)"), q(1, 2)), P("R[-1,5](p, q)"));
  EXPECT_EQ(over_approx(P("Som(p)"), q(1)), P("SM[1,inf)(true, p) | UM[1,inf)(true, p)"));
  EXPECT_THROW(over_approx(P("F[1,1](p)"), q(2)), std::domain_error);
  EXPECT_EQ(over_approx(P("!p"), q(1)), P("!p"));
}

TEST(OverApprox, EmptyWindowMeansNotP) {
  // semantically the over-approximation of p -> F[1,1](p) is !p
  std::mt19937_64 rng(1);
  const Alphabet ap(std::vector<std::string>{"p"});
  for (long k = 1; k <= 3; ++k) {
    Formula o = over_approx(P("p -> F[1,1](p)"), q(1, k));
    for (int it = 0; it < 50; ++it) {
      std::vector<Valuation> core;
      for (int i = 0; i < 6; ++i) core.push_back(static_cast<Valuation>(rng() % 2));
      DiscreteBehavior d(ap, static_cast<Valuation>(rng() % 2), -3, core, static_cast<Valuation>(rng() % 2));
      EXPECT_EQ(sat_seq(o, d), sat_seq(P("!p"), d));
    }
  }
}

TEST(UnderApprox, CoincidesWithAdaptRInsideD) {
  std::mt19937_64 rng(9);
  for (int it = 0; it < 300; ++it) {
    const long den = 1 + static_cast<long>(rng() % 4);
    const Rat delta = q(1, den);
    auto bound = [&]() { return Bound(q(static_cast<long>(rng() % 9) - 3, 1 + static_cast<long>(rng() % 2))); };
    Bound lo = bound(), hi = bound();
    if (hi < lo) std::swap(lo, hi);
    if (rng() % 3 == 0) hi = Bound::pos_inf();
    TimeInterval iv = TimeInterval::make(lo, rng() % 2, hi, rng() % 2);
    const Kind kinds[] = {Kind::until, Kind::since, Kind::release, Kind::trigger};
    Formula f = modality(kinds[rng() % 4], iv, prop("p"), neg_prop("q"));
    if (!in_D(f, delta)) continue;
    Formula a = adapt_R(f, delta);
    Formula u = under_approx(f, delta);
    EXPECT_EQ(closed_integer_form(a), closed_integer_form(u)) << to_string(f) << " delta " << to_string(delta);
    if (f.kind() == Kind::release || f.kind() == Kind::trigger) {
      EXPECT_EQ(a, u) << to_string(f);
    }
  }
}
