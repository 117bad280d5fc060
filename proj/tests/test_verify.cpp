#include "mtlsample/behavior_io.hpp"
#include "mtlsample/spec_io.hpp"
#include "mtlsample/verify.hpp"

#include <gtest/gtest.h>

using namespace mtlsample;

namespace {

Rat q(long n, long d = 1) { return make_rat(n, d); }
Formula P(const char* s) { return parse_formula(s); }
const Alphabet AP(std::vector<std::string>{"p"});

SystemSpec table2() { return make_spec({P("Som(p) & Som(!p)"), P("p -> G(p)")}, P("p -> F[1,1](p)")); }
SystemSpec example45(const char* g) {
  return make_spec({P("Som(p) & Som(!p)"), P(g)}, P("p -> G[1,1](p)"));
}

}  // namespace

TEST(BuildModels, Table2) {
  Models m = build_models(table2(), q(1));
  Formula want_over = implies(conj(always(P("Som(p) & Som(!p)")), always(P("p -> G(p)"))),
                              always(over_approx(P("p -> F[1,1](p)"), q(1))));
  EXPECT_EQ(m.over, want_over);
  Formula want_under = implies(conj(always(over_approx(P("Som(p) & Som(!p)"), q(1))), always(P("p -> G[-1,inf)(p)"))),
                               always(P("p -> F[1,1](p)")));
  EXPECT_EQ(m.under, want_under);
  EXPECT_THROW(build_models(table2(), q(2)), std::domain_error);
}

TEST(BuildModels, EmptySystem) {
  SystemSpec s = make_spec({}, P("p"));
  Models m = build_models(s, q(1));
  EXPECT_EQ(m.over, P("Alw(p)"));
  EXPECT_EQ(m.under, P("Alw(p)"));
}

TEST(BuildModels, Example45UnderApproximatedSystem) {
  Models m = build_models(example45("p -> G[1/2,inf)(p)"), q(1, 2));
  // antecedent of the over-model carries p -> G[1,inf)(p)
  ASSERT_EQ(m.over.kind(), Kind::disj);
  EXPECT_EQ(m.over.lhs(), negate(conj(always(P("Som(p) & Som(!p)")), always(P("p -> G[1,inf)(p)")))));
  EXPECT_EQ(m.over.rhs(), always(P("p -> G[1,3](p)")));
}

TEST(ZValid, Tautology) {
  for (int k : {0, 1, 4}) {
    ZValidResult r = z_valid(P("p | !p"), AP, k);
    EXPECT_TRUE(r.valid);
    EXPECT_EQ(r.bound, k);
  }
  EXPECT_TRUE(z_valid(P("true"), Alphabet(), 3).valid);
}

TEST(ZValid, FirstWitnessIsDeterministic) {
  ZValidResult r = z_valid(P("p"), AP, 3);
  ASSERT_FALSE(r.valid);
  // the very first behaviour enumerated is constantly false
  EXPECT_EQ(*r.witness, DiscreteBehavior::constant(AP, 0));
  EXPECT_EQ(r.instant, 0);
  ZValidResult g = z_valid(P("G[0,3](p) | !p"), AP, 5);
  ASSERT_FALSE(g.valid);
  for (unsigned t : {1u, 2u, 3u, 8u}) {
    ZValidResult h = z_valid(P("G[0,3](p) | !p"), AP, 5, t);
    EXPECT_EQ(*h.witness, *g.witness);
    EXPECT_EQ(h.instant, g.instant);
  }
  EXPECT_FALSE(eval_discrete(P("G[0,3](p) | !p"), *g.witness, g.instant));
}

TEST(ZValid, MonotoneInBound) {
  Formula f = P("Alw(p -> F[2,2](!p)) -> Alw(!p)");
  std::optional<int> first;
  for (int k = 0; k <= 6; ++k) {
    ZValidResult r = z_valid(f, AP, k);
    if (!r.valid && !first) first = k;
    if (first) {
      EXPECT_FALSE(r.valid) << k;
      EXPECT_FALSE(globally_sat_discrete(f, *r.witness));
    }
  }
  EXPECT_TRUE(first.has_value());
}

TEST(ZValid, Errors) {
  EXPECT_THROW(z_valid(P("q"), AP, 2), std::invalid_argument);
  EXPECT_THROW(z_valid(P("F[0,1/2](p)"), AP, 2), std::invalid_argument);
}

TEST(ZValid, Example44Models) {
  Models m = build_models(table2(), q(1));
  ZValidResult over = z_valid(m.over, AP, 3);
  ASSERT_FALSE(over.valid);
  // the witness switches p on once and satisfies the antecedent
  const DiscreteBehavior& w = *over.witness;
  EXPECT_EQ(w.left_tail(), 0u);
  EXPECT_EQ(w.right_tail(), 1u);
  EXPECT_TRUE(globally_sat_discrete(P("Som(p) & Som(!p)"), w));
  EXPECT_TRUE(globally_sat_discrete(P("p -> G(p)"), w));
  EXPECT_FALSE(globally_sat_discrete(P("Alw(!p)"), w));
  EXPECT_TRUE(z_valid(m.under, AP, 3).valid);
  EXPECT_TRUE(z_valid(m.under, AP, 5).valid);
}

TEST(Verify, Example44Fails) {
  for (int k : {3, 5}) {
    Verdict v = mtl_verify(q(1), table2(), k);
    EXPECT_EQ(v.outcome, Outcome::fail);
    EXPECT_EQ(v.summary(), "fail (bounded, k=" + std::to_string(k) + ")");
    EXPECT_FALSE(v.counterexample.has_value());
  }
}

TEST(Verify, Example45Verified) {
  Verdict v = mtl_verify(q(1), example45("p -> G[1,inf)(p)"), 5);
  EXPECT_EQ(v.outcome, Outcome::verified);
  EXPECT_EQ(v.summary(), "verified (bounded, k=5)");
  Verdict h = mtl_verify(q(1, 2), example45("p -> G[1/2,inf)(p)"), 5);
  EXPECT_EQ(h.outcome, Outcome::verified);
}

TEST(Verify, DiamondPropertyIsNotProvable) {
  SystemSpec s = make_spec({P("Som(p) & Som(!p)"), P("p -> G[1,inf)(p)")}, P("p -> F[1,1](p)"));
  EXPECT_EQ(mtl_verify(q(1), s, 5).outcome, Outcome::fail);
}

TEST(Verify, TopPropertyIsVerified) {
  EXPECT_EQ(mtl_verify(q(1), make_spec({P("p -> G(p)")}, P("true")), 3).outcome, Outcome::verified);
  EXPECT_EQ(mtl_verify(q(1), make_spec({}, P("p | !p")), 2).outcome, Outcome::verified);
}

TEST(Verify, Refutation) {
  SystemSpec s = make_spec({P("Som(p)")}, P("p"));
  Verdict v = mtl_verify(q(1), s);
  ASSERT_EQ(v.outcome, Outcome::refuted);
  EXPECT_EQ(v.qualifier, "exhaustive-at-bound");
  ASSERT_TRUE(v.counterexample);
  EXPECT_TRUE(globally_sat_discrete(over_approx(P("Som(p)"), q(1)), *v.counterexample));
  EXPECT_FALSE(eval_discrete(under_approx(P("p"), q(1)), *v.counterexample, v.instant));
  EXPECT_EQ(v.bound, default_bound(v.models));
}

TEST(Verify, DefaultBound) {
  Models m = build_models(table2(), q(1));
  // largest magnitude in the models is 2 (from the empty window [2,0])
  EXPECT_EQ(default_bound(m), 9);
}

TEST(Verify, RejectsNonFlat) {
  EXPECT_THROW(mtl_verify(q(1), make_spec({}, P("F(G(p))")), 2), std::invalid_argument);
}

TEST(SpecIO, Table2File) {
  SystemSpec s = parse_spec(
      "# comment\n"
      "sys:\n"
      "  Som(p) & Som(!p)\n"
      "  p -> G(p)   # trailing\n"
      "prop:\n"
      "  p -> F[1,1](p)\n");
  EXPECT_EQ(s.sys.size(), 2u);
  EXPECT_EQ(s.prop, P("p -> F[1,1](p)"));
  EXPECT_EQ(s.alphabet.names(), std::vector<std::string>{"p"});
}

TEST(SpecIO, EmptySystem) {
  SystemSpec s = parse_spec("sys:\nprop:\n  q\n");
  EXPECT_TRUE(s.sys.empty());
  EXPECT_EQ(s.prop, P("q"));
}

TEST(SpecIO, Errors) {
  try {
    parse_spec("sys:\n  Som(p)\nprop:\n  F(G(p))\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 4);
    EXPECT_NE(std::string(e.what()).find("G(p) is nested inside F(G(p))"), std::string::npos) << e.what();
  }
  try {
    parse_spec("sys:\n  p &\nprop:\n  q\n");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
  }
  EXPECT_THROW(parse_spec("p\n"), ParseError);
  EXPECT_THROW(parse_spec("sys:\n p\n"), ParseError);
  EXPECT_THROW(parse_spec("prop:\n p\n q\n"), ParseError);
}

TEST(SpecIO, NestingLocator) {
  auto n = first_nesting(P("p -> F[0,3)(now(G[2,2](q)))"));
  ASSERT_TRUE(n);
  EXPECT_EQ(n->first, P("F[0,3)(now(G[2,2](q)))"));
  EXPECT_EQ(n->second, P("now(G[2,2](q))"));
  EXPECT_FALSE(first_nesting(P("Som(p) & U(p, q)")));
}
