#include "mtlsample/formula_io.hpp"

#include <gtest/gtest.h>

using namespace mtlsample;

namespace {
Rat q(long n, long d = 1) { return make_rat(n, d); }
}  // namespace

TEST(FormulaParse, PrecedenceAndAssociativity) {
  Formula a = prop("a"), b = prop("b"), c = prop("c");
  EXPECT_EQ(parse_formula("a | b & c"), disj(a, conj(b, c)));
  EXPECT_EQ(parse_formula("a -> b -> c"), disj(neg_prop("a"), disj(neg_prop("b"), c)));
  EXPECT_EQ(parse_formula("!(a & b)"), disj(neg_prop("a"), neg_prop("b")));
  EXPECT_EQ(parse_formula("a <-> b"), iff(a, b));
  EXPECT_EQ(parse_formula("true"), top());
  EXPECT_EQ(parse_formula("false"), bottom());
}

TEST(FormulaParse, Intervals) {
  Formula u = parse_formula("U(0,5](p, q)");
  EXPECT_EQ(u.interval(), TimeInterval::make(q(0), false, q(5), true));
  EXPECT_EQ(parse_formula("G[1/2,inf)(p)").interval(), TimeInterval::make(q(1, 2), true, Bound::pos_inf(), false));
  EXPECT_EQ(parse_formula("F(-inf,-1](p)").interval(), TimeInterval::make(Bound::neg_inf(), false, q(-1), true));
  EXPECT_EQ(parse_formula("F(p)").interval(), TimeInterval::nonnegative());
  // a parenthesis after an operator name starts the argument unless a bound follows
  EXPECT_EQ(parse_formula("F((p))"), parse_formula("F(p)"));
  EXPECT_THROW(parse_formula("U(inf, p)"), ParseError);
  EXPECT_FALSE(is_letter_name("inf"));
}

TEST(FormulaParse, Errors) {
  try {
    parse_formula("p &\n  G[0,1.5](q)");
    FAIL();
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2);
    EXPECT_EQ(e.column(), 7);  // start of the bad bound "1.5"
  }
  EXPECT_THROW(parse_formula("G[0,inf](p)"), ParseError);
  EXPECT_THROW(parse_formula("U[0,1](p)"), ParseError);
  EXPECT_THROW(parse_formula("P"), ParseError);
  EXPECT_THROW(parse_formula("p q"), ParseError);
  EXPECT_THROW(parse_formula(""), ParseError);
  EXPECT_NO_THROW(parse_formula("p # trailing comment"));
}

TEST(FormulaPrint, RoundTrip) {
  for (const char* s : {"G[0,6](p)", "!q | G[3,4](p)", "GP(0,inf)(!p) & G(0,inf)(p)", "UM(0,9/10)(true, p)",
                        "(p | q) & r", "p & (q | r)", "p | q | r", "Alw(p) | Alw(!p)", "Som(p) & Som(!p)",
                        "becf(p) | becp(!q)", "U[-1,inf)(p, q)", "R(1/3,2](false, p)", "now(p)", "upto(q)",
                        "TM[1,2](p, q)", "S[0,0](p, q)"}) {
    Formula f = parse_formula(s);
    EXPECT_EQ(to_string(f), s);
    EXPECT_EQ(parse_formula(to_string(f)), f);
  }
}

TEST(FormulaPrint, Expand) {
  Formula f = parse_formula("F[1,2](p)");
  EXPECT_EQ(to_string(f, true), "U[1,2](true, p)");
  EXPECT_EQ(parse_formula(to_string(f, true)), core(f));
}
