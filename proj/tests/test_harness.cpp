#include "mtlsample/behavior_io.hpp"
#include "mtlsample/formula_io.hpp"
#include "mtlsample/generators.hpp"
#include "mtlsample/harness.hpp"
#include "mtlsample/semantics.hpp"
#include "mtlsample/transform.hpp"

#include <gtest/gtest.h>

#include <functional>
#include <set>

using namespace mtlsample;

namespace {

Rat q(long n, long d = 1) { return make_rat(n, d); }

bool any_node(const Formula& f, const std::function<bool(const Formula&)>& pred) {
  if (pred(f)) return true;
  switch (f.kind()) {
    case Kind::prop:
    case Kind::neg_prop: return false;
    default: return any_node(f.lhs(), pred) || any_node(f.rhs(), pred);
  }
}

}  // namespace

TEST(Seeds, DerivedSeedsAreStableAndSpread) {
  EXPECT_EQ(derive_seed(1, 0), derive_seed(1, 0));
  std::set<std::uint64_t> seen;
  for (std::uint64_t i = 0; i < 1000; ++i) seen.insert(derive_seed(42, i));
  EXPECT_EQ(seen.size(), 1000u);
  EXPECT_NE(derive_seed(1, 5), derive_seed(2, 5));
}

TEST(Generators, SameSeedSameDraws) {
  GenConfig cfg;
  for (std::uint64_t i = 0; i < 50; ++i) {
    Rng a(derive_seed(9, i)), b(derive_seed(9, i));
    EXPECT_EQ(gen_flat_formula(a, cfg, EndpointKind::dense), gen_flat_formula(b, cfg, EndpointKind::dense));
    EXPECT_EQ(gen_non_berkeley(a, cfg, q(1, 2)), gen_non_berkeley(b, cfg, q(1, 2)));
    EXPECT_EQ(gen_discrete(a, cfg), gen_discrete(b, cfg));
  }
}

TEST(Generators, FlatFormulasAreFlatTemporalAndInNormalForm) {
  GenConfig cfg;
  cfg.alphabet_size = 3;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(3, i));
    const Formula f = gen_flat_formula(rng, cfg, i % 2 ? EndpointKind::dense : EndpointKind::discrete);
    ASSERT_TRUE(is_flat(f)) << to_string(f);
    ASSERT_EQ(temporal_depth(f), 1) << to_string(f);
    ASSERT_EQ(negate(negate(f)), f) << to_string(f);
    for (const auto& l : letters(f)) ASSERT_TRUE(l == "p" || l == "q" || l == "r") << l;
  }
}

TEST(Generators, DiscreteEndpointsAreIntegers) {
  GenConfig cfg;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng(derive_seed(4, i));
    const Formula f = gen_flat_formula(rng, cfg, EndpointKind::discrete);
    for (const auto& e : nonzero_endpoints(f)) ASSERT_TRUE(is_integer(e)) << to_string(f);
  }
}

TEST(Generators, MatchingVariantsAreDrawn) {
  GenConfig cfg;
  int matching = 0, plain = 0;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(5, i));
    const Formula f = core(gen_flat_formula(rng, cfg, EndpointKind::dense));
    if (any_node(f, [](const Formula& g) { return is_modality(g.kind()) && g.matching(); })) ++matching;
    else ++plain;
  }
  EXPECT_GT(matching, 50);
  EXPECT_GT(plain, 50);
  cfg.matching = false;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng(derive_seed(5, i));
    const Formula f = core(gen_flat_formula(rng, cfg, EndpointKind::dense));
    EXPECT_FALSE(any_node(f, [](const Formula& g) { return is_modality(g.kind()) && g.matching(); })) << to_string(f);
  }
}

TEST(Generators, DepthZeroIsPropositional) {
  GenConfig cfg;
  cfg.max_depth = 0;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(derive_seed(6, i));
    EXPECT_TRUE(is_propositional(gen_flat_formula(rng, cfg, EndpointKind::dense)));
    EXPECT_TRUE(is_propositional(gen_formula(rng, cfg, 0)));
  }
}

TEST(Generators, NestedAndQualitativeFormulas) {
  GenConfig cfg;
  for (std::uint64_t i = 0; i < 300; ++i) {
    Rng rng(derive_seed(7, i));
    EXPECT_LE(temporal_depth(gen_formula(rng, cfg, 2)), 2);
    const Formula l = gen_ltl(rng, cfg, 2);
    EXPECT_TRUE(is_ltl(l)) << to_string(l);
    EXPECT_LE(temporal_depth(l), 2);
  }
}

TEST(Generators, NonBerkeleyForSmallerPeriods) {
  GenConfig cfg;
  cfg.max_segments = 8;
  for (std::uint64_t i = 0; i < 500; ++i) {
    Rng rng(derive_seed(8, i));
    const Rat delta = cfg.deltas[i % cfg.deltas.size()];
    const DenseBehavior b = gen_non_berkeley(rng, cfg, delta);
    ASSERT_TRUE(is_non_berkeley(b, delta)) << to_text(b);
    ASSERT_TRUE(is_non_berkeley(b, delta / 2)) << to_text(b);
    ASSERT_TRUE(is_non_berkeley(b, delta / 3)) << to_text(b);
  }
  Rng rng(1);
  EXPECT_THROW(gen_non_berkeley(rng, cfg, q(0)), std::invalid_argument);
}

TEST(Generators, OriginsAreDistinctAndEnough) {
  GenConfig cfg;
  for (std::uint64_t i = 0; i < 200; ++i) {
    Rng rng(derive_seed(10, i));
    const DenseBehavior b = gen_non_berkeley(rng, cfg, q(1));
    for (int count : {1, 3, 6}) {
      const auto zs = gen_origins(rng, b, q(1), count);
      EXPECT_GE(zs.size(), static_cast<std::size_t>(std::max(3, count)));
      EXPECT_EQ(std::set<Rat>(zs.begin(), zs.end()).size(), zs.size());
    }
  }
}

TEST(Config, Validation) {
  GenConfig cfg;
  EXPECT_NO_THROW(cfg.validate());
  cfg.alphabet_size = 4;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = GenConfig{};
  cfg.deltas = {q(0)};
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
  cfg = GenConfig{};
  cfg.max_depth = 3;
  EXPECT_THROW(cfg.validate(), std::invalid_argument);
}

TEST(Suites, ReportsDoNotDependOnThreads) {
  GenConfig cfg;
  cfg.instances = 40;
  cfg.threads = 1;
  const SuiteReport a = run_suite("complement", cfg);
  cfg.threads = 4;
  const SuiteReport b = run_suite("complement", cfg);
  EXPECT_EQ(a.kept, b.kept);
  EXPECT_EQ(a.attempts, b.attempts);
  EXPECT_EQ(a.checks, b.checks);
  EXPECT_EQ(a.counters, b.counters);
  EXPECT_EQ(a.status(), "PASS");
}

TEST(Suites, SmallRunsPass) {
  GenConfig cfg;
  cfg.instances = 60;
  for (const char* name : {"cuis", "over", "lemma28", "shiftability", "complement", "oracle"}) {
    const SuiteReport r = run_suite(name, cfg);
    EXPECT_EQ(r.status(), "PASS") << r.text(true);
    EXPECT_EQ(r.kept, 60) << name;
  }
}

TEST(Suites, UnknownNameThrows) {
  EXPECT_THROW(run_suite("nope", GenConfig{}), std::invalid_argument);
  EXPECT_EQ(suite_names().size(), 11u);
}

TEST(Suites, ReportStatus) {
  SuiteReport r;
  r.target = 10;
  r.kept = 10;
  EXPECT_EQ(r.status(), "PASS");
  r.filtered = true;
  EXPECT_EQ(r.status(), "UNDERPOWERED");
  r.filtered = false;
  r.kept = 9;
  EXPECT_EQ(r.status(), "INCOMPLETE");
  r.violations = 1;
  EXPECT_EQ(r.status(), "FAIL");
  EXPECT_EQ(r.summary()["status"], "FAIL");
}

// A release whose first argument only becomes true between two samples.
// The formula holds everywhere in dense time but its canonical adaptation
// fails on the sample at instant 0.
TEST(SamplingClosure, ReleaseWitnessBetweenSamples) {
  const Alphabet ap(std::vector<std::string>{"q"});
  const DenseBehavior b(ap, {q(5, 2)}, {1}, {1, 0});
  ASSERT_TRUE(is_non_berkeley(b, q(1)));
  const Formula f = parse_formula("R[3,3](!q, q)");
  EXPECT_TRUE(globally_sat_dense(f, b));
  for (const Rat& t : {q(-1), q(-1, 2), q(0), q(1, 2), q(5, 2), q(3)}) EXPECT_TRUE(grid_oracle_dense(f, b, t));
  const Formula a = adapt_R(f, q(1));
  EXPECT_EQ(a, f);
  const DiscreteBehavior d = sample(b, {q(1), q(0)});
  EXPECT_FALSE(eval_discrete(a, d, 0));
  EXPECT_FALSE(globally_sat_discrete(a, d));
}
