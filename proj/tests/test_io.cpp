#include "mtlsample/behavior_io.hpp"
#include "mtlsample/formula_io.hpp"
#include "mtlsample/generators.hpp"
#include "mtlsample/spec_io.hpp"

#include <gtest/gtest.h>

using namespace mtlsample;

namespace {
const std::string data = MTLSAMPLE_DATA_DIR;
}

TEST(RoundTrip, GeneratedFormulas) {
  GenConfig cfg;
  cfg.alphabet_size = 3;
  cfg.max_depth = 2;
  for (std::uint64_t i = 0; i < 2000; ++i) {
    Rng rng(derive_seed(21, i));
    const EndpointKind kind = i % 2 ? EndpointKind::dense : EndpointKind::discrete;
    for (const Formula& f : {gen_flat_formula(rng, cfg, kind), gen_formula(rng, cfg, 2, kind), gen_ltl(rng, cfg, 2)}) {
      ASSERT_EQ(parse_formula(to_string(f)), f) << to_string(f);
      ASSERT_EQ(parse_formula(to_string(f, true)), core(f)) << to_string(f, true);
    }
  }
}

TEST(RoundTrip, GeneratedBehaviours) {
  GenConfig cfg;
  cfg.alphabet_size = 3;
  cfg.max_segments = 8;
  for (std::uint64_t i = 0; i < 1000; ++i) {
    Rng rng(derive_seed(22, i));
    const DenseBehavior b = gen_non_berkeley(rng, cfg, cfg.deltas[i % cfg.deltas.size()]);
    ASSERT_EQ(parse_dense_behavior(to_text(b)), b) << to_text(b);
    const DiscreteBehavior d = gen_discrete(rng, cfg);
    ASSERT_EQ(parse_discrete_behavior(to_text(d)), d) << to_text(d);
  }
}

TEST(DataFiles, SpecsLoad) {
  EXPECT_EQ(load_spec(data + "/table2.spec").sys.size(), 2u);
  EXPECT_EQ(load_spec(data + "/example45.spec").prop, parse_formula("p -> G[1,1](p)"));
  EXPECT_EQ(load_spec(data + "/example45_half.spec").sys[1], parse_formula("p -> G[1/2,inf)(p)"));
  EXPECT_EQ(load_spec(data + "/refutable.spec").sys.size(), 1u);
  EXPECT_EQ(load_spec(data + "/example45_original_prop.spec").prop, parse_formula("p -> F[1,1](p)"));
  EXPECT_THROW(load_spec(data + "/nonflat.spec"), ParseError);
  EXPECT_THROW(load_spec(data + "/missing.spec"), std::runtime_error);
}

TEST(DataFiles, FormulaAndBehaviours) {
  EXPECT_EQ(parse_formula(read_file(data + "/beta.mtl")), parse_formula("GP(0,inf)(!p) & G(0,inf)(p)"));
  const DenseBehavior step = parse_dense_behavior(read_file(data + "/step.beh"));
  EXPECT_EQ(step.points().size(), 1u);
  const DiscreteBehavior d = parse_discrete_behavior(read_file(data + "/step_discrete.beh"));
  EXPECT_EQ(d, sample(step, {make_rat(1), make_rat(0)}));
}
