#include <gtest/gtest.h>

#include <random>

#include "powerdom/constructions.hpp"
#include "powerdom/critical.hpp"
#include "powerdom/solvers.hpp"
#include "test_support.hpp"

namespace powerdom {
namespace {

TEST(MinZeroForcing, Examples) {
  EXPECT_EQ(min_zero_forcing(debruijn(2, 2)).minimum, 2u);
  EXPECT_EQ(min_zero_forcing(kautz(2, 3)).minimum, 6u);
  const auto path = min_zero_forcing(Digraph::build(3, {{0, 1}, {1, 2}}));
  EXPECT_EQ(path.minimum, 1u);
  EXPECT_EQ(path.witness.members(), (std::vector<Vertex>{0}));
}

TEST(MinPowerDominating, Examples) {
  EXPECT_EQ(min_power_dominating(debruijn(2, 2)).minimum, 1u);
  EXPECT_EQ(min_power_dominating(debruijn(2, 3)).minimum, 2u);
  EXPECT_EQ(min_power_dominating(kautz(2, 3)).minimum, 3u);
}

TEST(Solver, WitnessIsLexLeastAndCounted) {
  const Digraph g = debruijn(2, 2);
  const auto r = min_power_dominating(g);
  ASSERT_TRUE(r.exact());
  for (Vertex v = 0; v < r.witness.members().front(); ++v)
    EXPECT_FALSE(is_power_dominating(g, VertexSet::from_indices(4, {v})));
  EXPECT_TRUE(is_power_dominating(g, r.witness));
  // Empty set, then singletons up to and including the witness.
  EXPECT_EQ(r.nodes_explored, 1u + r.witness.members().front() + 1u);
}

TEST(Solver, HintStartsTheSweep) {
  SolveOptions options;
  options.lower_bound_hint = 18;
  const auto r = min_zero_forcing(debruijn(3, 3), ForcerRule::any_forcer, options);
  ASSERT_TRUE(r.exact());
  EXPECT_EQ(r.minimum, 18u);
  EXPECT_TRUE(is_zero_forcing(debruijn(3, 3), r.witness));
}

TEST(Solver, BudgetExhaustionGivesBounds) {
  SolveOptions options;
  options.budget.max_nodes = 100;
  const Digraph g = kautz(3, 3);
  const auto r = min_power_dominating(g, options);
  EXPECT_FALSE(r.exact());
  EXPECT_FALSE(r.minimum.has_value());
  EXPECT_LE(r.lower_bound, 8u);
  EXPECT_GE(r.upper_bound, 8u);
  EXPECT_TRUE(is_power_dominating(g, r.witness));
}

TEST(Solver, LargeGraphPathMatchesMaskPath) {
  // 96 vertices forces the general engine; the hint keeps the sweep to one cardinality.
  const Digraph g = kautz(2, 6);
  SolveOptions options;
  options.lower_bound_hint = 48;
  options.budget.max_nodes = 10;
  const auto r = min_zero_forcing(g, ForcerRule::any_forcer, options);
  if (r.exact()) {
    EXPECT_TRUE(is_zero_forcing(g, r.witness));
  }
  EXPECT_EQ(r.lower_bound, 48u);
}

TEST(Solver, DeterministicAcrossWorkers) {
  for (const Digraph& g : {debruijn(2, 4), debruijn(3, 3), kautz(2, 4), kautz(3, 3)}) {
    SolveOptions one;
    SolveOptions four;
    four.workers = 4;
    const auto a = min_power_dominating(g, one);
    const auto b = min_power_dominating(g, four);
    EXPECT_EQ(a.minimum, b.minimum);
    EXPECT_EQ(a.witness, b.witness);
    EXPECT_EQ(a.nodes_explored, b.nodes_explored);
  }
}

TEST(SolverProperty, AgreesWithCoverOracleUpToFourVertices) {
  for (std::size_t n = 1; n <= 4; ++n) {
    const std::uint64_t graphs = std::uint64_t{1} << (n * n);
    for (std::uint64_t code = 0; code < graphs; ++code) {
      const Digraph g = testing::digraph_from_code(n, code);
      const auto adj = testing::to_matrix(g);
      ASSERT_EQ(*min_zero_forcing(g, ForcerRule::any_forcer).minimum, testing::min_cover_size(adj, false)) << code;
      ASSERT_EQ(*min_power_dominating(g).minimum, testing::min_cover_size(adj, true)) << code;
    }
  }
}

TEST(SolverProperty, SandwichOnClassicFamilies) {
  for (const FamilySpec spec : {FamilySpec{Family::debruijn, 2, 2}, FamilySpec{Family::debruijn, 2, 3},
                                FamilySpec{Family::debruijn, 3, 2}, FamilySpec{Family::debruijn, 2, 4},
                                FamilySpec{Family::kautz, 2, 2}, FamilySpec{Family::kautz, 2, 3},
                                FamilySpec{Family::kautz, 3, 2}}) {
    const Digraph g = generate(spec);
    const auto cert = zf_partition_bound(spec);
    const auto z = min_zero_forcing(g, ForcerRule::any_forcer);
    ASSERT_TRUE(z.exact());
    EXPECT_EQ(cert.bound, *z.minimum);
    EXPECT_EQ(*z.minimum, construction(spec, Problem::zero_forcing).size());
  }
}

TEST(Greedy, ValidAndAboveMinimum) {
  EXPECT_TRUE(is_power_dominating(debruijn(2, 2), greedy_upper_bound(debruijn(2, 2), Problem::power_domination)));
  const Digraph loop = Digraph::build(1, {{0, 0}});
  EXPECT_TRUE(greedy_upper_bound(loop, Problem::zero_forcing, ForcerRule::any_forcer).empty());
  const auto k23 = greedy_upper_bound(kautz(2, 3), Problem::power_domination);
  EXPECT_GE(k23.size(), 3u);
  EXPECT_LE(k23.size(), 12u);

  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 9;
    const Digraph g = testing::random_digraph(rng, n, 0.3);
    for (ForcerRule rule : {ForcerRule::any_forcer, ForcerRule::blue_only}) {
      const auto s = greedy_upper_bound(g, Problem::zero_forcing, rule);
      EXPECT_TRUE(is_zero_forcing(g, s, rule));
      EXPECT_GE(s.size(), *min_zero_forcing(g, rule).minimum);
    }
    const auto p = greedy_upper_bound(g, Problem::power_domination);
    EXPECT_TRUE(is_power_dominating(g, p));
    EXPECT_GE(p.size(), *min_power_dominating(g).minimum);
  }
}

TEST(OpenProblem, Examples) {
  const auto gb = open_problem_table(Family::gen_debruijn, 2, 2, 1, 4);
  ASSERT_EQ(gb.size(), 4u);
  EXPECT_EQ(gb[0].gamma_p.minimum, 1u);
  EXPECT_GE(*gb[3].gamma_p.minimum, 1u);
  EXPECT_LE(*gb[3].gamma_p.minimum, 4u);
  const auto gk = open_problem_table(Family::gen_kautz, 2, 2, 5, 5);
  EXPECT_LE(*gk[0].z_any.minimum, 5u);
  EXPECT_THROW(open_problem_table(Family::kautz, 2, 2, 2, 3), std::invalid_argument);
}

TEST(Combinatorics, UnrankMatchesIteration) {
  for (std::uint64_t n = 1; n <= 9; ++n) {
    for (std::uint64_t k = 0; k <= n; ++k) {
      std::vector<Vertex> walk(k);
      for (std::size_t i = 0; i < k; ++i) walk[i] = static_cast<Vertex>(i);
      std::vector<Vertex> direct;
      for (std::uint64_t r = 0; r < detail::binomial(n, k); ++r) {
        detail::unrank_combination(n, k, r, direct);
        ASSERT_EQ(direct, walk);
        detail::next_combination(walk, n);
      }
    }
  }
  EXPECT_EQ(detail::binomial(27, 6), 296010u);
}

}  // namespace
}  // namespace powerdom
