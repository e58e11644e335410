#include <gtest/gtest.h>

#include <random>

#include "powerdom/constructions.hpp"
#include "powerdom/propagation.hpp"
#include "powerdom/topologies.hpp"
#include "test_support.hpp"

namespace powerdom {
namespace {

VertexSet set_of(std::size_t n, std::initializer_list<Vertex> v) { return VertexSet::from_indices(n, v); }

const Digraph two_cycle = Digraph::build(2, {{0, 1}, {1, 0}});

TEST(Dominate, Examples) {
  const Digraph g = debruijn(2, 2);
  EXPECT_EQ(dominate(g, set_of(4, {1})).members(), (std::vector<Vertex>{1, 2, 3}));
  EXPECT_TRUE(dominate(g, VertexSet(4)).empty());
  EXPECT_TRUE(dominate(g, VertexSet::full(4)).is_full());
}

TEST(ZeroForcing, Examples) {
  const Digraph g = debruijn(2, 2);
  EXPECT_TRUE(zf_closure(g, set_of(4, {1, 2}), ForcerRule::any_forcer).closed.is_full());
  EXPECT_TRUE(zf_closure(two_cycle, VertexSet(2), ForcerRule::any_forcer).closed.is_full());
  EXPECT_TRUE(zf_closure(two_cycle, VertexSet(2), ForcerRule::blue_only).closed.empty());
}

TEST(ZeroForcing, LoopSelfForcesOnlyUnderAnyForcer) {
  const Digraph loop = Digraph::build(1, {{0, 0}});
  const auto any = zf_closure(loop, VertexSet(1), ForcerRule::any_forcer);
  ASSERT_EQ(any.trace.events.size(), 1u);
  EXPECT_EQ(any.trace.events[0], (ForceEvent{1, 0, 0}));
  EXPECT_TRUE(zf_closure(loop, VertexSet(1), ForcerRule::blue_only).closed.empty());
}

TEST(MonitoredSet, Examples) {
  const Digraph b22 = debruijn(2, 2);
  EXPECT_TRUE(monitored_set(b22, set_of(4, {1})).closed.is_full());

  const Digraph b23 = debruijn(2, 3);
  const auto m = monitored_set(b23, set_of(8, {1, 6}));
  EXPECT_TRUE(m.closed.is_full());
  // Forcing steps 100 -> 000 and 011 -> 111 in round 2.
  std::vector<ForceEvent> forcing;
  for (const auto& e : m.trace.events)
    if (e.round > 1) forcing.push_back(e);
  EXPECT_EQ(forcing, (std::vector<ForceEvent>{{2, 3, 7}, {2, 4, 0}}));

  EXPECT_TRUE(monitored_set(b22, VertexSet(4)).closed.empty());
}

TEST(Predicates, Examples) {
  const Digraph b22 = debruijn(2, 2);
  EXPECT_TRUE(is_power_dominating(b22, set_of(4, {1})));
  EXPECT_FALSE(is_zero_forcing(b22, set_of(4, {1}), ForcerRule::any_forcer));
  EXPECT_TRUE(is_zero_forcing(kautz(2, 3), kautz_zf_set(2, 3), ForcerRule::any_forcer));
}

TEST(PropagationTime, Examples) {
  const Digraph b22 = debruijn(2, 2);
  EXPECT_EQ(propagation_time(b22, VertexSet::full(4), Problem::zero_forcing), 0u);
  EXPECT_EQ(propagation_time(b22, VertexSet::full(4), Problem::power_domination), 0u);
  EXPECT_EQ(propagation_time(b22, set_of(4, {1}), Problem::power_domination), 2u);
  EXPECT_EQ(propagation_time(two_cycle, VertexSet(2), Problem::zero_forcing, ForcerRule::blue_only), std::nullopt);
  EXPECT_EQ(propagation_time(two_cycle, VertexSet(2), Problem::zero_forcing, ForcerRule::any_forcer), 1u);
}

TEST(Closures, RejectMismatchedUniverse) {
  EXPECT_THROW(zf_closure(debruijn(2, 2), VertexSet(3)), std::invalid_argument);
  EXPECT_THROW(monitored_set(debruijn(2, 2), VertexSet(5)), std::invalid_argument);
}

// Each logged force must be legal against the blue set at the start of its
// round, and replaying the log must give the closure.
void expect_trace_is_legal(const Digraph& g, const Closure& c, ForcerRule rule, bool monitored) {
  VertexSet blue = c.trace.initial_set;
  std::size_t round = 0;
  VertexSet round_start = blue;
  std::vector<char> forced_seen(g.vertex_count(), 0);
  for (const auto& e : c.trace.events) {
    ASSERT_GE(e.round, round);
    if (e.round != round) {
      round = e.round;
      round_start = blue;
    }
    ASSERT_FALSE(round_start.contains(e.forced));
    ASSERT_EQ(forced_seen[e.forced], 0);
    forced_seen[e.forced] = 1;
    if (monitored && e.round == 1) {
      ASSERT_TRUE(c.trace.initial_set.contains(e.forcer));
      ASSERT_TRUE(g.has_arc(e.forcer, e.forced));
    } else {
      if (rule == ForcerRule::blue_only) {
        ASSERT_TRUE(round_start.contains(e.forcer));
      }
      std::size_t red = 0;
      for (Vertex w : g.out_neighbors(e.forcer)) red += round_start.contains(w) ? 0 : 1;
      ASSERT_EQ(red, 1u);
      ASSERT_TRUE(g.has_arc(e.forcer, e.forced));
    }
    blue.insert(e.forced);
  }
  EXPECT_EQ(blue, c.closed);
  EXPECT_EQ(c.trace.replay(), c.closed);
}

TEST(ClosureProperty, MatchesLiteralDefinitionAndTracesReplay) {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const Digraph g = testing::random_digraph(rng, n, 0.1 + 0.3 * static_cast<double>(trial % 4) / 3.0);
    const auto adj = testing::to_matrix(g);
    const VertexSet s = testing::random_set(rng, n, 0.25);
    for (ForcerRule rule : {ForcerRule::any_forcer, ForcerRule::blue_only}) {
      const Closure c = zf_closure(g, s, rule);
      EXPECT_EQ(testing::to_colors(c.closed), testing::naive_zf_closure(adj, testing::to_colors(s), rule == ForcerRule::blue_only));
      expect_trace_is_legal(g, c, rule, false);
      EXPECT_EQ(is_zero_forcing(g, s, rule), c.closed.is_full());
    }
    const Closure m = monitored_set(g, s);
    EXPECT_EQ(testing::to_colors(m.closed), testing::naive_monitored(adj, testing::to_colors(s)));
    expect_trace_is_legal(g, m, ForcerRule::blue_only, true);
    EXPECT_EQ(is_power_dominating(g, s), m.closed.is_full());
  }
}

TEST(ClosureProperty, MonotoneIdempotentDecomposes) {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 300; ++trial) {
    const std::size_t n = 1 + rng() % 12;
    const Digraph g = testing::random_digraph(rng, n, 0.25);
    const VertexSet s = testing::random_set(rng, n, 0.2);
    const VertexSet t = s | testing::random_set(rng, n, 0.2);
    for (ForcerRule rule : {ForcerRule::any_forcer, ForcerRule::blue_only}) {
      const VertexSet cs = zf_closure(g, s, rule).closed;
      EXPECT_TRUE(cs.is_subset_of(zf_closure(g, t, rule).closed));
      EXPECT_EQ(zf_closure(g, cs, rule).closed, cs);
    }
    const VertexSet ms = monitored_set(g, s).closed;
    EXPECT_TRUE(ms.is_subset_of(monitored_set(g, t).closed));
    // Re-dominating M(S) can grow it; the forcing stage itself is closed.
    EXPECT_EQ(zf_closure(g, ms, ForcerRule::blue_only).closed, ms);
    EXPECT_EQ(ms, zf_closure(g, s | out_neighborhood(g, s), ForcerRule::blue_only).closed);
    EXPECT_TRUE(zf_closure(g, s, ForcerRule::blue_only).closed.is_subset_of(zf_closure(g, s, ForcerRule::any_forcer).closed));
  }
}

TEST(ClosureProperty, DecompositionOnClassicFamilies) {
  std::mt19937_64 rng(13);
  for (const FamilySpec spec : {FamilySpec{Family::debruijn, 2, 4}, FamilySpec{Family::debruijn, 3, 3},
                                FamilySpec{Family::kautz, 2, 4}, FamilySpec{Family::kautz, 3, 3}}) {
    const Digraph g = generate(spec);
    for (int trial = 0; trial < 50; ++trial) {
      const VertexSet s = testing::random_set(rng, g.vertex_count(), 0.1);
      EXPECT_EQ(monitored_set(g, s).closed, zf_closure(g, dominate(g, s), ForcerRule::blue_only).closed);
    }
  }
}

TEST(Names, Parse) {
  EXPECT_EQ(parse_rule("any"), ForcerRule::any_forcer);
  EXPECT_EQ(parse_rule("blue-only"), ForcerRule::blue_only);
  EXPECT_EQ(parse_problem("pd"), Problem::power_domination);
  EXPECT_THROW(parse_rule("red"), std::invalid_argument);
}

}  // namespace
}  // namespace powerdom
