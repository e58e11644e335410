#include <gtest/gtest.h>

#include "powerdom/constructions.hpp"
#include "powerdom/critical.hpp"

namespace powerdom {
namespace {

std::vector<std::string> words(const FamilySpec& spec, const VertexSet& s) {
  std::vector<std::string> out;
  s.for_each([&](Vertex v) { out.push_back(vertex_label(spec, v)); });
  return out;
}

// Count of length-k words over Z_(d+1) with distinct neighbors and a_k = a_1, by enumeration.
std::int64_t brute_s_k(int d, int k) {
  const int q = d + 1;
  std::vector<int> a(static_cast<std::size_t>(k), 0);
  std::int64_t count = 0;
  for (;;) {
    bool ok = a.front() == a.back();
    for (int i = 0; ok && i + 1 < k; ++i) ok = a[static_cast<std::size_t>(i)] != a[static_cast<std::size_t>(i + 1)];
    count += ok ? 1 : 0;
    int pos = k - 1;
    while (pos >= 0 && ++a[static_cast<std::size_t>(pos)] == q) a[static_cast<std::size_t>(pos--)] = 0;
    if (pos < 0) break;
  }
  return count;
}

TEST(DeBruijnZf, Examples) {
  EXPECT_EQ(debruijn_zf_set(2, 2).members(), (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(debruijn_zf_set(3, 2).size(), 6u);
  EXPECT_EQ(words({Family::debruijn, 2, 3}, debruijn_zf_set(2, 3)),
            (std::vector<std::string>{"001", "011", "100", "110"}));
}

TEST(DeBruijnPd, Examples) {
  EXPECT_EQ(debruijn_pd_set(2, 2).members(), (std::vector<Vertex>{1}));
  EXPECT_EQ(words({Family::debruijn, 2, 3}, debruijn_pd_set(2, 3)), (std::vector<std::string>{"001", "110"}));
  // n = 4, d = 2: a_3 = a_1 + a_2 and a_4 != a_1.
  EXPECT_EQ(words({Family::debruijn, 2, 4}, debruijn_pd_set(2, 4)),
            (std::vector<std::string>{"0001", "0111", "1010", "1100"}));
}

TEST(KautzZf, Examples) {
  EXPECT_EQ(words({Family::kautz, 2, 2}, kautz_zf_set(2, 2)), (std::vector<std::string>{"02", "10", "21"}));
  EXPECT_EQ(kautz_zf_set(2, 3).size(), 6u);
  EXPECT_EQ(kautz_zf_set(3, 3).size(), 24u);
}

TEST(KautzPd, Examples) {
  EXPECT_EQ(kautz_pd_set(2, 4).size(), 6u);
  EXPECT_EQ(words({Family::kautz, 2, 3}, kautz_pd_set(2, 3)), (std::vector<std::string>{"010", "121", "202"}));
  EXPECT_EQ(kautz_pd_set(2, 5).size(), 12u);
  EXPECT_EQ(words({Family::kautz, 3, 2}, kautz_pd_set(3, 2)), (std::vector<std::string>{"01", "02", "03"}));
}

TEST(Constructions, RejectBadParameters) {
  EXPECT_THROW(debruijn_zf_set(1, 3), std::invalid_argument);
  EXPECT_THROW(kautz_pd_set(2, 1), std::invalid_argument);
  EXPECT_THROW(construction({Family::gen_debruijn, 2, 5}, Problem::zero_forcing), std::invalid_argument);
}

TEST(SK, Examples) {
  EXPECT_EQ(s_k(2, 2), 0);
  EXPECT_EQ(s_k(5, 2), 0);
  EXPECT_EQ(s_k(2, 3), 6);
  EXPECT_EQ(s_k_closed_form(2, 3), 6);
  EXPECT_EQ(brute_s_k(2, 4), 6);
  EXPECT_EQ(s_k(2, 4), 6);
  EXPECT_THROW(s_k(2, 1), std::invalid_argument);
  EXPECT_THROW(s_k(1, 3), std::invalid_argument);
}

TEST(SK, RecurrenceClosedFormAndEnumerationAgree) {
  for (int d = 2; d <= 4; ++d) {
    for (int k = 2; k <= 8; ++k) {
      const auto brute = brute_s_k(d, k);
      EXPECT_EQ(s_k(d, k), brute) << "d=" << d << " k=" << k;
      EXPECT_EQ(s_k_closed_form(d, k), brute) << "d=" << d << " k=" << k;
    }
  }
}

TEST(TheoremValue, Examples) {
  EXPECT_EQ(theorem_value(Family::debruijn, 2, 4, Problem::power_domination)->value, 4u);
  EXPECT_EQ(theorem_value(Family::kautz, 2, 3, Problem::power_domination)->value, 3u);
  EXPECT_FALSE(theorem_value(Family::kautz, 2, 2, Problem::power_domination).has_value());
  EXPECT_EQ(theorem_value(Family::kautz, 2, 2, Problem::zero_forcing)->value, 3u);
  EXPECT_EQ(theorem_value(Family::debruijn, 3, 3, Problem::zero_forcing)->value, 18u);
  EXPECT_FALSE(theorem_value(Family::gen_kautz, 2, 5, Problem::zero_forcing).has_value());
}

TEST(ConstructionProperty, SizesValidityAndCellNecessity) {
  for (Family f : {Family::debruijn, Family::kautz}) {
    for (int d = 2; d <= 5; ++d) {
      for (int n = 2; n <= 6; ++n) {
        const FamilySpec spec{f, d, n};
        if (vertex_count(spec) > 20000) continue;
        SCOPED_TRACE(std::string(to_string(f)) + " d=" + std::to_string(d) + " n=" + std::to_string(n));
        const Digraph g = generate(spec);
        const VertexSet zf = construction(spec, Problem::zero_forcing);
        const VertexSet pd = construction(spec, Problem::power_domination);
        EXPECT_EQ(zf.size(), theorem_value(f, d, n, Problem::zero_forcing)->value);
        if (const auto t = theorem_value(f, d, n, Problem::power_domination))
          EXPECT_EQ(pd.size(), t->value);
        else
          EXPECT_EQ(pd.size(), static_cast<std::size_t>(d));
        EXPECT_TRUE(is_zero_forcing(g, zf, ForcerRule::any_forcer));
        EXPECT_TRUE(is_power_dominating(g, pd));
        EXPECT_TRUE(pd_partition_necessity(spec, pd).valid());
      }
    }
  }
}

}  // namespace
}  // namespace powerdom
