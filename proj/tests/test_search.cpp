#include <gtest/gtest.h>

#include <sstream>

#include "p4d/construct.hpp"
#include "p4d/count.hpp"
#include "p4d/search.hpp"

using namespace p4d;

TEST(Statistic, Parse) {
  EXPECT_EQ(parse_statistic("p2").kind, Statistic::Kind::p2);
  EXPECT_EQ(parse_statistic("p4").kind, Statistic::Kind::p4);
  EXPECT_EQ(parse_statistic("walks4").kind, Statistic::Kind::walks4);
  auto k = parse_statistic("kstar:3");
  EXPECT_EQ(k.kind, Statistic::Kind::kstar);
  EXPECT_EQ(k.k, 3u);
  EXPECT_THROW(parse_statistic("p5"), std::invalid_argument);
  EXPECT_THROW(parse_statistic("kstar:"), std::invalid_argument);
  EXPECT_THROW(parse_statistic("kstar:0"), std::invalid_argument);
}

TEST(Search, P2OnFourVertices) {
  auto r = extremal_search(4, 3, Statistic::p2());
  EXPECT_EQ(r.max_value, 3u);
  EXPECT_EQ(r.num_max_classes, 2u);
  EXPECT_EQ(r.enumerated, 20u);
  EXPECT_EQ(r.min_value, 2u);
}

TEST(Search, P4OnFiveVertices) {
  auto r = extremal_search(5, 4, Statistic::p4());
  EXPECT_EQ(r.max_value, 1u);
  ASSERT_EQ(r.max_witnesses.size(), 1u);
  EXPECT_EQ(r.max_witnesses[0], canonical_key(path_graph(5)));
  EXPECT_EQ(r.enumerated, 210u);
}

TEST(Search, ZeroEdges) {
  for (auto stat : {Statistic::p2(), Statistic::p4(), Statistic::walks4(), Statistic::kstar(3)}) {
    auto r = extremal_search(6, 0, stat);
    EXPECT_EQ(r.max_value, 0u);
    EXPECT_EQ(r.min_value, 0u);
  }
}

TEST(Search, Errors) {
  EXPECT_THROW(extremal_search(9, 3, Statistic::p4()), graph_error);
  EXPECT_THROW(extremal_search(4, 7, Statistic::p4()), graph_error);
}

TEST(Search, SmallKernelMatchesCounters) {
  for (std::size_t e = 0; e <= 10; ++e)
    for_each_graph(5, e, [&](const Graph& g) {
      EXPECT_EQ(evaluate(g, Statistic::p4()), count_p4(g));
      EXPECT_EQ(evaluate(g, Statistic::walks4()), count_walks4(g));
    });
}

TEST(Search, ThreadsAgree) {
  auto a = extremal_search(7, 9, Statistic::p4(), 1);
  auto b = extremal_search(7, 9, Statistic::p4(), 4);
  EXPECT_EQ(a.max_value, b.max_value);
  EXPECT_EQ(a.min_value, b.min_value);
  EXPECT_EQ(a.max_witnesses, b.max_witnesses);
  EXPECT_EQ(a.num_max_classes, b.num_max_classes);
}

TEST(AhlswedeKatona, SmallN) {
  auto r3 = verify_ahlswede_katona(3);
  EXPECT_TRUE(r3.ok());
  auto r5 = verify_ahlswede_katona(5);
  EXPECT_EQ(r5.rows.size(), 11u);
  EXPECT_TRUE(r5.ok());
  EXPECT_EQ(verify_ahlswede_katona(6, 2).passed(), 16u);
  EXPECT_THROW(verify_ahlswede_katona(8), graph_error);
}

TEST(P4Table, Rows) {
  auto rows = p4_extremal_table(5);
  const SearchResult* full = nullptr;
  for (const auto& r : rows) {
    if (r.e < 4) {
      EXPECT_EQ(r.max_value, 0u);
    }
    if (r.n == 5 && r.e == 10) full = &r;
  }
  ASSERT_NE(full, nullptr);
  EXPECT_EQ(full->max_value, 60u);
  EXPECT_EQ(full->quasi_clique_value, 60u);
}

TEST(P4Table, Deterministic) {
  std::ostringstream a;
  std::ostringstream b;
  write_table(a, p4_extremal_table(6, 1));
  write_table(b, p4_extremal_table(6, 4));
  EXPECT_EQ(a.str(), b.str());
  EXPECT_EQ(a.str().substr(0, a.str().find('\n')), kTableHeader);
}
