#include <gtest/gtest.h>

#include <random>

#include "p4d/construct.hpp"
#include "p4d/count.hpp"
#include "p4d/random.hpp"

using namespace p4d;

TEST(Kstars, Examples) {
  EXPECT_EQ(count_p2(complete_graph(3)), 3u);
  EXPECT_EQ(count_p2(star_graph(4)), 6u);
  EXPECT_EQ(count_p2(Graph(4, {})), 0u);
  EXPECT_EQ(count_kstars(star_graph(4), 4), 1u);
  EXPECT_EQ(count_kstars(complete_graph(4), 2), 12u);
  EXPECT_EQ(count_kstars(cycle_graph(7), 1), 14u);
  EXPECT_THROW(count_kstars(complete_graph(3), 0), std::invalid_argument);
}

TEST(Walks4, Examples) {
  EXPECT_EQ(count_walks4(complete_graph(2)), 2u);
  EXPECT_EQ(count_walks4(complete_graph(3)), 48u);
  EXPECT_EQ(count_walks4(cycle_graph(5)), 80u);
  EXPECT_EQ(count_walks4_brute(complete_graph(2)), 2u);
  EXPECT_EQ(count_walks4_brute(complete_graph(3)), 48u);
  EXPECT_EQ(count_walks4_brute(path_graph(3)), 12u);
  EXPECT_EQ(count_walks4(path_graph(3)), 12u);
}

TEST(Walks4, RoutesAgreeOnRandomGraphs) {
  std::mt19937_64 rng(2);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 20;
    auto g = random_graph(n, 0.1 + 0.8 * (i % 10) / 10.0, rng);
    const auto m = count_walks4_matrix(g);
    EXPECT_EQ(m, count_walks4_codegree(g));
    EXPECT_EQ(m, count_walks4_brute(g));
  }
}

TEST(Walks4, BruteCap) { EXPECT_THROW(count_walks4_brute(Graph(26, {})), std::invalid_argument); }

TEST(P4, Examples) {
  EXPECT_EQ(count_p4(path_graph(5)), 1u);
  EXPECT_EQ(count_p4(complete_graph(5)), 60u);
  Graph c4_plus(5, {{0, 1}, {1, 2}, {2, 3}, {0, 3}});
  EXPECT_EQ(count_p4(c4_plus), 0u);
  EXPECT_EQ(count_p4_brute(complete_graph(5)), 60u);
  EXPECT_EQ(count_p4_brute(quasi_clique(5, 7)), count_p4(quasi_clique(5, 7)));
  EXPECT_EQ(count_p4(Graph(9, {})), 0u);
}

TEST(P4, CompleteGraphFormula) {
  for (std::size_t n = 5; n <= 40; ++n) {
    const Count expected = n * (n - 1) * (n - 2) * (n - 3) * (n - 4) / 2;
    EXPECT_EQ(count_p4(complete_graph(n)), expected);
  }
}

TEST(P4, MatchesBruteOnRandomGraphs) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 100; ++i) {
    const std::size_t n = 1 + rng() % 10;
    auto g = random_graph(n, 0.5, rng);
    EXPECT_EQ(count_p4(g), count_p4_brute(g));
  }
}

TEST(Degenerate, Examples) {
  EXPECT_EQ(degenerate_walks4(complete_graph(2)), 2u);
  auto p5 = path_graph(5);
  EXPECT_EQ(degenerate_walks4(p5), count_walks4(p5) - 2);
}

TEST(Degenerate, WalksAtLeastTwiceP4) {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 100; ++i) {
    auto g = random_graph(30, 0.05 * (i % 20), rng);
    EXPECT_GE(count_walks4(g), 2 * count_p4(g));
  }
}

TEST(HomDensity, Examples) {
  EXPECT_DOUBLE_EQ(hom_density_p4(Graph(6, {})), 0.0);
  EXPECT_DOUBLE_EQ(hom_density_p4(cycle_graph(5)), 0.0256);
  EXPECT_DOUBLE_EQ(hom_density_p4(complete_graph(5)), static_cast<double>(count_walks4_brute(complete_graph(5))) / 3125.0);
}

TEST(HomDensity, AtLeastC4) {
  std::mt19937_64 rng(8);
  for (int i = 0; i < 100; ++i) {
    auto g = random_graph(20, 0.05 * (i % 20), rng);
    const double c = g.density();
    EXPECT_GE(hom_density_p4(g), c * c * c * c * (1 - 1e-12));
  }
}

TEST(Report, Fields) {
  auto r = count_report(complete_graph(5), {3, 4});
  EXPECT_EQ(r.n, 5u);
  EXPECT_EQ(r.e, 10u);
  EXPECT_DOUBLE_EQ(r.c, 0.8);
  EXPECT_EQ(r.p4, 60u);
  EXPECT_EQ(r.p2, 30u);
  EXPECT_EQ(r.kstars.at(3), 20u);
  EXPECT_EQ(r.kstars.at(4), 5u);
  EXPECT_EQ(r.walks4, 5u * 256u);
}

TEST(Regular, WalksEqualNDFourth) {
  std::mt19937_64 rng(10);
  for (int i = 0; i < 20; ++i) {
    const std::size_t n = 10 + i;
    const std::size_t d = 2 + (i % 5);
    if (n * d % 2) continue;
    auto g = random_regular(n, d, rng);
    EXPECT_EQ(count_walks4(g), n * d * d * d * d);
  }
}
