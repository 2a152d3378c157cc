#include <gtest/gtest.h>

#include <cmath>

#include "p4d/bounds.hpp"
#include "p4d/optimize.hpp"

using namespace p4d;

TEST(Optimizer, InvalidArguments) {
  EXPECT_THROW(maximize_s(0.0, 6, 1), domain_error);
  EXPECT_THROW(maximize_s(1.0, 6, 1), domain_error);
  EXPECT_THROW(maximize_s(0.3, 1, 1), domain_error);
  EXPECT_THROW(maximize_s_restarts(0.3, 6, 0, 1), domain_error);
}

TEST(Optimizer, StaysBelowCliqueCap) {
  for (std::uint64_t seed = 1; seed <= 8; ++seed) {
    auto r = maximize_s(0.3, 6, seed);
    EXPECT_LE(r.s, std::pow(0.3, 2.5) + 1e-9);
  }
}

TEST(Optimizer, TraceInvariants) {
  auto r = maximize_s(0.3, 6, 42);
  ASSERT_FALSE(r.trace.empty());
  EXPECT_EQ(r.trace.front().move, MoveKind::init);
  for (std::size_t i = 0; i < r.trace.size(); ++i) {
    EXPECT_NEAR(r.trace[i].mass, 0.3, 1e-12);
    if (i == 0) continue;
    const auto& prev = r.trace[i - 1];
    const auto& cur = r.trace[i];
    EXPECT_GT(cur.iter, prev.iter);
    if (cur.move == MoveKind::swap)
      EXPECT_LT(cur.t, prev.t);
    else
      EXPECT_GT(cur.s, prev.s);
  }
  EXPECT_DOUBLE_EQ(r.trace.back().s, r.s);
  EXPECT_NEAR(r.best.mass(), 0.3, 1e-12);
  EXPECT_LE(r.best.size(), 6u);
}

TEST(Optimizer, Deterministic) {
  auto a = maximize_s(0.4, 5, 99);
  auto b = maximize_s(0.4, 5, 99);
  EXPECT_EQ(a.s, b.s);
  EXPECT_EQ(a.iterations, b.iterations);
  EXPECT_EQ(a.best.values(), b.best.values());
}

TEST(Optimizer, RestartsIndependentOfThreads) {
  auto a = maximize_s_restarts(0.2, 4, 6, 7, {}, 1);
  auto b = maximize_s_restarts(0.2, 4, 6, 7, {}, 3);
  EXPECT_EQ(a.final_s, b.final_s);
  EXPECT_EQ(a.best.seed, b.best.seed);
}

TEST(Optimizer, ReachesStarBoundBelowCrossing) {
  auto r = maximize_s_restarts(0.05, 6, 32, 1);
  EXPECT_NEAR(r.best.s, upper_star_density(0.05), 1e-3);
}

TEST(Optimizer, TwoBlocksApproachesCliqueEndpoint) {
  auto r = maximize_s_restarts(0.5, 2, 16, 3);
  const double interior = s_value(two_step(0.5, 0.5 * (two_step_range(0.5).first + two_step_range(0.5).second)));
  EXPECT_GT(r.best.s, interior);
  EXPECT_LE(r.best.s, upper_clique_density(0.5) + 1e-12);
  EXPECT_NEAR(r.best.s, upper_clique_density(0.5), 5e-3);
  ASSERT_EQ(r.best.best.size(), 2u);
  EXPECT_NEAR(r.best.best.width(0), std::sqrt(0.5), 1e-2);
}
