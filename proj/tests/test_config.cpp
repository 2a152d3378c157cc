#include <gtest/gtest.h>

#include <sstream>

#include "p4d/config.hpp"

using namespace p4d;

TEST(Config, Parse) {
  std::istringstream in("# comment\n\n n_max = 4 \ntolerance=1e-9\nname = x y\n");
  auto cfg = Config::parse(in);
  EXPECT_EQ(cfg.get("n_max", std::size_t{0}), 4u);
  EXPECT_DOUBLE_EQ(cfg.get("tolerance", 0.0), 1e-9);
  EXPECT_EQ(cfg.get("name", std::string{}), "x y");
  EXPECT_EQ(cfg.get("missing", std::size_t{7}), 7u);
  EXPECT_FALSE(cfg.has("missing"));
}

TEST(Config, Errors) {
  std::istringstream bad("novalue\n");
  EXPECT_THROW(Config::parse(bad), std::invalid_argument);
  std::istringstream empty_key("=3\n");
  EXPECT_THROW(Config::parse(empty_key), std::invalid_argument);
  std::istringstream not_num("seed = 3x\n");
  auto cfg = Config::parse(not_num);
  EXPECT_THROW(cfg.get("seed", std::size_t{0}), std::invalid_argument);
  EXPECT_THROW(Config::load("/nonexistent/p4d.cfg"), std::runtime_error);
}
