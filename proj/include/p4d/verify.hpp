#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include "p4d/bounds.hpp"
#include "p4d/canonical.hpp"
#include "p4d/config.hpp"
#include "p4d/construct.hpp"
#include "p4d/count.hpp"
#include "p4d/graph.hpp"
#include "p4d/optimize.hpp"
#include "p4d/random.hpp"
#include "p4d/search.hpp"
#include "p4d/stepfun.hpp"

namespace p4d {

// Desk-scale settings for verify_all. Every field can be overridden by the
// config key of the same name.
struct VerifyConfig {
  std::size_t n_max = 5;             // exhaustive counting / search cap
  std::size_t ak_n_max = 6;          // 2-edge path theorem cap
  std::size_t random_graphs = 200;
  std::size_t random_n_max = 20;
  std::size_t construct_n_max = 30;
  std::size_t stepfun_samples = 2000;  // per density
  std::size_t optimizer_restarts = 8;
  std::size_t optimizer_blocks = 6;
  double tolerance = 1e-12;            // closed-form agreement
  double optimizer_gap = 1e-3;
  std::uint64_t seed = 1;
  std::size_t threads = 1;

  static VerifyConfig from(const Config& cfg) {
    VerifyConfig v;
    v.n_max = cfg.get("n_max", v.n_max);
    v.ak_n_max = cfg.get("ak_n_max", v.ak_n_max);
    v.random_graphs = cfg.get("random_graphs", v.random_graphs);
    v.random_n_max = cfg.get("random_n_max", v.random_n_max);
    v.construct_n_max = cfg.get("construct_n_max", v.construct_n_max);
    v.stepfun_samples = cfg.get("stepfun_samples", v.stepfun_samples);
    v.optimizer_restarts = cfg.get("optimizer_restarts", v.optimizer_restarts);
    v.optimizer_blocks = cfg.get("optimizer_blocks", v.optimizer_blocks);
    v.tolerance = cfg.get("tolerance", v.tolerance);
    v.optimizer_gap = cfg.get("optimizer_gap", v.optimizer_gap);
    v.seed = cfg.get("seed", static_cast<std::size_t>(v.seed));
    v.threads = cfg.get("threads", v.threads);
    return v;
  }
};

struct SuiteResult {
  explicit SuiteResult(std::string suite_name) : name(std::move(suite_name)) {}

  std::string name;
  std::size_t checks = 0;
  std::size_t failures = 0;
  std::string first_failure;

  bool passed() const { return failures == 0; }

  void expect(bool ok, const std::string& what) {
    ++checks;
    if (ok) return;
    if (failures == 0) first_failure = what;
    ++failures;
  }

  // Strict: |a - b| < tol, so a zero tolerance can never pass.
  void expect_close(double a, double b, double tol, const std::string& what) {
    expect(std::abs(a - b) < tol, what);
  }
};

namespace detail {

inline std::vector<Graph> all_graphs(std::size_t n) {
  std::vector<Graph> out;
  for (std::size_t e = 0; e <= pair_count(n); ++e) for_each_graph(n, e, [&](const Graph& g) { out.push_back(g); });
  return out;
}

inline double max_upper_density(double c) { return std::max(upper_star_density(c), upper_clique_density(c)); }

inline SuiteResult suite_graph(const VerifyConfig& cfg) {
  SuiteResult s("graph-core");
  std::mt19937_64 rng(cfg.seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  for (std::size_t i = 0; i < cfg.random_graphs; ++i) {
    const std::size_t n = 1 + i % std::max<std::size_t>(1, std::min<std::size_t>(cfg.random_n_max, 10));
    const Graph g = random_graph(n, unit(rng), rng);
    std::size_t sum = 0;
    for (auto d : g.degrees()) sum += d;
    s.expect(sum == 2 * g.num_edges(), "degree sum");
    for (Vertex u = 0; u < n; ++u)
      for (Vertex v = 0; v < n; ++v) s.expect(g.codegree(u, v) <= std::min(g.degree(u), g.degree(v)), "codegree bound");
    const Graph h = complement(g);
    s.expect(complement(h) == g, "complement involution");
    for (Vertex v = 0; v < n; ++v) s.expect(h.degree(v) == n - 1 - g.degree(v), "complement degree");
    const auto key = canonical_key(g);
    for (int p = 0; p < 20; ++p) s.expect(canonical_key(relabel(g, random_permutation(n, rng))) == key, "canonical invariance");
  }
  return s;
}

inline SuiteResult suite_construct(const VerifyConfig& cfg) {
  SuiteResult s("construct");
  for (std::size_t n = 1; n <= cfg.construct_n_max; ++n) {
    for (std::uint64_t e = 0; e <= pair_count(n); ++e) {
      s.expect(quasi_clique(n, e).num_edges() == e, "quasi_clique edge count");
      s.expect(quasi_star(n, e).num_edges() == e, "quasi_star edge count");
      const Graph g = near_regular(n, e);
      const auto [lo, hi] = std::minmax_element(g.degrees().begin(), g.degrees().end());
      s.expect(g.num_edges() == e && *hi - *lo <= 1, "near_regular spread");
    }
  }
  for (std::size_t n = 1; n <= std::min<std::size_t>(cfg.construct_n_max, kMaxSearchVertices); ++n)
    for (std::uint64_t e = 0; e <= pair_count(n); ++e)
      s.expect(canonical_key(quasi_star(n, e)) == canonical_key(complement(quasi_clique(n, pair_count(n) - e))),
               "quasi_star is complement of quasi_clique");
  return s;
}

inline SuiteResult suite_count(const VerifyConfig& cfg) {
  SuiteResult s("count");
  auto check = [&](const Graph& g, bool with_p4_brute) {
    const Count m = count_walks4_matrix(g);
    const Count d = count_walks4_codegree(g);
    s.expect(m == d && m == count_walks4_brute(g), "walk count methods agree");
    const Count p4 = count_p4(g);
    if (with_p4_brute) s.expect(p4 == count_p4_brute(g), "p4 fast == brute");
    s.expect(2 * p4 <= m, "2 p4 <= walks4");
    const double n5 = std::pow(static_cast<double>(g.n()), 5);
    const double c = g.density();
    s.expect(static_cast<double>(m) >= c * c * c * c * n5 * (1.0 - 1e-9), "walks4 >= c^4 n^5");
    s.expect(static_cast<double>(m) / n5 <= max_upper_density(c) + 1e-9, "walks4 / n^5 <= upper bound");
  };
  for (std::size_t n = 1; n <= cfg.n_max; ++n)
    for (const Graph& g : all_graphs(n)) {
      check(g, n <= kMaxBrutePathVertices);
      Count cherries = 0;
      for (Vertex v = 0; v < n; ++v)
        for (Vertex a = 0; a < n; ++a)
          for (Vertex b = a + 1; b < n; ++b) cherries += g.has_edge(v, a) && g.has_edge(v, b);
      s.expect(cherries == count_p2(g), "p2 formula == enumeration");
    }
  std::mt19937_64 rng(cfg.seed + 1);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const std::size_t nmax = std::min(cfg.random_n_max, kMaxBruteWalkVertices);
  for (std::size_t i = 0; i < cfg.random_graphs; ++i) {
    const std::size_t n = 1 + i % nmax;
    check(random_graph(n, unit(rng), rng), n <= 10);
  }
  for (std::size_t i = 0; i < 50; ++i) {
    const std::size_t n = 3 + i % 38;
    const std::size_t d = (i * 7) % (n - 1);
    if ((n * d) % 2) continue;
    const Graph g = random_regular(n, d, rng);
    const Count dd = d;
    s.expect(count_walks4(g) == static_cast<Count>(n) * dd * dd * dd * dd, "regular graphs: walks4 = n d^4");
  }
  return s;
}

inline SuiteResult suite_bounds(const VerifyConfig& cfg) {
  SuiteResult s("bounds");
  const auto cp = crossing_point();
  s.expect(cp.c0 >= 0.0860 && cp.c0 <= 0.0870, "crossing point near 0.0865");
  s.expect_close(cp.residual, 0.0, cfg.tolerance, "crossing residual");
  std::size_t sign_changes = 0;
  double prev_gap = 0.0;
  double prev_star = 0.0;
  double prev_clique = 0.0;
  for (std::size_t i = 0; i <= 10000; ++i) {
    const double c = static_cast<double>(i) / 10000.0;
    const double star = upper_star_density(c);
    const double clique = upper_clique_density(c);
    s.expect(lower_bound_density(c) <= std::max(star, clique), "c^4 below the upper bound");
    if (i > 0) {
      s.expect(star >= prev_star && clique >= prev_clique, "branches monotone");
      const double gap = star - clique;
      if (i > 1 && c < 1.0 && (gap > 0.0) != (prev_gap > 0.0) && gap != 0.0) ++sign_changes;
      prev_gap = gap;
    }
    prev_star = star;
    prev_clique = clique;
  }
  s.expect(sign_changes == 1, "single crossing on (0, 1)");
  for (std::size_t i = 0; i <= 100; ++i) {
    const double c = static_cast<double>(i) / 100.0;
    s.expect_close(upper_star_density(c), s_value(a1(c)), cfg.tolerance, "star branch == S(A1)");
    s.expect_close(upper_clique_density(c), s_value(a2(c)), cfg.tolerance, "clique branch == S(A2)");
  }
  return s;
}

inline SuiteResult suite_stepfun(const VerifyConfig& cfg) {
  SuiteResult s("stepfun");
  for (std::size_t i = 1; i <= 50; ++i) {
    const double c = static_cast<double>(i) / 51.0;
    const auto [lo, hi] = two_step_range(c);
    double best = -1.0;
    std::size_t arg = 0;
    for (std::size_t j = 0; j < 200; ++j) {
      const double x = lo + (hi - lo) * static_cast<double>(j) / 199.0;
      const double closed = s_two_step_closed(c, x);
      s.expect_close(s_value(two_step(c, x)), closed, cfg.tolerance, "two_step S == closed form");
      if (closed > best) {
        best = closed;
        arg = j;
      }
    }
    s.expect(arg == 0 || arg == 199, "two_step maximum at an endpoint");
  }
  for (std::size_t i = 1; i <= 30; ++i) {
    const double sm = static_cast<double>(i) / 31.0;
    const auto [lo, hi] = three_step_range(sm);
    double best = -1.0;
    std::size_t arg = 0;
    for (std::size_t j = 0; j < 200; ++j) {
      const double x = lo + (hi - lo) * static_cast<double>(j) / 199.0;
      const double v = s_value(three_step(sm, x));
      s.expect_close(v, s_three_step_closed(sm, x), cfg.tolerance, "three_step S == expanded form");
      if (v > best) {
        best = v;
        arg = j;
      }
    }
    s.expect(arg == 0 || arg == 199, "three_step maximum at an endpoint");
  }
  std::mt19937_64 rng(cfg.seed + 2);
  for (double c : {0.05, 0.0865, 0.3, 0.7, 0.95}) {
    const double bound = max_upper_density(c);
    for (std::size_t i = 0; i < cfg.stepfun_samples; ++i) {
      const auto f = random_step_function(1 + i % 8, c, rng);
      s.expect(std::abs(f.mass() - c) <= 1e-12, "random sample has mass c");
      s.expect(s_value(f) <= bound + 1e-12, "S(A) <= max(S(A1), S(A2))");
    }
  }
  for (std::size_t i = 1; i <= 40; ++i) {
    const double c = static_cast<double>(i) / 41.0;
    for (std::size_t j = 0; j <= 40; ++j) {
      const double t = std::sqrt(c) + (1.0 - std::sqrt(c)) * static_cast<double>(j) / 40.0;
      const StepFunction corner = t < 1.0 ? StepFunction({t, 1.0 - t}, {c / (t * t), 0, 0, 0})
                                          : StepFunction::constant(c);
      s.expect(s_value(corner) <= upper_clique_density(c) + 1e-12, "single rectangle S <= c^{5/2}");
    }
  }
  return s;
}

inline SuiteResult suite_search(const VerifyConfig& cfg) {
  SuiteResult s("search");
  for (std::size_t n = 1; n <= cfg.ak_n_max; ++n) {
    const auto report = verify_ahlswede_katona(n, cfg.threads);
    for (const auto& row : report.rows) s.expect(row.passed(), "2-edge path maximum is a quasi graph");
  }
  for (std::size_t n = 1; n <= std::min<std::size_t>(cfg.n_max + 1, kMaxSearchVertices); ++n) {
    for (std::size_t e = 0; e <= pair_count(n); ++e) {
      const auto r = extremal_search(n, e, Statistic::p4(), cfg.threads);
      s.expect(r.max_value >= r.quasi_clique_value && r.max_value >= r.quasi_star_value, "p4 max >= constructions");
      s.expect(r.enumerated == detail::binomial(pair_count(n), e), "enumeration completeness");
      for (const auto& key : r.max_witnesses) s.expect(count_p4(decode(key)) == r.max_value, "witness recount");
    }
  }
  return s;
}

inline SuiteResult suite_optimizer(const VerifyConfig& cfg) {
  SuiteResult s("optimizer");
  for (double c : {0.05, 0.0865, 0.3, 0.7, 0.95}) {
    const auto run = maximize_s_restarts(c, cfg.optimizer_blocks, cfg.optimizer_restarts, cfg.seed, {}, cfg.threads);
    const double bound = max_upper_density(c);
    s.expect(run.best.s <= bound + 1e-9, "optimizer never beats the bound");
    s.expect(bound - run.best.s < cfg.optimizer_gap, "optimizer reaches the bound");
    const auto& trace = run.best.trace;
    for (std::size_t i = 1; i < trace.size(); ++i) {
      const bool plateau = trace[i].move == MoveKind::swap;
      s.expect(plateau ? trace[i].s >= trace[i - 1].s - 1e-14 && trace[i].t < trace[i - 1].t
                       : trace[i].s > trace[i - 1].s,
               "trace monotone");
      s.expect(std::abs(trace[i].mass - c) <= 1e-12, "trace mass constant");
    }
  }
  return s;
}

}  // namespace detail

struct VerifyReport {
  std::vector<SuiteResult> suites;
  bool ok() const {
    return std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); });
  }
};

inline VerifyReport verify_all(const VerifyConfig& cfg,
                               const std::function<void(const SuiteResult&)>& on_suite = {}) {
  VerifyReport report;
  for (auto suite : {detail::suite_graph, detail::suite_construct, detail::suite_count, detail::suite_bounds,
                     detail::suite_stepfun, detail::suite_search, detail::suite_optimizer}) {
    report.suites.push_back(suite(cfg));
    if (on_suite) on_suite(report.suites.back());
  }
  return report;
}

}  // namespace p4d
