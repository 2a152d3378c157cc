#pragma once

#include <algorithm>
#include <array>
#include <atomic>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <mutex>
#include <ostream>
#include <set>
#include <string>
#include <thread>
#include <vector>

#include "p4d/bounds.hpp"
#include "p4d/canonical.hpp"
#include "p4d/construct.hpp"
#include "p4d/count.hpp"
#include "p4d/graph.hpp"

namespace p4d {

inline constexpr std::size_t kMaxSearchVertices = 8;
inline constexpr std::size_t kWitnessCap = 16;

struct Statistic {
  enum class Kind { p2, p4, walks4, kstar } kind = Kind::p2;
  std::size_t k = 2;  // only for kstar

  static Statistic p2() { return {Kind::p2, 2}; }
  static Statistic p4() { return {Kind::p4, 0}; }
  static Statistic walks4() { return {Kind::walks4, 0}; }
  static Statistic kstar(std::size_t k) { return {Kind::kstar, k}; }

  std::string name() const {
    switch (kind) {
      case Kind::p2: return "p2";
      case Kind::p4: return "p4";
      case Kind::walks4: return "walks4";
      case Kind::kstar: return "kstar:" + std::to_string(k);
    }
    return "?";
  }

  friend bool operator==(const Statistic&, const Statistic&) = default;
};

// Parses "p2", "p4", "walks4" or "kstar:K".
inline Statistic parse_statistic(const std::string& text) {
  if (text == "p2") return Statistic::p2();
  if (text == "p4") return Statistic::p4();
  if (text == "walks4") return Statistic::walks4();
  if (text.rfind("kstar:", 0) == 0) {
    const std::string digits = text.substr(6);
    if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos)
      throw std::invalid_argument("bad statistic \"" + text + "\"");
    const auto k = std::stoul(digits);
    if (k == 0) throw std::invalid_argument("kstar needs k >= 1");
    return Statistic::kstar(k);
  }
  throw std::invalid_argument("unknown statistic \"" + text + "\" (expected p2, p4, walks4 or kstar:K)");
}

inline Count evaluate(const Graph& g, const Statistic& stat) {
  switch (stat.kind) {
    case Statistic::Kind::p2: return count_p2(g);
    case Statistic::Kind::p4: return count_p4(g);
    case Statistic::Kind::walks4: return count_walks4(g);
    case Statistic::Kind::kstar: return count_kstars(g, stat.k);
  }
  return 0;
}

namespace detail {

// Graphs on <= 8 vertices as bit rows, for the enumeration inner loop.
struct SmallGraph {
  std::size_t n = 0;
  SmallAdj adj{};
  std::array<std::uint32_t, kMaxCanonicalVertices> deg{};
};

// Colex pair order (0,1),(0,2),(1,2),(0,3),...; matches CanonicalKey.
inline std::vector<std::pair<std::uint8_t, std::uint8_t>> pair_table(std::size_t n) {
  std::vector<std::pair<std::uint8_t, std::uint8_t>> pairs;
  for (std::uint8_t q = 1; q < n; ++q)
    for (std::uint8_t p = 0; p < q; ++p) pairs.emplace_back(p, q);
  return pairs;
}

inline SmallGraph small_from_mask(std::uint64_t mask, std::size_t n,
                                  const std::vector<std::pair<std::uint8_t, std::uint8_t>>& pairs) {
  SmallGraph g;
  g.n = n;
  while (mask) {
    const auto [p, q] = pairs[static_cast<std::size_t>(std::countr_zero(mask))];
    g.adj[p] |= static_cast<std::uint16_t>(1U << q);
    g.adj[q] |= static_cast<std::uint16_t>(1U << p);
    mask &= mask - 1;
  }
  for (std::size_t v = 0; v < n; ++v) g.deg[v] = static_cast<std::uint32_t>(std::popcount(g.adj[v]));
  return g;
}

inline Graph to_graph(std::uint64_t mask, std::size_t n, const std::vector<std::pair<std::uint8_t, std::uint8_t>>& pairs) {
  std::vector<Edge> edges;
  while (mask) {
    const auto [p, q] = pairs[static_cast<std::size_t>(std::countr_zero(mask))];
    edges.emplace_back(p, q);
    mask &= mask - 1;
  }
  return Graph(n, std::move(edges));
}

inline Count small_kstars(const SmallGraph& g, std::size_t k) {
  Count total = 0;
  for (std::size_t v = 0; v < g.n; ++v) total += binomial(g.deg[v], k);
  return total;
}

inline Count small_p4(const SmallGraph& g) {
  Count total = 0;
  for (std::size_t u = 0; u < g.n; ++u) {
    if (g.deg[u] < 2) continue;
    for (std::size_t w = u + 1; w < g.n; ++w) {
      if (g.deg[w] < 2) continue;
      const Count common = static_cast<Count>(std::popcount(static_cast<unsigned>(g.adj[u] & g.adj[w])));
      if (common == 0) continue;
      const Count joined = (g.adj[u] >> w) & 1U;
      total += common * ((g.deg[u] - 1 - joined) * (g.deg[w] - 1 - joined) - (common - 1));
    }
  }
  return total;
}

inline Count small_walks4(const SmallGraph& g) {
  Count total = 0;
  for (std::size_t u = 0; u < g.n; ++u) {
    const Count du = g.deg[u];
    total += du * du * du;
    for (std::size_t w = u + 1; w < g.n; ++w)
      total += 2 * du * g.deg[w] * static_cast<Count>(std::popcount(static_cast<unsigned>(g.adj[u] & g.adj[w])));
  }
  return total;
}

inline Count small_evaluate(const SmallGraph& g, const Statistic& stat) {
  switch (stat.kind) {
    case Statistic::Kind::p2: return small_kstars(g, 2);
    case Statistic::Kind::p4: return small_p4(g);
    case Statistic::Kind::walks4: return small_walks4(g);
    case Statistic::Kind::kstar: return small_kstars(g, stat.k);
  }
  return 0;
}

// Next integer with the same popcount (Gosper).
inline std::uint64_t next_combination(std::uint64_t x) {
  const std::uint64_t c = x & (~x + 1);
  const std::uint64_t r = x + c;
  return (((r ^ x) >> 2) / c) | r;
}

inline void check_search_size(std::size_t n) {
  if (n == 0 || n > kMaxSearchVertices)
    throw graph_error(GraphErrc::too_large, "exhaustive search supports 1 <= n <= " + std::to_string(kMaxSearchVertices));
}

}  // namespace detail

// Calls fn(mask) for every e-subset of the C(n,2) vertex pairs, with pairs
// indexed in colex order. The space is split by the index of the highest
// chosen pair; blocks are handed to `threads` workers, each of which gets
// its own callback state via make_fn(worker).
template <class MakeFn>
void for_each_edge_subset(std::size_t n, std::size_t e, std::size_t threads, MakeFn make_fn) {
  detail::check_search_size(n);
  const std::size_t m = pair_count(n);
  if (e > m) throw graph_error(GraphErrc::too_many_edges, std::to_string(e) + " edges on " + std::to_string(n) + " vertices");
  threads = std::max<std::size_t>(1, threads);
  if (e == 0) {
    auto fn = make_fn(0);
    fn(std::uint64_t{0});
    return;
  }
  std::atomic<std::size_t> next_top{e - 1};
  auto worker = [&](std::size_t id) {
    auto fn = make_fn(id);
    for (std::size_t top = next_top++; top < m; top = next_top++) {
      const std::uint64_t high = std::uint64_t{1} << top;
      const std::size_t rest = e - 1;
      if (rest == 0) {
        fn(high);
        continue;
      }
      const std::uint64_t limit = std::uint64_t{1} << top;
      for (std::uint64_t low = (std::uint64_t{1} << rest) - 1; low < limit; low = detail::next_combination(low)) fn(high | low);
    }
  };
  if (threads == 1) {
    worker(0);
    return;
  }
  std::vector<std::thread> pool;
  for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  for (auto& th : pool) th.join();
}

// Calls fn(graph) for every labeled graph on n vertices with e edges.
inline void for_each_graph(std::size_t n, std::size_t e, const std::function<void(const Graph&)>& fn) {
  const auto pairs = detail::pair_table(n);
  for_each_edge_subset(n, e, 1, [&](std::size_t) {
    return [&](std::uint64_t mask) { fn(detail::to_graph(mask, n, pairs)); };
  });
}

enum class Verdict { star_attains, clique_attains, both_attain, other_attains };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::star_attains: return "star_attains";
    case Verdict::clique_attains: return "clique_attains";
    case Verdict::both_attain: return "both_attain";
    case Verdict::other_attains: return "other_attains";
  }
  return "?";
}

struct SearchResult {
  std::size_t n = 0;
  std::size_t e = 0;
  Statistic statistic;
  Count max_value = 0;
  Count min_value = 0;
  std::vector<CanonicalKey> max_witnesses;  // smallest keys first, at most kWitnessCap
  std::size_t num_max_classes = 0;
  Count quasi_star_value = 0;
  Count quasi_clique_value = 0;
  Count near_regular_value = 0;
  Verdict verdict = Verdict::other_attains;
  std::uint64_t enumerated = 0;
};

// Exact max and min of `stat` over all labeled graphs with n vertices and
// e edges; maximisers are deduplicated up to isomorphism.
inline SearchResult extremal_search(std::size_t n, std::size_t e, const Statistic& stat, std::size_t threads = 1) {
  detail::check_search_size(n);
  if (stat.kind == Statistic::Kind::kstar && stat.k == 0) throw std::invalid_argument("kstar needs k >= 1");
  const auto pairs = detail::pair_table(n);

  struct Partial {
    Count max = 0;
    Count min = std::numeric_limits<Count>::max();
    std::set<std::uint64_t> max_keys;  // canonical bits
    std::uint64_t enumerated = 0;
  };
  std::vector<Partial> partial(std::max<std::size_t>(1, threads));

  for_each_edge_subset(n, e, threads, [&](std::size_t id) {
    return [&, id](std::uint64_t mask) {
      Partial& acc = partial[id];
      const auto g = detail::small_from_mask(mask, n, pairs);
      const Count value = detail::small_evaluate(g, stat);
      ++acc.enumerated;
      acc.min = std::min(acc.min, value);
      if (acc.enumerated == 1 || value > acc.max) {
        acc.max = value;
        acc.max_keys.clear();
      }
      if (value == acc.max) acc.max_keys.insert(detail::canonical_bits(g.adj, n));
    };
  });

  SearchResult r;
  r.n = n;
  r.e = e;
  r.statistic = stat;
  bool any = false;
  std::set<std::uint64_t> keys;
  for (auto& p : partial) {
    if (p.enumerated == 0) continue;
    r.enumerated += p.enumerated;
    r.min_value = any ? std::min(r.min_value, p.min) : p.min;
    if (!any || p.max > r.max_value) {
      r.max_value = p.max;
      keys = std::move(p.max_keys);
    } else if (p.max == r.max_value) {
      keys.insert(p.max_keys.begin(), p.max_keys.end());
    }
    any = true;
  }
  r.num_max_classes = keys.size();
  for (auto bits : keys) {
    if (r.max_witnesses.size() == kWitnessCap) break;
    r.max_witnesses.emplace_back(n, bits);
  }
  r.quasi_star_value = evaluate(quasi_star(n, e), stat);
  r.quasi_clique_value = evaluate(quasi_clique(n, e), stat);
  r.near_regular_value = evaluate(near_regular(n, e), stat);
  const bool star = r.quasi_star_value == r.max_value;
  const bool clique = r.quasi_clique_value == r.max_value;
  r.verdict = star && clique ? Verdict::both_attain
              : star         ? Verdict::star_attains
              : clique       ? Verdict::clique_attains
                             : Verdict::other_attains;
  return r;
}

struct AkRow {
  std::size_t e = 0;
  Count brute_max = 0;
  Count quasi_clique = 0;  // C(n, e)
  Count quasi_star = 0;    // S(n, e)
  AkRegime regime = AkRegime::transition;
  bool max_matches = false;
  bool regime_holds = false;
  bool passed() const { return max_matches && regime_holds; }
};

struct AkReport {
  std::size_t n = 0;
  std::vector<AkRow> rows;
  std::size_t passed() const {
    return static_cast<std::size_t>(std::count_if(rows.begin(), rows.end(), [](const AkRow& r) { return r.passed(); }));
  }
  bool ok() const { return passed() == rows.size(); }
};

inline constexpr std::size_t kMaxAkVertices = 7;

// For every e: the brute-force maximum of 2-edge paths equals
// max(C(n,e), S(n,e)), and the outer-range regime claims hold.
inline AkReport verify_ahlswede_katona(std::size_t n, std::size_t threads = 1) {
  if (n == 0 || n > kMaxAkVertices)
    throw graph_error(GraphErrc::too_large, "verify_ahlswede_katona supports 1 <= n <= " + std::to_string(kMaxAkVertices));
  AkReport report;
  report.n = n;
  for (std::size_t e = 0; e <= pair_count(n); ++e) {
    const auto res = extremal_search(n, e, Statistic::p2(), threads);
    AkRow row;
    row.e = e;
    row.brute_max = res.max_value;
    row.quasi_clique = res.quasi_clique_value;
    row.quasi_star = res.quasi_star_value;
    row.regime = ak_regime(n, e);
    row.max_matches = row.brute_max == std::max(row.quasi_clique, row.quasi_star);
    switch (row.regime) {
      case AkRegime::star: row.regime_holds = row.quasi_star >= row.quasi_clique; break;
      case AkRegime::clique: row.regime_holds = row.quasi_clique >= row.quasi_star; break;
      case AkRegime::transition: row.regime_holds = true; break;
    }
    report.rows.push_back(row);
  }
  return report;
}

inline constexpr const char* kTableHeader = "n,e,max,min,quasi_star,quasi_clique,near_regular,verdict,num_max_classes";

inline void write_table_row(std::ostream& os, const SearchResult& r) {
  os << r.n << ',' << r.e << ',' << r.max_value << ',' << r.min_value << ',' << r.quasi_star_value << ','
     << r.quasi_clique_value << ',' << r.near_regular_value << ',' << to_string(r.verdict) << ',' << r.num_max_classes
     << '\n';
}

// Exhaustive P4 table over 1 <= n <= n_max and every edge count.
inline std::vector<SearchResult> p4_extremal_table(std::size_t n_max, std::size_t threads = 1) {
  detail::check_search_size(n_max);
  std::vector<SearchResult> rows;
  for (std::size_t n = 1; n <= n_max; ++n)
    for (std::size_t e = 0; e <= pair_count(n); ++e) rows.push_back(extremal_search(n, e, Statistic::p4(), threads));
  return rows;
}

inline void write_table(std::ostream& os, const std::vector<SearchResult>& rows) {
  os << kTableHeader << '\n';
  for (const auto& r : rows) write_table_row(os, r);
}

}  // namespace p4d
