#pragma once

#include <cstdint>
#include <limits>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "p4d/graph.hpp"

namespace p4d {

using Count = std::uint64_t;

// Walk and path counts are below n^5, which fits in 64 bits up to here.
inline constexpr std::size_t kMaxCountVertices = 7000;
inline constexpr std::size_t kMaxBruteWalkVertices = 25;
inline constexpr std::size_t kMaxBrutePathVertices = 12;

namespace detail {

inline void check_count_size(const Graph& g) {
  if (g.n() > kMaxCountVertices)
    throw graph_error(GraphErrc::too_large, "exact counts support n <= " + std::to_string(kMaxCountVertices));
}

inline Count binomial(Count n, Count k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  unsigned __int128 r = 1;
  for (Count i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
    if (r > std::numeric_limits<Count>::max()) throw std::overflow_error("binomial overflows 64 bits");
  }
  return static_cast<Count>(r);
}

// y = A x using neighbour bitsets.
inline std::vector<Count> adjacency_times(const Graph& g, const std::vector<Count>& x) {
  std::vector<Count> y(g.n(), 0);
  for (Vertex v = 0; v < g.n(); ++v) {
    const std::uint64_t* r = g.row(v);
    Count acc = 0;
    for (std::size_t w = 0; w < g.words(); ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        acc += x[w * 64 + static_cast<std::size_t>(std::countr_zero(bits))];
        bits &= bits - 1;
      }
    }
    y[v] = acc;
  }
  return y;
}

}  // namespace detail

// Sum over v of C(deg v, k).
inline Count count_kstars(const Graph& g, std::size_t k) {
  if (k == 0) throw std::invalid_argument("count_kstars: k must be positive");
  Count total = 0;
  for (auto d : g.degrees()) total += detail::binomial(d, k);
  return total;
}

inline Count count_p2(const Graph& g) { return count_kstars(g, 2); }

// Grand sum of A^4, computed as 1^T A A A A 1 by four matrix-vector products.
inline Count count_walks4_matrix(const Graph& g) {
  detail::check_count_size(g);
  std::vector<Count> x(g.n(), 1);
  for (int i = 0; i < 4; ++i) x = detail::adjacency_times(g, x);
  Count total = 0;
  for (auto v : x) total += v;
  return total;
}

// Sum over ordered pairs (v1, v3), diagonal included, of
// deg(v1) deg(v3) codeg(v1, v3).
inline Count count_walks4_codegree(const Graph& g) {
  detail::check_count_size(g);
  const auto& deg = g.degrees();
  Count total = 0;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (deg[u] == 0) continue;
    total += static_cast<Count>(deg[u]) * deg[u] * deg[u];
    for (Vertex w = u + 1; w < g.n(); ++w) {
      if (deg[w] == 0) continue;
      total += 2 * static_cast<Count>(deg[u]) * deg[w] * g.codegree(u, w);
    }
  }
  return total;
}

// Number of vertex sequences v0..v4 with consecutive vertices adjacent.
// Both routes are evaluated; disagreement is an internal bug.
inline Count count_walks4(const Graph& g) {
  const Count by_matrix = count_walks4_matrix(g);
  const Count by_codegree = count_walks4_codegree(g);
  if (by_matrix != by_codegree)
    throw std::logic_error("count_walks4: matrix route " + std::to_string(by_matrix) + " != codegree route " +
                           std::to_string(by_codegree));
  return by_codegree;
}

inline Count count_walks4_brute(const Graph& g) {
  if (g.n() > kMaxBruteWalkVertices)
    throw graph_error(GraphErrc::too_large, "count_walks4_brute supports n <= " + std::to_string(kMaxBruteWalkVertices));
  std::vector<std::vector<Vertex>> nb(g.n());
  for (Vertex v = 0; v < g.n(); ++v) nb[v] = g.neighbors(v);
  Count total = 0;
  for (Vertex v0 = 0; v0 < g.n(); ++v0)
    for (Vertex v1 : nb[v0])
      for (Vertex v2 : nb[v1])
        for (Vertex v3 : nb[v2]) total += nb[v3].size();
  return total;
}

// Subgraphs isomorphic to the 4-edge path. Each path v0-v1-v2-v3-v4 is
// charged to the unordered pair {v1, v3}: codeg choices for v2, then
// endpoints v0 in N(v1) \ {v2, v3} and v4 in N(v3) \ {v1, v2}, minus the
// choices where v0 == v4.
inline Count count_p4(const Graph& g) {
  detail::check_count_size(g);
  const auto& deg = g.degrees();
  Count total = 0;
  for (Vertex u = 0; u < g.n(); ++u) {
    if (deg[u] < 2) continue;
    for (Vertex w = u + 1; w < g.n(); ++w) {
      if (deg[w] < 2) continue;
      const Count common = g.codegree(u, w);
      if (common == 0) continue;
      const Count joined = g.has_edge(u, w) ? 1 : 0;
      const Count left = deg[u] - 1 - joined;
      const Count right = deg[w] - 1 - joined;
      total += common * (left * right - (common - 1));
    }
  }
  return total;
}

// Injective 5-sequences along edges, halved for direction.
inline Count count_p4_brute(const Graph& g) {
  if (g.n() > kMaxBrutePathVertices)
    throw graph_error(GraphErrc::too_large, "count_p4_brute supports n <= " + std::to_string(kMaxBrutePathVertices));
  std::vector<std::vector<Vertex>> nb(g.n());
  for (Vertex v = 0; v < g.n(); ++v) nb[v] = g.neighbors(v);
  Count sequences = 0;
  for (Vertex v0 = 0; v0 < g.n(); ++v0)
    for (Vertex v1 : nb[v0])
      for (Vertex v2 : nb[v1]) {
        if (v2 == v0) continue;
        for (Vertex v3 : nb[v2]) {
          if (v3 == v0 || v3 == v1) continue;
          for (Vertex v4 : nb[v3])
            if (v4 != v0 && v4 != v1 && v4 != v2) ++sequences;
        }
      }
  return sequences / 2;
}

// 4-edge walks that revisit a vertex.
inline Count degenerate_walks4(const Graph& g) { return count_walks4(g) - 2 * count_p4(g); }

inline double hom_density_p4(const Graph& g) {
  const double n = static_cast<double>(g.n());
  return static_cast<double>(count_walks4(g)) / (n * n * n * n * n);
}

struct CountReport {
  std::size_t n = 0;
  std::size_t e = 0;
  double c = 0.0;
  Count p2 = 0;
  Count p4 = 0;
  std::map<std::size_t, Count> kstars;
  Count walks4 = 0;
  double hom_density_p4 = 0.0;
};

inline CountReport count_report(const Graph& g, const std::vector<std::size_t>& ks = {}) {
  CountReport r;
  r.n = g.n();
  r.e = g.num_edges();
  r.c = g.density();
  r.p2 = count_p2(g);
  r.p4 = count_p4(g);
  r.walks4 = count_walks4(g);
  const double n = static_cast<double>(g.n());
  r.hom_density_p4 = static_cast<double>(r.walks4) / (n * n * n * n * n);
  for (auto k : ks) r.kstars[k] = count_kstars(g, k);
  return r;
}

}  // namespace p4d
