#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "p4d/graph.hpp"

namespace p4d {

struct CliqueDecomposition {
  std::uint64_t a;
  std::uint64_t b;
  friend bool operator==(const CliqueDecomposition&, const CliqueDecomposition&) = default;
};

// e = C(a,2) + b with 0 <= b < a; e = 0 gives (1, 0).
inline CliqueDecomposition clique_decomposition(std::uint64_t e) {
  auto a = static_cast<std::uint64_t>((1.0 + std::sqrt(1.0 + 8.0 * static_cast<double>(e))) / 2.0);
  while (a > 1 && pair_count(a) > e) --a;
  while (pair_count(a + 1) <= e) ++a;
  if (a == 0) a = 1;
  return {a, e - pair_count(a)};
}

namespace detail {
inline void check_capacity(std::size_t n, std::uint64_t e) {
  if (n == 0) throw graph_error(GraphErrc::vertex_out_of_range, "n must be positive");
  if (e > pair_count(n))
    throw graph_error(GraphErrc::too_many_edges,
                      std::to_string(e) + " edges on " + std::to_string(n) + " vertices");
}
}  // namespace detail

// K_a on vertices 0..a-1 plus vertex a joined to 0..b-1.
inline Graph quasi_clique(std::size_t n, std::uint64_t e) {
  detail::check_capacity(n, e);
  const auto [a, b] = clique_decomposition(e);
  std::vector<Edge> edges;
  edges.reserve(e);
  for (Vertex u = 0; u < a; ++u)
    for (Vertex v = u + 1; v < a; ++v) edges.emplace_back(u, v);
  for (Vertex u = 0; u < b; ++u) edges.emplace_back(u, static_cast<Vertex>(a));
  return Graph(n, std::move(edges));
}

// Complement of the quasi-clique with C(n,2) - e edges.
inline Graph quasi_star(std::size_t n, std::uint64_t e) {
  detail::check_capacity(n, e);
  return complement(quasi_clique(n, pair_count(n) - e));
}

namespace detail {

// Havel-Hakimi realisation of a degree sequence; returns false when the
// sequence is not graphical.
inline bool havel_hakimi(std::vector<std::size_t> target, std::vector<Edge>& edges) {
  const std::size_t n = target.size();
  std::vector<Vertex> order(n);
  while (true) {
    for (Vertex v = 0; v < n; ++v) order[v] = v;
    std::stable_sort(order.begin(), order.end(), [&](Vertex a, Vertex b) { return target[a] > target[b]; });
    const Vertex head = order[0];
    const std::size_t d = target[head];
    if (d == 0) return true;
    if (d >= n) return false;
    target[head] = 0;
    for (std::size_t i = 1; i <= d; ++i) {
      const Vertex v = order[i];
      if (target[v] == 0) return false;
      --target[v];
      edges.emplace_back(std::min(head, v), std::max(head, v));
    }
  }
}

}  // namespace detail

// Graph with e edges whose degrees differ by at most one. Edges are laid
// out on a ring: offset 1 first, then offset 2, and so on, skipping any
// edge that would push an endpoint past its target degree. Vertices that
// receive the extra degree are spread evenly around the ring.
inline Graph near_regular(std::size_t n, std::uint64_t e) {
  detail::check_capacity(n, e);
  const std::size_t d = static_cast<std::size_t>(2 * e / n);
  const std::size_t extra = static_cast<std::size_t>(2 * e - static_cast<std::uint64_t>(d) * n);
  std::vector<std::size_t> target(n, d);
  for (std::size_t i = 0; i < extra; ++i) ++target[(i * n) / extra];

  std::vector<std::size_t> deg(n, 0);
  std::vector<std::vector<bool>> present(n, std::vector<bool>(n, false));
  std::vector<Edge> edges;
  edges.reserve(e);
  for (std::size_t offset = 1; offset <= n / 2 && edges.size() < e; ++offset) {
    for (std::size_t i = 0; i < n && edges.size() < e; ++i) {
      const std::size_t j = (i + offset) % n;
      if (present[i][j] || deg[i] >= target[i] || deg[j] >= target[j]) continue;
      present[i][j] = present[j][i] = true;
      ++deg[i];
      ++deg[j];
      edges.emplace_back(static_cast<Vertex>(std::min(i, j)), static_cast<Vertex>(std::max(i, j)));
    }
  }
  if (edges.size() != e) {
    // Ring greedy got stuck; near-regular sequences are always graphical.
    edges.clear();
    if (!detail::havel_hakimi(target, edges))
      throw std::logic_error("near_regular: degree sequence not realisable");
  }
  return Graph(n, std::move(edges));
}

}  // namespace p4d
