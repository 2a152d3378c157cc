#pragma once

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "p4d/construct.hpp"
#include "p4d/graph.hpp"

namespace p4d {

// Erdos-Renyi G(n, p).
template <class Rng>
Graph random_graph(std::size_t n, double p, Rng& rng) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng)) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

// Uniformly random vertex relabeling.
template <class Rng>
std::vector<Vertex> random_permutation(std::size_t n, Rng& rng) {
  std::vector<Vertex> perm(n);
  for (Vertex v = 0; v < n; ++v) perm[v] = v;
  std::shuffle(perm.begin(), perm.end(), rng);
  return perm;
}

// d-regular graph: the ring layout from near_regular, scrambled by random
// degree-preserving double-edge swaps (ab, cd -> ac, bd).
template <class Rng>
Graph random_regular(std::size_t n, std::size_t d, Rng& rng, std::size_t swaps_per_edge = 10) {
  if (d >= n || (n * d) % 2 != 0) throw std::invalid_argument("random_regular: need d < n and n*d even");
  const Graph base = near_regular(n, n * d / 2);
  std::vector<Edge> edges = base.edges();
  if (edges.size() < 2) return base;
  std::vector<std::vector<bool>> adj(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) adj[u][v] = adj[v][u] = true;
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  std::bernoulli_distribution flip(0.5);
  const std::size_t rounds = swaps_per_edge * edges.size();
  for (std::size_t r = 0; r < rounds; ++r) {
    const std::size_t i = pick(rng);
    const std::size_t j = pick(rng);
    if (i == j) continue;
    auto [a, b] = edges[i];
    auto [c, dd] = edges[j];
    if (flip(rng)) std::swap(c, dd);
    if (a == c || a == dd || b == c || b == dd) continue;
    if (adj[a][c] || adj[b][dd]) continue;
    adj[a][b] = adj[b][a] = adj[c][dd] = adj[dd][c] = false;
    adj[a][c] = adj[c][a] = adj[b][dd] = adj[dd][b] = true;
    edges[i] = {std::min(a, c), std::max(a, c)};
    edges[j] = {std::min(b, dd), std::max(b, dd)};
  }
  return Graph(n, std::move(edges));
}

}  // namespace p4d
