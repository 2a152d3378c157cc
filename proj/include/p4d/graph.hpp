#pragma once

#include <algorithm>
#include <bit>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace p4d {

using Vertex = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

enum class GraphErrc {
  vertex_out_of_range,
  duplicate_edge,
  self_loop,
  too_many_edges,
  too_large,
};

inline const char* to_string(GraphErrc code) {
  switch (code) {
    case GraphErrc::vertex_out_of_range: return "vertex out of range";
    case GraphErrc::duplicate_edge: return "duplicate edge";
    case GraphErrc::self_loop: return "self-loop";
    case GraphErrc::too_many_edges: return "edge count exceeds n(n-1)/2";
    case GraphErrc::too_large: return "graph too large";
  }
  return "graph error";
}

class graph_error : public std::invalid_argument {
 public:
  graph_error(GraphErrc code, const std::string& detail)
      : std::invalid_argument(std::string(to_string(code)) + ": " + detail), code_(code) {}

  GraphErrc code() const noexcept { return code_; }

 private:
  GraphErrc code_;
};

inline constexpr std::uint64_t pair_count(std::uint64_t n) { return n * (n - (n > 0 ? 1 : 0)) / 2; }

// Simple undirected graph on vertices 0..n-1. Immutable after construction.
// Rows are kept as 64-bit word bitsets so codegree is a popcount over
// ceil(n/64) words.
class Graph {
 public:
  Graph() = default;

  Graph(std::size_t n, std::vector<Edge> edges) : n_(n), words_((n + 63) / 64) {
    if (n == 0) throw graph_error(GraphErrc::vertex_out_of_range, "graph needs at least one vertex");
    rows_.assign(n_ * words_, 0);
    degree_.assign(n_, 0);
    for (auto& [u, v] : edges) {
      if (u >= n_ || v >= n_)
        throw graph_error(GraphErrc::vertex_out_of_range,
                          "(" + std::to_string(u) + "," + std::to_string(v) + ") with n=" + std::to_string(n_));
      if (u == v) throw graph_error(GraphErrc::self_loop, "vertex " + std::to_string(u));
      if (u > v) std::swap(u, v);
      if (has_edge(u, v))
        throw graph_error(GraphErrc::duplicate_edge, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
      set_bit(u, v);
      set_bit(v, u);
      ++degree_[u];
      ++degree_[v];
    }
    std::sort(edges.begin(), edges.end());
    edges_ = std::move(edges);
  }

  std::size_t n() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }

  // Sorted list of (u, v) with u < v.
  const std::vector<Edge>& edges() const noexcept { return edges_; }

  std::size_t degree(Vertex v) const {
    check_vertex(v);
    return degree_[v];
  }

  const std::vector<std::size_t>& degrees() const noexcept { return degree_; }

  bool has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return (row(u)[v / 64] >> (v % 64)) & 1U;
  }

  // Number of common neighbours; codegree(v, v) == degree(v).
  std::size_t codegree(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    const std::uint64_t* a = row(u);
    const std::uint64_t* b = row(v);
    std::size_t total = 0;
    for (std::size_t w = 0; w < words_; ++w) total += static_cast<std::size_t>(std::popcount(a[w] & b[w]));
    return total;
  }

  std::vector<Vertex> neighbors(Vertex v) const {
    check_vertex(v);
    std::vector<Vertex> out;
    out.reserve(degree_[v]);
    const std::uint64_t* r = row(v);
    for (std::size_t w = 0; w < words_; ++w) {
      std::uint64_t bits = r[w];
      while (bits) {
        out.push_back(static_cast<Vertex>(w * 64 + static_cast<std::size_t>(std::countr_zero(bits))));
        bits &= bits - 1;
      }
    }
    return out;
  }

  // c = 2e/n^2, clamped into [0, 1].
  double density() const noexcept {
    const double nn = static_cast<double>(n_);
    return std::clamp(2.0 * static_cast<double>(edges_.size()) / (nn * nn), 0.0, 1.0);
  }

  // Raw bitset row for vertex v; words() entries.
  const std::uint64_t* row(Vertex v) const noexcept { return rows_.data() + static_cast<std::size_t>(v) * words_; }
  std::size_t words() const noexcept { return words_; }

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.edges_ == b.edges_; }

 private:
  void set_bit(Vertex u, Vertex v) { rows_[static_cast<std::size_t>(u) * words_ + v / 64] |= std::uint64_t{1} << (v % 64); }

  void check_vertex(Vertex v) const {
    if (v >= n_)
      throw graph_error(GraphErrc::vertex_out_of_range, std::to_string(v) + " with n=" + std::to_string(n_));
  }

  std::size_t n_ = 0;
  std::size_t words_ = 0;
  std::vector<std::uint64_t> rows_;
  std::vector<std::size_t> degree_;
  std::vector<Edge> edges_;
};

inline Graph build_graph(std::size_t n, std::vector<Edge> edges) { return Graph(n, std::move(edges)); }

inline std::size_t codegree(const Graph& g, Vertex u, Vertex v) { return g.codegree(u, v); }

inline Graph complement(const Graph& g) {
  std::vector<Edge> edges;
  edges.reserve(pair_count(g.n()) - g.num_edges());
  for (Vertex u = 0; u < g.n(); ++u)
    for (Vertex v = u + 1; v < g.n(); ++v)
      if (!g.has_edge(u, v)) edges.emplace_back(u, v);
  return Graph(g.n(), std::move(edges));
}

// Relabel: vertex v of g becomes perm[v].
inline Graph relabel(const Graph& g, const std::vector<Vertex>& perm) {
  if (perm.size() != g.n()) throw std::invalid_argument("relabel: permutation size mismatch");
  std::vector<Edge> edges;
  edges.reserve(g.num_edges());
  for (auto [u, v] : g.edges()) edges.emplace_back(perm[u], perm[v]);
  return Graph(g.n(), std::move(edges));
}

inline Graph complete_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) edges.emplace_back(u, v);
  return Graph(n, std::move(edges));
}

inline Graph path_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  return Graph(n, std::move(edges));
}

inline Graph cycle_graph(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
  if (n >= 3) edges.emplace_back(0, static_cast<Vertex>(n - 1));
  return Graph(n, std::move(edges));
}

// Star with centre 0 and `leaves` leaves.
inline Graph star_graph(std::size_t leaves) {
  std::vector<Edge> edges;
  for (Vertex v = 1; v <= leaves; ++v) edges.emplace_back(0, v);
  return Graph(leaves + 1, std::move(edges));
}

}  // namespace p4d
