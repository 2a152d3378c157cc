#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "p4d/graph.hpp"

namespace p4d {

inline constexpr std::size_t kMaxCanonicalVertices = 10;

// Identifies a graph up to isomorphism. Byte 0 is n, bytes 1..8 are the
// big-endian canonical adjacency bit-string (pairs in colex order
// (0,1),(0,2),(1,2),(0,3),... with the first pair most significant).
class CanonicalKey {
 public:
  CanonicalKey() = default;
  CanonicalKey(std::size_t n, std::uint64_t bits) : n_(n), bits_(bits) {}

  std::size_t n() const noexcept { return n_; }
  std::uint64_t bits() const noexcept { return bits_; }

  std::string bytes() const {
    std::string out(9, '\0');
    out[0] = static_cast<char>(n_);
    for (int i = 0; i < 8; ++i) out[1 + i] = static_cast<char>((bits_ >> (8 * (7 - i))) & 0xFF);
    return out;
  }

  std::string hex() const {
    static constexpr char digits[] = "0123456789abcdef";
    std::string out;
    for (unsigned char ch : bytes()) {
      out.push_back(digits[ch >> 4]);
      out.push_back(digits[ch & 0xF]);
    }
    return out;
  }

  friend auto operator<=>(const CanonicalKey&, const CanonicalKey&) = default;

 private:
  std::size_t n_ = 0;
  std::uint64_t bits_ = 0;
};

namespace detail {

// Bit adjacency for n <= 10 (also used by the exhaustive search kernel).
using SmallAdj = std::array<std::uint16_t, kMaxCanonicalVertices>;

// Stable colour refinement starting from degrees. Colours are ranks of
// sorted signatures, so they are isomorphism invariant.
inline std::vector<int> refine_colours(const SmallAdj& adj, std::size_t n) {
  std::vector<int> colour(n);
  for (std::size_t v = 0; v < n; ++v) colour[v] = std::popcount(adj[v]);
  std::size_t classes = 0;
  while (true) {
    std::vector<std::vector<int>> sig(n);
    for (std::size_t v = 0; v < n; ++v) {
      sig[v].push_back(colour[v]);
      std::vector<int> nb;
      for (std::size_t w = 0; w < n; ++w)
        if ((adj[v] >> w) & 1U) nb.push_back(colour[w]);
      std::sort(nb.begin(), nb.end());
      sig[v].insert(sig[v].end(), nb.begin(), nb.end());
    }
    std::vector<std::vector<int>> uniq = sig;
    std::sort(uniq.begin(), uniq.end());
    uniq.erase(std::unique(uniq.begin(), uniq.end()), uniq.end());
    for (std::size_t v = 0; v < n; ++v)
      colour[v] = static_cast<int>(std::lower_bound(uniq.begin(), uniq.end(), sig[v]) - uniq.begin());
    if (uniq.size() == classes) break;
    classes = uniq.size();
  }
  return colour;
}

struct CanonSearch {
  const SmallAdj& adj;
  std::size_t n;
  std::size_t total_bits;
  std::vector<std::vector<std::uint8_t>> cell_of_position;  // candidate vertices per position
  std::array<std::uint8_t, kMaxCanonicalVertices> order{};
  std::uint16_t used = 0;
  std::uint64_t best = ~std::uint64_t{0};
  bool have_best = false;

  void run(std::size_t pos, std::uint64_t prefix, std::size_t bits_so_far) {
    if (pos == n) {
      if (!have_best || prefix < best) {
        best = prefix;
        have_best = true;
      }
      return;
    }
    for (std::uint8_t v : cell_of_position[pos]) {
      if ((used >> v) & 1U) continue;
      std::uint64_t next = prefix;
      for (std::size_t p = 0; p < pos; ++p) next = (next << 1) | ((adj[order[p]] >> v) & 1U);
      const std::size_t nbits = bits_so_far + pos;
      if (have_best) {
        const std::uint64_t best_prefix = nbits == 0 ? 0 : best >> (total_bits - nbits);
        if (next > best_prefix) continue;
      }
      order[pos] = v;
      used |= static_cast<std::uint16_t>(1U << v);
      run(pos + 1, next, nbits);
      used &= static_cast<std::uint16_t>(~(1U << v));
    }
  }
};

inline std::uint64_t canonical_bits(const SmallAdj& adj, std::size_t n) {
  const auto colour = refine_colours(adj, n);
  std::vector<std::uint8_t> by_colour(n);
  for (std::size_t v = 0; v < n; ++v) by_colour[v] = static_cast<std::uint8_t>(v);
  std::stable_sort(by_colour.begin(), by_colour.end(),
                   [&](std::uint8_t a, std::uint8_t b) { return colour[a] < colour[b]; });
  CanonSearch search{adj, n, pair_count(n), {}, {}, 0, 0, false};
  search.cell_of_position.resize(n);
  for (std::size_t pos = 0; pos < n; ++pos)
    for (std::size_t v = 0; v < n; ++v)
      if (colour[v] == colour[by_colour[pos]]) search.cell_of_position[pos].push_back(static_cast<std::uint8_t>(v));
  search.run(0, 0, 0);
  return search.best;
}

}  // namespace detail

// Minimum adjacency bit-string over all vertex orderings compatible with the
// colour-refinement partition. Equal keys iff the graphs are isomorphic.
inline CanonicalKey canonical_key(const Graph& g) {
  if (g.n() > kMaxCanonicalVertices)
    throw graph_error(GraphErrc::too_large,
                      "canonical_key supports n <= 10, got n=" + std::to_string(g.n()));
  detail::SmallAdj adj{};
  for (auto [u, v] : g.edges()) {
    adj[u] |= static_cast<std::uint16_t>(1U << v);
    adj[v] |= static_cast<std::uint16_t>(1U << u);
  }
  return CanonicalKey(g.n(), detail::canonical_bits(adj, g.n()));
}

// Canonical representative graph encoded by the key.
inline Graph decode(const CanonicalKey& key) {
  const std::size_t n = key.n();
  const std::size_t total = pair_count(n);
  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (Vertex q = 1; q < n; ++q)
    for (Vertex p = 0; p < q; ++p, ++bit)
      if ((key.bits() >> (total - 1 - bit)) & 1U) edges.emplace_back(p, q);
  return Graph(n, std::move(edges));
}

}  // namespace p4d
