#pragma once

#include <istream>
#include <ostream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "p4d/graph.hpp"

namespace p4d {

class format_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Edge-list text: "n e" then e lines "u v" with u < v, sorted.
inline void write_edge_list(std::ostream& os, const Graph& g) {
  os << g.n() << ' ' << g.num_edges() << '\n';
  for (auto [u, v] : g.edges()) os << u << ' ' << v << '\n';
}

inline std::string to_edge_list(const Graph& g) {
  std::ostringstream os;
  write_edge_list(os, g);
  return os.str();
}

inline Graph read_edge_list(std::istream& is) {
  long long n = -1;
  long long e = -1;
  if (!(is >> n >> e)) throw format_error("edge list: missing header \"n e\"");
  if (n <= 0) throw format_error("edge list: n must be positive");
  if (e < 0) throw format_error("edge list: e must be nonnegative");
  if (static_cast<unsigned long long>(e) > pair_count(static_cast<std::uint64_t>(n)))
    throw graph_error(GraphErrc::too_many_edges, std::to_string(e) + " edges on " + std::to_string(n) + " vertices");
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(e));
  for (long long i = 0; i < e; ++i) {
    long long u = -1;
    long long v = -1;
    if (!(is >> u >> v)) throw format_error("edge list: expected " + std::to_string(e) + " edges, got " + std::to_string(i));
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw graph_error(GraphErrc::vertex_out_of_range, "(" + std::to_string(u) + "," + std::to_string(v) + ")");
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string trailing;
  if (is >> trailing) throw format_error("edge list: trailing data \"" + trailing + "\"");
  return Graph(static_cast<std::size_t>(n), std::move(edges));
}

inline Graph parse_edge_list(const std::string& text) {
  std::istringstream is(text);
  return read_edge_list(is);
}

// graph6 (read only). Handles the 1- and 4-byte size prefixes and an
// optional ">>graph6<<" header.
inline Graph parse_graph6(std::string text) {
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ')) text.pop_back();
  const std::string header = ">>graph6<<";
  if (text.rfind(header, 0) == 0) text.erase(0, header.size());
  if (text.empty()) throw format_error("graph6: empty input");
  for (char ch : text)
    if (ch < 63 || ch > 126) throw format_error("graph6: invalid character");
  std::size_t pos = 0;
  std::size_t n = 0;
  if (text[0] != 126) {
    n = static_cast<std::size_t>(text[0] - 63);
    pos = 1;
  } else {
    if (text.size() < 4 || text[1] == 126) throw format_error("graph6: unsupported size prefix (n > 258047)");
    n = (static_cast<std::size_t>(text[1] - 63) << 12) | (static_cast<std::size_t>(text[2] - 63) << 6) |
        static_cast<std::size_t>(text[3] - 63);
    pos = 4;
  }
  if (n == 0) throw format_error("graph6: zero vertices");
  const std::size_t bits = pair_count(n);
  const std::size_t need = (bits + 5) / 6;
  if (text.size() - pos != need)
    throw format_error("graph6: expected " + std::to_string(need) + " data bytes, got " + std::to_string(text.size() - pos));
  std::vector<Edge> edges;
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const int byte = text[pos + k / 6] - 63;
      if ((byte >> (5 - static_cast<int>(k % 6))) & 1) edges.emplace_back(i, j);
    }
  }
  return Graph(n, std::move(edges));
}

}  // namespace p4d
