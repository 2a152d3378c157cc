#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "p4d/graph.hpp"

namespace p4d {

class domain_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

namespace detail {
inline void check_density(double c, const char* who) {
  if (!(c >= 0.0 && c <= 1.0)) throw domain_error(std::string(who) + ": density must lie in [0, 1]");
}
}  // namespace detail

// Walk-density lower bound c^4.
inline double lower_bound_density(double c) {
  detail::check_density(c, "lower_bound_density");
  return c * c * c * c;
}

// Quasi-star branch (1 - sqrt(1-c))^2 ((c+1) sqrt(1-c) + c).
inline double upper_star_density(double c) {
  detail::check_density(c, "upper_star_density");
  const double r = std::sqrt(1.0 - c);
  // 1 - sqrt(1-c) written as c / (1 + sqrt(1-c)) to avoid cancellation at small c.
  const double corner = c / (1.0 + r);
  return corner * corner * ((c + 1.0) * r + c);
}

// Quasi-clique branch c^{5/2}.
inline double upper_clique_density(double c) {
  detail::check_density(c, "upper_clique_density");
  return c * c * std::sqrt(c);
}

inline constexpr double kTieTolerance = 1e-12;

enum class Branch { star, clique, tie };

inline const char* to_string(Branch b) {
  switch (b) {
    case Branch::star: return "star";
    case Branch::clique: return "clique";
    case Branch::tie: return "tie";
  }
  return "?";
}

inline Branch dominant_branch(double star, double clique) {
  if (std::abs(star - clique) <= kTieTolerance) return Branch::tie;
  return star > clique ? Branch::star : Branch::clique;
}

struct BoundReport {
  std::size_t n = 0;
  std::uint64_t e = 0;
  double c = 0.0;
  double lower = 0.0;         // 1/2 c^4 n^5
  double upper_star = 0.0;    // 1/2 star branch n^5
  double upper_clique = 0.0;  // 1/2 c^{5/2} n^5
  double upper = 0.0;
  Branch dominant = Branch::tie;
};

inline BoundReport bound_report(std::size_t n, std::uint64_t e) {
  if (n == 0) throw graph_error(GraphErrc::vertex_out_of_range, "n must be positive");
  if (e > pair_count(n))
    throw graph_error(GraphErrc::too_many_edges, std::to_string(e) + " edges on " + std::to_string(n) + " vertices");
  BoundReport r;
  r.n = n;
  r.e = e;
  const double nn = static_cast<double>(n);
  r.c = std::clamp(2.0 * static_cast<double>(e) / (nn * nn), 0.0, 1.0);
  const double scale = 0.5 * nn * nn * nn * nn * nn;
  const double star = upper_star_density(r.c);
  const double clique = upper_clique_density(r.c);
  r.lower = scale * lower_bound_density(r.c);
  r.upper_star = scale * star;
  r.upper_clique = scale * clique;
  r.upper = std::max(r.upper_star, r.upper_clique);
  r.dominant = dominant_branch(star, clique);
  return r;
}

struct CrossingPoint {
  double c0 = 0.0;
  double residual = 0.0;  // |upper_star - upper_clique| at c0
  int iterations = 0;
};

// Root of upper_star - upper_clique on [0.01, 0.5] by bisection.
inline CrossingPoint crossing_point(double tolerance = 1e-12) {
  auto gap = [](double c) { return upper_star_density(c) - upper_clique_density(c); };
  double lo = 0.01;
  double hi = 0.5;
  double g_lo = gap(lo);
  const double g_hi = gap(hi);
  if (!(g_lo > 0.0 && g_hi < 0.0)) throw std::logic_error("crossing_point: bracket [0.01, 0.5] does not straddle a root");
  CrossingPoint out;
  while (hi - lo > tolerance) {
    const double mid = 0.5 * (lo + hi);
    const double g_mid = gap(mid);
    ++out.iterations;
    if (g_mid == 0.0) {
      lo = hi = mid;
      break;
    }
    if ((g_mid > 0.0) == (g_lo > 0.0)) {
      lo = mid;
      g_lo = g_mid;
    } else {
      hi = mid;
    }
  }
  out.c0 = 0.5 * (lo + hi);
  out.residual = std::abs(gap(out.c0));
  return out;
}

enum class AkRegime { star, clique, transition };

inline const char* to_string(AkRegime r) {
  switch (r) {
    case AkRegime::star: return "star";
    case AkRegime::clique: return "clique";
    case AkRegime::transition: return "transition";
  }
  return "?";
}

// Outer ranges of the 2-edge-path theorem. Compared in doubled integer
// arithmetic: e <= C(n,2)/2 - n/2  <=>  2e <= C(n,2) - n.
inline AkRegime ak_regime(std::size_t n, std::uint64_t e) {
  if (n == 0) throw graph_error(GraphErrc::vertex_out_of_range, "n must be positive");
  const std::uint64_t pairs = pair_count(n);
  if (e > pairs) throw graph_error(GraphErrc::too_many_edges, std::to_string(e) + " edges on " + std::to_string(n) + " vertices");
  const auto twice_e = static_cast<std::int64_t>(2 * e);
  const auto p = static_cast<std::int64_t>(pairs);
  const auto nn = static_cast<std::int64_t>(n);
  if (twice_e <= p - nn) return AkRegime::star;
  if (twice_e >= p + nn) return AkRegime::clique;
  return AkRegime::transition;
}

struct SweepRow {
  double c;
  double lower;
  double upper_star;
  double upper_clique;
  Branch dominant;
};

inline std::vector<SweepRow> sweep(const std::vector<double>& grid) {
  std::vector<SweepRow> rows;
  rows.reserve(grid.size());
  for (double c : grid) {
    const double star = upper_star_density(c);
    const double clique = upper_clique_density(c);
    rows.push_back({c, lower_bound_density(c), star, clique, dominant_branch(star, clique)});
  }
  return rows;
}

inline std::vector<double> uniform_grid(std::size_t points) {
  std::vector<double> grid;
  if (points == 0) return grid;
  if (points == 1) return {0.0};
  grid.reserve(points);
  for (std::size_t i = 0; i < points; ++i) grid.push_back(static_cast<double>(i) / static_cast<double>(points - 1));
  return grid;
}

}  // namespace p4d
