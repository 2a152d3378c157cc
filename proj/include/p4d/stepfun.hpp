#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <iomanip>
#include <istream>
#include <limits>
#include <numeric>
#include <ostream>
#include <random>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "p4d/bounds.hpp"
#include "p4d/graph.hpp"

namespace p4d {

class stepfun_error : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Blocks narrower than this are treated as absent.
inline constexpr double kMinBlockWidth = 1e-14;

// Symmetric piecewise-constant function on [0,1)^2. Block i is the interval
// I_i of width t_i; value(i, j) is the constant on I_i x I_j.
class StepFunction {
 public:
  StepFunction() : widths_{1.0}, values_{0.0} {}

  StepFunction(std::vector<double> widths, std::vector<double> values)
      : widths_(std::move(widths)), values_(std::move(values)) {
    validate();
  }

  // Single block of constant value.
  static StepFunction constant(double value) { return StepFunction({1.0}, {value}); }

  std::size_t size() const noexcept { return widths_.size(); }
  double width(std::size_t i) const { return widths_.at(i); }
  const std::vector<double>& widths() const noexcept { return widths_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double value(std::size_t i, std::size_t j) const { return values_[i * size() + j]; }

  // q_0 = 0 < q_1 < ... < q_K = 1.
  std::vector<double> breakpoints() const {
    std::vector<double> q(size() + 1, 0.0);
    std::partial_sum(widths_.begin(), widths_.end(), q.begin() + 1);
    q.back() = 1.0;
    return q;
  }

  // Row integrals l_i = sum_j t_j A_ij.
  std::vector<double> row_profile() const {
    const std::size_t k = size();
    std::vector<double> ell(k, 0.0);
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) ell[i] += widths_[j] * values_[i * k + j];
    return ell;
  }

  double mass() const {
    const auto ell = row_profile();
    double m = 0.0;
    for (std::size_t i = 0; i < size(); ++i) m += widths_[i] * ell[i];
    return m;
  }

  // Sets A_ij and A_ji.
  void set_value(std::size_t i, std::size_t j, double v) {
    values_[i * size() + j] = v;
    values_[j * size() + i] = v;
  }

  void set_widths(std::vector<double> widths) {
    if (widths.size() != size()) throw stepfun_error("set_widths: block count mismatch");
    widths_ = std::move(widths);
  }

  // Splits block i into fractions (f, 1-f); the two halves carry identical rows.
  void split_block(std::size_t i, double fraction) {
    const std::size_t k = size();
    std::vector<std::size_t> source(k + 1);
    for (std::size_t a = 0; a <= k; ++a) source[a] = a <= i ? a : a - 1;
    std::vector<double> w(k + 1);
    for (std::size_t a = 0; a <= k; ++a) w[a] = widths_[source[a]];
    w[i] = widths_[i] * fraction;
    w[i + 1] = widths_[i] * (1.0 - fraction);
    std::vector<double> v((k + 1) * (k + 1));
    for (std::size_t a = 0; a <= k; ++a)
      for (std::size_t b = 0; b <= k; ++b) v[a * (k + 1) + b] = values_[source[a] * k + source[b]];
    widths_ = std::move(w);
    values_ = std::move(v);
  }

  // Drops block i; callers redistribute its width.
  void remove_block(std::size_t i) {
    const std::size_t k = size();
    std::vector<double> w;
    std::vector<double> v;
    w.reserve(k - 1);
    v.reserve((k - 1) * (k - 1));
    for (std::size_t a = 0; a < k; ++a) {
      if (a == i) continue;
      w.push_back(widths_[a]);
      for (std::size_t b = 0; b < k; ++b)
        if (b != i) v.push_back(values_[a * k + b]);
    }
    widths_ = std::move(w);
    values_ = std::move(v);
  }

  // Reorders blocks: new block a is old block order[a].
  StepFunction permuted(const std::vector<std::size_t>& order) const {
    const std::size_t k = size();
    std::vector<double> w(k);
    std::vector<double> v(k * k);
    for (std::size_t a = 0; a < k; ++a) {
      w[a] = widths_[order[a]];
      for (std::size_t b = 0; b < k; ++b) v[a * k + b] = values_[order[a] * k + order[b]];
    }
    return StepFunction(std::move(w), std::move(v));
  }

 private:
  void validate() {
    const std::size_t k = widths_.size();
    if (k == 0) throw stepfun_error("step function needs at least one block");
    if (values_.size() != k * k) throw stepfun_error("step function: values must be K x K");
    double total = 0.0;
    for (double t : widths_) {
      if (!(t > 0.0)) throw stepfun_error("step function: block widths must be positive");
      total += t;
    }
    if (std::abs(total - 1.0) > 1e-9) throw stepfun_error("step function: widths must sum to 1");
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) {
        double& v = values_[i * k + j];
        if (!(v >= -1e-12 && v <= 1.0 + 1e-12)) throw stepfun_error("step function: values must lie in [0, 1]");
        v = std::clamp(v, 0.0, 1.0);
        if (std::abs(v - values_[j * k + i]) > 1e-12) throw stepfun_error("step function: values must be symmetric");
      }
    }
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = i + 1; j < k; ++j) values_[j * k + i] = values_[i * k + j];
  }

  std::vector<double> widths_;
  std::vector<double> values_;
};

// S(A) = sum_{i,j} t_i t_j l_i l_j min(l_i, l_j).
inline double s_value(const StepFunction& a) {
  const auto ell = a.row_profile();
  const auto& t = a.widths();
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < a.size(); ++j) total += t[i] * t[j] * ell[i] * ell[j] * std::min(ell[i], ell[j]);
  return total;
}

// T(A) = sum over pairs of cells of area * area * |value difference|.
inline double t_value(const StepFunction& a) {
  const std::size_t k = a.size();
  const auto& t = a.widths();
  std::vector<double> area(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) area[i * k + j] = t[i] * t[j];
  const auto& v = a.values();
  double total = 0.0;
  for (std::size_t r = 0; r < k * k; ++r)
    for (std::size_t s = 0; s < k * k; ++s) total += area[r] * area[s] * std::abs(v[r] - v[s]);
  return total;
}

// Pixel picture of g: n equal blocks, value 1 on I_i x I_j iff ij is an edge.
inline StepFunction from_graph(const Graph& g) {
  const std::size_t n = g.n();
  std::vector<double> widths(n, 1.0 / static_cast<double>(n));
  std::vector<double> values(n * n, 0.0);
  for (auto [u, v] : g.edges()) values[u * n + v] = values[v * n + u] = 1.0;
  return StepFunction(std::move(widths), std::move(values));
}

namespace detail {

// Builds a 0-1 step function from raw blocks, dropping any block whose
// width is below kMinBlockWidth and renormalising the rest.
inline StepFunction prune_blocks(std::vector<double> widths, std::vector<double> values) {
  const std::size_t k = widths.size();
  std::vector<std::size_t> keep;
  for (std::size_t i = 0; i < k; ++i)
    if (widths[i] >= kMinBlockWidth) keep.push_back(i);
  std::vector<double> w;
  std::vector<double> v;
  for (auto i : keep) {
    w.push_back(widths[i]);
    for (auto j : keep) v.push_back(values[i * k + j]);
  }
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  for (double& x : w) x /= total;
  return StepFunction(std::move(w), std::move(v));
}

// 1 - sqrt(1 - c) without cancellation.
inline double star_corner(double c) { return c / (1.0 + std::sqrt(1.0 - c)); }

}  // namespace detail

// Quasi-star shape: 1 where min(x, y) < 1 - sqrt(1 - c).
inline StepFunction a1(double c) {
  detail::check_density(c, "a1");
  if (c == 0.0) return StepFunction::constant(0.0);
  if (c == 1.0) return StepFunction::constant(1.0);
  const double x = detail::star_corner(c);
  return detail::prune_blocks({x, 1.0 - x}, {1.0, 1.0, 1.0, 0.0});
}

// Quasi-clique shape: 1 where max(x, y) < sqrt(c).
inline StepFunction a2(double c) {
  detail::check_density(c, "a2");
  if (c == 0.0) return StepFunction::constant(0.0);
  if (c == 1.0) return StepFunction::constant(1.0);
  const double s = std::sqrt(c);
  return detail::prune_blocks({s, 1.0 - s}, {1.0, 0.0, 0.0, 0.0});
}

inline constexpr double kFamilyTolerance = 1e-12;

// Admissible width interval for the two-step family at mass c.
inline std::pair<double, double> two_step_range(double c) { return {detail::star_corner(c), std::sqrt(c)}; }

// 0-1 staircase with t1 = x, t2 = (c - x^2) / 2x, l1 = (c + x^2) / 2x, l2 = x.
inline StepFunction two_step(double c, double x) {
  detail::check_density(c, "two_step");
  const auto [lo, hi] = two_step_range(c);
  if (!(x > 0.0) || x < lo - kFamilyTolerance || x > hi + kFamilyTolerance)
    throw stepfun_error("two_step: x outside [1 - sqrt(1-c), sqrt(c)]");
  const double t1 = x;
  const double t2 = std::max(0.0, (c - x * x) / (2.0 * x));
  const double t3 = std::max(0.0, 1.0 - t1 - t2);
  return detail::prune_blocks({t1, t2, t3}, {1, 1, 0, 1, 0, 0, 0, 0, 0});
}

inline double s_two_step_closed(double c, double x) {
  if (!(x > 0.0)) throw stepfun_error("s_two_step_closed: x must be positive");
  return (c * c * c / x + 9.0 * c * c * x - c * x * x * x - x * x * x * x * x) / 8.0;
}

// Same value in the substituted variable y = x / sqrt(c).
inline double s_two_step_closed_y(double c, double y) {
  if (!(y > 0.0)) throw stepfun_error("s_two_step_closed_y: y must be positive");
  return c * c * std::sqrt(c) / 8.0 * (1.0 / y + 9.0 * y - y * y * y - y * y * y * y * y);
}

// Admissible interval for the three-step family at complement-mass s.
inline std::pair<double, double> three_step_range(double s) { return {detail::star_corner(s), std::sqrt(s)}; }

// Three-block 0-1 staircase normalised to l1 = 1: A_ij = 1 iff i + j <= 4
// (1-based), t3 = x, total mass 1 - s.
inline StepFunction three_step(double s, double x) {
  if (!(s > 0.0 && s < 1.0)) throw stepfun_error("three_step: s must lie in (0, 1)");
  const auto [lo, hi] = three_step_range(s);
  if (!(x > 0.0) || x < lo - kFamilyTolerance || x > hi + kFamilyTolerance)
    throw stepfun_error("three_step: x outside [1 - sqrt(1-s), sqrt(s)]");
  const double t1 = std::max(0.0, 1.0 - (s + x * x) / (2.0 * x));
  const double t2 = std::max(0.0, (s - x * x) / (2.0 * x));
  const double t3 = x;
  return detail::prune_blocks({t1, t2, t3}, {1, 1, 1, 1, 1, 0, 1, 0, 0});
}

// Expanded six-term form of S for the three-step family.
inline double s_three_step_closed(double s, double x) {
  const double t1 = 1.0 - (s + x * x) / (2.0 * x);
  const double t2 = (s - x * x) / (2.0 * x);
  const double l2 = 1.0 - x;
  return t1 * t1 + t2 * t2 * l2 * l2 * l2 + x * x * t1 * t1 * t1 + 2.0 * t1 * t2 * l2 * l2 +
         2.0 * t1 * x * t1 * t1 + 2.0 * t2 * x * l2 * t1 * t1;
}

// Sorts blocks by row integral (descending) and merges adjacent blocks
// with identical rows.
inline StepFunction normalize(const StepFunction& a, double tolerance = 1e-14) {
  const std::size_t k = a.size();
  const auto ell = a.row_profile();
  std::vector<std::size_t> order(k);
  std::iota(order.begin(), order.end(), 0);
  auto row_less = [&](std::size_t x, std::size_t y) {
    if (ell[x] != ell[y]) return ell[x] > ell[y];
    for (std::size_t j = 0; j < k; ++j)
      if (a.value(x, j) != a.value(y, j)) return a.value(x, j) > a.value(y, j);
    return false;
  };
  std::stable_sort(order.begin(), order.end(), row_less);
  StepFunction out = a.permuted(order);
  bool merged = true;
  while (merged && out.size() > 1) {
    merged = false;
    for (std::size_t i = 0; i + 1 < out.size(); ++i) {
      bool same = true;
      for (std::size_t j = 0; j < out.size() && same; ++j)
        same = std::abs(out.value(i, j) - out.value(i + 1, j)) <= tolerance;
      if (!same) continue;
      auto w = out.widths();
      w[i] += w[i + 1];
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(i) + 1);
      out.remove_block(i + 1);
      out.set_widths(std::move(w));
      merged = true;
      break;
    }
  }
  return out;
}

// Rescales values toward total mass c: multiply by a common factor,
// clamp saturated cells at 1, and push the remainder into the
// unsaturated cells until the mass is within `tolerance` of c.
inline StepFunction with_mass(const StepFunction& a, double c, double tolerance = 1e-12) {
  detail::check_density(c, "with_mass");
  const std::size_t k = a.size();
  const auto& t = a.widths();
  std::vector<double> v = a.values();
  auto area = [&](std::size_t idx) { return t[idx / k] * t[idx % k]; };
  for (int round = 0; round < 1000; ++round) {
    double saturated = 0.0;
    double free_mass = 0.0;
    double free_area = 0.0;
    for (std::size_t idx = 0; idx < k * k; ++idx) {
      if (v[idx] >= 1.0) saturated += area(idx);
      else {
        free_mass += area(idx) * v[idx];
        free_area += area(idx);
      }
    }
    const double current = saturated + free_mass;
    if (std::abs(current - c) <= tolerance) break;
    if (current > c && saturated > c) {
      // Saturated cells alone overshoot: scale everything down.
      const double f = c / current;
      for (double& x : v) x *= f;
      continue;
    }
    if (free_mass <= 0.0) {
      if (free_area <= 0.0) break;
      const double fill = (c - saturated) / free_area;
      for (std::size_t idx = 0; idx < k * k; ++idx)
        if (v[idx] < 1.0) v[idx] = std::min(1.0, fill);
      continue;
    }
    const double f = (c - saturated) / free_mass;
    for (std::size_t idx = 0; idx < k * k; ++idx)
      if (v[idx] < 1.0) v[idx] = std::min(1.0, v[idx] * f);
  }
  return StepFunction(a.widths(), std::move(v));
}

// Random symmetric step function with K blocks and mass c. Roughly a third
// of the cells are snapped to 0 or 1 so 0-1 structure is well represented.
template <class Rng>
StepFunction random_step_function(std::size_t blocks, double c, Rng& rng) {
  if (blocks == 0) throw stepfun_error("random_step_function: need at least one block");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<double> cuts(blocks - 1);
  for (double& q : cuts) q = unit(rng);
  std::sort(cuts.begin(), cuts.end());
  std::vector<double> widths(blocks);
  double prev = 0.0;
  for (std::size_t i = 0; i < blocks; ++i) {
    const double q = i + 1 < blocks ? cuts[i] : 1.0;
    widths[i] = std::max(q - prev, 1e-6);
    prev = q;
  }
  const double total = std::accumulate(widths.begin(), widths.end(), 0.0);
  for (double& w : widths) w /= total;
  std::vector<double> values(blocks * blocks);
  for (std::size_t i = 0; i < blocks; ++i) {
    for (std::size_t j = i; j < blocks; ++j) {
      const double roll = unit(rng);
      const double v = roll < 0.15 ? 0.0 : roll < 0.3 ? 1.0 : unit(rng);
      values[i * blocks + j] = values[j * blocks + i] = v;
    }
  }
  return with_mass(StepFunction(std::move(widths), std::move(values)), c);
}

// Text form: K, then the K+1 breakpoints, then K rows of K values.
inline void write_step_function(std::ostream& os, const StepFunction& a) {
  const auto old_precision = os.precision(std::numeric_limits<double>::max_digits10);
  os << a.size() << '\n';
  const auto q = a.breakpoints();
  for (std::size_t i = 0; i < q.size(); ++i) os << (i ? " " : "") << q[i];
  os << '\n';
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a.size(); ++j) os << (j ? " " : "") << a.value(i, j);
    os << '\n';
  }
  os.precision(old_precision);
}

inline StepFunction read_step_function(std::istream& is) {
  std::size_t k = 0;
  if (!(is >> k) || k == 0) throw stepfun_error("step function text: missing block count");
  std::vector<double> q(k + 1);
  for (double& x : q)
    if (!(is >> x)) throw stepfun_error("step function text: missing breakpoint");
  if (q.front() != 0.0 || std::abs(q.back() - 1.0) > 1e-12) throw stepfun_error("step function text: breakpoints must span [0, 1]");
  std::vector<double> widths(k);
  for (std::size_t i = 0; i < k; ++i) widths[i] = q[i + 1] - q[i];
  std::vector<double> values(k * k);
  for (double& x : values)
    if (!(is >> x)) throw stepfun_error("step function text: missing value");
  return StepFunction(std::move(widths), std::move(values));
}

}  // namespace p4d
