#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include "p4d/stepfun.hpp"

namespace p4d {

enum class MoveKind { init, swap, shift, split, boundary };

inline const char* to_string(MoveKind m) {
  switch (m) {
    case MoveKind::init: return "init";
    case MoveKind::swap: return "swap";
    case MoveKind::shift: return "shift";
    case MoveKind::split: return "split";
    case MoveKind::boundary: return "boundary";
  }
  return "?";
}

struct OptimizerConfig {
  double accept_threshold = 1e-14;      // minimum S gain for an accepted move
  std::size_t patience = 200;           // consecutive rejections before stopping
  std::size_t max_iterations = 100000;
  double mass_tolerance = 1e-12;
  double min_block_width = 1e-10;
};

struct TraceRow {
  std::size_t iter;
  MoveKind move;
  double s;
  double t;
  double mass;
};

struct OptimizeResult {
  StepFunction best;
  double s = 0.0;
  std::vector<TraceRow> trace;
  std::size_t iterations = 0;
  std::uint64_t seed = 0;
};

namespace detail {

// Weight of a symmetric cell in the total mass.
inline double cell_weight(const StepFunction& a, std::size_t i, std::size_t j) {
  const double w = a.width(i) * a.width(j);
  return i == j ? w : 2.0 * w;
}

// Moves `delta` units of mass from cell (b, p) to cell (a, p). Returns the
// feasible delta range when `delta` is empty.
inline std::pair<double, double> shift_range(const StepFunction& f, std::size_t a, std::size_t b, std::size_t p) {
  const double wa = cell_weight(f, a, p);
  const double wb = cell_weight(f, b, p);
  const double va = f.value(a, p);
  const double vb = f.value(b, p);
  return {std::max(-va * wa, (vb - 1.0) * wb), std::min((1.0 - va) * wa, vb * wb)};
}

inline void apply_shift(StepFunction& f, std::size_t a, std::size_t b, std::size_t p, double delta) {
  const double wa = cell_weight(f, a, p);
  const double wb = cell_weight(f, b, p);
  f.set_value(a, p, std::clamp(f.value(a, p) + delta / wa, 0.0, 1.0));
  f.set_value(b, p, std::clamp(f.value(b, p) - delta / wb, 0.0, 1.0));
}

// Rectangle move on I_{i1}, I_{i2} x I_{j1}, I_{j2}: +eps/area on the
// (i1,j1), (i2,j2) cells and -eps/area on the other two, then symmetrised.
// Every row and column integral is unchanged.
inline std::vector<double> swap_direction(const StepFunction& f, std::size_t i1, std::size_t i2, std::size_t j1,
                                          std::size_t j2) {
  const std::size_t k = f.size();
  std::vector<double> d(k * k, 0.0);
  auto bump = [&](std::size_t i, std::size_t j, double sign) {
    const double amount = sign / (f.width(i) * f.width(j));
    d[i * k + j] += 0.5 * amount;
    d[j * k + i] += 0.5 * amount;
  };
  bump(i1, j1, 1.0);
  bump(i2, j1, -1.0);
  bump(i1, j2, -1.0);
  bump(i2, j2, 1.0);
  return d;
}

inline std::pair<double, double> direction_range(const StepFunction& f, const std::vector<double>& d) {
  double lo = -std::numeric_limits<double>::infinity();
  double hi = std::numeric_limits<double>::infinity();
  const auto& v = f.values();
  for (std::size_t idx = 0; idx < d.size(); ++idx) {
    if (d[idx] > 0.0) {
      hi = std::min(hi, (1.0 - v[idx]) / d[idx]);
      lo = std::max(lo, -v[idx] / d[idx]);
    } else if (d[idx] < 0.0) {
      hi = std::min(hi, -v[idx] / d[idx]);
      lo = std::max(lo, (1.0 - v[idx]) / d[idx]);
    }
  }
  return {lo, hi};
}

inline void apply_direction(StepFunction& f, const std::vector<double>& d, double eps) {
  const std::size_t k = f.size();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j)
      if (d[i * k + j] != 0.0) f.set_value(i, j, std::clamp(f.value(i, j) + eps * d[i * k + j], 0.0, 1.0));
}

// Restores the mass to `target` by adjusting one cell in row `row`,
// choosing uniformly among the cells that can absorb the deficit.
template <class Rng>
bool compensate_in_row(StepFunction& f, std::size_t row, double target, Rng& rng) {
  const double deficit = target - f.mass();
  std::vector<std::size_t> feasible;
  for (std::size_t r = 0; r < f.size(); ++r) {
    const double nv = f.value(row, r) + deficit / cell_weight(f, row, r);
    if (nv >= 0.0 && nv <= 1.0) feasible.push_back(r);
  }
  if (feasible.empty()) return false;
  std::uniform_int_distribution<std::size_t> pick(0, feasible.size() - 1);
  const std::size_t r = feasible[pick(rng)];
  f.set_value(row, r, std::clamp(f.value(row, r) + deficit / cell_weight(f, row, r), 0.0, 1.0));
  return true;
}

}  // namespace detail

// Hill climbing on S at fixed mass c with at most `blocks` blocks. Moves:
// rectangle swaps (S-neutral, accepted only when they lower T), mass
// shifts within a column, block splits followed by a shift between the two
// halves, and boundary moves between neighbouring blocks with a one-cell
// mass correction. After each accepted move the function is normalised.
inline OptimizeResult maximize_s(double c, std::size_t blocks, std::uint64_t seed, const OptimizerConfig& config = {}) {
  if (!(c > 0.0 && c < 1.0)) throw domain_error("maximize_s: c must lie in (0, 1)");
  if (blocks < 2) throw domain_error("maximize_s: need a block budget of at least 2");

  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  auto uniform_index = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  auto uniform_in = [&](double lo, double hi) { return lo + (hi - lo) * unit(rng); };

  StepFunction cur = normalize(random_step_function(blocks, c, rng));
  double cur_s = s_value(cur);
  double cur_t = t_value(cur);

  OptimizeResult result;
  result.seed = seed;
  result.trace.push_back({0, MoveKind::init, cur_s, cur_t, cur.mass()});

  std::size_t rejected = 0;
  std::size_t iter = 0;
  while (iter < config.max_iterations && rejected < config.patience) {
    ++iter;
    const auto kind = static_cast<MoveKind>(1 + uniform_index(4));
    StepFunction cand = cur;
    bool proposed = false;
    const std::size_t k = cand.size();

    switch (kind) {
      case MoveKind::swap: {
        if (k < 2) break;
        const std::size_t i1 = uniform_index(k);
        std::size_t i2 = uniform_index(k - 1);
        if (i2 >= i1) ++i2;
        const std::size_t j1 = uniform_index(k);
        std::size_t j2 = uniform_index(k - 1);
        if (j2 >= j1) ++j2;
        const auto d = detail::swap_direction(cand, i1, i2, j1, j2);
        const auto [lo, hi] = detail::direction_range(cand, d);
        if (!(hi > lo)) break;
        detail::apply_direction(cand, d, uniform_in(lo, hi));
        proposed = true;
        break;
      }
      case MoveKind::shift: {
        if (k < 2) break;
        const std::size_t p = uniform_index(k);
        const std::size_t a = uniform_index(k);
        std::size_t b = uniform_index(k - 1);
        if (b >= a) ++b;
        const auto [lo, hi] = detail::shift_range(cand, a, b, p);
        if (!(hi > lo)) break;
        detail::apply_shift(cand, a, b, p, uniform_in(lo, hi));
        proposed = true;
        break;
      }
      case MoveKind::split: {
        if (k >= blocks) break;
        const std::size_t j = uniform_index(k);
        const double lambda = unit(rng);
        if (lambda * cand.width(j) < config.min_block_width || (1.0 - lambda) * cand.width(j) < config.min_block_width) break;
        cand.split_block(j, lambda);
        const std::size_t p = uniform_index(cand.size());
        const auto [lo, hi] = detail::shift_range(cand, j, j + 1, p);
        if (!(hi > lo)) break;
        detail::apply_shift(cand, j, j + 1, p, uniform_in(lo, hi));
        proposed = true;
        break;
      }
      case MoveKind::boundary: {
        if (k < 2) break;
        const std::size_t left = uniform_index(k - 1);
        const bool move_left = unit(rng) < 0.5;
        const std::size_t beta = move_left ? left : left + 1;
        const std::size_t alpha = move_left ? left + 1 : left;
        const double pooled = cand.width(alpha) + cand.width(beta);
        const double x = uniform_in(0.0, pooled);
        auto w = cand.widths();
        w[beta] = x;
        w[alpha] = pooled - x;
        std::size_t row = beta;
        if (w[beta] < config.min_block_width || w[alpha] < config.min_block_width) {
          // The narrow block disappears into its neighbour.
          const std::size_t gone = w[beta] < config.min_block_width ? beta : alpha;
          const std::size_t kept = gone == beta ? alpha : beta;
          w[kept] = pooled;
          w.erase(w.begin() + static_cast<std::ptrdiff_t>(gone));
          cand.remove_block(gone);
          row = kept > gone ? kept - 1 : kept;
        }
        cand.set_widths(std::move(w));
        if (!detail::compensate_in_row(cand, row, c, rng)) break;
        proposed = true;
        break;
      }
      case MoveKind::init: break;
    }

    if (!proposed || std::abs(cand.mass() - c) > config.mass_tolerance) {
      ++rejected;
      continue;
    }
    double cand_s = s_value(cand);
    bool accept = cand_s - cur_s > config.accept_threshold;
    double cand_t = 0.0;
    if (kind == MoveKind::swap) {
      // S-neutral move: keep it only if it strictly reduces T.
      cand_t = t_value(cand);
      accept = std::abs(cand_s - cur_s) <= config.accept_threshold && cand_t < cur_t - config.accept_threshold;
      if (accept) cand_s = cur_s;
    }
    if (!accept) {
      ++rejected;
      continue;
    }
    cur = normalize(cand);
    cur_s = kind == MoveKind::swap ? cand_s : s_value(cur);
    cur_t = t_value(cur);
    rejected = 0;
    result.trace.push_back({iter, kind, cur_s, cur_t, cur.mass()});
  }

  result.best = cur;
  result.s = cur_s;
  result.iterations = iter;
  return result;
}

struct RestartSummary {
  OptimizeResult best;
  std::vector<double> final_s;  // per restart, in restart order
};

// Independent runs with seeds seed, seed+1, ...; the best S wins (lowest
// restart index on ties), so the outcome does not depend on `threads`.
inline RestartSummary maximize_s_restarts(double c, std::size_t blocks, std::size_t restarts, std::uint64_t seed,
                                          const OptimizerConfig& config = {}, std::size_t threads = 1) {
  if (restarts == 0) throw domain_error("maximize_s_restarts: need at least one restart");
  std::vector<std::optional<OptimizeResult>> runs(restarts);
  auto work = [&](std::size_t first, std::size_t stride) {
    for (std::size_t r = first; r < restarts; r += stride) runs[r] = maximize_s(c, blocks, seed + r, config);
  };
  threads = std::max<std::size_t>(1, std::min(threads, restarts));
  if (threads == 1) {
    work(0, 1);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work, t, threads);
    for (auto& th : pool) th.join();
  }
  RestartSummary out;
  std::size_t best = 0;
  for (std::size_t r = 0; r < restarts; ++r) {
    out.final_s.push_back(runs[r]->s);
    if (runs[r]->s > runs[best]->s) best = r;
  }
  out.best = std::move(*runs[best]);
  return out;
}

}  // namespace p4d
