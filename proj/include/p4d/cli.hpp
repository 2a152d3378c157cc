#pragma once

#include <fstream>
#include <iomanip>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "p4d/p4d.hpp"

namespace p4d::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalid = 1;
inline constexpr int kExitPropertyFailure = 2;

namespace detail {

class property_failure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Writes to `path`, or to `fallback` when path is "-".
class Sink {
 public:
  Sink(const std::string& path, std::ostream& fallback) {
    if (path == "-") {
      os_ = &fallback;
    } else {
      file_ = std::make_unique<std::ofstream>(path);
      if (!*file_) throw std::runtime_error("cannot open " + path + " for writing");
      os_ = file_.get();
    }
    *os_ << std::setprecision(12);
  }
  std::ostream& operator*() { return *os_; }

 private:
  std::unique_ptr<std::ofstream> file_;
  std::ostream* os_ = nullptr;
};

// Fills an option from the config file when it was not given on the
// command line.
template <class T>
void from_config(const CLI::App& app, const Config& cfg, const std::string& name, T& value) {
  if (app.count("--" + name) > 0 || !cfg.has(name)) return;
  if constexpr (std::is_same_v<T, std::string>) {
    value = cfg.get(name, value);
  } else if constexpr (std::is_floating_point_v<T>) {
    value = cfg.get(name, static_cast<double>(value));
  } else {
    value = static_cast<T>(cfg.get(name, static_cast<std::size_t>(value)));
  }
}

inline void print_row(std::ostream& os, const std::string& key, const std::string& value) {
  os << std::left << std::setw(16) << key << value << '\n';
}

template <class T>
std::string fmt(const T& v) {
  std::ostringstream os;
  os << std::setprecision(12) << v;
  return os.str();
}

}  // namespace detail

// Runs one subcommand. Exit codes: 0 success, 1 invalid input or usage,
// 2 property or assertion failure.
inline int dispatch(int argc, const char* const* argv, std::ostream& out = std::cout, std::ostream& err = std::cerr) {
  using detail::fmt;
  using detail::print_row;
  out << std::setprecision(12);

  CLI::App app{"Exact counters, bounds and extremal search for 4-edge paths", "p4d"};
  app.require_subcommand(1, 1);
  std::string config_path;
  app.add_option("--config", config_path, "key=value settings file; flags override it")->check(CLI::ExistingFile);

  // construct
  auto* construct = app.add_subcommand("construct", "Build a quasi-clique, quasi-star or near-regular graph");
  std::string kind;
  std::size_t cn = 0;
  std::uint64_t ce = 0;
  construct->add_option("--kind", kind, "quasi-clique | quasi-star | near-regular")
      ->required()
      ->check(CLI::IsMember({"quasi-clique", "quasi-star", "near-regular"}));
  construct->add_option("--n", cn, "vertex count")->required();
  construct->add_option("--e", ce, "edge count")->required();

  // count
  auto* count = app.add_subcommand("count", "Exact path, star and walk counts of an edge-list graph");
  std::string input;
  std::vector<std::size_t> ks;
  std::string count_csv;
  bool graph6 = false;
  count->add_option("--input", input, "edge-list file, or - for stdin")->required();
  count->add_option("--k", ks, "k-edge star sizes to report");
  count->add_option("--csv", count_csv, "also write the report as CSV (- for stdout)");
  count->add_flag("--graph6", graph6, "input is graph6 instead of an edge list");

  // bounds
  auto* bounds = app.add_subcommand("bounds", "Closed-form bounds for (n, e), or a density sweep");
  std::size_t bn = 0;
  std::uint64_t be = 0;
  bool do_sweep = false;
  std::size_t points = 1001;
  std::string sweep_csv = "-";
  auto* bn_opt = bounds->add_option("--n", bn, "vertex count");
  auto* be_opt = bounds->add_option("--e", be, "edge count");
  bounds->add_flag("--sweep", do_sweep, "export the bound curves on a uniform c grid");
  bounds->add_option("--points", points, "grid points for --sweep");
  bounds->add_option("--csv", sweep_csv, "CSV destination for --sweep (- for stdout)");

  // optimize
  auto* optimize = app.add_subcommand("optimize", "Hill-climb S(A) over step functions of fixed mass");
  double oc = 0.0;
  std::size_t blocks = 6;
  std::size_t restarts = 32;
  std::uint64_t seed = 1;
  std::string trace_path;
  std::size_t threads = 1;
  optimize->add_option("--c", oc, "mass / edge density in (0, 1)")->required();
  optimize->add_option("--blocks", blocks, "block budget K");
  optimize->add_option("--restarts", restarts, "independent restarts");
  optimize->add_option("--seed", seed, "base seed; restart r uses seed + r");
  optimize->add_option("--trace", trace_path, "CSV trace of the best run");
  optimize->add_option("--threads", threads, "worker threads");

  // search
  auto* search = app.add_subcommand("search", "Exhaustive extremal search over all graphs with n vertices and e edges");
  std::size_t sn = 0;
  std::size_t se = 0;
  std::string stat_text = "p4";
  search->add_option("--n", sn, "vertex count (<= 8)")->required();
  search->add_option("--e", se, "edge count")->required();
  search->add_option("--stat", stat_text, "p2 | p4 | walks4 | kstar:K");
  search->add_option("--threads", threads, "worker threads");

  // verify-ak
  auto* verify_ak = app.add_subcommand("verify-ak", "Check the 2-edge path extremal theorem exhaustively");
  std::size_t an = 0;
  verify_ak->add_option("--n", an, "vertex count (<= 7)")->required();
  verify_ak->add_option("--threads", threads, "worker threads");

  // p4-table
  auto* table = app.add_subcommand("p4-table", "Exhaustive P4 extremal table for all n <= n-max");
  std::size_t n_max = 6;
  std::string table_csv = "-";
  table->add_option("--n-max", n_max, "largest vertex count (<= 8)");
  table->add_option("--csv", table_csv, "CSV destination (- for stdout)");
  table->add_option("--threads", threads, "worker threads");

  // verify-all
  auto* verify_all_cmd = app.add_subcommand("verify-all", "Run every property suite at desk scale");
  std::size_t v_n_max = 0;
  double v_tol = -1.0;
  verify_all_cmd->add_option("--n-max", v_n_max, "exhaustive counting cap");
  verify_all_cmd->add_option("--tolerance", v_tol, "closed-form tolerance");
  verify_all_cmd->add_option("--seed", seed, "random seed");
  verify_all_cmd->add_option("--threads", threads, "worker threads");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalid;
  }

  try {
    Config cfg;
    if (!config_path.empty()) cfg = Config::load(config_path);

    if (*construct) {
      Graph g = kind == "quasi-clique" ? quasi_clique(cn, ce) : kind == "quasi-star" ? quasi_star(cn, ce) : near_regular(cn, ce);
      write_edge_list(out, g);
      return kExitOk;
    }

    if (*count) {
      Graph g;
      auto load = [&](std::istream& is) {
        if (!graph6) return read_edge_list(is);
        std::string line;
        std::getline(is, line);
        return parse_graph6(line);
      };
      if (input == "-") {
        g = load(std::cin);
      } else {
        std::ifstream in(input);
        if (!in) throw std::runtime_error("cannot open input file " + input);
        g = load(in);
      }
      const auto r = count_report(g, ks);
      print_row(out, "n", fmt(r.n));
      print_row(out, "e", fmt(r.e));
      print_row(out, "c", fmt(r.c));
      print_row(out, "p2", fmt(r.p2));
      print_row(out, "p4", fmt(r.p4));
      print_row(out, "walks4", fmt(r.walks4));
      print_row(out, "hom_density_p4", fmt(r.hom_density_p4));
      for (auto [k, v] : r.kstars) print_row(out, "kstar_" + std::to_string(k), fmt(v));
      if (!count_csv.empty()) {
        detail::Sink sink(count_csv, out);
        *sink << "n,e,c,p2,p4,walks4,hom_density_p4";
        for (auto [k, v] : r.kstars) *sink << ",kstar_" << k;
        *sink << '\n' << r.n << ',' << r.e << ',' << r.c << ',' << r.p2 << ',' << r.p4 << ',' << r.walks4 << ','
              << r.hom_density_p4;
        for (auto [k, v] : r.kstars) *sink << ',' << v;
        *sink << '\n';
      }
      return kExitOk;
    }

    if (*bounds) {
      detail::from_config(*bounds, cfg, "points", points);
      if (do_sweep) {
        detail::Sink sink(sweep_csv, out);
        *sink << "c,lower,upper_star,upper_clique,dominant\n";
        for (const auto& row : sweep(uniform_grid(points)))
          *sink << row.c << ',' << row.lower << ',' << row.upper_star << ',' << row.upper_clique << ','
                << to_string(row.dominant) << '\n';
        return kExitOk;
      }
      if (bn_opt->count() == 0 || be_opt->count() == 0) {
        err << "bounds: need --n and --e, or --sweep\n";
        return kExitInvalid;
      }
      const auto r = bound_report(bn, be);
      print_row(out, "n", fmt(r.n));
      print_row(out, "e", fmt(r.e));
      print_row(out, "c", fmt(r.c));
      print_row(out, "lower", fmt(r.lower));
      print_row(out, "upper_star", fmt(r.upper_star));
      print_row(out, "upper_clique", fmt(r.upper_clique));
      print_row(out, "upper", fmt(r.upper));
      print_row(out, "dominant", to_string(r.dominant));
      print_row(out, "ak_regime", to_string(ak_regime(bn, be)));
      return kExitOk;
    }

    if (*optimize) {
      detail::from_config(*optimize, cfg, "blocks", blocks);
      detail::from_config(*optimize, cfg, "restarts", restarts);
      detail::from_config(*optimize, cfg, "seed", seed);
      detail::from_config(*optimize, cfg, "threads", threads);
      const auto run = maximize_s_restarts(oc, blocks, restarts, seed, {}, threads);
      const double bound = std::max(upper_star_density(oc), upper_clique_density(oc));
      print_row(out, "c", fmt(oc));
      print_row(out, "best_s", fmt(run.best.s));
      print_row(out, "bound", fmt(bound));
      print_row(out, "gap", fmt(bound - run.best.s));
      print_row(out, "best_seed", fmt(run.best.seed));
      print_row(out, "iterations", fmt(run.best.iterations));
      out << "step_function\n";
      write_step_function(out, run.best.best);
      if (!trace_path.empty()) {
        detail::Sink sink(trace_path, out);
        *sink << "iter,move_kind,s_value,t_value,mass\n";
        for (const auto& row : run.best.trace)
          *sink << row.iter << ',' << to_string(row.move) << ',' << row.s << ',' << row.t << ',' << row.mass << '\n';
      }
      return kExitOk;
    }

    if (*search) {
      detail::from_config(*search, cfg, "threads", threads);
      const auto r = extremal_search(sn, se, parse_statistic(stat_text), threads);
      print_row(out, "n", fmt(r.n));
      print_row(out, "e", fmt(r.e));
      print_row(out, "statistic", r.statistic.name());
      print_row(out, "max", fmt(r.max_value));
      print_row(out, "min", fmt(r.min_value));
      print_row(out, "quasi_star", fmt(r.quasi_star_value));
      print_row(out, "quasi_clique", fmt(r.quasi_clique_value));
      print_row(out, "near_regular", fmt(r.near_regular_value));
      print_row(out, "verdict", to_string(r.verdict));
      print_row(out, "enumerated", fmt(r.enumerated));
      print_row(out, "max_classes", fmt(r.num_max_classes));
      for (const auto& key : r.max_witnesses) {
        out << "witness " << key.hex() << " :";
        const Graph w = decode(key);
        for (auto [u, v] : w.edges()) out << ' ' << u << '-' << v;
        out << '\n';
      }
      return kExitOk;
    }

    if (*verify_ak) {
      detail::from_config(*verify_ak, cfg, "threads", threads);
      const auto report = verify_ahlswede_katona(an, threads);
      out << "e,brute_max,quasi_clique,quasi_star,regime,status\n";
      for (const auto& row : report.rows)
        out << row.e << ',' << row.brute_max << ',' << row.quasi_clique << ',' << row.quasi_star << ','
            << to_string(row.regime) << ',' << (row.passed() ? "ok" : "FAIL") << '\n';
      out << (report.ok() ? "PASS " : "FAIL ") << report.passed() << '/' << report.rows.size() << " edge counts\n";
      return report.ok() ? kExitOk : kExitPropertyFailure;
    }

    if (*table) {
      detail::from_config(*table, cfg, "n-max", n_max);
      detail::from_config(*table, cfg, "threads", threads);
      const auto rows = p4_extremal_table(n_max, threads);
      detail::Sink sink(table_csv, out);
      write_table(*sink, rows);
      return kExitOk;
    }

    if (*verify_all_cmd) {
      auto vc = VerifyConfig::from(cfg);
      if (v_n_max > 0) vc.n_max = v_n_max;
      if (v_tol >= 0.0) vc.tolerance = v_tol;
      if (verify_all_cmd->count("--seed") > 0) vc.seed = seed;
      if (verify_all_cmd->count("--threads") > 0) vc.threads = threads;
      const auto report = verify_all(vc, [&](const SuiteResult& s) {
        out << (s.passed() ? "PASS " : "FAIL ") << std::left << std::setw(12) << s.name << ' '
            << (s.checks - s.failures) << '/' << s.checks << " checks";
        if (!s.passed()) out << "  first failure: " << s.first_failure;
        out << std::endl;
      });
      out << (report.ok() ? "all suites passed" : "some suites FAILED") << '\n';
      return report.ok() ? kExitOk : kExitPropertyFailure;
    }
  } catch (const std::logic_error& e) {
    // invalid_argument derives from logic_error; treat it as bad input.
    if (dynamic_cast<const std::invalid_argument*>(&e) != nullptr) {
      err << "error: " << e.what() << '\n';
      return kExitInvalid;
    }
    err << "internal check failed: " << e.what() << '\n';
    return kExitPropertyFailure;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  return kExitInvalid;
}

}  // namespace p4d::cli
