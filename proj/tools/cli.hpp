#ifndef SPNI_TOOLS_CLI_HPP
#define SPNI_TOOLS_CLI_HPP

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iostream>
#include <memory>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "log.hpp"
#include "spni/spni.hpp"

namespace spni::cli {

// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInputError = 1,
  kNotSeriesParallel = 2,
  kOverflow = 3,
  kTooLarge = 4,
  kMismatch = 5,
  kDecideNo = 6,
};

/// Command echo, instance statistics, timings and solver used.
struct RunReport {
  std::string command;
  std::size_t n = 0;
  std::size_t m = 0;
  std::uint64_t budget = 0;
  std::uint64_t l_max = 0;
  std::size_t frontier_size = 0;
  std::string solver;
  double wall_ms = 0;
  double decompose_ms = 0;
  double dp_ms = 0;
  double filter_ms = 0;
  std::optional<std::uint64_t> strategies_enumerated;

  void describe(const Instance& inst) {
    n = inst.vertex_count();
    m = inst.arc_count();
    budget = inst.budget();
    l_max = inst.l_max();
  }

  void take(const SolveStats& s) {
    using ms = std::chrono::duration<double, std::milli>;
    decompose_ms = ms(s.decompose_time).count();
    dp_ms = ms(s.dp_time).count();
    filter_ms = ms(s.filter_time).count();
  }

  json to_json() const {
    json j = {{"command", command},
              {"instance", {{"n", n}, {"m", m}, {"B", budget}, {"L_max", l_max}}},
              {"solver", solver},
              {"frontier_size", frontier_size},
              {"wall_ms", wall_ms},
              {"phases_ms", {{"decompose", decompose_ms}, {"dp", dp_ms}, {"filter", filter_ms}}}};
    if (strategies_enumerated)
      j["stats"] = {{"strategies_enumerated", *strategies_enumerated}};
    return j;
  }
};

namespace detail {

struct Context {
  std::ostream& out;
  std::ostream& err;
  std::shared_ptr<spdlog::logger> log;
  std::string command;
};

inline std::string format_frontier(const std::vector<FrontierRow>& rows, const std::string& format) {
  if (format == "csv")
    return frontier_to_csv(rows);
  return frontier_to_json(rows).dump(2) + "\n";
}

inline void emit(Context& ctx, const std::string& out_path, const std::string& content) {
  if (out_path.empty() || out_path == "-")
    ctx.out << content;
  else
    write_file(out_path, content);
}

inline void finish_report(Context& ctx, RunReport& report, const std::string& report_path,
                          std::chrono::steady_clock::time_point start) {
  report.command = ctx.command;
  report.wall_ms =
      std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  const std::string text = report.to_json().dump(2) + "\n";
  if (!report_path.empty())
    write_file(report_path, text);
  ctx.log->info("run report: {}", report.to_json().dump());
}

inline Instance load(Context& ctx, const std::string& path) {
  Instance inst = load_instance(path);
  ctx.log->debug("loaded {}: {} vertices, {} arcs, budget {}", path, inst.vertex_count(),
                 inst.arc_count(), inst.budget());
  return inst;
}

inline std::string describe_points(const std::vector<Point>& points) {
  std::string s;
  for (const Point& p : points) {
    std::ostringstream os;
    os << p;
    s += (s.empty() ? "" : " ") + os.str();
  }
  return s.empty() ? "(none)" : s;
}

// Points in `a` missing from `b`; both canonical.
inline std::vector<Point> missing_from(const std::vector<Point>& a, const std::vector<Point>& b) {
  std::vector<Point> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

inline int cmd_solve(Context& ctx, const std::string& instance_path, const std::string& out_path,
                     const std::string& format, unsigned threads, const std::string& report_path) {
  const auto start = std::chrono::steady_clock::now();
  const Instance inst = load(ctx, instance_path);
  SolveOptions options;
  options.threads = threads;
  const SolveResult result = solve(inst, options);
  emit(ctx, out_path, format_frontier(frontier_rows(inst, result.frontier, result.strategies), format));
  RunReport report;
  report.describe(inst);
  report.take(result.stats);
  report.solver = "dp";
  report.frontier_size = result.frontier.size();
  finish_report(ctx, report, report_path, start);
  return kOk;
}

inline int cmd_brute(Context& ctx, const std::string& instance_path, const std::string& out_path,
                     const std::string& format, std::uint64_t cap, const std::string& report_path) {
  const auto start = std::chrono::steady_clock::now();
  const Instance inst = load(ctx, instance_path);
  const OracleResult result = enumerate_frontier(inst, {cap});
  std::vector<InterdictionStrategy> first;
  for (const auto& list : result.strategies_per_point)
    first.push_back(list.front());
  emit(ctx, out_path, format_frontier(frontier_rows(inst, result.frontier, first), format));
  RunReport report;
  report.describe(inst);
  report.solver = "oracle";
  report.frontier_size = result.frontier.size();
  report.strategies_enumerated = result.strategies_enumerated;
  finish_report(ctx, report, report_path, start);
  return kOk;
}

inline int cmd_compare(Context& ctx, const std::string& instance_path, const std::string& against,
                       std::uint64_t cap, unsigned threads) {
  const Instance inst = load(ctx, instance_path);
  SolveOptions options;
  options.threads = threads;
  const std::vector<Point> dp = solve(inst, options).frontier.points();
  std::vector<Point> other;
  std::string other_name;
  if (against.empty()) {
    other = enumerate_frontier(inst, {cap}).frontier.points();
    other_name = "oracle";
  } else {
    other = LabelSet::from_points(parse_frontier_points(read_file(against))).points();
    other_name = against;
  }
  if (dp == other) {
    ctx.out << "identical: " << dp.size() << " non-dominated points\n";
    return kOk;
  }
  ctx.out << "frontiers differ\n"
          << "only in dp: " << describe_points(missing_from(dp, other)) << "\n"
          << "only in " << other_name << ": " << describe_points(missing_from(other, dp)) << "\n";
  return kMismatch;
}

inline int cmd_decide(Context& ctx, const std::string& instance_path, std::uint64_t k1,
                      std::uint64_t k2, bool strict, unsigned threads) {
  const Instance inst = load(ctx, instance_path);
  SolveOptions options;
  options.threads = threads;
  const Decision d =
      decide(inst, Point{k1, k2}, strict ? DecideMode::strict : DecideMode::weak, options);
  if (!d.yes) {
    ctx.out << "no\n";
    return kDecideNo;
  }
  std::string ids;
  for (const std::string& id : arc_ids(inst, *d.witness))
    ids += (ids.empty() ? "" : ",") + id;
  ctx.out << "yes\npoint " << *d.point << "\nstrategy [" << ids << "]\n";
  return kOk;
}

inline int cmd_check_sp(Context& ctx, const std::string& instance_path, const std::string& tree_out) {
  const Instance inst = load(ctx, instance_path);
  const DecompositionTree tree = decompose(inst);
  const RecomposeReport check = recompose(tree, inst);
  if (!check) {
    for (const std::string& line : check.trail)
      ctx.err << "recompose: " << line << '\n';
    throw std::logic_error("decomposition tree failed to recompose");
  }
  if (!tree_out.empty())
    write_file(tree_out, tree_to_json(tree, inst).dump(2) + "\n");
  ctx.out << "series-parallel: " << inst.arc_count() << " arcs, " << tree.nodes.size()
          << " tree nodes, recompose ok\n";
  return kOk;
}

} // namespace detail

/// Runs the command line `args` (without the program name).
inline int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Two-player shortest path network interdiction solver", "spni"};
  app.require_subcommand(1);

  std::string instance_path, out_path, format = "json", report_path, against, tree_out;
  unsigned threads = 1;
  std::uint64_t cap = kDefaultOracleCap;

  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("-o,--out", out_path, "Output file (default stdout)");
    cmd->add_option("--format", format, "Frontier format")->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--report", report_path, "Write the run report as JSON");
  };

  auto* solve_cmd = app.add_subcommand("solve", "Frontier by dynamic programming (series-parallel only)");
  solve_cmd->add_option("instance", instance_path, "Instance JSON")->required();
  add_format(solve_cmd);
  solve_cmd->add_option("--threads", threads, "Worker threads for the DP")->check(CLI::PositiveNumber);

  auto* brute_cmd = app.add_subcommand("brute", "Frontier by exhaustive enumeration (any digraph)");
  brute_cmd->add_option("instance", instance_path, "Instance JSON")->required();
  add_format(brute_cmd);
  brute_cmd->add_option("--cap", cap, "Refuse above this many feasible strategies");

  auto* compare_cmd = app.add_subcommand("compare", "Check the DP frontier against the oracle or a file");
  compare_cmd->add_option("instance", instance_path, "Instance JSON")->required();
  compare_cmd->add_option("--against", against, "Frontier file (JSON or CSV) to diff instead of the oracle");
  compare_cmd->add_option("--cap", cap, "Oracle cap");
  compare_cmd->add_option("--threads", threads, "Worker threads for the DP")->check(CLI::PositiveNumber);

  std::uint64_t k1 = 0, k2 = 0;
  bool strict = false;
  auto* decide_cmd = app.add_subcommand("decide", "Is there a feasible strategy with objective >= (k1, k2)?");
  decide_cmd->add_option("instance", instance_path, "Instance JSON")->required();
  decide_cmd->add_option("k1", k1, "Player-one threshold")->required();
  decide_cmd->add_option("k2", k2, "Player-two threshold")->required();
  decide_cmd->add_flag("--strict", strict, "Require the point to differ from (k1, k2)");
  decide_cmd->add_option("--threads", threads, "Worker threads for the DP")->check(CLI::PositiveNumber);

  auto* check_cmd = app.add_subcommand("check-sp", "Decompose and recompose only");
  check_cmd->add_option("instance", instance_path, "Instance JSON")->required();
  check_cmd->add_option("--tree-out", tree_out, "Write the decomposition tree as JSON");

  auto* gen_cmd = app.add_subcommand("gen", "Generate instances");
  gen_cmd->require_subcommand(1);
  std::uint64_t gen_n = 1;
  auto* gen_intr = gen_cmd->add_subcommand("intractable", "Family with an exponential frontier");
  gen_intr->add_option("--n", gen_n, "Odd parameter n")->required();
  gen_intr->add_option("-o,--out", out_path, "Output file (default stdout)");

  RandomSpParams sp;
  auto* gen_sp = gen_cmd->add_subcommand("sp-random", "Random series-parallel instance");
  gen_sp->add_option("--leaves", sp.leaves, "Number of arcs")->required();
  gen_sp->add_option("--seed", sp.seed, "Generator seed");
  gen_sp->add_option("--max-len", sp.max_len, "Lengths drawn in [0, max-len]");
  gen_sp->add_option("--max-cost", sp.max_cost, "Costs drawn in [1, max-cost]");
  gen_sp->add_option("--budget", sp.budget, "Interdiction budget");
  gen_sp->add_option("-o,--out", out_path, "Output file (default stdout)");

  RandomDigraphParams dg;
  auto* gen_dg = gen_cmd->add_subcommand("digraph-random", "Random DAG for oracle-only runs");
  gen_dg->add_option("--n", dg.n, "Number of vertices")->required();
  gen_dg->add_option("--arc-prob", dg.arc_prob, "Probability of each forward arc");
  gen_dg->add_option("--seed", dg.seed, "Generator seed");
  gen_dg->add_option("--max-len", dg.max_len, "Lengths drawn in [0, max-len]");
  gen_dg->add_option("--max-cost", dg.max_cost, "Costs drawn in [1, max-cost]");
  gen_dg->add_option("--budget", dg.budget, "Interdiction budget");
  gen_dg->add_option("-o,--out", out_path, "Output file (default stdout)");

  detail::Context ctx{out, err, make_logger(err), ""};
  for (const std::string& a : args)
    ctx.command += (ctx.command.empty() ? "" : " ") + a;

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }

  try {
    if (*solve_cmd)
      return detail::cmd_solve(ctx, instance_path, out_path, format, threads, report_path);
    if (*brute_cmd)
      return detail::cmd_brute(ctx, instance_path, out_path, format, cap, report_path);
    if (*compare_cmd)
      return detail::cmd_compare(ctx, instance_path, against, cap, threads);
    if (*decide_cmd)
      return detail::cmd_decide(ctx, instance_path, k1, k2, strict, threads);
    if (*check_cmd)
      return detail::cmd_check_sp(ctx, instance_path, tree_out);
    if (*gen_cmd) {
      Instance inst = *gen_intr ? gen_intractable(gen_n)
                      : *gen_sp ? gen_random_sp(sp)
                                : gen_random_digraph(dg);
      detail::emit(ctx, out_path, instance_to_json(inst).dump(2) + "\n");
      return kOk;
    }
  } catch (const NotSeriesParallel& e) {
    err << "error: " << e.what() << "\nuse `spni brute` for graphs that are not series-parallel\n";
    return kNotSeriesParallel;
  } catch (const OverflowError& e) {
    err << "error: " << e.what() << '\n';
    return kOverflow;
  } catch (const InstanceTooLarge& e) {
    err << "error: " << e.what() << '\n';
    return kTooLarge;
  } catch (const MalformedInstance& e) {
    err << "error: malformed instance: " << e.what() << '\n';
    return kInputError;
  } catch (const InputError& e) {
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
  return kInputError;
}

} // namespace spni::cli

#endif // SPNI_TOOLS_CLI_HPP
