#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "prunesched/bench.hpp"
#include "prunesched/oracle.hpp"
#include "prunesched/solver.hpp"
#include "prunesched/swap.hpp"
#include "prunesched/verify.hpp"

namespace {

using namespace prunesched;

constexpr int kExitUsage = 1;
constexpr int kExitCapExceeded = 2;
constexpr int kExitInternal = 3;

struct RunReport {
  Objective objective = Objective::Wct;
  Algorithm algorithm = Algorithm::Classic;
  Value value = 0;
  std::int64_t wall_time_ms = 0;
  std::int64_t peak_layer_states = 0;
  std::int64_t total_states = 0;
  std::string schedule_text;
};

void print_run_report(const RunReport& report) {
  std::cout << "objective " << report.value << '\n';
  if (!report.schedule_text.empty()) std::cout << report.schedule_text;
  std::cout << "states " << report.peak_layer_states << ' ' << report.total_states << '\n';
  std::cout << "time_ms " << report.wall_time_ms << '\n';
}

Objective parse_objective_flag(const std::string& text) {
  Objective objective;
  if (!objective_from_name(text, objective))
    throw ValidationError("unknown objective '" + text + "'");
  return objective;
}

Instance load_instance(const std::string& path) {
  if (path == "-") return parse_instance(std::cin);
  std::ifstream file(path);
  if (!file) throw ValidationError("cannot open input file '" + path + "'");
  return parse_instance(file);
}

int cmd_solve(const std::string& objective_flag, const std::string& algorithm_flag,
              const std::string& input, bool emit_schedule, bool no_schedule) {
  if (emit_schedule && no_schedule)
    throw ValidationError("--emit-schedule conflicts with --no-schedule");
  const Objective objective = parse_objective_flag(objective_flag);
  Algorithm algorithm;
  if (!algorithm_from_name(algorithm_flag, algorithm))
    throw ValidationError("unknown algorithm '" + algorithm_flag + "'");

  const Instance instance = load_instance(input);

  RunReport report;
  report.objective = objective;
  report.algorithm = algorithm;

  const auto start = std::chrono::steady_clock::now();
  std::optional<ProperSchedule> schedule;
  switch (algorithm) {
    case Algorithm::Oracle: {
      const auto result = brute_force(instance, objective);
      report.value = result.value;
      if (emit_schedule) schedule = witness_schedule(result, instance, objective);
      break;
    }
    case Algorithm::Classic:
    case Algorithm::Pruned: {
      SolveOptions options;
      options.reconstruct = !no_schedule;
      const auto result = algorithm == Algorithm::Classic
                              ? solve_classic(instance, objective, options)
                              : solve_pruned(instance, objective, options);
      report.value = result.value;
      report.peak_layer_states = result.stats.peak_states;
      report.total_states = result.stats.total_states;
      if (emit_schedule) schedule = result.schedule;
      break;
    }
  }
  const auto stop = std::chrono::steady_clock::now();
  report.wall_time_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count();
  if (schedule)
    report.schedule_text =
        format_schedule(*schedule, instance, objective == Objective::Wtardy);
  print_run_report(report);
  return 0;
}

int cmd_gen(const GenParams& params) {
  std::cout << serialize_instance(generate_instance(params));
  return 0;
}

int cmd_verify(VerifyParams params, const std::string& objective_flag) {
  if (!objective_flag.empty()) params.objectives = {parse_objective_flag(objective_flag)};
  const VerifyReport report = run_verification(params);
  for (const VerifyFailure& failure : report.failures) {
    std::cout << "FAIL trial " << failure.trial << " objective "
              << objective_name(failure.objective) << ": " << failure.reason << '\n'
              << failure.instance_text;
  }
  if (report.failures.empty()) {
    std::cout << "PASS " << report.passed << '/' << report.total << '\n';
    return 0;
  }
  std::cout << "FAIL " << report.passed << '/' << report.total << '\n';
  return 1;
}

int cmd_bench(const std::vector<int>& n_list, int m, std::int64_t pmax, std::int64_t wmax,
              DueMode due, std::uint64_t seed, const std::string& objective_flag,
              const std::string& algorithm_flag, int repetitions, bool tsv) {
  const Objective objective = parse_objective_flag(objective_flag);
  std::vector<Algorithm> algorithms;
  if (algorithm_flag.empty()) {
    algorithms = {Algorithm::Classic, Algorithm::Pruned};
  } else {
    Algorithm algorithm;
    if (!algorithm_from_name(algorithm_flag, algorithm))
      throw ValidationError("unknown algorithm '" + algorithm_flag + "'");
    algorithms = {algorithm};
  }

  struct Row {
    int n;
    Algorithm algorithm;
    TimingSample sample;
  };
  std::vector<Row> rows;
  for (const int n : n_list) {
    GenParams gen{n, m, pmax, wmax, due, seed};
    const Instance instance = generate_instance(gen);
    for (const Algorithm algorithm : algorithms)
      rows.push_back({n, algorithm, time_solver(instance, objective, algorithm, repetitions)});
  }

  if (tsv) {
    std::cout << "n\tm\tpmax\tobjective\talgorithm\tmedian_ms\tpeak_states\n";
    for (const Row& row : rows) {
      std::cout << row.n << '\t' << m << '\t' << pmax << '\t' << objective_name(objective)
                << '\t' << algorithm_name(row.algorithm) << '\t' << row.sample.median_ms << '\t'
                << row.sample.peak_states << '\n';
    }
  } else {
    std::cout << std::left << std::setw(8) << "n" << std::setw(4) << "m" << std::setw(6)
              << "pmax" << std::setw(9) << "objective" << std::setw(9) << "algorithm"
              << std::right << std::setw(10) << "median_ms" << std::setw(13) << "peak_states"
              << '\n';
    for (const Row& row : rows) {
      std::cout << std::left << std::setw(8) << row.n << std::setw(4) << m << std::setw(6)
                << pmax << std::setw(9) << objective_name(objective) << std::setw(9)
                << algorithm_name(row.algorithm) << std::right << std::setw(10)
                << row.sample.median_ms << std::setw(13) << row.sample.peak_states << '\n';
    }
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Parallel-machine scheduling solver: Lawler-Moore dynamic programs "
               "with deviation-pruned state spaces"};
  app.require_subcommand(1);

  // solve
  auto* solve = app.add_subcommand("solve", "Solve one instance file");
  std::string solve_objective = "wct";
  std::string solve_algorithm = "classic";
  std::string solve_input;
  bool emit_schedule = false;
  bool no_schedule = false;
  solve->add_option("--objective", solve_objective, "wct|lmax|wtardy");
  solve->add_option("--algorithm", solve_algorithm, "oracle|classic|pruned");
  solve->add_option("--input", solve_input, "instance file, or - for stdin")->required();
  solve->add_flag("--emit-schedule", emit_schedule, "print the reconstructed schedule");
  solve->add_flag("--no-schedule", no_schedule, "skip parent links (value only)");

  // gen
  auto* gen = app.add_subcommand("gen", "Emit a seeded random instance");
  GenParams gen_params;
  std::string gen_due = "loose";
  gen->add_option("--n", gen_params.n, "job count")->required();
  gen->add_option("--m", gen_params.m, "machine count")->required();
  gen->add_option("--pmax", gen_params.pmax, "processing time bound")->required();
  gen->add_option("--wmax", gen_params.wmax, "weight bound");
  gen->add_option("--due", gen_due, "tight|loose|common");
  gen->add_option("--seed", gen_params.seed, "PRNG seed");

  // verify
  auto* verify = app.add_subcommand("verify", "Cross-check oracle, classic, and pruned engines");
  VerifyParams verify_params;
  std::string verify_objective;
  std::string verify_due = "tight";
  std::string verify_n = "8";
  verify->add_option("--trials", verify_params.trials, "number of generated instances");
  verify->add_option("--n", verify_n, "job count, or comma-separated list cycled per trial");
  verify->add_option("--m", verify_params.m, "machine count");
  verify->add_option("--pmax", verify_params.pmax, "processing time bound");
  verify->add_option("--wmax", verify_params.wmax, "weight bound");
  verify->add_option("--due", verify_due, "tight|loose|common");
  verify->add_option("--seed", verify_params.seed, "PRNG seed");
  verify->add_option("--objective", verify_objective, "restrict to one objective");
  verify->add_flag("--self-test", verify_params.self_test,
                   "inject a +1 transition cost; the suite must FAIL");

  // bench
  auto* bench = app.add_subcommand("bench", "Time solvers over an n sweep");
  std::string bench_objective = "wct";
  std::string bench_algorithm;
  std::string bench_due = "loose";
  std::string bench_n = "1000";
  int bench_m = 2;
  std::int64_t bench_pmax = 4;
  std::int64_t bench_wmax = 5;
  std::uint64_t bench_seed = 1;
  int bench_reps = 3;
  bool bench_tsv = false;
  bench->add_option("--n", bench_n, "comma-separated list of job counts");
  bench->add_option("--m", bench_m, "machine count");
  bench->add_option("--pmax", bench_pmax, "processing time bound");
  bench->add_option("--wmax", bench_wmax, "weight bound");
  bench->add_option("--due", bench_due, "tight|loose|common");
  bench->add_option("--seed", bench_seed, "PRNG seed");
  bench->add_option("--objective", bench_objective, "wct|lmax|wtardy");
  bench->add_option("--algorithm", bench_algorithm, "restrict to one algorithm");
  bench->add_option("--trials", bench_reps, "timing repetitions per configuration");
  bench->add_flag("--tsv", bench_tsv, "machine-readable tab-separated output");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitUsage;
  }

  const auto parse_n_list = [](const std::string& text) {
    std::vector<int> out;
    std::stringstream stream(text);
    std::string item;
    while (std::getline(stream, item, ',')) {
      if (item.empty()) continue;
      out.push_back(std::stoi(item));
    }
    if (out.empty()) throw ValidationError("empty n list");
    return out;
  };

  try {
    if (*solve) return cmd_solve(solve_objective, solve_algorithm, solve_input, emit_schedule,
                                 no_schedule);
    if (*gen) {
      if (!due_mode_from_name(gen_due, gen_params.due))
        throw ValidationError("unknown due mode '" + gen_due + "'");
      return cmd_gen(gen_params);
    }
    if (*verify) {
      if (!due_mode_from_name(verify_due, verify_params.due))
        throw ValidationError("unknown due mode '" + verify_due + "'");
      verify_params.n_list = parse_n_list(verify_n);
      return cmd_verify(verify_params, verify_objective);
    }
    if (*bench) {
      DueMode due;
      if (!due_mode_from_name(bench_due, due))
        throw ValidationError("unknown due mode '" + bench_due + "'");
      return cmd_bench(parse_n_list(bench_n), bench_m, bench_pmax, bench_wmax, due, bench_seed,
                       bench_objective, bench_algorithm, bench_reps, bench_tsv);
    }
  } catch (const CapExceededError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitCapExceeded;
  } catch (const InternalError& e) {
    std::cerr << "internal error: " << e.what() << '\n';
    return kExitInternal;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
