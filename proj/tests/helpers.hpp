#pragma once

#include <sys/wait.h>

#include <array>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <string>
#include <vector>

#include "prunesched/instance.hpp"
#include "prunesched/ordering.hpp"
#include "prunesched/rng.hpp"
#include "prunesched/schedule.hpp"

namespace testutil {

using namespace prunesched;

inline Instance make_instance(int m, const std::vector<std::array<std::int64_t, 3>>& pwd) {
  std::vector<Job> jobs;
  jobs.reserve(pwd.size());
  for (const auto& [p, w, d] : pwd) jobs.push_back(Job{0, p, w, d});
  return Instance::create(m, std::move(jobs));
}

// Uniform random instance for property tests.
inline Instance random_instance(SplitMix64& rng, int max_n = 8, int max_m = 3,
                                std::int64_t pmax = 5, std::int64_t wmax = 5,
                                std::int64_t dmax = 20) {
  const int n = static_cast<int>(rng.uniform(1, max_n));
  const int m = static_cast<int>(rng.uniform(1, max_m));
  std::vector<std::array<std::int64_t, 3>> pwd;
  for (int i = 0; i < n; ++i)
    pwd.push_back({rng.uniform(1, pmax), rng.uniform(0, wmax), rng.uniform(0, dmax)});
  return make_instance(m, pwd);
}

// Random assignment of every priority position to a machine.
inline ProperSchedule random_schedule(const Instance& instance, Objective objective,
                                      SplitMix64& rng) {
  ProperSchedule schedule;
  schedule.order = priority_order(instance, objective);
  schedule.assign.resize(static_cast<std::size_t>(instance.job_count()));
  for (auto& machine : schedule.assign)
    machine = static_cast<int>(rng.uniform(0, instance.machines() - 1));
  return schedule;
}

struct CliResult {
  int exit_code = -1;
  std::string out;
};

// Writes text to a scratch file in the working directory; returns the path.
inline std::string write_temp_file(const std::string& name, const std::string& text) {
  const std::string path = "tmp_" + name;
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  file << text;
  return path;
}

// Runs the CLI binary with the given argument string, capturing stdout.
inline CliResult run_cli(const std::string& args, const std::string& stdin_text = {}) {
  std::string command = std::string(PRUNESCHED_CLI_PATH) + ' ' + args;
  if (!stdin_text.empty())
    command += " < " + write_temp_file("stdin.txt", stdin_text);
  command += " 2>/dev/null";
  CliResult result;
  FILE* pipe = popen(command.c_str(), "r");
  if (!pipe) return result;
  char buffer[4096];
  std::size_t got;
  while ((got = fread(buffer, 1, sizeof buffer, pipe)) > 0) result.out.append(buffer, got);
  const int status = pclose(pipe);
  result.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return result;
}

inline std::string strip_time_lines(const std::string& text) {
  std::string out;
  std::size_t start = 0;
  while (start < text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(start, end - start);
    if (line.rfind("time_ms ", 0) != 0) {
      out += line;
      out += '\n';
    }
    start = end + 1;
  }
  return out;
}

}  // namespace testutil
