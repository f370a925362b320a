#include "prunesched/instance.hpp"

#include <charconv>
#include <istream>
#include <sstream>

#include "prunesched/rng.hpp"

namespace prunesched {

namespace {

using Wide = __int128;

bool objective_bound_ok(std::int64_t n, std::int64_t total_p, std::int64_t w_max) {
  const Wide bound = Wide(n) * Wide(total_p) * Wide(w_max);
  return bound <= Wide(INT64_MAX);
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream stream(line);
  std::string token;
  while (stream >> token) tokens.push_back(token);
  return tokens;
}

bool parse_int(const std::string& token, std::int64_t& out) {
  const char* begin = token.data();
  const char* end = begin + token.size();
  auto result = std::from_chars(begin, end, out);
  return result.ec == std::errc() && result.ptr == end && out >= 0;
}

}  // namespace

bool objective_from_name(const std::string& name, Objective& out) {
  if (name == "wct") out = Objective::Wct;
  else if (name == "lmax") out = Objective::Lmax;
  else if (name == "wtardy") out = Objective::Wtardy;
  else return false;
  return true;
}

Instance Instance::create(int machines, std::vector<Job> jobs) {
  if (machines < 1) throw ValidationError("machine count must be >= 1");
  if (jobs.empty()) throw ValidationError("instance has no jobs");

  Instance instance;
  instance.machines_ = machines;
  Wide total = 0;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    Job& job = jobs[k];
    if (job.p < 1) throw ValidationError("p must be >= 1");
    if (job.w < 0) throw ValidationError("w must be >= 0");
    if (job.d < 0) throw ValidationError("d must be >= 0");
    job.index = static_cast<int>(k) + 1;
    total += job.p;
    if (total > Wide(INT64_MAX)) throw ValidationError("total processing time overflows 64 bits");
    instance.p_max_ = std::max(instance.p_max_, job.p);
    instance.w_max_ = std::max(instance.w_max_, job.w);
  }
  instance.total_p_ = static_cast<std::int64_t>(total);
  if (!objective_bound_ok(static_cast<std::int64_t>(jobs.size()), instance.total_p_,
                          instance.w_max_)) {
    throw ValidationError("objective bound n*P*w_max exceeds the signed 64-bit range");
  }
  instance.jobs_ = std::move(jobs);
  return instance;
}

Instance parse_instance(std::istream& in) {
  std::string line;
  int lineno = 0;
  bool have_header = false;
  std::int64_t machines = 0;
  std::vector<Job> jobs;
  Wide running_total = 0;
  std::int64_t running_wmax = 0;

  while (std::getline(in, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    const auto first = line.find_first_not_of(" \t");
    if (first == std::string::npos || line[first] == '#') continue;

    const auto tokens = split_tokens(line);
    if (!have_header) {
      if (tokens[0] != "machines") throw ParseError("missing machines header", lineno);
      std::int64_t m = 0;
      if (tokens.size() != 2 || !parse_int(tokens[1], m))
        throw ParseError("malformed machines line", lineno);
      if (m < 1) throw ParseError("m must be >= 1", lineno);
      if (m > INT32_MAX) throw ParseError("machine count out of range", lineno);
      machines = m;
      have_header = true;
      continue;
    }

    if (tokens[0] != "job") throw ParseError("malformed line", lineno);
    Job job;
    if (tokens.size() != 4 || !parse_int(tokens[1], job.p) || !parse_int(tokens[2], job.w) ||
        !parse_int(tokens[3], job.d)) {
      throw ParseError("malformed job line", lineno);
    }
    if (job.p < 1) throw ParseError("p must be >= 1", lineno);

    running_total += job.p;
    running_wmax = std::max(running_wmax, job.w);
    const Wide count = static_cast<Wide>(jobs.size()) + 1;
    if (running_total > Wide(INT64_MAX) ||
        count * running_total * Wide(running_wmax) > Wide(INT64_MAX)) {
      throw ParseError("objective bound n*P*w_max exceeds the signed 64-bit range", lineno);
    }
    jobs.push_back(job);
  }

  if (!have_header) throw ParseError("missing machines header", std::max(lineno, 1));
  if (jobs.empty()) throw ParseError("instance has no jobs", std::max(lineno, 1));
  return Instance::create(static_cast<int>(machines), std::move(jobs));
}

Instance parse_instance(const std::string& text) {
  std::istringstream stream(text);
  return parse_instance(stream);
}

std::string serialize_instance(const Instance& instance) {
  std::ostringstream out;
  out << "machines " << instance.machines() << '\n';
  for (const Job& job : instance.jobs()) {
    out << "job " << job.p << ' ' << job.w << ' ' << job.d << '\n';
  }
  return out.str();
}

const char* due_mode_name(DueMode mode) {
  switch (mode) {
    case DueMode::Tight: return "tight";
    case DueMode::Loose: return "loose";
    case DueMode::Common: return "common";
  }
  return "?";
}

bool due_mode_from_name(const std::string& name, DueMode& out) {
  if (name == "tight") out = DueMode::Tight;
  else if (name == "loose") out = DueMode::Loose;
  else if (name == "common") out = DueMode::Common;
  else return false;
  return true;
}

Instance generate_instance(const GenParams& params) {
  if (params.n < 1) throw ValidationError("generator requires n >= 1");
  if (params.m < 1) throw ValidationError("generator requires m >= 1");
  if (params.pmax < 1) throw ValidationError("generator requires pmax >= 1");
  if (params.wmax < 0) throw ValidationError("generator requires wmax >= 0");

  SplitMix64 rng(params.seed);
  std::vector<Job> jobs(static_cast<std::size_t>(params.n));
  std::int64_t total = 0;
  for (Job& job : jobs) {
    job.p = rng.uniform(1, params.pmax);
    total += job.p;
  }
  for (Job& job : jobs) job.w = rng.uniform(0, params.wmax);

  const auto ceil_div = [](std::int64_t a, std::int64_t b) { return (a + b - 1) / b; };
  switch (params.due) {
    case DueMode::Tight:
      for (Job& job : jobs) job.d = rng.uniform(1, ceil_div(total, params.m));
      break;
    case DueMode::Loose:
      for (Job& job : jobs) job.d = rng.uniform(1, total);
      break;
    case DueMode::Common: {
      const std::int64_t common = ceil_div(total, 2 * static_cast<std::int64_t>(params.m));
      for (Job& job : jobs) job.d = common;
      break;
    }
  }
  return Instance::create(params.m, std::move(jobs));
}

}  // namespace prunesched
