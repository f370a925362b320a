#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "prunesched/common.hpp"

namespace prunesched {

struct Job {
  int index = 0;  // 1-based position in the input file
  std::int64_t p = 0;
  std::int64_t w = 0;
  std::int64_t d = 0;

  friend bool operator==(const Job&, const Job&) = default;
};

// Immutable problem input: m identical machines and n jobs in file order.
// Safe to share across threads once constructed.
class Instance {
 public:
  // Validates all invariants (p >= 1, w,d >= 0, n >= 1, m >= 1, and the
  // 64-bit objective bound n * P * w_max). Job indices are renumbered 1..n.
  static Instance create(int machines, std::vector<Job> jobs);

  int machines() const { return machines_; }
  int job_count() const { return static_cast<int>(jobs_.size()); }
  const std::vector<Job>& jobs() const { return jobs_; }
  const Job& job(int idx) const { return jobs_[static_cast<std::size_t>(idx)]; }

  std::int64_t total_p() const { return total_p_; }
  std::int64_t p_max() const { return p_max_; }
  std::int64_t w_max() const { return w_max_; }

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  Instance() = default;

  int machines_ = 0;
  std::vector<Job> jobs_;
  std::int64_t total_p_ = 0;
  std::int64_t p_max_ = 0;
  std::int64_t w_max_ = 0;
};

// Line-oriented file format:
//   machines <m>
//   job <p> <w> <d>        (one line per job)
// '#' starts a comment line, blank lines are ignored.
Instance parse_instance(std::istream& in);
Instance parse_instance(const std::string& text);

// Canonical form: exactly the format above, no comments, single spaces.
std::string serialize_instance(const Instance& instance);

enum class DueMode { Tight, Loose, Common };

const char* due_mode_name(DueMode mode);
bool due_mode_from_name(const std::string& name, DueMode& out);

struct GenParams {
  int n = 1;
  int m = 1;
  std::int64_t pmax = 1;
  std::int64_t wmax = 0;
  DueMode due = DueMode::Loose;
  std::uint64_t seed = 0;
};

// Seeded random instance. Draw order (one SplitMix64 stream): p_1..p_n with
// p_j in [1, pmax], then w_1..w_n in [0, wmax], then due dates:
//   tight:  d_j in [1, ceil(P/m)]
//   loose:  d_j in [1, P]
//   common: every d_j = ceil(P/(2m)), no draws consumed
Instance generate_instance(const GenParams& params);

}  // namespace prunesched
