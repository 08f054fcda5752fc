#pragma once

#include "json.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace symideal {

using Json = nlohmann::ordered_json;

/// Rejected job: unknown theorem id or parameters outside its domain.
class JobError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class RunMode { Exhaustive, Sampled };

struct VerificationJob {
  std::string theorem_id;
  int n = 0;
  std::optional<std::string> gamma;
  std::optional<std::string> delta;
  std::optional<int> r;
  std::optional<std::uint64_t> p;
  RunMode mode = RunMode::Exhaustive;
  std::uint64_t seed = 1;
  std::size_t samples = 64;
  /// Allows the expensive parameter ranges.
  bool long_run = false;
  /// Directory for resumable state; empty disables checkpoints.
  std::string checkpoint_dir;

  Json to_json() const;
};

enum class Status { Pass, Fail, Counterexample, Inconclusive };
std::string_view to_string(Status s);

struct VerificationReport {
  VerificationJob job;
  Status status = Status::Inconclusive;
  std::string summary;
  Json evidence = Json::object();
  /// Reproducible witness for fail / counterexample.
  Json witness;
  double elapsed_seconds = 0;

  bool passed() const { return status == Status::Pass; }
  Json to_json(bool include_timing = true) const;
};

struct TheoremEntry {
  std::string id;
  std::vector<std::string> aliases;
  std::string description;
  /// Parameters this checker reads, for usage messages.
  std::vector<std::string> params;
  std::function<void(const VerificationJob&)> validate;
  std::function<VerificationReport(const VerificationJob&)> run;
};

const std::vector<TheoremEntry>& theorem_registry();
/// By id or alias; nullptr if unknown.
const TheoremEntry* find_theorem(std::string_view id);

/// Throws JobError with an explanation if the job is not runnable.
void validate_job(const VerificationJob& job);
VerificationReport run_job(const VerificationJob& job);

/// Every co-saturated delta of Par(n) whose (nonempty) complement has no unique maximal
/// element, checked for Z G(Par(n) \ delta) + I(delta) = Z Sym(n).
VerificationReport search_remark_2_14(int n, bool long_run = false,
                                      const std::string& checkpoint_dir = {});

/// Jobs covering every registered check that applies at n.
std::vector<VerificationJob> sweep_jobs(int n, bool long_run);

/// Worker count: SYMIDEAL_WORKERS if set, else the hardware concurrency.
unsigned worker_count();

/// Runs jobs on a worker pool; reports come back in job order.
std::vector<VerificationReport> run_jobs(const std::vector<VerificationJob>& jobs,
                                         unsigned workers = worker_count());

/// Applies `f` to 0..count-1 on up to `workers` threads.
void parallel_for(std::size_t count, unsigned workers,
                  const std::function<void(std::size_t)>& f);

}  // namespace symideal
