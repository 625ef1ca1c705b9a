#pragma once

#include "vir/errors.hpp"
#include "vir/serialize.hpp"

#include <optional>
#include <string>
#include <vector>

namespace vir {

enum class OutputFormat { Text, Json };

/// One fully specified CLI invocation.
struct JobConfig {
  std::string command;
  int p = 0;
  int q = 0;
  std::vector<std::string> labels;  // "m,n"
  std::optional<std::string> channel;
  int max_level = 4;
  int level = 2;
  int order = 0;  // 0 selects the per-command default
  std::vector<double> z;
  std::vector<double> z1_grid;
  std::vector<double> ratio_grid;
  std::string suite;
  std::optional<std::string> cache_dir;
  OutputFormat format = OutputFormat::Text;
};

/// Commands understood by run_job, in help order.
const std::vector<std::string>& job_commands();

/// Throws ErrorKind::Parse for unknown commands, missing or surplus
/// arguments and out-of-range numeric parameters.
void validate(const JobConfig& job);

/// Reads a job description; unknown keys are rejected with ErrorKind::Parse.
JobConfig job_from_json(const Json& j);
Json to_json(const JobConfig& job);

/// "m,n" -> label; throws ErrorKind::Parse.
KacLabel parse_label(const std::string& text);

struct JobOutput {
  Json data;         // payload of the structured document
  std::string text;  // human-readable rendering
  bool verification_failed = false;
};

/// Validates and executes the job.
JobOutput run_job(const JobConfig& job);

/// Process exit code for an error kind: 2 usage, 3 domain, 4 conditioning, 5 internal.
int exit_code(ErrorKind kind);

inline constexpr int kExitVerificationFailed = 1;

}  // namespace vir
