#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace ncnn::cli {

enum ExitCode : int {
  kSuccess = 0,
  kVerificationFailed = 1,
  kUsageError = 2,
  kResourceCap = 3,
  kIoError = 4,
};

enum class Provenance { BruteForce, Recurrence, Series, ClosedForm };

const char* provenance_name(Provenance provenance);

struct ResultItem {
  std::string name;
  std::vector<std::string> values;  // exact decimal strings
  Provenance provenance = Provenance::Recurrence;
};

/// What a subcommand produced: the echoed command, its parameters, and
/// results each tagged with where the numbers came from.
struct OutputRecord {
  std::string command;
  std::vector<std::pair<std::string, std::string>> parameters;
  std::vector<ResultItem> results;

  std::string to_json() const;
};

/// Directory that relative export paths resolve against.
inline constexpr const char* kOutputDirEnv = "NCNN_OUTPUT_DIR";

/// Default upper limits; --force lifts them.
inline constexpr std::size_t kMaxSequenceN = 1000;

int run(int argc, char** argv, std::ostream& out, std::ostream& err);
/// Convenience for tests: argv[0] is supplied.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace ncnn::cli
