#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

namespace srmk::cli {

enum ExitCode : int { kSuccess = 0, kFailure = 1, kUsage = 2 };

struct CommonOptions {
  std::uint64_t seed = 1;
  std::string json_out;
  std::string csv_out;
  bool verbose = false;
};

struct ExampleOptions {
  bool perturb = false;
  std::string export_dir;  // writes code.json / received.json when set
};

struct TrialConfig {
  std::uint32_t p = 2;
  std::uint32_t m = 4;
  std::vector<std::size_t> parts{2, 2, 2, 2};
  std::size_t k = 2;
  std::size_t s = 2;
  std::size_t t = 2;
  std::vector<std::size_t> profile;  // overrides t when non-empty
  std::size_t trials = 200;
  bool full_rank = true;
  bool timing = true;
  unsigned threads = 1;
  std::uint64_t distance_budget = 1'000'000;
};

struct TrialSummary {
  std::size_t trials = 0;
  std::size_t successes = 0;
  std::size_t miscorrections = 0;  // returned a codeword other than the planted one
  std::map<std::string, std::size_t> failures;
  std::optional<std::size_t> distance;
  double min_us = 0, median_us = 0, max_us = 0;
};

struct TrialRecord {
  std::size_t index = 0;
  std::uint64_t seed = 0;
  std::vector<std::size_t> profile;
  std::string status;  // "success", "miscorrection" or a failure variant
  double micros = 0;
};

TrialSummary run_trials(const TrialConfig& config, std::uint64_t master_seed, std::vector<TrialRecord>* records = nullptr);
nlohmann::json to_json(const TrialSummary& summary, const TrialConfig& config, std::uint64_t seed);

struct BenchOptions {
  std::vector<std::size_t> sizes{32, 64, 128};
  std::vector<std::size_t> orders{8};
  std::uint32_t p = 2;
  std::uint32_t m = 8;
  std::size_t block = 4;
  std::size_t reps = 5;
};

struct BenchRow {
  std::size_t n = 0, k = 0, s = 0, t = 0;
  double median_us = 0;
  std::size_t successes = 0, reps = 0;
};

std::vector<BenchRow> run_bench(const BenchOptions& options, std::uint64_t seed);

struct GenOptions {
  std::uint32_t p = 2;
  std::uint32_t m = 4;
  std::vector<std::size_t> parts{2, 2, 2, 2};
  std::size_t k = 2;
  std::size_t s = 2;
  std::size_t t = 2;
  bool full_rank = true;
  bool with_distance = true;
  std::string out_dir = ".";
};

int cmd_example(const ExampleOptions& options, const CommonOptions& common, std::ostream& out, std::ostream& err);
int cmd_trial(const TrialConfig& config, const CommonOptions& common, std::ostream& out, std::ostream& err);
int cmd_bench(const BenchOptions& options, const CommonOptions& common, std::ostream& out, std::ostream& err);
int cmd_decode(const std::string& code_file, const std::string& received_file, const std::string& isometry_file,
               const CommonOptions& common, std::ostream& out, std::ostream& err);
int cmd_mindist(const std::string& code_file, std::uint64_t budget, unsigned threads, const CommonOptions& common,
                std::ostream& out, std::ostream& err);
int cmd_gen(const GenOptions& options, const CommonOptions& common, std::ostream& out, std::ostream& err);

/// Parses argv and dispatches. argv[0] is the program name.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace srmk::cli
