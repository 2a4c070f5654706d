// Copyright 2026 The conformal_bm Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef CBM_TOOLS_EXPERIMENTS_HPP_
#define CBM_TOOLS_EXPERIMENTS_HPP_

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "cbm/series.hpp"

namespace cbm::cli {

inline constexpr const char* kSeedEnv = "CONFORMAL_BM_SEED";

struct RunConfig {
  std::string command = "all";
  // Overrides every Monte Carlo sample count when set.
  std::optional<std::size_t> samples;
  std::uint64_t seed = 0;
  double dt = 1e-4;
  // Fixed truncation; when unset, truncations come from tail bounds at eps.
  std::optional<std::size_t> trunc;
  double eps = 1e-8;
  std::map<std::string, double> tolerance_overrides;
  std::string json_path;
  std::string csv_path;
  unsigned workers = 1;

  // Throws DomainError on an invalid field.
  void validate() const;
  TruncationPolicy truncation() const;

  std::size_t exit_law_samples() const { return samples.value_or(100'000); }
  std::size_t exit_time_samples() const { return samples.value_or(1'000'000); }
  std::size_t occupation_paths() const { return samples.value_or(100'000); }
};

void to_json(nlohmann::json& j, const RunConfig& c);
void from_json(const nlohmann::json& j, RunConfig& c);

// One verification check. pass == (abs_error <= tolerance); rel_error is
// abs_error / |reference_value|, or abs_error when the reference is 0.
struct VerificationReport {
  std::string check_name;
  std::string paper_anchor;  // the identity or claim being checked
  double computed_value = 0.0;
  double reference_value = 0.0;
  double abs_error = 0.0;
  double rel_error = 0.0;
  double tolerance = 0.0;
  bool pass = false;
  double runtime_ms = 0.0;
  std::uint64_t seed = 0;
  std::size_t n = 0;

  friend bool operator==(const VerificationReport&, const VerificationReport&) = default;
};

VerificationReport make_report(std::string name, std::string anchor, double computed,
                               double reference, double tolerance, std::uint64_t seed,
                               std::size_t n);

void to_json(nlohmann::json& j, const VerificationReport& r);
void from_json(const nlohmann::json& j, VerificationReport& r);

// One point of a density or series comparison for plotting. Missing values
// are written as empty CSV fields.
struct CsvRow {
  std::string experiment;
  double parameter = 0.0;
  std::optional<double> analytic;
  std::optional<double> series;
  std::optional<double> empirical;
};

inline constexpr const char* kCsvHeader = "experiment,parameter,analytic,series,empirical";

struct RunResult {
  std::vector<VerificationReport> reports;
  std::vector<CsvRow> rows;
  // Checks skipped for lack of data.
  std::vector<std::string> notes;

  bool all_pass() const;
  void append(RunResult other);
};

RunResult run_proof1(const RunConfig& cfg);
RunResult run_proof2(const RunConfig& cfg);
RunResult run_proof3(const RunConfig& cfg);
RunResult run_proof4(const RunConfig& cfg);
RunResult run_all(const RunConfig& cfg);
RunResult run_estimate_basel(const RunConfig& cfg);
// Dispatches on cfg.command and applies tolerance overrides.
RunResult run_command(const RunConfig& cfg);

nlohmann::json reports_to_json(const std::vector<VerificationReport>& reports);
void write_csv(std::ostream& os, const std::vector<CsvRow>& rows);
void print_table(std::ostream& os, const std::vector<VerificationReport>& reports);

// The command-line entry point. Returns 0 when every check passes, 1 when
// any fails and 2 on a usage error.
int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace cbm::cli

#endif  // CBM_TOOLS_EXPERIMENTS_HPP_
