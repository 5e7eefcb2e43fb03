#pragma once

// Instrumented experiment runner. Operation counts (triples visited by the
// fast algorithm, set elements scanned by the quadratic one) are the unit of
// measurement; wall clock is reported for information only.

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "palfact/core.hpp"
#include "palfact/fast.hpp"

namespace palfact::bench {

enum class Family { zimin, random, file, repeated };
enum class Engine { fast, quadratic };

struct FamilySpec {
  Family family = Family::zimin;
  std::uint64_t n = 0;      // ignored for file
  std::uint64_t sigma = 2;  // random only
  std::uint64_t seed = 0;   // random only
  std::string path;         // file only

  static FamilySpec zimin(std::uint64_t n) { return {Family::zimin, n, 2, 0, {}}; }
  static FamilySpec random(std::uint64_t n, std::uint64_t sigma, std::uint64_t seed) {
    return {Family::random, n, sigma, seed, {}};
  }
  static FamilySpec repeated(std::uint64_t n) { return {Family::repeated, n, 2, 0, {}}; }
  static FamilySpec file(std::string path) { return {Family::file, 0, 0, 0, std::move(path)}; }

  /// e.g. "zimin", "random(sigma=2)", "file(in.txt)".
  std::string describe() const;
};

class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Fewer than four sizes, or sizes not in geometric progression.
class ScalingError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Builds the input text. Throws IoError naming the path for unreadable files.
Text materialize(const FamilySpec& spec);

struct RoundStats {
  Position j = 0;
  /// |G_j| for the fast engine, |P_j| for the quadratic one.
  std::uint64_t gap_triples = 0;
  std::uint64_t triples_processed = 0;  // counter delta for this round
  std::uint64_t suffix_palindromes = 0;
};

struct RunSummary {
  std::uint64_t n = 0;
  std::string family;
  std::uint64_t seed = 0;
  Engine engine = Engine::fast;
  std::uint64_t total_triples = 0;
  double mean_suffix_palindromes = 0.0;
  double wall_clock_millis = 0.0;
  std::int64_t final_pl = 0;
  std::uint64_t shadow_checks = 0;
};

struct RunOptions {
  Engine engine = Engine::fast;
  bool shadow_check = kShadowCheckDefault;
  /// Called once per round in order, when set.
  std::function<void(const RoundStats&)> on_round;
};

RunSummary run_instrumented(const FamilySpec& spec, const RunOptions& options = {});
RunSummary run_instrumented(const Text& text, const FamilySpec& spec, const RunOptions& options);

/// Runs every spec on up to `jobs` worker threads; results keep input order.
/// `options.on_round` must be empty.
std::vector<RunSummary> run_many(std::span<const FamilySpec> specs, const RunOptions& options,
                                 unsigned jobs);

// CSV stream: "# key=value ..." metadata line, then "j,gap_triples,triples_processed".
void write_csv_header(std::ostream& os, const FamilySpec& spec, Engine engine);
void write_csv_row(std::ostream& os, const RoundStats& r);

/// One JSON object on one line.
std::string summary_json(const RunSummary& s);

enum class ScalingModel { linear, n_log_n };

struct ScalingRow {
  std::uint64_t n = 0;
  double mean_total = 0.0;    // averaged over runs sharing n
  double per_n = 0.0;         // mean_total / n
  double per_n_log_n = 0.0;   // mean_total / (n log2 n)
};

/// Two one-parameter models, total ≈ c·n and total ≈ c·n·log2 n, fitted by
/// least squares on relative error so every size weighs the same.
struct ScalingReport {
  double linear_coef = 0.0;
  double n_log_n_coef = 0.0;
  double linear_residual = 0.0;   // RMS relative residual
  double n_log_n_residual = 0.0;
  ScalingModel winner = ScalingModel::linear;
  std::vector<ScalingRow> rows;
};

/// Throws ScalingError unless the summaries cover at least four distinct
/// sizes in geometric progression.
ScalingReport fit_scaling(std::span<const RunSummary> summaries);

std::string to_string(ScalingModel m);
std::string to_string(Engine e);
void print_scaling_report(std::ostream& os, const ScalingReport& report);

}  // namespace palfact::bench
