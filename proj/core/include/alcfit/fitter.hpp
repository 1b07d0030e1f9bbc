#pragma once

#include <atomic>
#include <optional>
#include <string>
#include <vector>

#include "alcfit/concept.hpp"
#include "alcfit/encoder.hpp"
#include "alcfit/sample.hpp"
#include "alcfit/solver.hpp"

namespace alcfit {

enum class FitMode { exact, approximate };
enum class FitStatus { fitted, no_fit_within_bound, approximate, timed_out };

const char* to_string(FitMode mode);
const char* to_string(FitStatus status);
/// Process exit code for a status: 0, 20, 10, 30.
int exit_code(FitStatus status);

struct FitConfig {
  OperatorSet ops = OperatorSet::all();
  int max_size = 12;
  /// Wall-clock budget for the whole run; unset means unlimited.
  std::optional<double> timeout_seconds;
  EncodingOptions encoding;
  SolverConfig solver;
  FitMode mode = FitMode::exact;
  /// Approximate mode: the remaining budget is split evenly over the sizes up
  /// to this bound (at least the current size). 0 means max_size.
  int time_horizon = 0;
  /// Approximate mode: strengthen the coverage bound inside one solver session.
  /// When false every bound gets a fresh session (baseline for comparisons).
  bool incremental = true;
  const std::atomic<bool>* cancel = nullptr;

  /// Throws ConfigError.
  void validate() const;
};

struct SizeStats {
  int k = 0;
  int vars = 0;
  std::size_t clauses = 0;
  /// Last solver answer at this size.
  SolveStatus outcome = SolveStatus::unknown;
  int solves = 0;
  double encode_seconds = 0.0;
  double solve_seconds = 0.0;
  /// Best coverage known after this size (approximate mode), or 0.
  int best_coverage = 0;
};

struct CoveragePoint {
  int k;
  int coverage;
};

struct FitResult {
  FitStatus status = FitStatus::no_fit_within_bound;
  std::optional<Concept> best;
  int coverage = 0;
  int examples = 0;
  std::vector<SizeStats> per_size;
  /// Every recorded improvement, in order.
  std::vector<CoveragePoint> trace;
  double seconds = 0.0;

  int size() const { return best ? best->node_count() : 0; }
};

/// Smallest k <= max_size with a fitting concept of size k; sizes are tried in increasing order.
FitResult bounded_fit(const Sample& sample, const FitConfig& cfg);

/// Anytime search for the best coverage over sizes up to max_size.
FitResult approx_fit(const Sample& sample, const FitConfig& cfg);

/// Dispatches on cfg.mode.
FitResult fit(const Sample& sample, const FitConfig& cfg);

struct VerifyReport {
  bool fits = false;
  int coverage = 0;
  /// Misclassified example elements, positives first.
  std::vector<int> misclassified;
};

VerifyReport verify(const Concept& c, const Sample& sample);

/// One line per size plus the result line.
std::string summary_text(const FitResult& result, RenderStyle style = RenderStyle::ascii);
std::string summary_json(const FitResult& result);

struct FoldReport {
  FitStatus status = FitStatus::no_fit_within_bound;
  std::optional<Concept> best;
  int train_examples = 0;
  int test_examples = 0;
  double train_accuracy = 0.0;
  /// Fraction of held-out examples classified correctly; 0 when no concept was found.
  double test_accuracy = 0.0;
};

struct CrossValidationReport {
  std::vector<FoldReport> folds;
  double mean_test_accuracy = 0.0;
  double mean_size = 0.0;
};

/// Stratified k-fold split of P and N with a seeded shuffle; folds run concurrently.
CrossValidationReport cross_validate(const Sample& sample, const FitConfig& cfg, int folds, unsigned seed);

std::string cross_validation_json(const CrossValidationReport& report);

}  // namespace alcfit
