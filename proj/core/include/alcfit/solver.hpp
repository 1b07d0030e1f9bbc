#pragma once

#include <atomic>
#include <chrono>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "alcfit/cnf.hpp"

namespace alcfit {

enum class SolveStatus { sat, unsat, unknown };

const char* to_string(SolveStatus status);

using Clock = std::chrono::steady_clock;

/// Limits for one solve call. Unset fields mean "no limit".
struct SolveBudget {
  std::optional<Clock::time_point> deadline;
  std::optional<std::int64_t> conflicts;
  /// Polled cooperatively; setting it makes the current solve return unknown.
  const std::atomic<bool>* cancel = nullptr;
};

struct SolveOutcome {
  SolveStatus status = SolveStatus::unknown;
  /// model[v] for v in 1..num_vars when sat; index 0 unused.
  std::vector<bool> model;
  double seconds = 0.0;

  bool value(int var) const { return model[static_cast<std::size_t>(var)]; }
};

/// Incremental SAT session. Clauses may be added between solves and are
/// never removed; assumptions hold for a single solve call.
class SatSession : public ClauseSink {
public:
  /// Variables 1..n become usable.
  virtual void reserve_vars(int n) = 0;
  virtual int num_vars() const = 0;
  std::size_t num_clauses() const { return clauses_; }

  /// Throws std::logic_error on an empty clause or an unallocated variable.
  void add_clause(std::span<const Lit> lits, ClauseGroup group = ClauseGroup::syntax) override;
  void add_cnf(const Cnf& cnf);

  virtual SolveOutcome solve(std::span<const Lit> assumptions = {}, const SolveBudget& budget = {}) = 0;
  virtual std::string backend_name() const = 0;

protected:
  virtual void push_clause(std::span<const Lit> lits) = 0;

private:
  std::size_t clauses_ = 0;
};

struct SolverConfig {
  /// "cadical" (in-process) or "external" (DIMACS through a subprocess).
  std::string backend = "cadical";
  unsigned seed = 0;
  /// External solver command; the DIMACS file path is appended as the last argument.
  /// The solver must print `s SATISFIABLE` / `s UNSATISFIABLE` and `v` lines.
  std::string external_command;
};

/// Overrides fields from ALCFIT_BACKEND, ALCFIT_SEED and ALCFIT_SOLVER_CMD when set.
SolverConfig solver_config_from_env(SolverConfig base = {});

/// Throws ConfigError on an unknown backend or a missing external command.
std::unique_ptr<SatSession> make_session(const SolverConfig& config);

/// Parses competition-format solver output. Unknown when neither status line is present.
SolveOutcome parse_solver_output(const std::string& text, int num_vars);

/// Competition-format output for an outcome.
std::string format_solver_output(const SolveOutcome& outcome);

}  // namespace alcfit
