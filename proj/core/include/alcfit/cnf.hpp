#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace alcfit {

/// DIMACS-style literal: +v or -v for variable v >= 1.
using Lit = int;

enum class ClauseGroup : std::uint8_t {
  syntax,
  name_semantics,
  semantics,
  fitting,
  templates,
  pattern_bans,
  cardinality,
};
inline constexpr std::size_t kClauseGroupCount = 7;

const char* to_string(ClauseGroup group);

/// Anything that accepts clauses: an in-memory Cnf, a counter, a solver.
class ClauseSink {
public:
  virtual ~ClauseSink() = default;
  virtual void add_clause(std::span<const Lit> lits, ClauseGroup group) = 0;

  void add(std::initializer_list<Lit> lits, ClauseGroup group) {
    add_clause(std::span<const Lit>(lits.begin(), lits.size()), group);
  }
};

/// Flat clause storage with a group tag per clause.
class Cnf : public ClauseSink {
public:
  /// Throws std::logic_error on an empty clause or a non-positive variable.
  void add_clause(std::span<const Lit> lits, ClauseGroup group) override;

  int num_vars() const { return num_vars_; }
  /// Raises the declared variable count (never lowers it).
  void declare_vars(int n) {
    if (n > num_vars_) num_vars_ = n;
  }
  std::size_t num_clauses() const { return groups_.size(); }
  std::span<const Lit> clause(std::size_t i) const {
    return {lits_.data() + offsets_[i], offsets_[i + 1] - offsets_[i]};
  }
  ClauseGroup group(std::size_t i) const { return groups_[i]; }
  std::size_t count(ClauseGroup group) const { return counts_[static_cast<std::size_t>(group)]; }
  std::size_t literal_count() const { return lits_.size(); }

  void append(const Cnf& other);
  /// Replays the clauses into another sink.
  void replay(ClauseSink& sink) const;

private:
  int num_vars_ = 0;
  std::vector<Lit> lits_;
  std::vector<std::size_t> offsets_{0};
  std::vector<ClauseGroup> groups_;
  std::array<std::size_t, kClauseGroupCount> counts_{};
};

/// Counts clauses per group without storing them.
class CountingSink : public ClauseSink {
public:
  void add_clause(std::span<const Lit> lits, ClauseGroup group) override {
    ++counts_[static_cast<std::size_t>(group)];
    literals_ += lits.size();
  }
  std::size_t count(ClauseGroup group) const { return counts_[static_cast<std::size_t>(group)]; }
  std::size_t total() const {
    std::size_t n = 0;
    for (auto c : counts_) n += c;
    return n;
  }
  std::size_t literal_count() const { return literals_; }

private:
  std::array<std::size_t, kClauseGroupCount> counts_{};
  std::size_t literals_ = 0;
};

/// Forwards to several sinks.
class TeeSink : public ClauseSink {
public:
  TeeSink(ClauseSink& a, ClauseSink& b) : a_(a), b_(b) {}
  void add_clause(std::span<const Lit> lits, ClauseGroup group) override {
    a_.add_clause(lits, group);
    b_.add_clause(lits, group);
  }

private:
  ClauseSink& a_;
  ClauseSink& b_;
};

/// `p cnf <vars> <clauses>` followed by one zero-terminated clause per line.
/// Comment lines, if given, precede the header.
std::string export_dimacs(const Cnf& cnf, const std::vector<std::string>& comments = {});

/// Parses DIMACS CNF; comment lines are skipped. Throws DataError.
Cnf parse_dimacs(std::string_view text);

}  // namespace alcfit
