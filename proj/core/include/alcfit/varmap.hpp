#pragma once

#include <string>
#include <vector>

#include "alcfit/cnf.hpp"
#include "alcfit/concept.hpp"

namespace alcfit {

/// A node label: top, bot, a concept name, neg, and, or, or a quantifier with its role.
struct Label {
  ConceptKind kind;
  std::string symbol;

  int label_arity() const { return arity(kind); }
  std::string to_string() const;
  friend bool operator==(const Label&, const Label&) = default;
};

enum class VarKind : std::uint8_t {
  label,     // x(node, label)
  succ1,     // y1(node, child)
  succ2,     // y2(node, left child); right child is left + 1
  eval,      // z(node, element)
  type,      // x(node, type)
  is_name,   // l(node)
  arity,     // node has this many children
  topology,  // template selector
  counter,   // cardinality ladder s(i, j)
  constant,  // constant false
};

struct VarTag {
  VarKind kind;
  int a = 0;
  int b = 0;
};

/// Bidirectional dictionary between variable ids and their meaning for one
/// size bound k. Nodes are numbered 1..k with node 1 the root.
///
/// Syntax variables (x, y1, y2, arity) exist from construction; the semantic
/// encoders allocate z, type and l variables, and later stages add their own.
/// Accessors return 0 for variables that do not exist.
class VarMap {
public:
  /// Labels: top, bot, concept names of `sigma`, then operators of `ops`
  /// (quantifiers once per role of `sigma`).
  VarMap(int k, OperatorSet ops, const Signature& sigma);

  int k() const { return k_; }
  OperatorSet ops() const { return ops_; }
  const std::vector<Label>& labels() const { return labels_; }
  /// Label index, or -1.
  int label_index(ConceptKind kind, const std::string& symbol = {}) const;
  const std::vector<int>& name_labels() const { return name_labels_; }
  bool has_arity(int a) const { return arity_available_[static_cast<std::size_t>(a)]; }

  int num_vars() const { return static_cast<int>(tags_.size()) - 1; }
  const VarTag& tag(int var) const { return tags_[static_cast<std::size_t>(var)]; }
  int new_var(VarTag tag);

  int x(int node, int label) const { return x_[idx(node)][static_cast<std::size_t>(label)]; }
  int y1(int node, int child) const;
  int y2(int node, int left) const;
  int arity_var(int node, int a) const { return arity_[idx(node)][static_cast<std::size_t>(a)]; }

  void allocate_eval(int domain_size);
  bool has_eval() const { return domain_size_ > 0; }
  int domain_size() const { return domain_size_; }
  int z(int node, int element) const { return z_[idx(node)][static_cast<std::size_t>(element)]; }

  void allocate_types(int type_count);
  int type_count() const { return type_count_; }
  int xt(int node, int type) const { return xt_[idx(node)][static_cast<std::size_t>(type)]; }
  int l(int node) const { return l_.empty() ? 0 : l_[idx(node)]; }

  /// A variable fixed to false; the unit clause is emitted on first use.
  int falsum(ClauseSink& out);

  /// Human-readable description for DIMACS comments; elements named via `element_names`.
  std::string describe(int var, const std::vector<std::string>* element_names = nullptr) const;
  std::vector<std::string> dimacs_comments(const std::vector<std::string>* element_names = nullptr) const;

private:
  static std::size_t idx(int node) { return static_cast<std::size_t>(node - 1); }

  int k_;
  OperatorSet ops_;
  std::vector<Label> labels_;
  std::vector<int> name_labels_;
  std::vector<bool> arity_available_ = std::vector<bool>(3, false);
  std::vector<VarTag> tags_{VarTag{VarKind::constant}};
  std::vector<std::vector<int>> x_;
  std::vector<std::vector<int>> y1_;
  std::vector<std::vector<int>> y2_;
  std::vector<std::vector<int>> arity_;
  std::vector<std::vector<int>> z_;
  std::vector<std::vector<int>> xt_;
  std::vector<int> l_;
  int domain_size_ = 0;
  int type_count_ = 0;
  int falsum_ = 0;
};

/// Clause helper used by the encoders: an empty clause becomes the unit
/// clause on the constant-false variable, so no Cnf ever holds an empty clause.
class ClauseWriter {
public:
  ClauseWriter(VarMap& vm, ClauseSink& out) : vm_(vm), out_(out) {}

  void clause(ClauseGroup g, std::initializer_list<Lit> lits) { emit(g, std::span<const Lit>(lits.begin(), lits.size())); }
  void emit(ClauseGroup g, std::span<const Lit> lits);
  void exactly_one(ClauseGroup g, const std::vector<Lit>& lits);
  void at_most_one(ClauseGroup g, const std::vector<Lit>& lits);

  VarMap& vars() { return vm_; }
  ClauseSink& sink() { return out_; }

private:
  VarMap& vm_;
  ClauseSink& out_;
};

}  // namespace alcfit
