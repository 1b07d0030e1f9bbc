#pragma once

#include <array>
#include <functional>
#include <utility>
#include <vector>

#include "alcfit/cnf.hpp"
#include "alcfit/concept.hpp"
#include "alcfit/interpretation.hpp"
#include "alcfit/sample.hpp"
#include "alcfit/varmap.hpp"

namespace alcfit {

struct EncodingOptions {
  /// Name semantics through element types instead of one clause per (node, element, name).
  bool typed = true;
  /// Restrict node numbering to canonical level-order topologies.
  bool templates = true;
  /// Nodes covered by a topology; larger trees are constrained only on a prefix.
  int template_threshold = 10;
  /// Forbid subtrees that always have a smaller or same-size rewriting.
  /// Keeps the smallest fitting size, but may make a specific size k unsatisfiable.
  bool pattern_bans = true;
};

// The encoders below write into a ClauseWriter bound to a VarMap. Each call
// adds clauses only; none of them removes or rewrites earlier output.

/// Well-formed syntax trees with exactly k nodes, rooted at node 1.
void encode_syntax(ClauseWriter& out);

/// Semantics of every label over `interp`, one clause per (node, element, name) for names.
void encode_semantics_base(const Interpretation& interp, ClauseWriter& out);

/// Same semantics with name clauses factored through element types.
/// Throws ConfigError if `types` does not describe `interp`.
void encode_semantics_typed(const Interpretation& interp, const TypeTable& types, ClauseWriter& out);

/// Unit clauses: the root holds at every positive and at no negative.
void encode_fitting(const Sample& sample, ClauseWriter& out);

/// Level-order topology templates. Requires encode_syntax.
void encode_templates(ClauseWriter& out, int threshold);

void encode_pattern_bans(ClauseWriter& out);

/// Sequential counter over the per-example fitting literals. `require(m)`
/// asserts that at least m examples are classified correctly; raising m later
/// only adds clauses, so it can feed an incremental solver session.
class CoverageCounter {
public:
  CoverageCounter(const Sample& sample, VarMap& vm);

  int example_count() const { return static_cast<int>(lits_.size()); }
  int required() const { return required_; }
  /// Throws ConfigError unless 1 <= m <= example_count.
  void require(int m, ClauseWriter& out);
  /// The literal that is true iff example `e` (positives first) is classified correctly.
  Lit example_literal(int e) const { return lits_[static_cast<std::size_t>(e)]; }

private:
  void add_level(int j, ClauseWriter& out);
  int s(int i, int j) const;

  std::vector<Lit> lits_;
  // levels_[j-1][i-1] = "at least j of the first i literals"; 0 if i < j.
  std::vector<std::vector<int>> levels_;
  int required_ = 0;
};

/// Arity sequences of level-order trees with k nodes: node i's children are
/// numbered consecutively after the children of nodes 1..i-1.
std::vector<std::vector<int>> enumerate_topologies(int k, const std::array<bool, 3>& arities);

/// Prefixes of length `t` (< k) of the level-order arity sequences of k-node trees.
std::vector<std::vector<int>> enumerate_topology_prefixes(int k, int t, const std::array<bool, 3>& arities);

using ModelValue = std::function<bool(int var)>;

/// Reads the concept off a model of encode_syntax. Throws SoundnessError if
/// the model does not describe a tree with exactly k nodes.
Concept decode_model(const ModelValue& value, const VarMap& vm);

/// A complete formula for one size bound.
struct Encoding {
  VarMap vars;
  Cnf cnf;
};

/// Syntax, semantics, optional templates and bans, and (when `with_fitting`)
/// the fitting units. Labels range over the signature of the sample's interpretation.
Encoding build_encoding(const Sample& sample, int k, OperatorSet ops, const EncodingOptions& options,
                        bool with_fitting = true);

std::pair<Cnf, VarMap> encode_syntax(int k, OperatorSet ops, const Signature& sigma);

}  // namespace alcfit
