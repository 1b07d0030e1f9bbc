#pragma once

#include <functional>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "alcfit/concept.hpp"
#include "alcfit/element_set.hpp"
#include "alcfit/interpretation.hpp"
#include "alcfit/sample.hpp"

namespace alcfit {

enum class Enumeration {
  /// Every syntax tree, children in both orders.
  ordered,
  /// Left argument of and/or never greater than the right one.
  commutative,
};

/// Calls `visit` on every concept of L(ops) with exactly k nodes over `sigma`.
/// Stops early when `visit` returns false.
void for_each_concept(OperatorSet ops, const Signature& sigma, int k, const std::function<bool(const Concept&)>& visit,
                      Enumeration mode = Enumeration::ordered);

std::vector<Concept> enumerate_concepts(OperatorSet ops, const Signature& sigma, int k,
                                        Enumeration mode = Enumeration::ordered);

/// The extensions realized by concepts of each exact size, one witness each.
/// Built bottom-up: the extension of a compound concept depends only on the
/// extensions of its arguments, so each size needs only the distinct
/// extensions of smaller sizes.
class ExtensionTable {
public:
  ExtensionTable(const Interpretation& interp, OperatorSet ops, const Signature& sigma);
  ExtensionTable(const Interpretation& interp, OperatorSet ops);

  /// Extensions of size-k concepts; computes sizes up to k on demand.
  const std::unordered_map<ElementSet, Concept, ElementSetHash>& of_size(int k);

private:
  void grow();

  const Interpretation& interp_;
  OperatorSet ops_;
  Signature sigma_;
  std::vector<std::unordered_map<ElementSet, Concept, ElementSetHash>> by_size_;
};

/// A fitting concept of exactly size k, if any.
std::optional<Concept> fitting_of_size(const Sample& sample, OperatorSet ops, int k);

/// Smallest fitting concept of size <= k_max.
std::optional<std::pair<Concept, int>> brute_force_fit(const Sample& sample, OperatorSet ops, int k_max);

/// Best number of correctly classified examples over concepts of size <= k.
std::pair<int, Concept> max_coverage(const Sample& sample, OperatorSet ops, int k);

}  // namespace alcfit
