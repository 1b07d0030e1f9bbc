#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "alcfit/concept.hpp"
#include "alcfit/element_set.hpp"

namespace alcfit {

struct RoleExtension {
  /// successors[a] = sorted, duplicate-free r-successors of element a.
  std::vector<std::vector<int>> successors;
  std::size_t pair_count = 0;
};

/// Finite interpretation: a domain of named elements plus concept and role
/// extensions. Immutable once built; see InterpretationBuilder.
class Interpretation {
public:
  std::size_t domain_size() const { return elements_.size(); }
  const std::vector<std::string>& elements() const { return elements_; }
  const std::string& element(int index) const { return elements_[static_cast<std::size_t>(index)]; }
  std::optional<int> index_of(std::string_view id) const;

  /// Concept names known to this interpretation (possibly with empty extension), sorted.
  const std::map<std::string, ElementSet, std::less<>>& concepts() const { return concepts_; }
  const std::map<std::string, RoleExtension, std::less<>>& roles() const { return roles_; }
  /// nullptr when the name is unknown (its extension is empty).
  const ElementSet* concept_extension(std::string_view name) const;
  const RoleExtension* role_extension(std::string_view name) const;

  Signature signature() const;
  /// Number of facts: concept memberships plus role pairs.
  std::size_t fact_count() const;

  /// Same domain (as a set of identifiers) and the same set of facts.
  friend bool operator==(const Interpretation& a, const Interpretation& b);

private:
  friend class InterpretationBuilder;
  Interpretation() = default;

  std::vector<std::string> elements_;
  std::unordered_map<std::string, int> index_;
  std::map<std::string, ElementSet, std::less<>> concepts_;
  std::map<std::string, RoleExtension, std::less<>> roles_;
};

class InterpretationBuilder {
public:
  /// Returns the index of `id`, adding it if new. Element order is first appearance.
  int add_element(const std::string& id);
  void add_concept_fact(const std::string& concept_name, const std::string& element);
  void add_role_fact(const std::string& role, const std::string& from, const std::string& to);
  /// Makes a concept name part of the signature even if its extension stays empty.
  void declare_concept(const std::string& concept_name);

  /// Throws DataError on an empty domain.
  Interpretation build() const;

private:
  std::vector<std::string> elements_;
  std::unordered_map<std::string, int> index_;
  std::map<std::string, std::vector<int>> concept_facts_;
  std::map<std::string, std::vector<std::pair<int, int>>> role_facts_;
};

/// Disjoint union; element e of part i is renamed "<i>:<e>". Returns the
/// merged interpretation and the index offset of each part.
std::pair<Interpretation, std::vector<int>> disjoint_union(const std::vector<Interpretation>& parts);

/// Complements the extensions of the concept names in `sigma`; roles and all
/// other concept names are kept.
Interpretation dualize_interpretation(const Interpretation& interp, const Signature& sigma);

/// The distinct concept-name types occurring in an interpretation.
struct TypeTable {
  /// Concept names in interpretation order (sorted).
  std::vector<std::string> concept_names;
  /// Each type as sorted indices into `concept_names`; ordered lexicographically
  /// by member names, so the empty type comes first when present.
  std::vector<std::vector<int>> types;
  /// Type index per domain element.
  std::vector<int> type_of;

  bool type_contains(int type, int concept_index) const;
};

TypeTable compute_types(const Interpretation& interp);

}  // namespace alcfit
