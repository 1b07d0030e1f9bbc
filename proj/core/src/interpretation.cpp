#include "alcfit/interpretation.hpp"

#include <algorithm>
#include <set>

#include "alcfit/error.hpp"

namespace alcfit {

std::optional<int> Interpretation::index_of(std::string_view id) const {
  auto it = index_.find(std::string(id));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

const ElementSet* Interpretation::concept_extension(std::string_view name) const {
  auto it = concepts_.find(name);
  return it == concepts_.end() ? nullptr : &it->second;
}

const RoleExtension* Interpretation::role_extension(std::string_view name) const {
  auto it = roles_.find(name);
  return it == roles_.end() ? nullptr : &it->second;
}

Signature Interpretation::signature() const {
  Signature sig;
  for (const auto& [name, ext] : concepts_) sig.concept_names.insert(name);
  for (const auto& [name, ext] : roles_) sig.role_names.insert(name);
  return sig;
}

std::size_t Interpretation::fact_count() const {
  std::size_t n = 0;
  for (const auto& [name, ext] : concepts_) n += ext.count();
  for (const auto& [name, ext] : roles_) n += ext.pair_count;
  return n;
}

namespace {

using FactSet = std::set<std::vector<std::string>>;

FactSet fact_set(const Interpretation& in) {
  FactSet facts;
  for (const auto& [name, ext] : in.concepts())
    for (int a : ext.members()) facts.insert({name, in.element(a)});
  for (const auto& [name, ext] : in.roles())
    for (std::size_t a = 0; a < ext.successors.size(); ++a)
      for (int b : ext.successors[a]) facts.insert({name, in.element(static_cast<int>(a)), in.element(b)});
  return facts;
}

}  // namespace

bool operator==(const Interpretation& a, const Interpretation& b) {
  if (a.domain_size() != b.domain_size()) return false;
  for (const auto& e : a.elements())
    if (!b.index_of(e)) return false;
  return fact_set(a) == fact_set(b);
}

int InterpretationBuilder::add_element(const std::string& id) {
  auto [it, inserted] = index_.try_emplace(id, static_cast<int>(elements_.size()));
  if (inserted) elements_.push_back(id);
  return it->second;
}

void InterpretationBuilder::add_concept_fact(const std::string& concept_name, const std::string& element) {
  const int a = add_element(element);
  concept_facts_[concept_name].push_back(a);
}

void InterpretationBuilder::add_role_fact(const std::string& role, const std::string& from, const std::string& to) {
  const int a = add_element(from);
  const int b = add_element(to);
  role_facts_[role].emplace_back(a, b);
}

void InterpretationBuilder::declare_concept(const std::string& concept_name) { concept_facts_[concept_name]; }

Interpretation InterpretationBuilder::build() const {
  if (elements_.empty()) throw DataError("interpretation has an empty domain");
  Interpretation in;
  in.elements_ = elements_;
  in.index_ = index_;
  const std::size_t n = elements_.size();
  for (const auto& [name, members] : concept_facts_) {
    ElementSet ext(n);
    for (int a : members) ext.set(static_cast<std::size_t>(a));
    in.concepts_.emplace(name, std::move(ext));
  }
  for (const auto& [name, pairs] : role_facts_) {
    RoleExtension ext;
    ext.successors.resize(n);
    for (auto [a, b] : pairs) ext.successors[static_cast<std::size_t>(a)].push_back(b);
    for (auto& succ : ext.successors) {
      std::sort(succ.begin(), succ.end());
      succ.erase(std::unique(succ.begin(), succ.end()), succ.end());
      ext.pair_count += succ.size();
    }
    in.roles_.emplace(name, std::move(ext));
  }
  return in;
}

std::pair<Interpretation, std::vector<int>> disjoint_union(const std::vector<Interpretation>& parts) {
  InterpretationBuilder b;
  std::vector<int> offsets;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    const auto& part = parts[p];
    const std::string prefix = std::to_string(p) + ":";
    offsets.push_back(static_cast<int>(b.add_element(prefix + part.elements().front())));
    for (const auto& e : part.elements()) b.add_element(prefix + e);
    for (const auto& [name, ext] : part.concepts()) {
      b.declare_concept(name);
      for (int a : ext.members()) b.add_concept_fact(name, prefix + part.element(a));
    }
    for (const auto& [name, ext] : part.roles())
      for (std::size_t a = 0; a < ext.successors.size(); ++a)
        for (int c : ext.successors[a])
          b.add_role_fact(name, prefix + part.element(static_cast<int>(a)), prefix + part.element(c));
  }
  return {b.build(), std::move(offsets)};
}

Interpretation dualize_interpretation(const Interpretation& interp, const Signature& sigma) {
  InterpretationBuilder b;
  for (const auto& e : interp.elements()) b.add_element(e);
  std::set<std::string> names = sigma.concept_names;
  for (const auto& [name, ext] : interp.concepts()) names.insert(name);
  const ElementSet none(interp.domain_size());
  for (const auto& name : names) {
    const ElementSet* ext = interp.concept_extension(name);
    const ElementSet& current = ext ? *ext : none;
    const ElementSet dual = sigma.concept_names.contains(name) ? current.complement() : current;
    b.declare_concept(name);
    for (int a : dual.members()) b.add_concept_fact(name, interp.element(a));
  }
  for (const auto& [name, ext] : interp.roles())
    for (std::size_t a = 0; a < ext.successors.size(); ++a)
      for (int c : ext.successors[a]) b.add_role_fact(name, interp.element(static_cast<int>(a)), interp.element(c));
  return b.build();
}

bool TypeTable::type_contains(int type, int concept_index) const {
  const auto& t = types[static_cast<std::size_t>(type)];
  return std::binary_search(t.begin(), t.end(), concept_index);
}

TypeTable compute_types(const Interpretation& interp) {
  TypeTable table;
  std::vector<const ElementSet*> exts;
  for (const auto& [name, ext] : interp.concepts()) {
    table.concept_names.push_back(name);
    exts.push_back(&ext);
  }
  const std::size_t n = interp.domain_size();
  std::vector<std::vector<int>> per_element(n);
  for (std::size_t c = 0; c < exts.size(); ++c)
    for (int a : exts[c]->members()) per_element[static_cast<std::size_t>(a)].push_back(static_cast<int>(c));

  std::set<std::vector<int>> distinct(per_element.begin(), per_element.end());
  table.types.assign(distinct.begin(), distinct.end());
  table.type_of.resize(n);
  for (std::size_t a = 0; a < n; ++a) {
    auto it = std::lower_bound(table.types.begin(), table.types.end(), per_element[a]);
    table.type_of[a] = static_cast<int>(it - table.types.begin());
  }
  return table;
}

}  // namespace alcfit
