#include "alcfit/oracle.hpp"

#include "alcfit/error.hpp"
#include "alcfit/semantics.hpp"

namespace alcfit {

namespace {

struct Enumerator {
  OperatorSet ops;
  const Signature& sigma;
  Enumeration mode;

  // Produces all concepts of size k into `emit`; false means stop.
  bool gen(int k, const std::function<bool(const Concept&)>& emit) const {
    if (k == 1) {
      if (!emit(Concept::top()) || !emit(Concept::bot())) return false;
      for (const auto& a : sigma.concept_names)
        if (!emit(Concept::name(a))) return false;
      return true;
    }
    if (ops.contains(Op::neg) && !gen(k - 1, [&](const Concept& c) { return emit(Concept::negation(c)); }))
      return false;
    for (auto [op, kind] : {std::pair{Op::exists, ConceptKind::exists}, std::pair{Op::forall, ConceptKind::forall}}) {
      if (!ops.contains(op)) continue;
      for (const auto& r : sigma.role_names)
        if (!gen(k - 1, [&](const Concept& c) { return emit(Concept::make(kind, r, &c, nullptr)); })) return false;
    }
    for (auto [op, kind] : {std::pair{Op::conj, ConceptKind::conj}, std::pair{Op::disj, ConceptKind::disj}}) {
      if (!ops.contains(op)) continue;
      for (int left = 1; left <= k - 2; ++left) {
        const int right = k - 1 - left;
        if (mode == Enumeration::commutative && left > right) continue;
        bool ok = gen(left, [&](const Concept& l) {
          return gen(right, [&](const Concept& r) {
            if (mode == Enumeration::commutative && left == right && r < l) return true;
            return emit(Concept::make(kind, {}, &l, &r));
          });
        });
        if (!ok) return false;
      }
    }
    return true;
  }
};

}  // namespace

void for_each_concept(OperatorSet ops, const Signature& sigma, int k, const std::function<bool(const Concept&)>& visit,
                      Enumeration mode) {
  if (k < 1) throw ConfigError("concept size must be at least 1");
  Enumerator e{ops, sigma, mode};
  e.gen(k, visit);
}

std::vector<Concept> enumerate_concepts(OperatorSet ops, const Signature& sigma, int k, Enumeration mode) {
  std::vector<Concept> out;
  for_each_concept(
      ops, sigma, k,
      [&](const Concept& c) {
        out.push_back(c);
        return true;
      },
      mode);
  return out;
}

ExtensionTable::ExtensionTable(const Interpretation& interp, OperatorSet ops, const Signature& sigma)
    : interp_(interp), ops_(ops), sigma_(sigma) {}

ExtensionTable::ExtensionTable(const Interpretation& interp, OperatorSet ops)
    : ExtensionTable(interp, ops, interp.signature()) {}

const std::unordered_map<ElementSet, Concept, ElementSetHash>& ExtensionTable::of_size(int k) {
  if (k < 1) throw ConfigError("concept size must be at least 1");
  while (static_cast<int>(by_size_.size()) < k) grow();
  return by_size_[static_cast<std::size_t>(k - 1)];
}

void ExtensionTable::grow() {
  const int k = static_cast<int>(by_size_.size()) + 1;
  const std::size_t n = interp_.domain_size();
  std::unordered_map<ElementSet, Concept, ElementSetHash> cur;
  auto put = [&](ElementSet ext, const Concept& c) { cur.try_emplace(std::move(ext), c); };

  if (k == 1) {
    put(ElementSet::full(n), Concept::top());
    put(ElementSet(n), Concept::bot());
    for (const auto& a : sigma_.concept_names) {
      const auto* ext = interp_.concept_extension(a);
      put(ext ? *ext : ElementSet(n), Concept::name(a));
    }
    by_size_.push_back(std::move(cur));
    return;
  }

  const auto& prev = by_size_[static_cast<std::size_t>(k - 2)];
  if (ops_.contains(Op::neg))
    for (const auto& [ext, c] : prev) put(ext.complement(), Concept::negation(c));
  for (const auto& r : sigma_.role_names) {
    const auto* role = interp_.role_extension(r);
    for (const auto& [ext, c] : prev) {
      if (ops_.contains(Op::exists)) put(exists_preimage(role, ext), Concept::exists(r, c));
      if (ops_.contains(Op::forall))
        put(exists_preimage(role, ext.complement()).complement(), Concept::forall(r, c));
    }
  }
  if (ops_.contains(Op::conj) || ops_.contains(Op::disj))
    for (int left = 1; left <= k - 2; ++left) {
      const int right = k - 1 - left;
      if (left > right) break;  // both operations are commutative on extensions
      const auto& ls = by_size_[static_cast<std::size_t>(left - 1)];
      const auto& rs = by_size_[static_cast<std::size_t>(right - 1)];
      for (const auto& [le, lc] : ls)
        for (const auto& [re, rc] : rs) {
          if (ops_.contains(Op::conj)) put(le & re, Concept::conjunction(lc, rc));
          if (ops_.contains(Op::disj)) put(le | re, Concept::disjunction(lc, rc));
        }
    }
  by_size_.push_back(std::move(cur));
}

namespace {

bool extension_fits(const ElementSet& ext, const Sample& s) {
  for (int a : s.positives())
    if (!ext.test(static_cast<std::size_t>(a))) return false;
  for (int b : s.negatives())
    if (ext.test(static_cast<std::size_t>(b))) return false;
  return true;
}

}  // namespace

std::optional<Concept> fitting_of_size(const Sample& sample, OperatorSet ops, int k) {
  ExtensionTable table(sample.interpretation(), ops);
  for (const auto& [ext, c] : table.of_size(k))
    if (extension_fits(ext, sample)) return c;
  return std::nullopt;
}

std::optional<std::pair<Concept, int>> brute_force_fit(const Sample& sample, OperatorSet ops, int k_max) {
  ExtensionTable table(sample.interpretation(), ops);
  for (int k = 1; k <= k_max; ++k)
    for (const auto& [ext, c] : table.of_size(k))
      if (extension_fits(ext, sample)) return std::pair{c, k};
  return std::nullopt;
}

std::pair<int, Concept> max_coverage(const Sample& sample, OperatorSet ops, int k) {
  ExtensionTable table(sample.interpretation(), ops);
  int best = -1;
  std::optional<Concept> witness;
  for (int s = 1; s <= k; ++s)
    for (const auto& [ext, c] : table.of_size(s)) {
      const int cov = coverage_of(ext, sample);
      if (cov > best) {
        best = cov;
        witness = c;
      }
    }
  return {best, *witness};
}

}  // namespace alcfit
