#include "alcfit/semantics.hpp"

namespace alcfit {

ElementSet exists_preimage(const RoleExtension* role, const ElementSet& target) {
  ElementSet out(target.universe());
  if (!role) return out;
  for (std::size_t a = 0; a < role->successors.size(); ++a)
    for (int b : role->successors[a])
      if (target.test(static_cast<std::size_t>(b))) {
        out.set(a);
        break;
      }
  return out;
}

ElementSet evaluate(const Concept& c, const Interpretation& interp) {
  const std::size_t n = interp.domain_size();
  switch (c.kind()) {
    case ConceptKind::top: return ElementSet::full(n);
    case ConceptKind::bot: return ElementSet(n);
    case ConceptKind::name: {
      const ElementSet* ext = interp.concept_extension(c.symbol());
      return ext ? *ext : ElementSet(n);
    }
    case ConceptKind::neg: return evaluate(c.child(), interp).complement();
    case ConceptKind::conj: return evaluate(c.left(), interp) & evaluate(c.right(), interp);
    case ConceptKind::disj: return evaluate(c.left(), interp) | evaluate(c.right(), interp);
    case ConceptKind::exists: return exists_preimage(interp.role_extension(c.symbol()), evaluate(c.child(), interp));
    case ConceptKind::forall:
      return exists_preimage(interp.role_extension(c.symbol()), evaluate(c.child(), interp).complement())
          .complement();
  }
  return ElementSet(n);
}

int coverage_of(const ElementSet& extension, const Sample& sample) {
  int covered = 0;
  for (int a : sample.positives()) covered += extension.test(static_cast<std::size_t>(a)) ? 1 : 0;
  for (int b : sample.negatives()) covered += extension.test(static_cast<std::size_t>(b)) ? 0 : 1;
  return covered;
}

bool fits(const Concept& c, const Sample& sample) {
  return coverage_of(evaluate(c, sample.interpretation()), sample) == static_cast<int>(sample.example_count());
}

}  // namespace alcfit
