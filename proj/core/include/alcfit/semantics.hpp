#pragma once

#include "alcfit/concept.hpp"
#include "alcfit/element_set.hpp"
#include "alcfit/interpretation.hpp"
#include "alcfit/sample.hpp"

namespace alcfit {

/// Extension of `c` in `interp`, computed bottom-up over the whole domain.
/// Names unknown to the interpretation have empty extension.
ElementSet evaluate(const Concept& c, const Interpretation& interp);

/// Elements with at least one r-successor in `target`.
ElementSet exists_preimage(const RoleExtension* role, const ElementSet& target);

/// All positives inside the extension, all negatives outside.
bool fits(const Concept& c, const Sample& sample);

/// Number of correctly labeled examples for a given extension.
int coverage_of(const ElementSet& extension, const Sample& sample);

}  // namespace alcfit
