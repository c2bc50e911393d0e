#pragma once

// Residuated relational systems with an absorbing constant 0 and the
// negation x' := x -> 0.  Every function here requires m.zero to be set and
// throws PreconditionError otherwise.

#include <optional>

#include "rrs/model.hpp"

namespace rrs {

PropertyReport check_zero_absorbing(const Model& m);

Element negate(const Model& m, Element x);

/// Lemma (0,y) in R plus the four basic negation facts; needs a reflexive
/// RRS whose zero is absorbing.
PropertyReport verify_zero_props(const Model& m);

/// 0 -> y = 1 for all y, and 0' = 1, 1' = 0, x*x' = 0; needs the relation
/// to be antisymmetric as well.
PropertyReport verify_antisym_zero_props(const Model& m);

PropertyReport verify_preorder_negation(const Model& m);

std::optional<Element> double_negation_violation(const Model& m);
bool satisfies_double_negation(const Model& m);

PropertyReport verify_double_negation_props(const Model& m);

}  // namespace rrs
