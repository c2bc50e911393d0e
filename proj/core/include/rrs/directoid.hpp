#pragma once

// Pre-ordered residuated systems and their algebraic counterpart, residuated
// quasi-directoids: the quasi-join construction, the induced pre-order
// x <= y iff x|y = y, the equivalence theta, quotients, and the equational
// form of residuation.

#include <cstddef>
#include <vector>

#include "rrs/model.hpp"

namespace rrs {

/// A model viewed as an algebra <A, *, ->, |, 1>.  The join table is
/// mandatory; the relation field is carried along but the equational checks
/// never read it.
class QuasiDirectoid {
 public:
  /// Throws PreconditionError when m has no join table.
  explicit QuasiDirectoid(Model m);

  const Model& model() const noexcept { return model_; }
  const OpTable& join() const noexcept { return *model_.join; }
  std::size_t size() const noexcept { return model_.size; }

  /// x <= y in the induced pre-order.
  bool below(Element x, Element y) const noexcept { return join()(x, y) == y; }

  friend bool operator==(const QuasiDirectoid&, const QuasiDirectoid&) = default;

 private:
  Model model_;
};

struct ThetaPartition {
  std::vector<std::size_t> class_of;
  std::size_t count = 0;

  bool same(Element x, Element y) const noexcept { return class_of[x] == class_of[y]; }
  /// Members of each class; classes ordered by their least member.
  std::vector<std::vector<Element>> classes() const;

  friend bool operator==(const ThetaPartition&, const ThetaPartition&) = default;
};

bool is_preordered_rrs(const Model& m);

PropertyReport verify_preorder_arithmetic(const Model& m);

/// Reports conditions (a)-(d) of the characterization of pre-ordered
/// residuated systems, and whether their conjunction agrees with
/// is_preordered_rrs on this model ("characterization.equivalence").
PropertyReport check_characterization(const Model& m);

/// Admissible values of x|y: {y} if x <= y, else {x} if y <= x, else the
/// upper cone U(x,y).  Throws PreconditionError unless m is pre-ordered.
SubsetMask quasi_join_candidates(const Model& m, Element x, Element y);

/// Every quasi-join table admitted by quasi_join_candidates, with the same
/// choice for x|y and y|x on incomparable pairs.  Sorted by join table.
std::vector<QuasiDirectoid> build_quasi_directoids(const Model& m);

/// Product of |U(x,y)| over unordered incomparable pairs.
std::size_t count_quasi_directoids(const Model& m);

// Fast boolean forms for enumeration.
bool satisfies_quasi_directoid_axioms(const OpTable& join) noexcept;
bool satisfies_axiom_g(const Model& m) noexcept;
bool satisfies_residuation_identities(const Model& m) noexcept;

PropertyReport is_quasi_directoid(const QuasiDirectoid& q);
PropertyReport is_residuated_quasi_directoid(const QuasiDirectoid& q);

BinRel induced_relation(const QuasiDirectoid& q);

/// The model with rel replaced by the induced pre-order.  Throws
/// PreconditionError unless q is a residuated quasi-directoid.
Model induced_system(const QuasiDirectoid& q);

/// For every supremal element k of Z, checks that a*k is supremal for aZ.
PropertyReport check_supremal_multiplication(const Model& m, const SubsetMask& z_set, Element a);

/// theta from the relation (when it is a pre-order) and/or from the join
/// table (when present); the two views must agree.
ThetaPartition theta(const Model& m);

PropertyReport is_theta_congruence(const QuasiDirectoid& q);

/// A/theta with operations taken from class representatives (the least
/// member) and order [a] <= [b] iff a <= b.  Throws PreconditionError when
/// theta is not a congruence of the join reduct or p is not theta(q).
Model quotient(const QuasiDirectoid& q, const ThetaPartition& p);

PropertyReport is_pocrim(const Model& m);

PropertyReport check_residuation_identities(const QuasiDirectoid& q);

/// For q satisfying every directoid axiom except g: reports g, the six
/// identities, and whether the two agree ("equational.equivalence").
PropertyReport check_equational_equivalence(const QuasiDirectoid& q);

}  // namespace rrs
