#pragma once

// The residuated relational system model: a commutative multiplication with
// unit, its residuum, and a binary relation R, plus the optional constant 0
// and quasi-join table used by the richer structures.  Axioms are checked by
// functions, never enforced by the type, so search can hold candidates that
// fail them.

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "rrs/relation.hpp"
#include "rrs/report.hpp"

namespace rrs {

/// An n*n table for a binary operation, entries in 0..n-1.
class OpTable {
 public:
  OpTable() = default;
  explicit OpTable(std::size_t size, Element fill = 0);

  /// Row-major entries; throws Error if any entry is outside the carrier.
  static OpTable from_entries(std::size_t size, std::span<const int> entries);

  template <class F>
  static OpTable from_function(std::size_t size, F&& f) {
    OpTable t(size);
    for (std::size_t x = 0; x < size; ++x) {
      for (std::size_t y = 0; y < size; ++y) {
        t.set(static_cast<Element>(x), static_cast<Element>(y),
              static_cast<Element>(f(static_cast<Element>(x), static_cast<Element>(y))));
      }
    }
    return t;
  }

  std::size_t size() const noexcept { return size_; }
  Element operator()(Element x, Element y) const noexcept { return entries_[x * size_ + y]; }
  void set(Element x, Element y, Element value);
  std::span<const Element> entries() const noexcept { return entries_; }

  friend bool operator==(const OpTable&, const OpTable&) = default;

 private:
  std::size_t size_ = 0;
  std::vector<Element> entries_;
};

struct Model {
  std::size_t size = 0;
  OpTable mul;
  OpTable arrow;
  Element unit = 0;
  BinRel rel;
  std::optional<Element> zero;
  std::optional<OpTable> join;

  /// Throws Error unless every table has the carrier's size and every
  /// designated constant lies in the carrier.
  void validate_shape() const;

  friend bool operator==(const Model&, const Model&) = default;
};

// Boolean fast paths used by enumeration.
bool is_commutative_monoid(const OpTable& mul, Element unit) noexcept;
bool satisfies_residuation(const Model& m) noexcept;

PropertyReport check_commutative_monoid(const Model& m);
PropertyReport check_unit_top(const Model& m);
PropertyReport check_residuation(const Model& m);
bool is_rrs(const Model& m);

/// U_R(a,b) = { c : (a,c) in R and (b,c) in R }; upper_cone(m,a,a) is U_R(a).
SubsetMask upper_cone(const Model& m, Element a, Element b);

/// Supremal elements for a subset Z: every k with (z,k) in R for all z in Z
/// such that every other common upper bound w satisfies (k,w) in R.
/// Throws PreconditionError for empty Z.
SubsetMask supremal_elements(const Model& m, const SubsetMask& z_set);

/// Pairwise form: w in U_R(a,b) with (w,z) in R for every z in U_R(a,b), z != w.
SubsetMask supremal_elements_for_pair(const Model& m, Element a, Element b);

PropertyReport verify_basic_props(const Model& m);
PropertyReport verify_antisym_props(const Model& m);
PropertyReport verify_reflexive_props(const Model& m);

}  // namespace rrs
