#pragma once

// Canonical forms by brute-force permutation minimization.  A model's key is
//
//   [n, unit, has_zero, zero, has_join, mul..., rel..., join..., arrow...]
//
// (tables row-major, relation as 0/1).  The canonical form is the least key
// over all relabelings of the carrier, constants relabeled with it, so two
// models share a canonical form iff a constant-preserving bijection maps one
// onto the other.

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "rrs/model.hpp"

namespace rrs {

inline constexpr std::size_t kMaxCanonicalSize = 8;

using Permutation = std::vector<Element>;

struct CanonicalForm {
  std::vector<std::uint8_t> key;

  friend auto operator<=>(const CanonicalForm&, const CanonicalForm&) = default;
  friend bool operator==(const CanonicalForm&, const CanonicalForm&) = default;
};

std::vector<std::uint8_t> serialize(const Model& m);

/// The model relabeled by x -> perm[x].
Model permute(const Model& m, std::span<const Element> perm);

/// All n! permutations in lexicographic order, identity first.
std::vector<Permutation> all_permutations(std::size_t n);

/// Throws Error for n > kMaxCanonicalSize.
CanonicalForm canonicalize(const Model& m);

/// The relabeling of m whose key is the canonical form.
Model canonical_model(const Model& m);

bool isomorphic(const Model& a, const Model& b);

}  // namespace rrs
