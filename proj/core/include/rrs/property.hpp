#pragma once

// A small identity language evaluated on finite models.
//
//   formula := conj [ ("=>" | "<=>") conj ]
//   conj    := atom { "&" atom }
//   atom    := term ("=" | "<=") term
//   term    := join [ "->" term ]          right associative, loosest
//   join    := prod { "|" prod }           left associative
//   prod    := post { "*" post }
//   post    := prim { "'" }                x' is x -> 0
//   prim    := variable | "1" | "0" | "(" term ")"
//
// Variables are single lowercase letters, universally quantified.  "t <= s"
// means t|s = s when the model has a join table and (t,s) in R otherwise.
// The Unicode spellings of the operators are accepted as well.

#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rrs/model.hpp"

namespace rrs {

class ParseError : public Error {
 public:
  using Error::Error;
};

class Property {
 public:
  /// Throws ParseError on malformed input.
  static Property parse(std::string_view text);

  /// Quantified variables in alphabetical order; witnesses follow this order.
  const std::vector<char>& variables() const noexcept { return vars_; }
  bool uses_join() const noexcept { return uses_join_; }
  bool uses_zero() const noexcept { return uses_zero_; }
  const std::string& text() const noexcept { return text_; }

  /// First assignment, in lexicographic order, under which the formula is
  /// false.  Throws PreconditionError if the model lacks a join or zero the
  /// formula mentions.
  std::optional<std::vector<Element>> find_violation(const Model& m) const;
  bool holds(const Model& m) const { return !find_violation(m); }

  struct Node;

 private:
  std::string text_;
  std::vector<char> vars_;
  bool uses_join_ = false;
  bool uses_zero_ = false;
  std::shared_ptr<const Node> root_;
};

}  // namespace rrs
