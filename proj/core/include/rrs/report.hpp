#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "rrs/relation.hpp"

namespace rrs {

enum class Status { holds, fails, not_applicable };

std::string_view to_string(Status s) noexcept;

/// Outcome of one named statement.  A witness is recorded exactly when the
/// statement fails; it instantiates the statement's quantified variables in
/// order and is the first violation in lexicographic scan order.
struct StatementResult {
  std::string id;
  Status status = Status::holds;
  std::vector<Element> witness;
  std::string note;
};

class PropertyReport {
 public:
  void add_holds(std::string id);
  void add_fails(std::string id, std::vector<Element> witness);
  void add_not_applicable(std::string id, std::string reason);
  void add(StatementResult r);
  void append(const PropertyReport& other);

  const std::vector<StatementResult>& items() const noexcept { return items_; }
  const StatementResult* find(std::string_view id) const noexcept;
  Status status(std::string_view id) const;

  /// Nothing failed.  Not-applicable statements do not count against this.
  bool ok() const noexcept;
  /// Every statement holds (none failed, none skipped).
  bool all_hold() const noexcept;
  bool any_not_applicable() const noexcept;
  const StatementResult* first_failure() const noexcept;

 private:
  std::vector<StatementResult> items_;
};

}  // namespace rrs
