#pragma once

// The catalog of named statements and a driver that runs every checker that
// applies to a model.

#include <string_view>
#include <vector>

#include "rrs/model.hpp"

namespace rrs {

struct StatementInfo {
  std::string_view id;
  /// Quantified variables in witness order, e.g. "x,y,z"; empty if none.
  std::string_view variables;
  std::string_view formula;
};

/// Every statement id, in report order.
const std::vector<StatementInfo>& statement_catalog();
const StatementInfo* find_statement(std::string_view id) noexcept;

/// Runs every checker on m.  Statements about the join are evaluated on the
/// model's join table when it has one; for a pre-ordered system without one
/// they are evaluated on every quasi-directoid built from it and fail if any
/// directoid fails.  Statements whose hypotheses do not hold are reported as
/// not-applicable.
PropertyReport run_all_statements(const Model& m);

/// Runs only the checker group that owns id.  Throws Error on unknown ids.
StatementResult evaluate_statement(const Model& m, std::string_view id);

}  // namespace rrs
