#include <gtest/gtest.h>

#include <algorithm>
#include <set>
#include <string>

#include "fixtures.hpp"
#include "rrs/statements.hpp"

namespace rrs {
namespace {

using testing::fixture;

struct Tally {
  std::size_t holds = 0;
  std::size_t fails = 0;
  std::size_t not_applicable = 0;
};

Tally tally(const PropertyReport& r) {
  Tally t;
  for (const StatementResult& s : r.items()) {
    switch (s.status) {
      case Status::holds:
        ++t.holds;
        break;
      case Status::fails:
        ++t.fails;
        break;
      case Status::not_applicable:
        ++t.not_applicable;
        break;
    }
  }
  return t;
}

TEST(Catalog, IdsAreUniqueAndResolvable) {
  std::set<std::string_view> seen;
  for (const StatementInfo& s : statement_catalog()) {
    EXPECT_TRUE(seen.insert(s.id).second) << s.id;
    EXPECT_EQ(find_statement(s.id), &s);
    EXPECT_FALSE(s.formula.empty()) << s.id;
  }
  EXPECT_EQ(find_statement("no.such.statement"), nullptr);
}

TEST(RunAll, ReportsOnlyCatalogIdsInCatalogOrder) {
  const PropertyReport r = run_all_statements(fixture("B2"));
  std::size_t last = 0;
  const auto& cat = statement_catalog();
  for (const StatementResult& s : r.items()) {
    const StatementInfo* info = find_statement(s.id);
    ASSERT_NE(info, nullptr) << s.id;
    const auto pos = static_cast<std::size_t>(info - cat.data());
    EXPECT_GE(pos, last) << s.id;
    last = pos;
  }
}

// Frozen from the first full run; every statement either holds or is vacuous.
TEST(RunAll, FixtureTallies) {
  struct Expected {
    const char* name;
    std::size_t holds;
    std::size_t not_applicable;
  };
  for (const Expected& e : {Expected{"B2", 73, 0}, Expected{"G3", 71, 2}, Expected{"D5", 71, 2},
                            Expected{"P3", 54, 24}}) {
    const Tally t = tally(run_all_statements(fixture(e.name)));
    EXPECT_EQ(t.fails, 0U) << e.name;
    EXPECT_EQ(t.holds, e.holds) << e.name;
    EXPECT_EQ(t.not_applicable, e.not_applicable) << e.name;
  }
}

TEST(RunAll, FailuresCarryWitnesses) {
  Model m = fixture("B2");
  m.arrow.set(1, 0, 1);
  const PropertyReport r = run_all_statements(m);
  ASSERT_NE(r.first_failure(), nullptr);
  for (const StatementResult& s : r.items()) {
    if (s.status == Status::fails) {
      const StatementInfo* info = find_statement(s.id);
      const std::string vars(info->variables);
      const std::size_t arity = vars.empty() ? 0 : 1 + std::count(vars.begin(), vars.end(), ',');
      if (arity > 0) EXPECT_FALSE(s.witness.empty()) << s.id;
    }
  }
  EXPECT_EQ(r.status("rrs.residuation"), Status::fails);
}

TEST(Evaluate, SingleStatement) {
  const StatementResult r = evaluate_statement(fixture("G3"), "negation.double.i");
  EXPECT_EQ(r.id, "negation.double.i");
  const StatementResult d = evaluate_statement(fixture("D5"), "directoid.g");
  EXPECT_EQ(d.status, Status::holds);
  EXPECT_EQ(evaluate_statement(fixture("P3"), "rrs.antisym.i").status, Status::not_applicable);
  EXPECT_THROW(evaluate_statement(fixture("G3"), "no.such.statement"), Error);
}

TEST(Evaluate, AgreesWithRunAll) {
  for (const char* name : {"G3", "P3"}) {
    const Model m = fixture(name);
    const PropertyReport all = run_all_statements(m);
    for (const StatementResult& s : all.items()) {
      EXPECT_EQ(evaluate_statement(m, s.id).status, s.status) << name << " " << s.id;
    }
  }
}

TEST(RunAll, MalformedModelThrows) {
  Model m = fixture("B2");
  m.unit = 4;
  EXPECT_THROW(run_all_statements(m), Error);
}

}  // namespace
}  // namespace rrs
