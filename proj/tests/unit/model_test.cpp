#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rrs/directoid.hpp"
#include "rrs/model.hpp"
#include "rrs/search.hpp"

namespace rrs {
namespace {

using testing::fixture;

std::vector<Element> witness(const PropertyReport& r, std::string_view id) {
  const StatementResult* s = r.find(id);
  EXPECT_NE(s, nullptr) << id;
  return s == nullptr ? std::vector<Element>{} : s->witness;
}

// Independent least-upper-bound computation on a partial order.
std::optional<Element> lub(const BinRel& le, const SubsetMask& z) {
  std::vector<Element> ub;
  for (Element c = 0; c < le.size(); ++c) {
    bool upper = true;
    for (Element x : z.elements()) upper = upper && le.holds(x, c);
    if (upper) ub.push_back(c);
  }
  for (Element c : ub) {
    bool least = true;
    for (Element d : ub) least = least && le.holds(c, d);
    if (least) return c;
  }
  return std::nullopt;
}

TEST(Fixtures, AllAreResiduatedSystems) {
  for (const char* name : {"M1", "B2", "G3", "P3", "D5"}) {
    const Model m = fixture(name);
    EXPECT_TRUE(is_rrs(m)) << name;
    EXPECT_TRUE(check_residuation(m).all_hold()) << name;
  }
}

TEST(Monoid, Examples) {
  EXPECT_TRUE(check_commutative_monoid(fixture("B2")).all_hold());
  EXPECT_TRUE(check_commutative_monoid(fixture("M1")).all_hold());
  Model m = fixture("B2");
  m.mul.set(0, 1, 1);
  const PropertyReport r = check_commutative_monoid(m);
  EXPECT_FALSE(r.ok());
  EXPECT_EQ(r.status("monoid.commutative"), Status::fails);
  EXPECT_EQ(witness(r, "monoid.commutative"), (std::vector<Element>{0, 1}));
}

TEST(UnitTop, Examples) {
  EXPECT_TRUE(check_unit_top(fixture("G3")).all_hold());
  EXPECT_TRUE(check_unit_top(fixture("P3")).all_hold());
  Model m = fixture("B2");
  m.rel.set(0, 1, false);
  const PropertyReport r = check_unit_top(m);
  EXPECT_EQ(r.status("rrs.unit_top"), Status::fails);
  EXPECT_EQ(witness(r, "rrs.unit_top"), (std::vector<Element>{0}));
}

TEST(Residuation, Examples) {
  EXPECT_TRUE(check_residuation(fixture("G3")).all_hold());
  EXPECT_TRUE(check_residuation(fixture("M1")).all_hold());
  Model m = fixture("B2");
  m.arrow = OpTable(2, 1);
  const PropertyReport r = check_residuation(m);
  EXPECT_EQ(witness(r, "rrs.residuation"), (std::vector<Element>{1, 1, 0}));
}

TEST(IsRrs, Examples) {
  EXPECT_TRUE(is_rrs(fixture("B2")));
  EXPECT_TRUE(is_rrs(fixture("P3")));
  Model m = fixture("B2");
  m.rel = BinRel::empty(2);
  EXPECT_FALSE(is_rrs(m));
}

TEST(UpperCone, Examples) {
  const Model d5 = fixture("D5");
  EXPECT_EQ(upper_cone(d5, 1, 2), SubsetMask::of(5, {3, 4}));
  EXPECT_EQ(upper_cone(fixture("M1"), 0, 0), SubsetMask::of(1, {0}));
  EXPECT_THROW(upper_cone(d5, 0, 5), std::out_of_range);
}

TEST(Supremal, Examples) {
  EXPECT_EQ(supremal_elements(fixture("G3"), SubsetMask::of(3, {0, 1})), SubsetMask::of(3, {1}));
  EXPECT_EQ(supremal_elements(fixture("D5"), SubsetMask::of(5, {1, 2})), SubsetMask::of(5, {3}));
  EXPECT_EQ(supremal_elements(fixture("P3"), SubsetMask::of(3, {0})), SubsetMask::of(3, {0, 1}));
  EXPECT_THROW(supremal_elements(fixture("P3"), SubsetMask(3)), PreconditionError);
}

TEST(Supremal, EqualsLeastUpperBoundOnLattices) {
  for (const char* name : {"B2", "G3", "D5"}) {
    const Model m = fixture(name);
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << m.size); ++bits) {
      const SubsetMask z(m.size, bits);
      const SubsetMask sup = supremal_elements(m, z);
      EXPECT_LE(sup.count(), 1U);
      const auto l = lub(m.rel, z);
      if (l) {
        EXPECT_EQ(sup, SubsetMask::of(m.size, {*l})) << name << " Z=" << bits;
      }
    }
  }
}

TEST(Statements, FixtureOutcomes) {
  for (const char* name : {"G3", "P3"}) {
    EXPECT_TRUE(verify_basic_props(fixture(name)).all_hold()) << name;
    EXPECT_TRUE(verify_reflexive_props(fixture(name)).all_hold()) << name;
  }
  EXPECT_TRUE(verify_reflexive_props(fixture("M1")).all_hold());
  EXPECT_TRUE(verify_antisym_props(fixture("B2")).all_hold());
  EXPECT_TRUE(verify_antisym_props(fixture("G3")).all_hold());
  const PropertyReport p3 = verify_antisym_props(fixture("P3"));
  EXPECT_EQ(p3.status("rrs.antisym.i"), Status::not_applicable);
  EXPECT_EQ(p3.status("rrs.antisym.ii"), Status::not_applicable);
}

TEST(Statements, NotApplicableOnNonSystems) {
  Model m = fixture("B2");
  m.rel = BinRel::empty(2);
  const PropertyReport r = verify_basic_props(m);
  EXPECT_TRUE(r.ok());
  EXPECT_FALSE(r.all_hold());
  EXPECT_EQ(r.status("rrs.basic.a"), Status::not_applicable);
}

// Every system of size <= 3 satisfies the basic, reflexive and antisymmetric
// statements whose hypotheses it meets.
TEST(Statements, HoldOnEveryEnumeratedSystem) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_model({n, ModelClass::rrs, true, std::nullopt}, [&](const Model& m) {
      EXPECT_TRUE(verify_basic_props(m).all_hold());
      EXPECT_TRUE(verify_reflexive_props(m).ok());
      EXPECT_TRUE(verify_antisym_props(m).ok());
      if (is_antisymmetric(m.rel)) {
        for (Element x = 0; x < n; ++x) {
          for (Element y = 0; y < n; ++y) {
            EXPECT_EQ(m.arrow(x, y) == m.unit, m.rel.holds(x, y));
          }
        }
      }
      for (Element a = 0; a < n; ++a) {
        for (Element b = 0; b < n; ++b) EXPECT_TRUE(upper_cone(m, a, b).contains(m.unit));
      }
      return !::testing::Test::HasFailure();
    });
  }
}

TEST(Json, RoundTripAndErrors) {
  const Model d5 = fixture("D5");
  EXPECT_EQ(model_from_json(to_json(d5)), d5);
  EXPECT_THROW(load_model(testing::fixture_path("missing")), Error);
  auto j = to_json(d5);
  j["mul"][3] = 9;
  EXPECT_THROW(model_from_json(j), Error);
  j = to_json(d5);
  j.erase("unit");
  EXPECT_THROW(model_from_json(j), Error);
}

}  // namespace
}  // namespace rrs
