#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rrs/directoid.hpp"
#include "rrs/negation.hpp"
#include "rrs/search.hpp"

namespace rrs {
namespace {

using testing::fixture;

TEST(Zero, Absorbing) {
  EXPECT_TRUE(check_zero_absorbing(fixture("B2")).all_hold());
  EXPECT_TRUE(check_zero_absorbing(fixture("D5")).all_hold());
  Model g3 = fixture("G3");
  g3.zero = 1;
  const PropertyReport r = check_zero_absorbing(g3);
  EXPECT_EQ(r.status("zero.absorbing"), Status::fails);
  // 1*0 = 0 is the first product that escapes 1.
  EXPECT_EQ(r.find("zero.absorbing")->witness, (std::vector<Element>{0}));
}

TEST(Zero, MissingConstantIsAPreconditionError) {
  EXPECT_THROW(check_zero_absorbing(fixture("P3")), PreconditionError);
  EXPECT_THROW(negate(fixture("P3"), 0), PreconditionError);
  EXPECT_THROW(double_negation_violation(fixture("M1")), PreconditionError);
}

TEST(Negate, Values) {
  const Model b2 = fixture("B2");
  EXPECT_EQ(negate(b2, 0), 1);
  EXPECT_EQ(negate(b2, 1), 0);
  const Model g3 = fixture("G3");
  EXPECT_EQ(negate(g3, 1), 0);
  EXPECT_EQ(negate(g3, 0), 2);
  EXPECT_EQ(negate(g3, 2), 0);
  EXPECT_THROW(negate(g3, 3), std::out_of_range);
}

TEST(DoubleNegation, Examples) {
  EXPECT_TRUE(satisfies_double_negation(fixture("B2")));
  EXPECT_EQ(double_negation_violation(fixture("G3")), std::optional<Element>(1));
  Model m1 = fixture("M1");
  m1.zero = 0;
  EXPECT_TRUE(satisfies_double_negation(m1));
  EXPECT_TRUE(verify_double_negation_props(fixture("B2")).all_hold());
  // The hypothesis x'' = x fails on G3, so both statements are vacuous there.
  EXPECT_TRUE(verify_double_negation_props(fixture("G3")).ok());
}

TEST(ZeroProps, Fixtures) {
  for (const char* name : {"B2", "G3", "D5"}) {
    const Model m = fixture(name);
    EXPECT_TRUE(verify_zero_props(m).all_hold()) << name;
    EXPECT_TRUE(verify_antisym_zero_props(m).all_hold()) << name;
    EXPECT_TRUE(verify_preorder_negation(m).all_hold()) << name;
  }
}

// Triple negation collapses to single negation up to theta in every
// pre-ordered system with zero, checked directly on the tables.
TEST(ZeroProps, EveryPreorderedSystemWithZero) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_model({n, ModelClass::rrs_with_zero, true, std::nullopt}, [](const Model& m) {
      EXPECT_TRUE(verify_zero_props(m).ok());
      EXPECT_TRUE(verify_antisym_zero_props(m).ok());
      EXPECT_TRUE(verify_preorder_negation(m).ok());
      EXPECT_TRUE(verify_double_negation_props(m).ok());
      if (is_preorder(m.rel)) {
        const ThetaPartition t = theta(m);
        for (Element x = 0; x < m.size; ++x) {
          EXPECT_TRUE(t.same(negate(m, negate(m, negate(m, x))), negate(m, x)));
          EXPECT_TRUE(m.rel.holds(*m.zero, x));
        }
      }
      return !::testing::Test::HasFailure();
    });
  }
}

}  // namespace
}  // namespace rrs
