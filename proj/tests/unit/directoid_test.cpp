#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "rrs/canonical.hpp"
#include "rrs/directoid.hpp"
#include "rrs/search.hpp"

namespace rrs {
namespace {

using testing::fixture;

Model with_join(Model m, std::initializer_list<int> join) {
  const std::vector<int> entries(join);
  m.join = OpTable::from_entries(m.size, entries);
  return m;
}

TEST(QuasiDirectoid, RequiresJoin) {
  EXPECT_THROW(QuasiDirectoid(fixture("B2")), PreconditionError);
}

TEST(QuasiJoinCandidates, Examples) {
  const Model p3 = fixture("P3");
  EXPECT_EQ(quasi_join_candidates(p3, 0, 1), SubsetMask::of(3, {1}));
  EXPECT_EQ(quasi_join_candidates(p3, 1, 0), SubsetMask::of(3, {0}));
  const Model d5 = fixture("D5");
  EXPECT_EQ(quasi_join_candidates(d5, 1, 2), SubsetMask::of(5, {3, 4}));
  EXPECT_EQ(quasi_join_candidates(d5, 0, 3), SubsetMask::of(5, {3}));
  Model broken = fixture("B2");
  broken.rel = BinRel::empty(2);
  EXPECT_THROW(quasi_join_candidates(broken, 0, 1), PreconditionError);
}

TEST(BuildQuasiDirectoids, FixtureCounts) {
  const auto p3 = build_quasi_directoids(fixture("P3"));
  ASSERT_EQ(p3.size(), 1U);
  EXPECT_EQ(p3[0].join()(0, 1), 1);
  EXPECT_EQ(p3[0].join()(1, 0), 0);
  EXPECT_EQ(build_quasi_directoids(fixture("G3")).size(), 1U);
  EXPECT_EQ(build_quasi_directoids(fixture("D5")).size(), 2U);
  EXPECT_EQ(count_quasi_directoids(fixture("D5")), 2U);
  EXPECT_EQ(count_quasi_directoids(fixture("M1")), 1U);
}

TEST(Axioms, FirstProjectionFailsB) {
  const QuasiDirectoid q(with_join(fixture("B2"), {0, 0, 1, 1}));
  const PropertyReport r = is_quasi_directoid(q);
  EXPECT_EQ(r.status("directoid.a"), Status::holds);
  EXPECT_EQ(r.status("directoid.b"), Status::fails);
  EXPECT_EQ(r.find("directoid.b")->witness, (std::vector<Element>{0, 1}));
  EXPECT_FALSE(satisfies_quasi_directoid_axioms(q.join()));
}

TEST(Axioms, BuiltDirectoidsAreResiduated) {
  for (const char* name : {"M1", "B2", "G3", "P3", "D5"}) {
    const Model m = fixture(name);
    for (const QuasiDirectoid& q : build_quasi_directoids(m)) {
      EXPECT_TRUE(is_residuated_quasi_directoid(q).all_hold()) << name;
      EXPECT_EQ(induced_relation(q), m.rel) << name;
      EXPECT_TRUE(satisfies_axiom_g(q.model()));
      EXPECT_TRUE(satisfies_residuation_identities(q.model()));
    }
  }
}

// Round trip in both directions over every pre-ordered system of size <= 3.
TEST(Axioms, RoundTripsSmallSystems) {
  for (std::size_t n = 1; n <= 3; ++n) {
    for_each_model({n, ModelClass::preordered_rrs, true, std::nullopt}, [](const Model& m) {
      for (const QuasiDirectoid& q : build_quasi_directoids(m)) {
        EXPECT_EQ(induced_system(q).rel, m.rel);
      }
      return !::testing::Test::HasFailure();
    });
    for_each_model({n, ModelClass::residuated_quasi_directoid, true, std::nullopt},
                   [](const Model& m) {
                     const QuasiDirectoid q(m);
                     const Model s = induced_system(q);
                     EXPECT_TRUE(is_preordered_rrs(s));
                     EXPECT_EQ(s.rel, induced_relation(q));
                     // The built family is narrower than the class: a join
                     // may send a strictly comparable pair above both.
                     for (const QuasiDirectoid& r : build_quasi_directoids(s)) {
                       EXPECT_EQ(induced_relation(r), s.rel);
                     }
                     return !::testing::Test::HasFailure();
                   });
  }
}

TEST(Characterization, Examples) {
  EXPECT_TRUE(check_characterization(fixture("P3")).all_hold());
  Model m = fixture("B2");
  m.arrow.set(1, 0, 1);
  const PropertyReport r = check_characterization(m);
  EXPECT_EQ(r.status("characterization.d"), Status::fails);
  EXPECT_EQ(r.find("characterization.d")->witness, (std::vector<Element>{1, 0}));
  EXPECT_EQ(r.status("characterization.equivalence"), Status::holds);
}

TEST(PreorderArithmetic, HoldsOnFixtures) {
  for (const char* name : {"M1", "B2", "G3", "P3", "D5"}) {
    EXPECT_TRUE(verify_preorder_arithmetic(fixture(name)).all_hold()) << name;
  }
}

TEST(SupremalMultiplication, Lattice) {
  const Model d5 = fixture("D5");
  for (Element a = 0; a < 5; ++a) {
    EXPECT_TRUE(check_supremal_multiplication(d5, SubsetMask::of(5, {1, 2}), a).ok());
  }
  EXPECT_THROW(check_supremal_multiplication(d5, SubsetMask::of(5, {1}), 7), std::out_of_range);
}

TEST(Theta, P3) {
  const Model p3 = fixture("P3");
  const ThetaPartition t = theta(p3);
  EXPECT_EQ(t.count, 2U);
  EXPECT_EQ(t.classes(), (std::vector<std::vector<Element>>{{0, 1}, {2}}));
  EXPECT_TRUE(t.same(0, 1));
  EXPECT_FALSE(t.same(1, 2));
  const QuasiDirectoid q = build_quasi_directoids(p3).front();
  EXPECT_EQ(theta(q.model()), t);
  EXPECT_TRUE(is_theta_congruence(q).all_hold());
}

TEST(Theta, DiscreteOnPartialOrders) {
  for (const char* name : {"B2", "G3", "D5"}) {
    const Model m = fixture(name);
    EXPECT_EQ(theta(m).count, m.size) << name;
  }
}

TEST(Quotient, P3IsTwoElementBooleanSystem) {
  const QuasiDirectoid q = build_quasi_directoids(fixture("P3")).front();
  const Model quo = quotient(q, theta(q.model()));
  const Model b2 = fixture("B2");
  ASSERT_EQ(quo.size, 2U);
  EXPECT_EQ(quo.unit, b2.unit);
  EXPECT_EQ(quo.mul, b2.mul);
  EXPECT_EQ(quo.arrow, b2.arrow);
  EXPECT_EQ(quo.rel, b2.rel);
  EXPECT_TRUE(is_pocrim(quo).all_hold());
  Model stripped = quo;
  stripped.zero = b2.zero;
  stripped.join.reset();
  EXPECT_TRUE(isomorphic(stripped, b2));
}

TEST(Quotient, RejectsForeignPartition) {
  const QuasiDirectoid q = build_quasi_directoids(fixture("P3")).front();
  ThetaPartition p;
  p.class_of = {0, 1, 2};
  p.count = 3;
  EXPECT_THROW(quotient(q, p), PreconditionError);
}

TEST(Pocrim, Examples) {
  EXPECT_TRUE(is_pocrim(fixture("B2")).all_hold());
  EXPECT_TRUE(is_pocrim(fixture("D5")).all_hold());
  const PropertyReport p3 = is_pocrim(fixture("P3"));
  EXPECT_FALSE(p3.ok());
  EXPECT_EQ(p3.status("pocrim.antisymmetric"), Status::fails);
  EXPECT_EQ(p3.find("pocrim.antisymmetric")->witness, (std::vector<Element>{0, 1}));
}

TEST(Equational, IdentitiesOnFixtures) {
  for (const char* name : {"B2", "G3", "P3", "D5"}) {
    for (const QuasiDirectoid& q : build_quasi_directoids(fixture(name))) {
      EXPECT_TRUE(check_residuation_identities(q).all_hold()) << name;
      EXPECT_TRUE(check_equational_equivalence(q).all_hold()) << name;
    }
  }
}

TEST(Equational, BrokenArrowFailsBoth) {
  QuasiDirectoid good = build_quasi_directoids(fixture("B2")).front();
  Model m = good.model();
  m.arrow.set(1, 0, 1);
  const QuasiDirectoid q(m);
  const PropertyReport r = check_equational_equivalence(q);
  EXPECT_EQ(r.status("equational.g"), Status::fails);
  EXPECT_EQ(r.status("equational.identities"), Status::fails);
  EXPECT_EQ(r.status("equational.equivalence"), Status::holds);
}

}  // namespace
}  // namespace rrs
