#include <gtest/gtest.h>

#include "infalg/order.hpp"
#include "suite.hpp"

using namespace infalg;

namespace {

FiniteLattice diamond_m3() {
  BoolTable t(5, std::vector<bool>(5, false));
  for (Index i = 0; i < 5; ++i) t[i][i] = t[0][i] = t[i][4] = true;
  return FiniteLattice::from_order(FinitePoset::from_table(t));
}

}  // namespace

TEST(VerifyPoset, SingletonIsValid) { EXPECT_TRUE(verify_poset({{true}}).empty()); }

TEST(VerifyPoset, AntisymmetryWitness) {
  auto v = verify_poset({{true, true}, {true, true}});
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].axiom, PosetViolation::Axiom::antisymmetry);
  EXPECT_EQ(v[0].witness, (std::vector<Index>{0, 1}));
}

TEST(VerifyPoset, ChainIsValid) {
  EXPECT_TRUE(verify_poset({{true, true, true}, {false, true, true}, {false, false, true}}).empty());
}

TEST(VerifyPoset, ReportsEachAxiom) {
  auto v = verify_poset({{false, true, false}, {false, true, true}, {false, false, true}});
  ASSERT_EQ(v.size(), 2u);
  EXPECT_EQ(v[0].axiom, PosetViolation::Axiom::reflexivity);
  EXPECT_EQ(v[1].axiom, PosetViolation::Axiom::transitivity);
  EXPECT_EQ(v[1].witness, (std::vector<Index>{0, 1, 2}));
}

TEST(VerifyPoset, NonSquareIsFormatError) { EXPECT_THROW(verify_poset({{true, false}}), FormatError); }

TEST(VerifyPoset, AgreesWithOracleOnAllRelationsOfThreePoints) {
  for (Index mask = 0; mask < (1u << 9); ++mask) {
    BoolTable t(3, std::vector<bool>(3));
    for (Index i = 0; i < 9; ++i) t[i / 3][i % 3] = (mask >> i) & 1;
    EXPECT_EQ(verify_poset(t).empty(), oracle::is_partial_order(t)) << mask;
  }
}

TEST(Semilattice, LubOnTwoChain) {
  auto sl = BoundedJoinSemilattice::from_order(FinitePoset::chain(2));
  EXPECT_EQ(lub(sl, sl.unit(), sl.zero()), sl.zero());
}

TEST(Semilattice, UnitIsNeutralEverywhere) {
  for (const auto& [name, a] : suite::generated())
    for (Index x = 0; x < a.size(); ++x) EXPECT_EQ(lub(a.semilattice(), x, a.unit()), x) << name;
}

TEST(Semilattice, OrderJoinCoherence) {
  for (const auto& [name, a] : suite::generated()) {
    const auto leq = oracle::leq_from_join(a.semilattice().join_table());
    for (Index x = 0; x < a.size(); ++x)
      for (Index y = 0; y < a.size(); ++y) {
        EXPECT_EQ(a.leq(x, y), leq[x][y]) << name;
        EXPECT_EQ(a.combine(x, y), *oracle::lub(leq, x, y)) << name;
      }
  }
}

TEST(Semilattice, RejectsNonAssociativeTable) {
  IndexTable join = {{0, 1, 2, 3}, {1, 1, 3, 3}, {2, 3, 2, 3}, {3, 3, 3, 3}};
  EXPECT_NO_THROW(BoundedJoinSemilattice::from_join_table(join, 0, 3));
  // 1v2 = 3, 2v3 = 3, 1v3 = 4: (1v2)v3 = 3 but 1v(2v3) = 4.
  IndexTable bad = {{0, 1, 2, 3, 4}, {1, 1, 3, 4, 4}, {2, 3, 2, 3, 4}, {3, 4, 3, 3, 4}, {4, 4, 4, 4, 4}};
  EXPECT_THROW(BoundedJoinSemilattice::from_join_table(bad, 0, 4), StructureError);
}

TEST(Semilattice, RejectsWrongUnit) {
  IndexTable join = {{0, 1}, {1, 1}};
  EXPECT_THROW(BoundedJoinSemilattice::from_join_table(join, 1, 1), StructureError);
}

TEST(Glb, StringCarrierLongestCommonPrefix) {
  auto a = gen_string(2, 2);
  auto ab = string_index(2, {0, 1});
  auto aa = string_index(2, {0, 0});
  EXPECT_EQ(glb(a.order(), ab, aa), string_index(2, {0}));
  const auto leq = suite::rel(a.order());
  for (Index x = 0; x < a.size(); ++x)
    for (Index y = 0; y < a.size(); ++y) EXPECT_EQ(glb(a.order(), x, y), oracle::glb(leq, x, y));
}

TEST(Glb, MissingMeetIsNone) {
  BoolTable t = {{true, false, true}, {false, true, true}, {false, false, true}};
  EXPECT_FALSE(glb(FinitePoset::from_table(t), 0, 1).has_value());
}

TEST(Distributive, Chains) {
  for (Index n = 1; n <= 6; ++n) EXPECT_TRUE(is_distributive(FiniteLattice::chain(n)));
}

TEST(Distributive, DiamondFailsWithWitness) {
  auto c = is_distributive(diamond_m3());
  EXPECT_FALSE(c);
  EXPECT_EQ(c.witness().size(), 3u);
}

TEST(Distributive, TruncatedStringLatticeFails) {
  auto a = gen_string(2, 2);
  EXPECT_EQ(a.size(), 8u);
  EXPECT_FALSE(is_distributive(a.lattice()));
}

TEST(Distributive, AgreesWithOracle) {
  for (const auto& [name, a] : suite::generated()) {
    if (a.size() > 40) continue;
    EXPECT_EQ(bool(is_distributive(a.lattice())), oracle::distributive(suite::rel(a.order()))) << name;
  }
}

TEST(Complements, TwoChain) {
  auto c = complements(FiniteLattice::chain(2));
  ASSERT_TRUE(c.complemented());
  EXPECT_EQ(c.map, (std::vector<Index>{1, 0}));
}

TEST(Complements, ThreeChainMiddleMissing) {
  auto c = complements(FiniteLattice::chain(3));
  EXPECT_FALSE(c.complemented());
  EXPECT_EQ(*c.missing, 1u);
}

TEST(Complements, PowerSetIsSetComplement) {
  auto s = gen_multivariate({2});
  auto c = complements(s.algebra().lattice());
  ASSERT_TRUE(c.complemented());
  for (Index x = 0; x < s.family().size(); ++x) EXPECT_EQ(s.member(c.map[x]), ~s.member(x));
  EXPECT_EQ(*oracle::complements(suite::rel(s.algebra().order())), c.map);
}

TEST(MeetIrreducibles, Examples) {
  EXPECT_EQ(meet_irreducibles(FiniteLattice::chain(3)), (std::vector<Index>{0, 1}));
  EXPECT_EQ(meet_irreducibles(FiniteLattice::chain(2)), (std::vector<Index>{0}));
  EXPECT_EQ(meet_irreducibles(suite::square_lattice()), (std::vector<Index>{1, 2}));
}

TEST(MeetIrreducibles, AgreeWithCoverOracle) {
  for (const auto& [name, a] : suite::generated())
    EXPECT_EQ(meet_irreducibles(a.lattice()), oracle::meet_irreducibles(suite::rel(a.order()))) << name;
}

TEST(MeetIrreducibles, BirkhoffCount) {
  for (const auto& [name, a] : suite::generated()) {
    const auto lat = a.lattice();
    if (!is_distributive(lat)) continue;
    EXPECT_EQ(up_sets(induced_order(lat.order(), meet_irreducibles(lat))).size(), a.size()) << name;
  }
}

TEST(UpSets, Examples) {
  EXPECT_EQ(up_sets(FinitePoset::chain(2)).size(), 3u);
  EXPECT_EQ(up_sets(FinitePoset::antichain(2)).size(), 4u);
  EXPECT_EQ(up_sets(FinitePoset::chain(3)).size(), 4u);
}

TEST(UpSets, AgreeWithOracleOnAllPosetsUpToFour) {
  for (Index n = 1; n <= 4; ++n)
    for (const auto& r : oracle::labelled_posets(n)) {
      auto order = FinitePoset::from_table(r);
      std::vector<Subset> expected;
      for (const auto& s : oracle::up_sets(r)) expected.push_back(suite::from_set(s));
      std::sort(expected.begin(), expected.end(), SubsetOrder{});
      EXPECT_EQ(up_sets(order), expected);
      for (Index x = 0; x < n; ++x) {
        oracle::Set up(n);
        for (Index y = 0; y < n; ++y) up[y] = r[x][y];
        EXPECT_EQ(suite::to_set(principal_up_set(order, x)), up);
      }
    }
}
