#include <gtest/gtest.h>

#include "infalg/set_algebra.hpp"
#include "suite.hpp"

using namespace infalg;

namespace {

const Equivalence rows = Equivalence::from_blocks(4, {{0, 1}, {2, 3}});
const Equivalence cols = Equivalence::from_blocks(4, {{0, 2}, {1, 3}});

std::vector<Subset> power_set(Index n) {
  std::vector<Subset> out;
  for (const auto& s : oracle::all_subsets(n)) out.push_back(suite::from_set(s));
  return out;
}

}  // namespace

TEST(SetAlgebra, TwoElement) {
  auto s = SetAlgebra::create(3, {full_set(3), empty_set(3)}, StarFamily::create(3, {"all"}, {Equivalence::all(3)}));
  EXPECT_EQ(s.algebra().size(), 2u);
  EXPECT_EQ(s.algebra().unit(), 0u);
  EXPECT_EQ(s.algebra().zero(), 1u);
  EXPECT_TRUE(verify_axioms(s.algebra()).ok());
}

TEST(SetAlgebra, MultivariateSixteen) {
  auto eqs = StarFamily::create(4, {"{}", "{0}", "{1}", "{0,1}"},
                                {Equivalence::all(4), rows, cols, Equivalence::identity(4)});
  auto s = SetAlgebra::create(4, power_set(4), eqs);
  EXPECT_EQ(s.algebra().size(), 16u);
  EXPECT_TRUE(verify_axioms(s.algebra()).ok());
}

TEST(SetAlgebra, RejectsFamilyMissingSaturation) {
  auto eqs = StarFamily::create(4, {"rows"}, {rows});
  std::vector<Subset> fam = {full_set(4), empty_set(4), singleton(4, 0)};
  auto c = validate_set_family(4, fam, eqs);
  EXPECT_FALSE(c);
  EXPECT_EQ(c.witness(), (std::vector<Index>{0, 2}));
  EXPECT_THROW(SetAlgebra::create(4, fam, eqs), StructureError);
}

TEST(SetAlgebra, RejectsNonIntersectionClosed) {
  auto eqs = StarFamily::create(3, {"d"}, {Equivalence::identity(3)});
  std::vector<Subset> fam = {full_set(3), empty_set(3), subset_of(3, {0, 1}), subset_of(3, {1, 2})};
  EXPECT_FALSE(validate_set_family(3, fam, eqs));
}

TEST(SetAlgebra, ReverseInclusionOrder) {
  auto s = gen_multivariate({2, 2});
  const auto& a = s.algebra();
  for (Index x = 0; x < a.size(); ++x)
    for (Index y = 0; y < a.size(); ++y) EXPECT_EQ(a.leq(x, y), s.member(y).is_subset_of(s.member(x)));
}

TEST(SetAlgebra, ExtractorsAreSaturations) {
  auto s = gen_multivariate({2, 3});
  for (Index e = 0; e < s.eqs().size(); ++e) {
    auto theta = oracle::relation_of_blocks(s.eqs().member(e).block_of());
    for (Index x = 0; x < s.family().size(); ++x)
      EXPECT_EQ(suite::to_set(s.member(s.algebra().apply(e, x))), oracle::saturate(theta, suite::to_set(s.member(x))));
  }
}

TEST(BlockUnion, Examples) {
  auto d = build_block_union_algebra(StarFamily::create(4, {"d"}, {Equivalence::identity(4)}));
  ASSERT_TRUE(d.algebra);
  EXPECT_EQ(d.algebra->family().size(), 16u);

  auto grid = build_block_union_algebra(StarFamily::create(4, {"rows", "cols", "all"}, {rows, cols, Equivalence::all(4)}));
  EXPECT_FALSE(grid.algebra);
  EXPECT_FALSE(grid.directed);
  EXPECT_EQ(grid.directed.witness(), (std::vector<Index>{0, 1}));

  auto full = build_block_union_algebra(StarFamily::create(
      4, {"d", "rows", "cols", "all"}, {Equivalence::identity(4), rows, cols, Equivalence::all(4)}));
  ASSERT_TRUE(full.algebra);
  EXPECT_EQ(full.algebra->family().size(), 16u);
}

TEST(BlockUnion, DirectedIffAlgebraOnThreePoints) {
  const auto parts = oracle::partitions(3);
  for (Index mask = 1; mask < (Index{1} << parts.size()); ++mask) {
    std::vector<Equivalence> members;
    std::vector<std::string> labels;
    for (Index i = 0; i < parts.size(); ++i)
      if ((mask >> i) & 1) {
        members.emplace_back(parts[i]);
        labels.push_back(std::to_string(i));
      }
    StarFamily f;
    try {
      f = StarFamily::create(3, labels, members);
    } catch (const StructureError&) {
      continue;
    }
    auto r = build_block_union_algebra(f);
    EXPECT_EQ(r.algebra.has_value(), bool(is_downward_directed(f)));
    // Independently: the union family is an algebra iff closed under intersection.
    std::vector<oracle::Set> fam;
    for (const auto& m : members) {
      auto blocks = m.blocks();
      for (Index bm = 0; bm < (Index{1} << blocks.size()); ++bm) {
        Subset u(3);
        for (Index b = 0; b < blocks.size(); ++b)
          if ((bm >> b) & 1) u |= blocks[b];
        fam.push_back(suite::to_set(u));
      }
    }
    bool closed = true;
    for (const auto& x : fam)
      for (const auto& y : fam) closed = closed && std::find(fam.begin(), fam.end(), oracle::set_and(x, y)) != fam.end();
    EXPECT_EQ(r.algebra.has_value(), closed) << mask;
  }
}

TEST(PrincipalRepresentation, TwoChain) {
  auto a = InfoAlgebra(BoundedJoinSemilattice::from_order(FinitePoset::chain(2)), {{"id", {0, 1}}});
  auto r = principal_upset_representation(a);
  EXPECT_EQ(r.target.universe(), 1u);
  EXPECT_EQ(r.target.family().size(), 2u);
  EXPECT_TRUE(is_isomorphism(r.iso, a, r.target.algebra()));
}

TEST(PrincipalRepresentation, StringAlgebra) {
  auto a = gen_string(2, 2);
  auto r = principal_upset_representation(a);
  EXPECT_EQ(r.target.universe(), 7u);
  EXPECT_EQ(r.target.family().size(), 8u);
  EXPECT_TRUE(is_isomorphism(r.iso, a, r.target.algebra()));
}

TEST(PrincipalRepresentation, GeneratedSuiteAndSaturationIdentity) {
  for (const auto& [name, a] : suite::generated()) {
    auto r = principal_upset_representation(a);
    EXPECT_TRUE(is_isomorphism(r.iso, a, r.target.algebra())) << name;
    EXPECT_TRUE(check_principal_saturation(a)) << name;
    if (a.size() > 64) continue;
    const auto leq = oracle::leq_from_join(a.semilattice().join_table());
    std::vector<Index> nonzero;
    for (Index x = 0; x < a.size(); ++x)
      if (x != a.zero()) nonzero.push_back(x);
    auto up = [&](Index x) {
      oracle::Set s(nonzero.size());
      for (Index i = 0; i < nonzero.size(); ++i) s[i] = leq[x][nonzero[i]];
      return s;
    };
    for (Index e = 0; e < a.extractor_count(); ++e) {
      std::vector<Index> restricted;
      for (Index x : nonzero) restricted.push_back(a.apply(e, x));
      auto theta = oracle::kernel_relation(restricted);
      for (Index x : nonzero) ASSERT_EQ(oracle::saturate(theta, up(x)), up(a.apply(e, x))) << name;
    }
  }
}

TEST(PrincipalRepresentation, SaturationsCommute) {
  auto r = principal_upset_representation(gen_string(2, 3));
  const auto& eqs = r.target.eqs();
  for (Index i = 0; i < eqs.size(); ++i)
    for (Index j = 0; j < eqs.size(); ++j) EXPECT_TRUE(commute(eqs.member(i), eqs.member(j)));
}
