#include <gtest/gtest.h>

#include <set>

#include "infalg/atoms.hpp"
#include "suite.hpp"

using namespace infalg;

TEST(Atoms, Examples) {
  auto two = InfoAlgebra(BoundedJoinSemilattice::from_order(FinitePoset::chain(2)), {{"id", {0, 1}}});
  EXPECT_EQ(atoms(two), (std::vector<Index>{0}));

  auto s = gen_string(2, 2);
  std::vector<Index> expected;
  for (Index a = 0; a < 2; ++a)
    for (Index b = 0; b < 2; ++b) expected.push_back(string_index(2, {a, b}));
  EXPECT_EQ(atoms(s), expected);

  auto m = gen_multivariate({2, 2});
  for (Index x : atoms(m.algebra())) EXPECT_EQ(m.member(x).count(), 1u);
  EXPECT_EQ(atoms(m.algebra()).size(), 4u);
}

TEST(Atoms, AgreeWithOracle) {
  for (const auto& [name, a] : suite::generated())
    EXPECT_EQ(atoms(a), oracle::atoms(suite::rel(a.order()), a.zero())) << name;
}

TEST(Atoms, CombineWithAnythingToSelfOrZero) {
  for (const auto& [name, a] : suite::generated()) {
    auto at = atoms(a);
    for (Index alpha : at) {
      for (Index x = 0; x < a.size(); ++x) {
        auto c = a.combine(alpha, x);
        EXPECT_TRUE(c == alpha || c == a.zero()) << name;
      }
      for (Index beta : at)
        if (beta != alpha) EXPECT_EQ(a.combine(alpha, beta), a.zero()) << name;
    }
  }
}

TEST(Classify, Examples) {
  auto m = classify(gen_multivariate({2, 2}).algebra());
  EXPECT_TRUE(m.atomic && m.atomistic && m.completely_atomistic);

  auto s = classify(gen_string(2, 2));
  EXPECT_TRUE(s.atomic && s.atomistic);
  EXPECT_FALSE(s.completely_atomistic);
  ASSERT_TRUE(s.unrealized);

  auto two = classify(InfoAlgebra(BoundedJoinSemilattice::from_order(FinitePoset::chain(2)), {{"id", {0, 1}}}));
  EXPECT_TRUE(two.atomic && two.atomistic && two.completely_atomistic);
}

TEST(Classify, ChainIsAtomicNotAtomistic) {
  auto c = classify(gen_lattice_valued({1}, FiniteLattice::chain(3)));
  EXPECT_TRUE(c.atomic);
  EXPECT_FALSE(c.atomistic);
}

TEST(Classify, AgreesWithDefinitions) {
  for (const auto& [name, a] : suite::generated()) {
    const auto leq = suite::rel(a.order());
    const auto at = oracle::atoms(leq, a.zero());
    bool atomic = true, atomistic = true;
    std::set<std::vector<bool>> realized;
    for (Index x = 0; x < a.size(); ++x) {
      if (x == a.zero()) continue;
      oracle::Set above(a.size());
      std::vector<bool> key;
      for (Index alpha : at) {
        above[alpha] = leq[x][alpha];
        key.push_back(leq[x][alpha]);
      }
      realized.insert(key);
      if (std::find(key.begin(), key.end(), true) == key.end()) atomic = false;
      auto g = oracle::glb_of(leq, above);
      if (!g || *g != x) atomistic = false;
    }
    bool complete = atomistic && realized.size() == (Index{1} << at.size()) - 1;
    auto r = classify(a);
    EXPECT_EQ(r.atomic, atomic) << name;
    EXPECT_EQ(r.atomistic, atomistic) << name;
    EXPECT_EQ(r.completely_atomistic, complete) << name;
  }
}

TEST(Classify, StringAlgebrasAtomisticButIncomplete) {
  for (Index k = 2; k <= 3; ++k)
    for (Index n = 1; n <= 3; ++n) {
      auto r = classify(gen_string(k, n));
      EXPECT_TRUE(r.atomic && r.atomistic);
      // Two letters, length one: the Boolean square.
      EXPECT_EQ(r.completely_atomistic, k == 2 && n == 1) << k << "," << n;
    }
}

TEST(AtomRepresentation, Multivariate) {
  auto r = atom_representation(gen_multivariate({2, 2}).algebra());
  EXPECT_TRUE(r.homomorphism);
  EXPECT_TRUE(r.embedding);
  EXPECT_TRUE(r.isomorphism);
}

TEST(AtomRepresentation, StringEmbedsNotOnto) {
  auto a = gen_string(2, 2);
  auto r = atom_representation(a);
  EXPECT_TRUE(r.homomorphism);
  EXPECT_TRUE(r.embedding);
  EXPECT_FALSE(r.isomorphism);
  ASSERT_TRUE(r.unrealized);
  // {aa, bb} is not the atom set of any element.
  Subset aabb(4);
  aabb.set(0);
  aabb.set(3);
  for (Index x = 0; x < a.size(); ++x) EXPECT_NE(r.target.member(r.morphism.f[x]), aabb);
}

TEST(AtomRepresentation, FiniteAlgebrasAreAtomic) {
  for (const auto& [name, a] : suite::generated()) EXPECT_TRUE(classify(a).atomic) << name;
}

TEST(AtomRepresentation, LawsOnAtomicSuite) {
  for (const auto& [name, a] : suite::generated()) {
    auto rep = classify(a);
    if (!rep.atomic) continue;
    auto r = atom_representation(a);
    EXPECT_TRUE(r.homomorphism) << name;
    EXPECT_EQ(r.embedding, rep.atomistic) << name;
    EXPECT_EQ(r.isomorphism, rep.completely_atomistic) << name;

    const auto at = atoms(a);
    for (Index x = 0; x < a.size(); ++x)
      for (Index y = 0; y < a.size(); ++y)
        ASSERT_EQ(atoms_above(a, at, a.combine(x, y)), atoms_above(a, at, x) & atoms_above(a, at, y)) << name;

    for (Index e = 0; e < a.extractor_count(); ++e) {
      // Atoms of the image are the images of atoms.
      auto sub = extraction_image(a, e);
      std::set<Index> image_atoms, atom_images;
      for (Index s : atoms(sub.algebra)) image_atoms.insert(sub.elements[s]);
      for (Index alpha : at) atom_images.insert(a.apply(e, alpha));
      EXPECT_EQ(image_atoms, atom_images) << name;

      // Restricted kernels commute, and saturation follows At.
      std::vector<Index> re;
      for (Index alpha : at) re.push_back(a.apply(e, alpha));
      for (Index f = 0; f < a.extractor_count(); ++f) {
        std::vector<Index> rf;
        for (Index alpha : at) rf.push_back(a.apply(f, alpha));
        EXPECT_TRUE(commute(Equivalence::kernel_of(re), Equivalence::kernel_of(rf))) << name;
      }
      auto theta = Equivalence::kernel_of(re);
      for (Index x = 0; x < a.size(); ++x)
        ASSERT_EQ(saturate(theta, atoms_above(a, at, x)), atoms_above(a, at, a.apply(e, x))) << name;
    }
  }
}

TEST(CompleteAtomisticBoolean, Passes) {
  EXPECT_TRUE(check_complete_atomistic_boolean(gen_multivariate({2, 2}).algebra()));
  EXPECT_TRUE(check_complete_atomistic_boolean(gen_multivariate({3}).algebra()));
  EXPECT_TRUE(check_complete_atomistic_boolean(
      InfoAlgebra(BoundedJoinSemilattice::from_order(FinitePoset::chain(2)), {{"id", {0, 1}}})));
}

TEST(CompleteAtomisticBoolean, RejectsIncomplete) {
  EXPECT_THROW(check_complete_atomistic_boolean(gen_string(2, 2)), StructureError);
}
