#pragma once

#include <optional>
#include <vector>

#include "infalg/algebra.hpp"
#include "infalg/common.hpp"
#include "infalg/set_algebra.hpp"

namespace infalg {

/// Elements a != 0 whose only strict upper bound is 0, in index order.
std::vector<Index> atoms(const InfoAlgebra& a);

/// Atoms above x, as a subset of atom positions (positions in `atom_list`).
Subset atoms_above(const InfoAlgebra& a, const std::vector<Index>& atom_list, Index x);

struct AtomReport {
  std::vector<Index> atoms;
  std::vector<Subset> at_map;  // x -> At(x) over atom positions
  bool atomic = false;
  bool atomistic = false;
  bool completely_atomistic = false;
  std::optional<Index> not_atomic;      // nonzero element below no atom
  std::optional<Index> not_atomistic;   // nonzero x with glb At(x) missing or != x
  std::optional<Subset> unrealized;     // first nonempty atom set that is no At(x)
};

/// atomic: every nonzero x lies below an atom. atomistic: for every nonzero
/// x the glb of At(x) exists and equals x. completely atomistic: atomistic
/// and every nonempty set of atoms is At(x) for some x.
AtomReport classify(const InfoAlgebra& a);

struct AtomRepresentation {
  std::vector<Index> atoms;
  SetAlgebra target;          // all subsets of the atoms, restricted kernels
  AlgebraMorphism morphism;   // x -> At(x), e -> restricted saturation
  Check homomorphism;
  bool embedding = false;     // homomorphism with injective element map
  bool isomorphism = false;   // embedding onto every subset of atoms
  std::optional<Subset> unrealized;
};

/// Throws StructureError on non-atomic input, CapExceeded when the power
/// set of the atoms exceeds `cap`.
AtomRepresentation atom_representation(const InfoAlgebra& a, Index cap = kDefaultCap);

/// Lattice complements exist, At turns joins of up to three elements into
/// intersections and meets into unions, and At of a complement is the
/// complementary atom set. Throws StructureError unless the algebra is
/// completely atomistic.
Check check_complete_atomistic_boolean(const InfoAlgebra& a);

}  // namespace infalg
