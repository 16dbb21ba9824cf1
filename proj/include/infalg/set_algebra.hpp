#pragma once

#include <optional>
#include <vector>

#include "infalg/algebra.hpp"
#include "infalg/common.hpp"
#include "infalg/equivalence.hpp"

namespace infalg {

/// Information algebra of subsets of a finite universe: the family is closed
/// under intersection (combination) and contains the universe (unit) and the
/// empty set (zero); extractors are saturation operators of a star-closed
/// family of equivalences, restricted to the family.
///
/// Members are kept sorted by SubsetOrder, so index 0 is the universe and the
/// last index is the empty set. Extractor e of algebra() is eqs().member(e).
class SetAlgebra {
 public:
  SetAlgebra() = default;

  /// Throws StructureError when the family is not intersection-closed, lacks
  /// the universe or the empty set, or is not closed under some saturation.
  static SetAlgebra create(Index universe, std::vector<Subset> family, StarFamily eqs);

  Index universe() const { return universe_; }
  const std::vector<Subset>& family() const { return family_; }
  const Subset& member(Index i) const { return family_[i]; }
  const StarFamily& eqs() const { return eqs_; }
  std::optional<Index> find(const Subset& s) const;
  const InfoAlgebra& algebra() const { return algebra_; }

 private:
  Index universe_ = 0;
  std::vector<Subset> family_;
  StarFamily eqs_;
  InfoAlgebra algebra_;
};

/// The checks behind SetAlgebra::create. The witness is one or two family
/// positions (input order), or (equivalence, member) for a missing
/// saturation.
Check validate_set_family(Index universe, const std::vector<Subset>& family, const StarFamily& eqs);

struct BlockUnionResult {
  std::optional<SetAlgebra> algebra;
  Check directed;  // failing pair of member indices when not directed
};

/// Family of all unions of blocks of single members. An information algebra
/// exactly when the family of equivalences is downward directed; otherwise
/// the result carries the undirected pair. Throws CapExceeded when the family
/// would exceed `cap` members.
BlockUnionResult build_block_union_algebra(const StarFamily& eqs, Index cap = kDefaultCap);

/// Representation of an algebra by principal up-sets of its nonzero
/// elements: x -> up(x) without zero, zero -> empty set, e -> saturation by
/// the kernel of e restricted to the nonzero elements.
struct PrincipalRepresentation {
  std::vector<Index> points;  // universe position -> element of the algebra
  SetAlgebra target;
  AlgebraMorphism iso;        // algebra -> target.algebra()
};

/// Requires a composition-closed algebra.
PrincipalRepresentation principal_upset_representation(const InfoAlgebra& a);

/// sigma_e(up(x)) == up(e(x)) on the nonzero elements for every (e, x).
Check check_principal_saturation(const InfoAlgebra& a);

}  // namespace infalg
