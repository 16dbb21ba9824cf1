#pragma once

#include <optional>
#include <string>
#include <vector>

#include "infalg/algebra.hpp"
#include "infalg/common.hpp"
#include "infalg/equivalence.hpp"
#include "infalg/order.hpp"
#include "infalg/set_algebra.hpp"

namespace infalg {

/// Finite ordered set with a star-closed family of separating equivalences.
class QSpace {
 public:
  QSpace() = default;
  /// Throws FormatError on a universe mismatch and StructureError when some
  /// member is not separating.
  static QSpace create(FinitePoset order, StarFamily eqs);

  const FinitePoset& order() const { return order_; }
  const StarFamily& eqs() const { return eqs_; }
  Index size() const { return order_.size(); }

 private:
  FinitePoset order_;
  StarFamily eqs_;
};

/// sigma maps every up-set to an up-set, and any two inequivalent points are
/// split by a saturated up-set. Witness: the members of a failing up-set, or
/// a pair of points that cannot be split.
Check check_separating(const FinitePoset& order, const Equivalence& theta);

/// Direct evaluation of the first-order conditions.
///   A:   x <= y ~ u <= v  implies  x <= y' ~ v for some y'         witness (x,y,u,v)
///   B:   x <= x' ~ y and y <= y' ~ x  implies  x ~ y              witness (x,y,x',y')
///   Cij: x ~i u ~j y  implies  x ~j u' ~i y for some u'            witness (x,u,y)
///   Bij: x <= x' ~i u <= u' ~j y and y <= y' ~i v <= v' ~j x
///        implies  x ~i z ~j y for some z                          witness (x,y)
Check check_A(const FinitePoset& order, const Equivalence& theta);
Check check_B(const FinitePoset& order, const Equivalence& theta);
Check check_Cij(const Equivalence& theta_i, const Equivalence& theta_j);
Check check_Bij(const FinitePoset& order, const Equivalence& theta_i, const Equivalence& theta_j);

/// Dual of a distributive algebra: points are its meet-irreducible elements
/// with the inherited order; member e of the family identifies points whose
/// down-sets contain the same e-images.
struct Dual {
  QSpace space;
  std::vector<Index> points;  // point -> meet-irreducible element
};

/// Throws StructureError (with witness) unless the algebra is a distributive
/// algebra with meet-preserving extractors and composition-closed.
Dual dualize(const InfoAlgebra& a);

/// Up-set of points above x: the points p with x <= points[p].
Subset dual_up_set(const InfoAlgebra& a, const Dual& d, Index x);

/// Set algebra of all up-sets of the space with the restricted saturations.
SetAlgebra reconstruct(const QSpace& s);

struct AlgebraRoundTrip {
  Dual dual;
  SetAlgebra reconstructed;
  AlgebraMorphism kappa;  // x -> points above x, e -> e
  Check iso;
};

AlgebraRoundTrip round_trip_algebra(const InfoAlgebra& a);

/// Point map plus a map from the codomain's equivalence labels to the
/// domain's.
struct QMorphism {
  std::vector<Index> alpha;
  std::vector<Index> omega;

  bool operator==(const QMorphism& other) const = default;
};

QMorphism identity_q_morphism(const QSpace& s);

/// alpha order-preserving, omega a star-homomorphism, and for every up-set V
/// of the codomain and every member G:
///   alpha^-1(sigma_G(V)) == sigma_omega(G)(alpha^-1(V)).
/// Witnesses: (p, q) for order, (G, H) for omega, (G, position of V in
/// up_sets of the codomain) for the law.
Check check_q_morphism(const QMorphism& m, const QSpace& from, const QSpace& to);

/// Order isomorphism, bijective omega, and (p, q) in omega(G) iff
/// (alpha p, alpha q) in G.
Check is_q_isomorphism(const QMorphism& m, const QSpace& from, const QSpace& to);

struct SpaceRoundTrip {
  SetAlgebra algebra;  // reconstruct(s)
  Dual dual;           // dualize(algebra)
  QMorphism lambda;    // s -> dual: p -> up(p); labels kept
  Check iso;
};

SpaceRoundTrip round_trip_space(const QSpace& s);

/// Dual of an algebra morphism A -> B: a Q-morphism dual(B) -> dual(A)
/// sending mu to the join of {x : f(x) <= mu}, and omega = g on labels.
struct DualizedMorphism {
  Dual source;  // dual of B
  Dual target;  // dual of A
  QMorphism q;
};

/// With `require_homomorphism` the pair must pass is_homomorphism; without
/// it only f has to be a bounded lattice homomorphism, which is what makes
/// preimages of prime ideals prime. Throws StructureError otherwise.
DualizedMorphism dualize_morphism(const AlgebraMorphism& m, const InfoAlgebra& a, const InfoAlgebra& b,
                                  bool require_homomorphism = true);

/// alpha^-1 of the points above x equals the points above f(x), for all x.
Check check_dual_square(const AlgebraMorphism& m, const InfoAlgebra& a, const InfoAlgebra& b,
                        const DualizedMorphism& d);

struct BooleanDiagnostics {
  Dual dual;
  bool antichain = false;
  Check maximal;  // every principal prime ideal is maximal; witness (point)
};

/// Throws StructureError unless the lattice is distributive and
/// complemented.
BooleanDiagnostics boolean_diagnostics(const InfoAlgebra& a);

struct NontrivialSeparating {
  std::optional<Equivalence> theta;
  Subset block;      // the non-singleton block used
  std::string note;  // how theta was found, or why none was
};

/// Block-plus-singletons equivalences from up-sets other than the whole
/// space: principal up-sets first (index order), then the remaining up-sets
/// with at least two points. Returns the first that is separating and
/// neither the identity nor the all-relation. Throws FormatError on fewer
/// than two points.
NontrivialSeparating make_nontrivial_separating(const FinitePoset& order);

}  // namespace infalg
