#pragma once

#include <optional>
#include <string>
#include <vector>

#include "infalg/common.hpp"

namespace infalg {

/// One violated poset axiom with a witness tuple (pair for reflexivity and
/// antisymmetry, triple for transitivity).
struct PosetViolation {
  enum class Axiom { reflexivity, antisymmetry, transitivity };
  Axiom axiom;
  std::vector<Index> witness;
};

std::string to_string(PosetViolation::Axiom axiom);

/// Reports every violated order axiom (one minimal witness each). An empty
/// result means the table is a partial order. Throws FormatError if the
/// table is not square.
std::vector<PosetViolation> verify_poset(const BoolTable& leq);

/// Finite partially ordered set. Row a of the order is the principal up-set
/// of a, so leq(a, b) == up(a)[b].
class FinitePoset {
 public:
  FinitePoset() = default;

  /// Throws FormatError (non-square) or StructureError (axiom violated).
  static FinitePoset from_table(const BoolTable& leq);
  /// Rows are principal up-sets; validated like from_table.
  static FinitePoset from_up_sets(std::vector<Subset> up);
  static FinitePoset chain(Index n);
  static FinitePoset antichain(Index n);

  Index size() const { return up_.size(); }
  bool leq(Index a, Index b) const { return up_[a][b]; }
  bool less(Index a, Index b) const { return a != b && up_[a][b]; }
  const Subset& up(Index a) const { return up_[a]; }
  const Subset& down(Index a) const { return down_[a]; }

  /// Elements strictly above a with nothing strictly in between.
  std::vector<Index> upper_covers(Index a) const;

  bool is_up_set(const Subset& s) const;
  bool is_antichain() const;
  BoolTable table() const;

  bool operator==(const FinitePoset& other) const { return up_ == other.up_; }

 private:
  explicit FinitePoset(std::vector<Subset> up);

  std::vector<Subset> up_;
  std::vector<Subset> down_;
};

/// Finite bounded join-semilattice in information order: unit is least
/// (vacuous information), zero is greatest (contradiction), join is
/// combination.
class BoundedJoinSemilattice {
 public:
  BoundedJoinSemilattice() = default;

  /// Validates idempotence, commutativity, associativity, unit neutrality and
  /// zero absorption. The order is derived: a <= b iff join(a, b) == b.
  static BoundedJoinSemilattice from_join_table(IndexTable join, Index unit, Index zero);
  /// Same, without the cubic law checks. For tables built from operations
  /// known to be semilattice joins (intersection of sets, pointwise meets).
  static BoundedJoinSemilattice from_trusted_join_table(IndexTable join, Index unit, Index zero);
  /// Derives joins as least upper bounds; throws StructureError when some
  /// pair has no least upper bound or the poset lacks bounds.
  static BoundedJoinSemilattice from_order(FinitePoset order);

  Index size() const { return order_.size(); }
  Index unit() const { return unit_; }
  Index zero() const { return zero_; }
  Index join(Index a, Index b) const { return join_[a][b]; }
  bool leq(Index a, Index b) const { return order_.leq(a, b); }
  const FinitePoset& order() const { return order_; }
  const IndexTable& join_table() const { return join_; }

  bool operator==(const BoundedJoinSemilattice& other) const {
    return join_ == other.join_ && unit_ == other.unit_ && zero_ == other.zero_;
  }

 private:
  FinitePoset order_;
  IndexTable join_;
  Index unit_ = 0;
  Index zero_ = 0;
};

/// Bounded lattice: a join-semilattice plus its meet table.
class FiniteLattice {
 public:
  FiniteLattice() = default;
  /// Every finite bounded join-semilattice is a lattice; meets are computed
  /// as greatest lower bounds.
  explicit FiniteLattice(BoundedJoinSemilattice sl);

  static FiniteLattice from_order(FinitePoset order) {
    return FiniteLattice(BoundedJoinSemilattice::from_order(std::move(order)));
  }
  static FiniteLattice chain(Index n) { return from_order(FinitePoset::chain(n)); }

  const BoundedJoinSemilattice& semilattice() const { return sl_; }
  const FinitePoset& order() const { return sl_.order(); }
  Index size() const { return sl_.size(); }
  Index unit() const { return sl_.unit(); }
  Index zero() const { return sl_.zero(); }
  Index join(Index a, Index b) const { return sl_.join(a, b); }
  Index meet(Index a, Index b) const { return meet_[a][b]; }
  bool leq(Index a, Index b) const { return sl_.leq(a, b); }
  const IndexTable& meet_table() const { return meet_; }

 private:
  BoundedJoinSemilattice sl_;
  IndexTable meet_;
};

/// Least upper bound from the join table.
Index lub(const BoundedJoinSemilattice& sl, Index a, Index b);
/// Greatest lower bound in the poset, if one exists.
std::optional<Index> glb(const FinitePoset& order, Index a, Index b);
/// Greatest lower bound of a set of elements, if one exists. The glb of the
/// empty set is the greatest element, if any.
std::optional<Index> glb(const FinitePoset& order, const Subset& xs);

/// a ^ (b v c) == (a ^ b) v (a ^ c) for all triples; fails with the first
/// offending triple.
Check is_distributive(const FiniteLattice& lat);

struct Complements {
  std::vector<Index> map;        // complement of each element, npos if none
  std::optional<Index> missing;  // first element lacking a complement
  bool complemented() const { return !missing.has_value(); }
};

/// psi is a complement of phi iff phi v psi == zero and phi ^ psi == unit.
Complements complements(const FiniteLattice& lat);

/// Non-zero elements that are not the meet of two strictly larger elements.
/// Computed both from the meet table and as "exactly one upper cover"; the
/// two characterizations are asserted to agree.
std::vector<Index> meet_irreducibles(const FiniteLattice& lat);

/// Every upward-closed subset (including the empty set and the whole
/// carrier), sorted by SubsetOrder.
std::vector<Subset> up_sets(const FinitePoset& order);
Subset principal_up_set(const FinitePoset& order, Index x);

/// Induced suborder on the listed points, re-indexed in list order.
FinitePoset induced_order(const FinitePoset& order, const std::vector<Index>& points);

}  // namespace infalg
