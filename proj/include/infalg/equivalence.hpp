#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "infalg/common.hpp"

namespace infalg {

/// Equivalence relation on {0..n-1}, stored as a block id per element.
/// Block ids are renumbered by first occurrence, so two equivalences are
/// equal exactly when their arrays are equal.
class Equivalence {
 public:
  Equivalence() = default;
  /// Any labelling works; it is canonicalized.
  explicit Equivalence(std::vector<Index> block_of);

  static Equivalence identity(Index n);
  static Equivalence all(Index n);
  /// Blocks must partition {0..n-1}; throws FormatError otherwise.
  static Equivalence from_blocks(Index n, const std::vector<std::vector<Index>>& blocks);
  /// Elements with equal image share a block.
  static Equivalence kernel_of(const std::vector<Index>& map);

  Index size() const { return block_of_.size(); }
  Index block_count() const { return block_count_; }
  Index block(Index u) const { return block_of_[u]; }
  bool related(Index u, Index v) const { return block_of_[u] == block_of_[v]; }
  const std::vector<Index>& block_of() const { return block_of_; }

  /// Block of u as a subset.
  Subset block_set(Index u) const;
  std::vector<Subset> blocks() const;

  bool is_identity() const { return block_count_ == size(); }
  bool is_all() const { return block_count_ <= 1; }

  /// Inclusion as relations (this refines other).
  bool is_subset_of(const Equivalence& other) const;

  /// Restriction to the listed points, re-indexed in list order.
  Equivalence restricted(const std::vector<Index>& points) const;

  bool operator==(const Equivalence& other) const { return block_of_ == other.block_of_; }
  bool operator<(const Equivalence& other) const { return block_of_ < other.block_of_; }

 private:
  std::vector<Index> block_of_;
  Index block_count_ = 0;
};

std::string to_string(const Equivalence& e);

/// Union of all blocks meeting xs.
Subset saturate(const Equivalence& theta, const Subset& xs);

/// Relational product theta * gamma = {(u, w) : u theta v gamma w}. It is an
/// equivalence iff theta and gamma commute; otherwise `witness` holds the
/// least pair in theta*gamma that is missing from gamma*theta.
struct StarProduct {
  std::optional<Equivalence> product;
  std::pair<Index, Index> witness{npos, npos};
  bool commuting() const { return product.has_value(); }
};

StarProduct star(const Equivalence& theta, const Equivalence& gamma);
bool commute(const Equivalence& theta, const Equivalence& gamma);

/// The product of two commuting equivalences, cross-checked against the
/// transitive closure of their union. Throws StructureError when they do not
/// commute.
Equivalence least_upper_equivalence(const Equivalence& theta, const Equivalence& gamma);

/// Transitive closure of the union (the join in the lattice of equivalences).
Equivalence equivalence_join(const Equivalence& theta, const Equivalence& gamma);

/// A labelled family of pairwise commuting equivalences on one universe that
/// is closed under the star product. Members may repeat under distinct labels.
class StarFamily {
 public:
  StarFamily() = default;

  /// Validates universe sizes, pairwise commutation and star-closure.
  /// Throws StructureError with a witness otherwise.
  static StarFamily create(Index universe, std::vector<std::string> labels, std::vector<Equivalence> members);

  Index universe() const { return universe_; }
  Index size() const { return members_.size(); }
  const Equivalence& member(Index i) const { return members_[i]; }
  const std::vector<Equivalence>& members() const { return members_; }
  const std::string& label(Index i) const { return labels_[i]; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<Index> find(const Equivalence& e) const;
  std::optional<Index> find_label(const std::string& label) const;
  /// Index of member(i) * member(j).
  Index product(Index i, Index j) const { return product_[i][j]; }

 private:
  Index universe_ = 0;
  std::vector<std::string> labels_;
  std::vector<Equivalence> members_;
  IndexTable product_;
};

/// Least star-closed superset. New members are labelled "a*b". Throws
/// StructureError with a witness pair if two members do not commute.
StarFamily star_closure(Index universe, std::vector<std::string> labels, std::vector<Equivalence> members);

/// For every pair some member lies below both (as relations). Fails with the
/// first pair of member indices lacking a common lower bound.
Check is_downward_directed(const StarFamily& family);

/// All equivalences on {0..n-1} in restricted-growth order (Bell(n) many).
std::vector<Equivalence> all_equivalences(Index n);

}  // namespace infalg
