#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "infalg/common.hpp"
#include "infalg/equivalence.hpp"
#include "infalg/order.hpp"

namespace infalg {

/// A labelled self-map of the carrier.
struct Extractor {
  std::string label;
  std::vector<Index> map;

  bool operator==(const Extractor& other) const = default;
};

/// Finite commutative domain-free information algebra: a bounded
/// join-semilattice (combination) together with a labelled family E of
/// extraction operators.
///
/// Distinct labels may carry the same map; the file layer rejects that, the
/// library does not. Composition is resolved by comparing maps, so
/// compose(e, f) is the least index whose map equals e o f, or npos when E
/// is not closed under composition.
class InfoAlgebra {
 public:
  InfoAlgebra() = default;
  /// Throws FormatError on size/range problems or duplicate labels.
  InfoAlgebra(BoundedJoinSemilattice sl, std::vector<Extractor> extractors);

  const BoundedJoinSemilattice& semilattice() const { return sl_; }
  const FinitePoset& order() const { return sl_.order(); }
  Index size() const { return sl_.size(); }
  Index unit() const { return sl_.unit(); }
  Index zero() const { return sl_.zero(); }
  Index combine(Index a, Index b) const { return sl_.join(a, b); }
  bool leq(Index a, Index b) const { return sl_.leq(a, b); }

  Index extractor_count() const { return extractors_.size(); }
  const std::vector<Extractor>& extractors() const { return extractors_; }
  const Extractor& extractor(Index e) const { return extractors_[e]; }
  const std::string& label(Index e) const { return extractors_[e].label; }
  const std::vector<Index>& map(Index e) const { return extractors_[e].map; }
  Index apply(Index e, Index x) const { return extractors_[e].map[x]; }

  std::optional<Index> find_label(const std::string& label) const;
  /// Least extractor index carrying this map.
  std::optional<Index> find_map(const std::vector<Index>& map) const;

  /// Index of e o f (apply f first), npos if absent.
  Index compose(Index e, Index f) const { return composition_[e][f]; }
  const IndexTable& composition_table() const { return composition_; }
  bool is_closed() const;

  /// Optional display names for elements (empty when absent).
  const std::vector<std::string>& element_labels() const { return element_labels_; }
  void set_element_labels(std::vector<std::string> labels);
  std::string element_name(Index x) const;

  /// Throws StructureError naming the first missing composite.
  void require_closed() const;

  FiniteLattice lattice() const { return FiniteLattice(sl_); }

 private:
  BoundedJoinSemilattice sl_;
  std::vector<Extractor> extractors_;
  IndexTable composition_;
  std::vector<std::string> element_labels_;
};

/// x -> e(f(x)).
std::vector<Index> compose_maps(const std::vector<Index>& e, const std::vector<Index>& f);
std::vector<Index> identity_map(Index n);

/// Per-axiom verdicts. Witness layouts: N (e), A (e, x), Q (e, x, y),
/// C (e, f, x), I (e, x), unit (e), closure (e, f).
struct AxiomReport {
  Check nullity;
  Check assertion;
  Check quantifier;
  Check commutation;
  Check idempotence;
  Check unit_fixed;
  Check closure;
  bool lenient = false;

  bool ok() const;
  /// (name, check) pairs in report order; closure is omitted when lenient.
  std::vector<std::pair<std::string, const Check*>> entries() const;
};

/// Checks (N) e(0)=0, (A) e(x) <= x, (Q) e(e(x) v y) = e(x) v e(y), (C)
/// pairwise commutation, (I) idempotence, e(1)=1 and closure under
/// composition. Lenient mode skips closure.
AxiomReport verify_axioms(const InfoAlgebra& a, bool lenient = false);

/// (N), (A), (Q) and (I) for a single map on a semilattice.
Check check_extraction_map(const BoundedJoinSemilattice& sl, const std::vector<Index>& map);

/// Elements with equal e-image share a block.
Equivalence kernel(const InfoAlgebra& a, Index e);

/// ker e * ker f == ker(e o f) for all pairs; witness (e, f).
Check check_kernel_theorem(const InfoAlgebra& a);

/// Element map f and extractor-index map g.
struct AlgebraMorphism {
  std::vector<Index> f;
  std::vector<Index> g;

  bool operator==(const AlgebraMorphism& other) const = default;
};

AlgebraMorphism identity_morphism(const InfoAlgebra& a);

/// Combination, unit and zero preservation, g compatible with composition
/// (compared on maps), and f(e(x)) = g(e)(f(x)). When both algebras are
/// distributive with meet-preserving extractors, meets must be preserved too.
Check is_homomorphism(const AlgebraMorphism& m, const InfoAlgebra& a, const InfoAlgebra& b);
/// Homomorphism with f and g bijective.
Check is_isomorphism(const AlgebraMorphism& m, const InfoAlgebra& a, const InfoAlgebra& b);

struct Subalgebra {
  InfoAlgebra algebra;
  std::vector<Index> elements;  // carrier of the subalgebra, as indices of the parent
  AlgebraMorphism embedding;    // subalgebra -> parent
};

/// The image e(Phi) with the induced combination and every extractor
/// restricted to it, labels kept. The embedding sends h to e.h.
Subalgebra extraction_image(const InfoAlgebra& a, Index e);

/// Distributive lattice and every extractor preserves binary meets. The
/// witness is a lattice triple, or (e, x, y) for a meet not preserved.
Check is_distributive_cdf(const InfoAlgebra& a);

struct IdealCompletion {
  InfoAlgebra algebra;
  std::vector<Subset> ideals;  // carrier, as down-sets of the original
  AlgebraMorphism embedding;   // x -> down(x), e -> e-hat
};

/// Ideals of a finite algebra, with combination and extraction given by
///   I1 . I2 = {x : x <= y1 v y2, y1 in I1, y2 in I2}
///   e^(I)   = {x : x <= e(y), y in I}.
IdealCompletion ideal_completion(const InfoAlgebra& a);

/// Least composition-closed extension of E. New labels are "e.f" for e o f.
/// With `with_identity` the identity map is added as "id" unless present.
/// Throws CapExceeded when more than `cap` extractors would result.
InfoAlgebra close_extractors(const InfoAlgebra& a, bool with_identity = false, Index cap = kDefaultCap);

}  // namespace infalg
