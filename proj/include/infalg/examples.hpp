#pragma once

#include <string>
#include <vector>

#include "infalg/algebra.hpp"
#include "infalg/common.hpp"
#include "infalg/duality.hpp"
#include "infalg/order.hpp"
#include "infalg/set_algebra.hpp"

namespace infalg {

/// Strings of length at most N over a k-letter alphabet, plus the
/// contradiction 0, ordered by prefix. Index 0 is the empty string, then by
/// length and lexicographically; the last index is 0. Extractors e0..eN cut
/// to a prefix of length n; eN is the identity on this truncated carrier and
/// the strings of length N are the atoms. Elements are named "_" (empty
/// string), "a", "ab", ..., "0". Throws CapExceeded past `cap` elements.
InfoAlgebra gen_string(Index k, Index n, Index cap = kDefaultCap);

/// Element index of a string given as letter positions.
Index string_index(Index k, const std::vector<Index>& letters);

/// All subsets of the product of the variable domains, with one
/// equivalence per variable set s (tuples agreeing on s). Tuples are numbered
/// in mixed radix with variable 0 least significant. Labels are "{}", "{0}",
/// "{0,1}", ... in bit-mask order of s. Throws CapExceeded when the power set
/// exceeds `cap`.
SetAlgebra gen_multivariate(const std::vector<Index>& domains, Index cap = kDefaultCap);

/// Variable-set label used by the multivariate and lattice-valued generators.
std::string variable_set_label(Index mask, Index variables);

/// Maps from the product of the domains into a distributive lattice L (given
/// in its own order, so L's unit is its bottom and L's zero its top).
/// Combination is the pointwise L-meet; e_s(x)(t) is the L-join of x over
/// all tuples agreeing with t on s. Element i encodes x in mixed radix |L|
/// over the tuples. Throws StructureError if L is not distributive and
/// CapExceeded past `cap` elements.
InfoAlgebra gen_lattice_valued(const std::vector<Index>& domains, const FiniteLattice& values,
                               Index cap = kDefaultCap);

/// All bounded distributive lattices with 2..max_n elements up to
/// isomorphism. Index 0 is the least element, index n-1 the greatest.
/// Throws CapExceeded when max_n > 6.
std::vector<FiniteLattice> distributive_lattices(Index max_n);

/// Every map satisfying (N), (A), (Q) and idempotence; optionally also
/// preserving binary meets. Lexicographic order of the maps.
std::vector<std::vector<Index>> extraction_operators(const FiniteLattice& lat, bool require_meet_preservation);

/// Every distributive lattice up to max_n elements paired with every
/// nonempty, pairwise commuting, composition-closed family of meet-preserving
/// extraction operators, one per orbit under lattice automorphisms.
/// Extractors are labelled "e<i>" by their position among the lattice's
/// operators.
std::vector<InfoAlgebra> enumerate_small_algebras(Index max_n);

/// Every poset on 1..max_points points up to isomorphism, each with every
/// nonempty star-closed family of separating equivalences, one per orbit
/// under order automorphisms. Throws CapExceeded when max_points > 4.
std::vector<QSpace> enumerate_small_spaces(Index max_points);

/// All posets on n points up to isomorphism (n <= 4 is cheap, n <= 6 works).
std::vector<FinitePoset> posets_up_to_iso(Index n);

/// All maps preserving unit, zero, joins and meets.
std::vector<std::vector<Index>> bounded_lattice_homomorphisms(const FiniteLattice& a, const FiniteLattice& b);

/// All pairs (f, g) passing is_homomorphism.
std::vector<AlgebraMorphism> enumerate_homomorphisms(const InfoAlgebra& a, const InfoAlgebra& b);

}  // namespace infalg
