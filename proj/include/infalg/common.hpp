#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include <boost/dynamic_bitset.hpp>

namespace infalg {

/// Dense element index. Carriers, universes and label sets are all 0..n-1.
using Index = std::size_t;
inline constexpr Index npos = static_cast<Index>(-1);

/// Membership bit-vector over a finite universe.
using Subset = boost::dynamic_bitset<std::uint64_t>;

/// Row-major n x n table of indices (join, meet, composition tables).
using IndexTable = std::vector<std::vector<Index>>;
using BoolTable = std::vector<std::vector<bool>>;

/// Default carrier size cap for generators and closures.
inline constexpr Index kDefaultCap = 4096;

/// Malformed input: wrong shapes, out-of-range indices, unparsable documents.
class FormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Well-formed input that violates a structural invariant (poset laws,
/// semilattice laws, commutation, closure, ...).
class StructureError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A size guard was exceeded.
class CapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Outcome of a predicate check. A failing check carries a human-readable
/// message and the (lexicographically minimal) index witness.
class Check {
 public:
  static Check pass() { return Check(); }
  static Check fail(std::string message, std::vector<Index> witness = {}) {
    Check c;
    c.ok_ = false;
    c.message_ = std::move(message);
    c.witness_ = std::move(witness);
    return c;
  }

  bool ok() const { return ok_; }
  explicit operator bool() const { return ok_; }
  const std::string& message() const { return message_; }
  const std::vector<Index>& witness() const { return witness_; }

 private:
  bool ok_ = true;
  std::string message_;
  std::vector<Index> witness_;
};

inline Subset empty_set(Index n) { return Subset(n); }

inline Subset full_set(Index n) {
  Subset s(n);
  s.set();
  return s;
}

inline Subset singleton(Index n, Index x) {
  Subset s(n);
  s.set(x);
  return s;
}

inline std::vector<Index> members(const Subset& s) {
  std::vector<Index> out;
  out.reserve(s.count());
  for (auto i = s.find_first(); i != Subset::npos; i = s.find_next(i)) out.push_back(i);
  return out;
}

inline Subset subset_of(Index n, const std::vector<Index>& xs) {
  Subset s(n);
  for (Index x : xs) s.set(x);
  return s;
}

/// Canonical order on equal-size subsets: larger first, then by the sorted
/// member lists. Families are kept sorted under this order.
struct SubsetOrder {
  bool operator()(const Subset& a, const Subset& b) const {
    auto ca = a.count();
    auto cb = b.count();
    if (ca != cb) return ca > cb;
    auto i = a.find_first();
    auto j = b.find_first();
    while (i != Subset::npos && j != Subset::npos) {
      if (i != j) return i < j;
      i = a.find_next(i);
      j = b.find_next(j);
    }
    return false;
  }
};

/// Set-builder notation for diagnostics: {0,2,3}.
std::string format_set(const Subset& s);
std::string format_indices(const std::vector<Index>& xs);

}  // namespace infalg
