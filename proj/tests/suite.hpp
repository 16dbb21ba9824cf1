#pragma once

#include <string>
#include <utility>
#include <vector>

#include "infalg/examples.hpp"
#include "oracles.hpp"

namespace suite {

using namespace infalg;

struct Named {
  std::string name;
  InfoAlgebra algebra;
};

/// Four-element Boolean lattice in its own order: 0 < 1,2 < 3.
inline FiniteLattice square_lattice() {
  BoolTable t(4, std::vector<bool>(4, false));
  for (Index i = 0; i < 4; ++i) t[i][i] = t[0][i] = t[i][3] = true;
  return FiniteLattice::from_order(FinitePoset::from_table(t));
}

/// The generated examples used across the tests.
inline std::vector<Named> generated() {
  std::vector<Named> out;
  out.push_back({"string 1 1", gen_string(1, 1)});
  out.push_back({"string 1 3", gen_string(1, 3)});
  out.push_back({"string 2 2", gen_string(2, 2)});
  out.push_back({"string 2 3", gen_string(2, 3)});
  out.push_back({"string 3 2", gen_string(3, 2)});
  out.push_back({"multivariate 2", gen_multivariate({2}).algebra()});
  out.push_back({"multivariate 3", gen_multivariate({3}).algebra()});
  out.push_back({"multivariate 2 2", gen_multivariate({2, 2}).algebra()});
  out.push_back({"multivariate 2 3", gen_multivariate({2, 3}).algebra()});
  out.push_back({"lattice 2-chain 2", gen_lattice_valued({2}, FiniteLattice::chain(2))});
  out.push_back({"lattice 3-chain 2", gen_lattice_valued({2}, FiniteLattice::chain(3))});
  out.push_back({"lattice 3-chain 3", gen_lattice_valued({3}, FiniteLattice::chain(3))});
  out.push_back({"lattice 2-chain 2 2", gen_lattice_valued({2, 2}, FiniteLattice::chain(2))});
  out.push_back({"lattice square 2", gen_lattice_valued({2}, square_lattice())});
  return out;
}

inline oracle::Rel rel(const FinitePoset& p) { return p.table(); }

inline oracle::Set to_set(const Subset& s) {
  oracle::Set out(s.size());
  for (Index i = 0; i < s.size(); ++i) out[i] = s[i];
  return out;
}

inline Subset from_set(const oracle::Set& s) {
  Subset out(s.size());
  for (Index i = 0; i < s.size(); ++i)
    if (s[i]) out.set(i);
  return out;
}

inline std::vector<std::vector<Index>> maps_of(const InfoAlgebra& a) {
  std::vector<std::vector<Index>> out;
  for (const auto& e : a.extractors()) out.push_back(e.map);
  return out;
}

}  // namespace suite
