#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <set>

#include <fmt/format.h>

#include "infalg/examples.hpp"

namespace infalg {

namespace {

using Code = std::uint64_t;

// Bit a*n+b set when a < b.
Code encode_strict(const BoolTable& t) {
  const Index n = t.size();
  Code c = 0;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (a != b && t[a][b]) c |= Code{1} << (a * n + b);
  return c;
}

BoolTable permuted(const BoolTable& t, const std::vector<Index>& perm) {
  const Index n = t.size();
  BoolTable out(n, std::vector<bool>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) out[perm[a]][perm[b]] = t[a][b];
  return out;
}

std::vector<std::vector<Index>> all_permutations(Index n) {
  std::vector<Index> p(n);
  std::iota(p.begin(), p.end(), Index{0});
  std::vector<std::vector<Index>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// Permutations of the points preserving and reflecting the order.
std::vector<std::vector<Index>> automorphisms(const FinitePoset& order) {
  const BoolTable t = order.table();
  std::vector<std::vector<Index>> out;
  for (const auto& p : all_permutations(order.size()))
    if (permuted(t, p) == t) out.push_back(p);
  return out;
}

std::vector<Index> inverse(const std::vector<Index>& p) {
  std::vector<Index> inv(p.size());
  for (Index i = 0; i < p.size(); ++i) inv[p[i]] = i;
  return inv;
}

}  // namespace

std::vector<FinitePoset> posets_up_to_iso(Index n) {
  if (n > 6) throw CapExceeded("poset enumeration is limited to 6 points");
  if (n == 0) return {};
  std::vector<std::pair<Index, Index>> pairs;
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (a != b) pairs.emplace_back(a, b);
  const auto perms = all_permutations(n);

  std::map<Code, BoolTable> canonical;
  for (Code mask = 0; mask < (Code{1} << pairs.size()); ++mask) {
    BoolTable t(n, std::vector<bool>(n, false));
    for (Index a = 0; a < n; ++a) t[a][a] = true;
    for (Index i = 0; i < pairs.size(); ++i)
      if (mask >> i & 1) t[pairs[i].first][pairs[i].second] = true;
    if (!verify_poset(t).empty()) continue;
    Code best = ~Code{0};
    BoolTable best_table;
    for (const auto& p : perms) {
      BoolTable q = permuted(t, p);
      const Code c = encode_strict(q);
      if (c < best) {
        best = c;
        best_table = std::move(q);
      }
    }
    canonical.try_emplace(best, std::move(best_table));
  }
  std::vector<FinitePoset> out;
  for (const auto& [code, table] : canonical) out.push_back(FinitePoset::from_table(table));
  return out;
}

std::vector<FiniteLattice> distributive_lattices(Index max_n) {
  if (max_n > 6) throw CapExceeded("distributive lattice enumeration is limited to 6 elements");
  std::vector<FiniteLattice> out;
  for (Index n = 2; n <= max_n; ++n) {
    const Index m = n - 2;
    std::vector<FinitePoset> middles = m == 0 ? std::vector<FinitePoset>{FinitePoset()} : posets_up_to_iso(m);
    for (const auto& mid : middles) {
      BoolTable t(n, std::vector<bool>(n, false));
      for (Index a = 0; a < n; ++a) {
        t[0][a] = true;
        t[a][n - 1] = true;
        t[a][a] = true;
      }
      for (Index a = 0; a < m; ++a)
        for (Index b = 0; b < m; ++b) t[a + 1][b + 1] = mid.leq(a, b);
      try {
        FiniteLattice lat = FiniteLattice::from_order(FinitePoset::from_table(t));
        if (is_distributive(lat)) out.push_back(std::move(lat));
      } catch (const StructureError&) {
        // some pair lacks a bound: not a lattice
      }
    }
  }
  return out;
}

std::vector<std::vector<Index>> extraction_operators(const FiniteLattice& lat, bool require_meet_preservation) {
  const Index n = lat.size();
  std::vector<std::vector<Index>> out;
  std::vector<Index> map(n);
  std::function<void(Index)> grow = [&](Index x) {
    if (x == n) {
      if (!check_extraction_map(lat.semilattice(), map)) return;
      if (require_meet_preservation)
        for (Index a = 0; a < n; ++a)
          for (Index b = a + 1; b < n; ++b)
            if (map[lat.meet(a, b)] != lat.meet(map[a], map[b])) return;
      out.push_back(map);
      return;
    }
    const auto& below = lat.order().down(x);
    for (auto y = below.find_first(); y != Subset::npos; y = below.find_next(y)) {
      if (x == lat.zero() && y != x) continue;
      map[x] = y;
      grow(x + 1);
    }
  };
  grow(0);
  return out;
}

std::vector<InfoAlgebra> enumerate_small_algebras(Index max_n) {
  std::vector<InfoAlgebra> out;
  for (const auto& lat : distributive_lattices(max_n)) {
    const auto ops = extraction_operators(lat, true);
    const Index k = ops.size();
    std::map<std::vector<Index>, Index> op_index;
    for (Index i = 0; i < k; ++i) op_index.emplace(ops[i], i);

    IndexTable compose(k, std::vector<Index>(k, npos));
    for (Index i = 0; i < k; ++i)
      for (Index j = 0; j < k; ++j) {
        auto ij = compose_maps(ops[i], ops[j]);
        if (ij != compose_maps(ops[j], ops[i])) continue;
        auto it = op_index.find(ij);
        if (it != op_index.end()) compose[i][j] = it->second;
      }

    // Operators transported along each automorphism.
    std::vector<std::vector<Index>> moved;
    for (const auto& p : automorphisms(lat.order())) {
      const auto inv = inverse(p);
      std::vector<Index> image(k);
      for (Index i = 0; i < k; ++i) {
        std::vector<Index> m(lat.size());
        for (Index x = 0; x < lat.size(); ++x) m[x] = p[ops[i][inv[x]]];
        image[i] = op_index.at(m);
      }
      moved.push_back(std::move(image));
    }

    std::set<std::vector<Index>> seen;
    std::vector<Index> chosen;
    std::function<void(Index)> grow = [&](Index i) {
      if (i == k) {
        if (chosen.empty()) return;
        std::set<Index> members(chosen.begin(), chosen.end());
        for (Index a : chosen)
          for (Index b : chosen)
            if (!members.count(compose[a][b])) return;
        std::vector<Index> key = chosen;
        for (const auto& image : moved) {
          std::vector<Index> alt;
          for (Index a : chosen) alt.push_back(image[a]);
          std::sort(alt.begin(), alt.end());
          key = std::min(key, alt);
        }
        if (!seen.insert(key).second) return;
        std::vector<Extractor> ex;
        for (Index a : chosen) ex.push_back({fmt::format("e{}", a), ops[a]});
        out.emplace_back(lat.semilattice(), std::move(ex));
        return;
      }
      grow(i + 1);
      for (Index a : chosen)
        if (compose[a][i] == npos) return;
      chosen.push_back(i);
      grow(i + 1);
      chosen.pop_back();
    };
    grow(0);
  }
  return out;
}

std::vector<QSpace> enumerate_small_spaces(Index max_points) {
  if (max_points > 4) throw CapExceeded("space enumeration is limited to 4 points");
  std::vector<QSpace> out;
  for (Index n = 1; n <= max_points; ++n) {
    std::vector<Equivalence> all = all_equivalences(n);
    for (const auto& order : posets_up_to_iso(n)) {
      std::vector<Equivalence> sep;
      for (const auto& e : all)
        if (check_separating(order, e)) sep.push_back(e);
      const Index k = sep.size();
      auto find = [&](const Equivalence& e) -> Index {
        auto it = std::find(sep.begin(), sep.end(), e);
        return it == sep.end() ? npos : static_cast<Index>(it - sep.begin());
      };
      IndexTable prod(k, std::vector<Index>(k, npos));
      for (Index i = 0; i < k; ++i)
        for (Index j = 0; j < k; ++j) {
          auto s = star(sep[i], sep[j]);
          if (s.commuting()) prod[i][j] = find(*s.product);
        }

      std::vector<std::vector<Index>> moved;
      for (const auto& p : automorphisms(order)) {
        std::vector<Index> image(k);
        for (Index i = 0; i < k; ++i) {
          std::vector<Index> b(n);
          for (Index x = 0; x < n; ++x) b[p[x]] = sep[i].block(x);
          image[i] = find(Equivalence(std::move(b)));
        }
        moved.push_back(std::move(image));
      }

      std::set<std::vector<Index>> seen;
      std::vector<Index> chosen;
      std::function<void(Index)> grow = [&](Index i) {
        if (i == k) {
          if (chosen.empty()) return;
          std::set<Index> members(chosen.begin(), chosen.end());
          for (Index a : chosen)
            for (Index b : chosen)
              if (!members.count(prod[a][b])) return;
          std::vector<Index> key = chosen;
          for (const auto& image : moved) {
            std::vector<Index> alt;
            for (Index a : chosen) alt.push_back(image[a]);
            std::sort(alt.begin(), alt.end());
            key = std::min(key, alt);
          }
          if (!seen.insert(key).second) return;
          std::vector<std::string> labels;
          std::vector<Equivalence> members_list;
          for (Index a : chosen) {
            labels.push_back(fmt::format("t{}", a));
            members_list.push_back(sep[a]);
          }
          out.push_back(QSpace::create(order, StarFamily::create(n, std::move(labels), std::move(members_list))));
          return;
        }
        grow(i + 1);
        for (Index a : chosen)
          if (prod[a][i] == npos) return;
        chosen.push_back(i);
        grow(i + 1);
        chosen.pop_back();
      };
      grow(0);
    }
  }
  return out;
}

namespace {

// Monotone maps fixing unit and zero that satisfy `accept` at the leaf.
std::vector<std::vector<Index>> bounded_monotone_maps(const FinitePoset& a, Index unit_a, Index zero_a,
                                                      const FinitePoset& b, Index unit_b, Index zero_b,
                                                      const std::function<bool(const std::vector<Index>&)>& accept) {
  const Index n = a.size();
  std::vector<std::vector<Index>> out;
  std::vector<Index> f(n, npos);
  std::function<void(Index)> grow = [&](Index x) {
    if (x == n) {
      if (accept(f)) out.push_back(f);
      return;
    }
    for (Index y = 0; y < b.size(); ++y) {
      if (x == unit_a && y != unit_b) continue;
      if (x == zero_a && y != zero_b) continue;
      bool monotone = true;
      for (Index z = 0; z < x && monotone; ++z) {
        if (a.leq(z, x) && !b.leq(f[z], y)) monotone = false;
        if (a.leq(x, z) && !b.leq(y, f[z])) monotone = false;
      }
      if (!monotone) continue;
      f[x] = y;
      grow(x + 1);
    }
    f[x] = npos;
  };
  grow(0);
  return out;
}

}  // namespace

std::vector<std::vector<Index>> bounded_lattice_homomorphisms(const FiniteLattice& a, const FiniteLattice& b) {
  return bounded_monotone_maps(a.order(), a.unit(), a.zero(), b.order(), b.unit(), b.zero(),
                               [&](const std::vector<Index>& f) {
                                 for (Index x = 0; x < a.size(); ++x)
                                   for (Index y = x + 1; y < a.size(); ++y)
                                     if (f[a.join(x, y)] != b.join(f[x], f[y]) || f[a.meet(x, y)] != b.meet(f[x], f[y]))
                                       return false;
                                 return true;
                               });
}

std::vector<AlgebraMorphism> enumerate_homomorphisms(const InfoAlgebra& a, const InfoAlgebra& b) {
  const auto element_maps =
      bounded_monotone_maps(a.order(), a.unit(), a.zero(), b.order(), b.unit(), b.zero(), [&](const auto& f) {
        for (Index x = 0; x < a.size(); ++x)
          for (Index y = x + 1; y < a.size(); ++y)
            if (f[a.combine(x, y)] != b.combine(f[x], f[y])) return false;
        return true;
      });

  std::vector<AlgebraMorphism> out;
  const Index k = a.extractor_count();
  for (const auto& f : element_maps) {
    std::vector<std::vector<Index>> choices(k);
    for (Index e = 0; e < k; ++e)
      for (Index h = 0; h < b.extractor_count(); ++h) {
        bool ok = true;
        for (Index x = 0; x < a.size() && ok; ++x) ok = f[a.apply(e, x)] == b.apply(h, f[x]);
        if (ok) choices[e].push_back(h);
      }
    AlgebraMorphism m{f, std::vector<Index>(k)};
    std::function<void(Index)> grow = [&](Index e) {
      if (e == k) {
        if (is_homomorphism(m, a, b)) out.push_back(m);
        return;
      }
      for (Index h : choices[e]) {
        m.g[e] = h;
        grow(e + 1);
      }
    };
    grow(0);
  }
  return out;
}

}  // namespace infalg
