#pragma once

// Brute-force reference implementations. They work on plain tables and
// vectors of bool, share no code with the library, and favour obviousness
// over speed.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace oracle {

using Idx = std::size_t;
using Table = std::vector<std::vector<Idx>>;
using Rel = std::vector<std::vector<bool>>;
using Set = std::vector<bool>;

inline Rel leq_from_join(const Table& join) {
  const Idx n = join.size();
  Rel r(n, std::vector<bool>(n));
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b) r[a][b] = join[a][b] == b;
  return r;
}

inline std::optional<Idx> lub(const Rel& leq, Idx a, Idx b) {
  const Idx n = leq.size();
  for (Idx c = 0; c < n; ++c) {
    if (!leq[a][c] || !leq[b][c]) continue;
    bool least = true;
    for (Idx d = 0; d < n; ++d)
      if (leq[a][d] && leq[b][d] && !leq[c][d]) least = false;
    if (least) return c;
  }
  return std::nullopt;
}

inline std::optional<Idx> glb(const Rel& leq, Idx a, Idx b) {
  const Idx n = leq.size();
  for (Idx c = 0; c < n; ++c) {
    if (!leq[c][a] || !leq[c][b]) continue;
    bool greatest = true;
    for (Idx d = 0; d < n; ++d)
      if (leq[d][a] && leq[d][b] && !leq[d][c]) greatest = false;
    if (greatest) return c;
  }
  return std::nullopt;
}

inline std::optional<Idx> glb_of(const Rel& leq, const Set& xs) {
  const Idx n = leq.size();
  auto lower = [&](Idx c) {
    for (Idx x = 0; x < n; ++x)
      if (xs[x] && !leq[c][x]) return false;
    return true;
  };
  for (Idx c = 0; c < n; ++c) {
    if (!lower(c)) continue;
    bool greatest = true;
    for (Idx d = 0; d < n; ++d)
      if (lower(d) && !leq[d][c]) greatest = false;
    if (greatest) return c;
  }
  return std::nullopt;
}

inline bool is_partial_order(const Rel& leq) {
  const Idx n = leq.size();
  for (Idx a = 0; a < n; ++a) {
    if (!leq[a][a]) return false;
    for (Idx b = 0; b < n; ++b) {
      if (a != b && leq[a][b] && leq[b][a]) return false;
      for (Idx c = 0; c < n; ++c)
        if (leq[a][b] && leq[b][c] && !leq[a][c]) return false;
    }
  }
  return true;
}

inline bool distributive(const Rel& leq) {
  const Idx n = leq.size();
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      for (Idx c = 0; c < n; ++c) {
        auto l = glb(leq, a, *lub(leq, b, c));
        auto r = lub(leq, *glb(leq, a, b), *glb(leq, a, c));
        if (*l != *r) return false;
      }
  return true;
}

inline Idx greatest(const Rel& leq) {
  for (Idx c = 0; c < leq.size(); ++c) {
    bool top = true;
    for (Idx d = 0; d < leq.size(); ++d) top = top && leq[d][c];
    if (top) return c;
  }
  return leq.size();
}

inline Idx least(const Rel& leq) {
  for (Idx c = 0; c < leq.size(); ++c) {
    bool bottom = true;
    for (Idx d = 0; d < leq.size(); ++d) bottom = bottom && leq[c][d];
    if (bottom) return c;
  }
  return leq.size();
}

inline Idx upper_cover_count(const Rel& leq, Idx a) {
  const Idx n = leq.size();
  Idx count = 0;
  for (Idx b = 0; b < n; ++b) {
    if (b == a || !leq[a][b]) continue;
    bool cover = true;
    for (Idx c = 0; c < n; ++c)
      if (c != a && c != b && leq[a][c] && leq[c][b]) cover = false;
    if (cover) ++count;
  }
  return count;
}

inline std::vector<Idx> meet_irreducibles(const Rel& leq) {
  std::vector<Idx> out;
  for (Idx a = 0; a < leq.size(); ++a)
    if (upper_cover_count(leq, a) == 1) out.push_back(a);
  return out;
}

inline std::vector<Set> all_subsets(Idx n) {
  std::vector<Set> out;
  for (Idx mask = 0; mask < (Idx{1} << n); ++mask) {
    Set s(n);
    for (Idx i = 0; i < n; ++i) s[i] = (mask >> i) & 1;
    out.push_back(std::move(s));
  }
  return out;
}

inline bool is_up_set(const Rel& leq, const Set& s) {
  for (Idx a = 0; a < leq.size(); ++a)
    for (Idx b = 0; b < leq.size(); ++b)
      if (s[a] && leq[a][b] && !s[b]) return false;
  return true;
}

inline std::vector<Set> up_sets(const Rel& leq) {
  std::vector<Set> out;
  for (auto& s : all_subsets(leq.size()))
    if (is_up_set(leq, s)) out.push_back(s);
  return out;
}

inline std::vector<Idx> atoms(const Rel& leq, Idx zero) {
  std::vector<Idx> out;
  for (Idx a = 0; a < leq.size(); ++a) {
    if (a == zero) continue;
    bool atom = true;
    for (Idx b = 0; b < leq.size(); ++b)
      if (b != a && b != zero && leq[a][b]) atom = false;
    if (atom) out.push_back(a);
  }
  return out;
}

inline std::optional<std::vector<Idx>> complements(const Rel& leq) {
  const Idx n = leq.size();
  const Idx top = greatest(leq);
  const Idx bottom = least(leq);
  std::vector<Idx> out(n, n);
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      if (*lub(leq, a, b) == top && *glb(leq, a, b) == bottom && out[a] == n) out[a] = b;
  for (Idx a = 0; a < n; ++a)
    if (out[a] == n) return std::nullopt;
  return out;
}

// Equivalences as explicit relations.

inline Rel relation_of_blocks(const std::vector<Idx>& block_of) {
  const Idx n = block_of.size();
  Rel r(n, std::vector<bool>(n));
  for (Idx u = 0; u < n; ++u)
    for (Idx v = 0; v < n; ++v) r[u][v] = block_of[u] == block_of[v];
  return r;
}

inline Rel kernel_relation(const std::vector<Idx>& map) { return relation_of_blocks(map); }

inline Rel compose(const Rel& r, const Rel& s) {
  const Idx n = r.size();
  Rel out(n, std::vector<bool>(n));
  for (Idx u = 0; u < n; ++u)
    for (Idx v = 0; v < n; ++v)
      if (r[u][v])
        for (Idx w = 0; w < n; ++w)
          if (s[v][w]) out[u][w] = true;
  return out;
}

inline bool is_equivalence(const Rel& r) {
  const Idx n = r.size();
  for (Idx u = 0; u < n; ++u) {
    if (!r[u][u]) return false;
    for (Idx v = 0; v < n; ++v) {
      if (r[u][v] != r[v][u]) return false;
      for (Idx w = 0; w < n; ++w)
        if (r[u][v] && r[v][w] && !r[u][w]) return false;
    }
  }
  return true;
}

inline Rel transitive_closure(Rel r) {
  const Idx n = r.size();
  for (Idx k = 0; k < n; ++k)
    for (Idx i = 0; i < n; ++i)
      for (Idx j = 0; j < n; ++j)
        if (r[i][k] && r[k][j]) r[i][j] = true;
  return r;
}

inline Rel rel_union(const Rel& r, const Rel& s) {
  Rel out = r;
  for (Idx i = 0; i < r.size(); ++i)
    for (Idx j = 0; j < r.size(); ++j) out[i][j] = r[i][j] || s[i][j];
  return out;
}

inline bool rel_subset(const Rel& r, const Rel& s) {
  for (Idx i = 0; i < r.size(); ++i)
    for (Idx j = 0; j < r.size(); ++j)
      if (r[i][j] && !s[i][j]) return false;
  return true;
}

inline Set saturate(const Rel& theta, const Set& x) {
  const Idx n = theta.size();
  Set out(n);
  for (Idx u = 0; u < n; ++u)
    for (Idx v = 0; v < n; ++v)
      if (x[v] && theta[u][v]) out[u] = true;
  return out;
}

inline Set set_and(const Set& a, const Set& b) {
  Set out(a.size());
  for (Idx i = 0; i < a.size(); ++i) out[i] = a[i] && b[i];
  return out;
}

inline Set set_or(const Set& a, const Set& b) {
  Set out(a.size());
  for (Idx i = 0; i < a.size(); ++i) out[i] = a[i] || b[i];
  return out;
}

inline bool set_leq(const Set& a, const Set& b) {
  for (Idx i = 0; i < a.size(); ++i)
    if (a[i] && !b[i]) return false;
  return true;
}

/// Set partitions of {0..n-1} as restricted-growth block arrays, generated
/// by recursion on the last element.
inline std::vector<std::vector<Idx>> partitions(Idx n) {
  std::vector<std::vector<Idx>> out;
  std::vector<Idx> cur;
  std::function<void(Idx)> rec = [&](Idx used) {
    if (cur.size() == n) {
      out.push_back(cur);
      return;
    }
    for (Idx b = 0; b <= used; ++b) {
      cur.push_back(b);
      rec(b == used ? used + 1 : used);
      cur.pop_back();
    }
  };
  rec(0);
  return out;
}

/// All partial orders on n labelled points.
inline std::vector<Rel> labelled_posets(Idx n) {
  std::vector<std::pair<Idx, Idx>> off;
  for (Idx a = 0; a < n; ++a)
    for (Idx b = 0; b < n; ++b)
      if (a != b) off.push_back({a, b});
  std::vector<Rel> out;
  for (Idx mask = 0; mask < (Idx{1} << off.size()); ++mask) {
    Rel r(n, std::vector<bool>(n));
    for (Idx a = 0; a < n; ++a) r[a][a] = true;
    for (Idx i = 0; i < off.size(); ++i)
      if ((mask >> i) & 1) r[off[i].first][off[i].second] = true;
    if (is_partial_order(r)) out.push_back(std::move(r));
  }
  return out;
}

/// The semantic definition: saturation keeps up-sets up-sets, and any two
/// inequivalent points are split by a saturated up-set.
inline bool separating(const Rel& leq, const Rel& theta) {
  const Idx n = leq.size();
  const auto ups = up_sets(leq);
  for (const auto& u : ups)
    if (!is_up_set(leq, saturate(theta, u))) return false;
  for (Idx p = 0; p < n; ++p)
    for (Idx q = 0; q < n; ++q) {
      if (theta[p][q]) continue;
      bool split = false;
      for (const auto& u : ups)
        if (saturate(theta, u) == u && u[p] != u[q]) split = true;
      if (!split) return false;
    }
  return true;
}

/// Axioms of an extraction family on a join table, straight from their
/// statements; closure included.
inline bool extraction_axioms(const Table& join, Idx unit, Idx zero, const std::vector<std::vector<Idx>>& maps) {
  const Idx n = join.size();
  const Rel leq = leq_from_join(join);
  for (const auto& e : maps) {
    if (e[zero] != zero || e[unit] != unit) return false;
    for (Idx x = 0; x < n; ++x) {
      if (!leq[e[x]][x] || e[e[x]] != e[x]) return false;
      for (Idx y = 0; y < n; ++y)
        if (e[join[e[x]][y]] != join[e[x]][e[y]]) return false;
    }
  }
  for (const auto& e : maps)
    for (const auto& f : maps) {
      std::vector<Idx> ef(n), fe(n);
      for (Idx x = 0; x < n; ++x) {
        ef[x] = e[f[x]];
        fe[x] = f[e[x]];
      }
      if (ef != fe) return false;
      bool found = false;
      for (const auto& g : maps) found = found || g == ef;
      if (!found) return false;
    }
  return true;
}

}  // namespace oracle
