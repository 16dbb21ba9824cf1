#include "infalg/order.hpp"

#include <algorithm>
#include <numeric>

#include <fmt/format.h>

namespace infalg {

std::string format_indices(const std::vector<Index>& xs) {
  return fmt::format("({})", fmt::join(xs, ","));
}

std::string format_set(const Subset& s) {
  return fmt::format("{{{}}}", fmt::join(members(s), ","));
}

std::string to_string(PosetViolation::Axiom axiom) {
  switch (axiom) {
    case PosetViolation::Axiom::reflexivity:
      return "reflexivity";
    case PosetViolation::Axiom::antisymmetry:
      return "antisymmetry";
    case PosetViolation::Axiom::transitivity:
      return "transitivity";
  }
  return "?";
}

std::vector<PosetViolation> verify_poset(const BoolTable& leq) {
  const Index n = leq.size();
  for (Index i = 0; i < n; ++i) {
    if (leq[i].size() != n) {
      throw FormatError(fmt::format("order table is not square: row {} has {} entries, expected {}",
                                    i, leq[i].size(), n));
    }
  }
  std::vector<PosetViolation> out;
  for (Index a = 0; a < n; ++a) {
    if (!leq[a][a]) {
      out.push_back({PosetViolation::Axiom::reflexivity, {a, a}});
      break;
    }
  }
  [&] {
    for (Index a = 0; a < n; ++a)
      for (Index b = a + 1; b < n; ++b)
        if (leq[a][b] && leq[b][a]) {
          out.push_back({PosetViolation::Axiom::antisymmetry, {a, b}});
          return;
        }
  }();
  [&] {
    for (Index a = 0; a < n; ++a)
      for (Index b = 0; b < n; ++b) {
        if (!leq[a][b]) continue;
        for (Index c = 0; c < n; ++c)
          if (leq[b][c] && !leq[a][c]) {
            out.push_back({PosetViolation::Axiom::transitivity, {a, b, c}});
            return;
          }
      }
  }();
  return out;
}

FinitePoset::FinitePoset(std::vector<Subset> up) : up_(std::move(up)) {
  const Index n = up_.size();
  down_.assign(n, Subset(n));
  for (Index a = 0; a < n; ++a)
    for (auto b = up_[a].find_first(); b != Subset::npos; b = up_[a].find_next(b)) down_[b].set(a);
}

FinitePoset FinitePoset::from_table(const BoolTable& leq) {
  auto violations = verify_poset(leq);
  if (!violations.empty()) {
    const auto& v = violations.front();
    throw StructureError(
        fmt::format("not a partial order: {} violated at {}", to_string(v.axiom), format_indices(v.witness)));
  }
  const Index n = leq.size();
  std::vector<Subset> up(n, Subset(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (leq[a][b]) up[a].set(b);
  return FinitePoset(std::move(up));
}

FinitePoset FinitePoset::from_up_sets(std::vector<Subset> up) {
  const Index n = up.size();
  for (Index a = 0; a < n; ++a)
    if (up[a].size() != n) throw FormatError("order rows must have one entry per element");
  // Word-parallel screen; the table path reports the minimal witness.
  bool valid = true;
  for (Index a = 0; a < n && valid; ++a) {
    valid = up[a][a];
    for (auto b = up[a].find_first(); b != Subset::npos && valid; b = up[a].find_next(b))
      valid = up[b].is_subset_of(up[a]) && (b == a || !up[b][a]);
  }
  if (valid) return FinitePoset(std::move(up));
  BoolTable t(n, std::vector<bool>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) t[a][b] = up[a][b];
  return from_table(t);
}

FinitePoset FinitePoset::chain(Index n) {
  std::vector<Subset> up(n, Subset(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = a; b < n; ++b) up[a].set(b);
  return FinitePoset(std::move(up));
}

FinitePoset FinitePoset::antichain(Index n) {
  std::vector<Subset> up;
  up.reserve(n);
  for (Index a = 0; a < n; ++a) up.push_back(singleton(n, a));
  return FinitePoset(std::move(up));
}

std::vector<Index> FinitePoset::upper_covers(Index a) const {
  std::vector<Index> out;
  Subset strict = up_[a];
  strict.reset(a);
  for (auto b = strict.find_first(); b != Subset::npos; b = strict.find_next(b)) {
    Subset between = strict & down_[b];
    between.reset(b);
    if (between.none()) out.push_back(b);
  }
  return out;
}

bool FinitePoset::is_up_set(const Subset& s) const {
  for (auto a = s.find_first(); a != Subset::npos; a = s.find_next(a))
    if (!up_[a].is_subset_of(s)) return false;
  return true;
}

bool FinitePoset::is_antichain() const {
  for (Index a = 0; a < size(); ++a)
    if (up_[a].count() != 1) return false;
  return true;
}

BoolTable FinitePoset::table() const {
  const Index n = size();
  BoolTable t(n, std::vector<bool>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b) t[a][b] = up_[a][b];
  return t;
}

BoundedJoinSemilattice BoundedJoinSemilattice::from_join_table(IndexTable join, Index unit, Index zero) {
  const Index n = join.size();
  if (n == 0) throw FormatError("empty carrier");
  for (Index a = 0; a < n; ++a) {
    if (join[a].size() != n)
      throw FormatError(fmt::format("join table is not square: row {} has {} entries, expected {}", a,
                                    join[a].size(), n));
    for (Index b = 0; b < n; ++b)
      if (join[a][b] >= n) throw FormatError(fmt::format("join[{}][{}] = {} out of range", a, b, join[a][b]));
  }
  if (unit >= n || zero >= n) throw FormatError("unit or zero out of range");

  for (Index a = 0; a < n; ++a)
    if (join[a][a] != a) throw StructureError(fmt::format("join not idempotent at ({})", a));
  for (Index a = 0; a < n; ++a)
    for (Index b = a + 1; b < n; ++b)
      if (join[a][b] != join[b][a]) throw StructureError(fmt::format("join not commutative at ({},{})", a, b));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c)
        if (join[join[a][b]][c] != join[a][join[b][c]])
          throw StructureError(fmt::format("join not associative at ({},{},{})", a, b, c));
  for (Index a = 0; a < n; ++a) {
    if (join[a][unit] != a) throw StructureError(fmt::format("unit {} not neutral at ({})", unit, a));
    if (join[a][zero] != zero) throw StructureError(fmt::format("zero {} not absorbing at ({})", zero, a));
  }
  return from_trusted_join_table(std::move(join), unit, zero);
}

BoundedJoinSemilattice BoundedJoinSemilattice::from_trusted_join_table(IndexTable join, Index unit, Index zero) {
  const Index n = join.size();
  std::vector<Subset> up(n, Subset(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      if (join[a][b] == b) up[a].set(b);

  BoundedJoinSemilattice sl;
  sl.order_ = FinitePoset::from_up_sets(std::move(up));
  sl.join_ = std::move(join);
  sl.unit_ = unit;
  sl.zero_ = zero;
  return sl;
}

BoundedJoinSemilattice BoundedJoinSemilattice::from_order(FinitePoset order) {
  const Index n = order.size();
  if (n == 0) throw FormatError("empty carrier");
  Index unit = npos;
  Index zero = npos;
  for (Index a = 0; a < n; ++a) {
    if (order.up(a).all()) unit = a;
    if (order.down(a).all()) zero = a;
  }
  if (unit == npos) throw StructureError("order has no least element (unit)");
  if (zero == npos) throw StructureError("order has no greatest element (zero)");

  IndexTable join(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = a; b < n; ++b) {
      Subset upper = order.up(a) & order.up(b);
      Index least = npos;
      for (auto c = upper.find_first(); c != Subset::npos; c = upper.find_next(c))
        if (upper.is_subset_of(order.up(c))) {
          least = c;
          break;
        }
      if (least == npos) throw StructureError(fmt::format("no least upper bound for ({},{})", a, b));
      join[a][b] = join[b][a] = least;
    }

  BoundedJoinSemilattice sl;
  sl.order_ = std::move(order);
  sl.join_ = std::move(join);
  sl.unit_ = unit;
  sl.zero_ = zero;
  return sl;
}

FiniteLattice::FiniteLattice(BoundedJoinSemilattice sl) : sl_(std::move(sl)) {
  const Index n = sl_.size();
  meet_.assign(n, std::vector<Index>(n));
  for (Index a = 0; a < n; ++a)
    for (Index b = a; b < n; ++b) {
      auto m = glb(sl_.order(), a, b);
      if (!m) throw StructureError(fmt::format("no greatest lower bound for ({},{})", a, b));
      meet_[a][b] = meet_[b][a] = *m;
    }
}

Index lub(const BoundedJoinSemilattice& sl, Index a, Index b) { return sl.join(a, b); }

std::optional<Index> glb(const FinitePoset& order, const Subset& xs) {
  Subset lower = full_set(order.size());
  for (auto x = xs.find_first(); x != Subset::npos; x = xs.find_next(x)) lower &= order.down(x);
  for (auto c = lower.find_first(); c != Subset::npos; c = lower.find_next(c))
    if (lower.is_subset_of(order.down(c))) return c;
  return std::nullopt;
}

std::optional<Index> glb(const FinitePoset& order, Index a, Index b) {
  Subset lower = order.down(a) & order.down(b);
  for (auto c = lower.find_first(); c != Subset::npos; c = lower.find_next(c))
    if (lower.is_subset_of(order.down(c))) return c;
  return std::nullopt;
}

Check is_distributive(const FiniteLattice& lat) {
  const Index n = lat.size();
  for (Index a = 0; a < n; ++a)
    for (Index b = 0; b < n; ++b)
      for (Index c = 0; c < n; ++c) {
        Index lhs = lat.meet(a, lat.join(b, c));
        Index rhs = lat.join(lat.meet(a, b), lat.meet(a, c));
        if (lhs != rhs)
          return Check::fail(fmt::format("a^(bvc) != (a^b)v(a^c) at ({},{},{})", a, b, c), {a, b, c});
      }
  return Check::pass();
}

Complements complements(const FiniteLattice& lat) {
  const Index n = lat.size();
  Complements out;
  out.map.assign(n, npos);
  for (Index a = 0; a < n; ++a) {
    for (Index b = 0; b < n; ++b)
      if (lat.join(a, b) == lat.zero() && lat.meet(a, b) == lat.unit()) {
        out.map[a] = b;
        break;
      }
    if (out.map[a] == npos && !out.missing) out.missing = a;
  }
  return out;
}

std::vector<Index> meet_irreducibles(const FiniteLattice& lat) {
  const Index n = lat.size();
  std::vector<Index> by_meet;
  std::vector<Index> by_cover;
  for (Index x = 0; x < n; ++x) {
    if (x == lat.zero()) continue;
    bool reducible = false;
    for (Index a = 0; a < n && !reducible; ++a)
      for (Index b = 0; b < n; ++b)
        if (a != x && b != x && lat.meet(a, b) == x) {
          reducible = true;
          break;
        }
    if (!reducible) by_meet.push_back(x);
    if (lat.order().upper_covers(x).size() == 1) by_cover.push_back(x);
  }
  if (by_meet != by_cover)
    throw std::logic_error("meet-irreducible characterizations disagree: " + format_indices(by_meet) + " vs " +
                           format_indices(by_cover));
  return by_meet;
}

namespace {

// Elements are decided from the top down, so every element strictly above the
// current one is already decided; including it is allowed exactly when all of
// those are included.
void collect_up_sets(const FinitePoset& order, const std::vector<Index>& top_down, Index pos, Subset& current,
                     std::vector<Subset>& out) {
  if (pos == top_down.size()) {
    out.push_back(current);
    return;
  }
  const Index x = top_down[pos];
  collect_up_sets(order, top_down, pos + 1, current, out);
  Subset above = order.up(x);
  above.reset(x);
  if (above.is_subset_of(current)) {
    current.set(x);
    collect_up_sets(order, top_down, pos + 1, current, out);
    current.reset(x);
  }
}

}  // namespace

std::vector<Subset> up_sets(const FinitePoset& order) {
  const Index n = order.size();
  std::vector<Index> top_down(n);
  std::iota(top_down.begin(), top_down.end(), Index{0});
  std::stable_sort(top_down.begin(), top_down.end(),
                   [&](Index a, Index b) { return order.up(a).count() < order.up(b).count(); });
  std::vector<Subset> out;
  Subset current(n);
  collect_up_sets(order, top_down, 0, current, out);
  std::sort(out.begin(), out.end(), SubsetOrder{});
  return out;
}

Subset principal_up_set(const FinitePoset& order, Index x) { return order.up(x); }

FinitePoset induced_order(const FinitePoset& order, const std::vector<Index>& points) {
  const Index m = points.size();
  BoolTable t(m, std::vector<bool>(m));
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) t[i][j] = order.leq(points[i], points[j]);
  return FinitePoset::from_table(t);
}

}  // namespace infalg
