#include "infalg/set_algebra.hpp"

#include <algorithm>
#include <set>

#include <fmt/format.h>

namespace infalg {

Check validate_set_family(Index universe, const std::vector<Subset>& family, const StarFamily& eqs) {
  for (Index i = 0; i < family.size(); ++i)
    if (family[i].size() != universe)
      return Check::fail(fmt::format("member {} has universe {}, expected {}", i, family[i].size(), universe), {i});
  if (eqs.universe() != universe)
    return Check::fail(fmt::format("equivalences live on {} points, expected {}", eqs.universe(), universe));

  std::set<Subset> members(family.begin(), family.end());
  if (!members.count(full_set(universe))) return Check::fail("family lacks the universe");
  if (!members.count(empty_set(universe))) return Check::fail("family lacks the empty set");
  for (Index i = 0; i < family.size(); ++i)
    for (Index j = i + 1; j < family.size(); ++j)
      if (!members.count(family[i] & family[j]))
        return Check::fail(fmt::format("not intersection-closed: {} & {} = {} missing", format_set(family[i]),
                                       format_set(family[j]), format_set(family[i] & family[j])),
                           {i, j});
  for (Index t = 0; t < eqs.size(); ++t)
    for (Index i = 0; i < family.size(); ++i) {
      Subset s = saturate(eqs.member(t), family[i]);
      if (!members.count(s))
        return Check::fail(fmt::format("saturation by '{}' of {} = {} missing", eqs.label(t), format_set(family[i]),
                                       format_set(s)),
                           {t, i});
    }
  return Check::pass();
}

SetAlgebra SetAlgebra::create(Index universe, std::vector<Subset> family, StarFamily eqs) {
  if (auto c = validate_set_family(universe, family, eqs); !c) throw StructureError(c.message());

  SetAlgebra s;
  s.universe_ = universe;
  std::sort(family.begin(), family.end(), SubsetOrder{});
  family.erase(std::unique(family.begin(), family.end()), family.end());
  s.family_ = std::move(family);
  s.eqs_ = std::move(eqs);

  const Index m = s.family_.size();
  IndexTable join(m, std::vector<Index>(m));
  for (Index i = 0; i < m; ++i)
    for (Index j = i; j < m; ++j) join[i][j] = join[j][i] = *s.find(s.family_[i] & s.family_[j]);

  std::vector<Extractor> ex;
  for (Index t = 0; t < s.eqs_.size(); ++t) {
    Extractor e{s.eqs_.label(t), std::vector<Index>(m)};
    for (Index i = 0; i < m; ++i) e.map[i] = *s.find(saturate(s.eqs_.member(t), s.family_[i]));
    ex.push_back(std::move(e));
  }
  s.algebra_ = InfoAlgebra(BoundedJoinSemilattice::from_trusted_join_table(std::move(join), 0, m - 1), std::move(ex));
  std::vector<std::string> names;
  names.reserve(m);
  for (const auto& f : s.family_) names.push_back(format_set(f));
  s.algebra_.set_element_labels(std::move(names));
  return s;
}

std::optional<Index> SetAlgebra::find(const Subset& s) const {
  auto it = std::lower_bound(family_.begin(), family_.end(), s, SubsetOrder{});
  if (it == family_.end() || *it != s) return std::nullopt;
  return static_cast<Index>(it - family_.begin());
}

BlockUnionResult build_block_union_algebra(const StarFamily& eqs, Index cap) {
  BlockUnionResult out;
  out.directed = is_downward_directed(eqs);
  if (!out.directed) return out;

  const Index n = eqs.universe();
  std::set<Subset> family;
  for (const auto& theta : eqs.members()) {
    const auto blocks = theta.blocks();
    if (blocks.size() >= 63 || (Index{1} << blocks.size()) > cap)
      throw CapExceeded(fmt::format("block unions of a {}-block equivalence exceed cap {}", blocks.size(), cap));
    for (Index mask = 0; mask < (Index{1} << blocks.size()); ++mask) {
      Subset s(n);
      for (Index b = 0; b < blocks.size(); ++b)
        if (mask >> b & 1) s |= blocks[b];
      family.insert(std::move(s));
      if (family.size() > cap) throw CapExceeded(fmt::format("block-union family exceeds cap {}", cap));
    }
  }
  family.insert(full_set(n));
  family.insert(empty_set(n));
  out.algebra = SetAlgebra::create(n, std::vector<Subset>(family.begin(), family.end()), eqs);
  return out;
}

PrincipalRepresentation principal_upset_representation(const InfoAlgebra& a) {
  a.require_closed();
  const Index n = a.size();
  PrincipalRepresentation out;
  std::vector<Index> pos(n, npos);
  for (Index x = 0; x < n; ++x)
    if (x != a.zero()) {
      pos[x] = out.points.size();
      out.points.push_back(x);
    }
  const Index m = out.points.size();

  auto restricted_up = [&](Index x) {
    Subset s(m);
    if (x == a.zero()) return s;
    const auto& up = a.order().up(x);
    for (auto y = up.find_first(); y != Subset::npos; y = up.find_next(y))
      if (y != a.zero()) s.set(pos[y]);
    return s;
  };

  std::vector<Subset> family;
  for (Index x = 0; x < n; ++x) family.push_back(restricted_up(x));

  std::vector<std::string> labels;
  std::vector<Equivalence> members;
  for (Index e = 0; e < a.extractor_count(); ++e) {
    labels.push_back(a.label(e));
    members.push_back(kernel(a, e).restricted(out.points));
  }
  out.target = SetAlgebra::create(m, family, StarFamily::create(m, std::move(labels), std::move(members)));

  out.iso.f.resize(n);
  for (Index x = 0; x < n; ++x) out.iso.f[x] = *out.target.find(family[x]);
  out.iso.g = identity_map(a.extractor_count());
  return out;
}

Check check_principal_saturation(const InfoAlgebra& a) {
  const Index n = a.size();
  std::vector<Index> points;
  for (Index x = 0; x < n; ++x)
    if (x != a.zero()) points.push_back(x);
  for (Index e = 0; e < a.extractor_count(); ++e) {
    const Equivalence ker = kernel(a, e).restricted(points);
    for (Index i = 0; i < points.size(); ++i) {
      Subset up(points.size());
      Subset target(points.size());
      for (Index j = 0; j < points.size(); ++j) {
        if (a.leq(points[i], points[j])) up.set(j);
        if (a.leq(a.apply(e, points[i]), points[j])) target.set(j);
      }
      if (saturate(ker, up) != target)
        return Check::fail(fmt::format("sigma_'{0}'(up {1}) != up '{0}'({1})", a.label(e), points[i]),
                           {e, points[i]});
    }
  }
  return Check::pass();
}

}  // namespace infalg
