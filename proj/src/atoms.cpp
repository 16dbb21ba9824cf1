#include "infalg/atoms.hpp"

#include <set>

#include <fmt/format.h>

namespace infalg {

namespace {

// Binary counting on a bit-vector; false after wrapping to empty.
bool next_subset(Subset& s) {
  for (Index i = 0; i < s.size(); ++i) {
    if (!s[i]) {
      s.set(i);
      return true;
    }
    s.reset(i);
  }
  return false;
}

std::optional<Subset> first_unrealized(const std::vector<Subset>& at_map, Index atom_count) {
  std::set<Subset> realized(at_map.begin(), at_map.end());
  Subset s(atom_count);
  while (next_subset(s))
    if (!realized.count(s)) return s;
  return std::nullopt;
}

}  // namespace

std::vector<Index> atoms(const InfoAlgebra& a) {
  std::vector<Index> out;
  for (Index x = 0; x < a.size(); ++x) {
    if (x == a.zero()) continue;
    const auto& up = a.order().up(x);
    if (up.count() == 2) out.push_back(x);
  }
  return out;
}

Subset atoms_above(const InfoAlgebra& a, const std::vector<Index>& atom_list, Index x) {
  Subset s(atom_list.size());
  for (Index i = 0; i < atom_list.size(); ++i)
    if (a.leq(x, atom_list[i])) s.set(i);
  return s;
}

AtomReport classify(const InfoAlgebra& a) {
  AtomReport r;
  r.atoms = atoms(a);
  for (Index x = 0; x < a.size(); ++x) r.at_map.push_back(atoms_above(a, r.atoms, x));

  for (Index x = 0; x < a.size() && !r.not_atomic; ++x)
    if (x != a.zero() && r.at_map[x].none()) r.not_atomic = x;
  r.atomic = !r.not_atomic;

  for (Index x = 0; x < a.size() && !r.not_atomistic; ++x) {
    if (x == a.zero()) continue;
    Subset elements(a.size());
    for (Index i : members(r.at_map[x])) elements.set(r.atoms[i]);
    auto g = glb(a.order(), elements);
    if (!g || *g != x) r.not_atomistic = x;
  }
  r.atomistic = !r.not_atomistic;

  r.unrealized = first_unrealized(r.at_map, r.atoms.size());
  r.completely_atomistic = r.atomistic && !r.unrealized;
  return r;
}

AtomRepresentation atom_representation(const InfoAlgebra& a, Index cap) {
  const auto report = classify(a);
  if (!report.atomic)
    throw StructureError(fmt::format("algebra not atomic: {} lies below no atom", *report.not_atomic));
  const Index k = report.atoms.size();
  if (k >= 63 || (Index{1} << k) > cap)
    throw CapExceeded(fmt::format("power set of {} atoms exceeds cap {}", k, cap));

  std::vector<Subset> family;
  Subset s(k);
  do family.push_back(s);
  while (next_subset(s));

  std::vector<std::string> labels;
  std::vector<Equivalence> members;
  for (Index e = 0; e < a.extractor_count(); ++e) {
    labels.push_back(a.label(e));
    members.push_back(kernel(a, e).restricted(report.atoms));
  }

  AtomRepresentation out;
  out.atoms = report.atoms;
  out.target = SetAlgebra::create(k, std::move(family), StarFamily::create(k, std::move(labels), std::move(members)));
  for (Index x = 0; x < a.size(); ++x) out.morphism.f.push_back(*out.target.find(report.at_map[x]));
  out.morphism.g = identity_map(a.extractor_count());
  out.homomorphism = is_homomorphism(out.morphism, a, out.target.algebra());

  std::set<Index> image(out.morphism.f.begin(), out.morphism.f.end());
  out.embedding = out.homomorphism.ok() && image.size() == a.size();
  out.isomorphism = out.embedding && image.size() == out.target.family().size();
  out.unrealized = report.unrealized;
  return out;
}

Check check_complete_atomistic_boolean(const InfoAlgebra& a) {
  const auto report = classify(a);
  if (!report.completely_atomistic) throw StructureError("algebra is not completely atomistic");
  const auto lat = a.lattice();
  const auto comp = complements(lat);
  if (!comp.complemented())
    return Check::fail(fmt::format("{} has no complement", *comp.missing), {*comp.missing});

  const Index n = a.size();
  const auto& at = report.at_map;
  for (Index x = 0; x < n; ++x)
    for (Index y = x; y < n; ++y)
      for (Index z = y; z < n; ++z) {
        const Index j = a.combine(a.combine(x, y), z);
        const Index m = lat.meet(lat.meet(x, y), z);
        if (at[j] != (at[x] & at[y] & at[z]))
          return Check::fail(fmt::format("At of the join of ({},{},{}) is not the intersection", x, y, z), {x, y, z});
        if (at[m] != (at[x] | at[y] | at[z]))
          return Check::fail(fmt::format("At of the meet of ({},{},{}) is not the union", x, y, z), {x, y, z});
      }
  for (Index x = 0; x < n; ++x)
    if (at[comp.map[x]] != ~at[x])
      return Check::fail(fmt::format("At of the complement of {} is not the complementary atom set", x), {x});
  return Check::pass();
}

}  // namespace infalg
