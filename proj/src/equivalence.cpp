#include "infalg/equivalence.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>

#include <fmt/format.h>

namespace infalg {

Equivalence::Equivalence(std::vector<Index> block_of) : block_of_(std::move(block_of)) {
  std::unordered_map<Index, Index> canonical;
  for (Index& b : block_of_) {
    auto [it, fresh] = canonical.try_emplace(b, canonical.size());
    b = it->second;
  }
  block_count_ = canonical.size();
}

Equivalence Equivalence::identity(Index n) {
  std::vector<Index> b(n);
  std::iota(b.begin(), b.end(), Index{0});
  return Equivalence(std::move(b));
}

Equivalence Equivalence::all(Index n) { return Equivalence(std::vector<Index>(n, 0)); }

Equivalence Equivalence::from_blocks(Index n, const std::vector<std::vector<Index>>& blocks) {
  std::vector<Index> b(n, npos);
  for (Index i = 0; i < blocks.size(); ++i) {
    if (blocks[i].empty()) throw FormatError("empty block");
    for (Index u : blocks[i]) {
      if (u >= n) throw FormatError(fmt::format("block element {} out of range", u));
      if (b[u] != npos) throw FormatError(fmt::format("element {} in two blocks", u));
      b[u] = i;
    }
  }
  for (Index u = 0; u < n; ++u)
    if (b[u] == npos) throw FormatError(fmt::format("element {} in no block", u));
  return Equivalence(std::move(b));
}

Equivalence Equivalence::kernel_of(const std::vector<Index>& map) { return Equivalence(map); }

Subset Equivalence::block_set(Index u) const {
  Subset s(size());
  const Index b = block_of_[u];
  for (Index v = 0; v < size(); ++v)
    if (block_of_[v] == b) s.set(v);
  return s;
}

std::vector<Subset> Equivalence::blocks() const {
  std::vector<Subset> out(block_count_, Subset(size()));
  for (Index u = 0; u < size(); ++u) out[block_of_[u]].set(u);
  return out;
}

bool Equivalence::is_subset_of(const Equivalence& other) const {
  // Canonical ids grow by first occurrence, so each block's representative is
  // its least member; compare every element with it.
  std::vector<Index> rep(block_count_, npos);
  for (Index u = 0; u < size(); ++u) {
    Index& r = rep[block_of_[u]];
    if (r == npos)
      r = u;
    else if (!other.related(r, u))
      return false;
  }
  return true;
}

Equivalence Equivalence::restricted(const std::vector<Index>& points) const {
  std::vector<Index> b;
  b.reserve(points.size());
  for (Index p : points) b.push_back(block_of_[p]);
  return Equivalence(std::move(b));
}

std::string to_string(const Equivalence& e) {
  std::vector<std::string> parts;
  for (const auto& blk : e.blocks()) parts.push_back(format_set(blk));
  return fmt::format("{{{}}}", fmt::join(parts, ","));
}

Subset saturate(const Equivalence& theta, const Subset& xs) {
  const Index n = theta.size();
  std::vector<bool> hit(theta.block_count(), false);
  for (auto x = xs.find_first(); x != Subset::npos; x = xs.find_next(x)) hit[theta.block(x)] = true;
  Subset out(n);
  for (Index u = 0; u < n; ++u)
    if (hit[theta.block(u)]) out.set(u);
  return out;
}

StarProduct star(const Equivalence& theta, const Equivalence& gamma) {
  if (theta.size() != gamma.size())
    throw FormatError(fmt::format("universe mismatch: {} vs {}", theta.size(), gamma.size()));
  const Index n = theta.size();
  StarProduct out;
  // Row u of theta*gamma is the gamma-saturation of u's theta-block; row u of
  // gamma*theta is the theta-saturation of u's gamma-block.
  std::vector<Subset> forward;
  for (const auto& blk : theta.blocks()) forward.push_back(saturate(gamma, blk));
  std::vector<Subset> backward;
  for (const auto& blk : gamma.blocks()) backward.push_back(saturate(theta, blk));
  for (Index u = 0; u < n; ++u) {
    const Subset& f = forward[theta.block(u)];
    const Subset& b = backward[gamma.block(u)];
    if (f != b) {
      Subset extra = f - b;
      if (extra.any())
        out.witness = {u, extra.find_first()};
      else
        out.witness = {(b - f).find_first(), u};
      return out;
    }
  }
  std::vector<Index> b(n);
  for (Index u = 0; u < n; ++u) b[u] = forward[theta.block(u)].find_first();
  out.product = Equivalence(std::move(b));
  return out;
}

bool commute(const Equivalence& theta, const Equivalence& gamma) { return star(theta, gamma).commuting(); }

Equivalence equivalence_join(const Equivalence& theta, const Equivalence& gamma) {
  if (theta.size() != gamma.size()) throw FormatError("universe mismatch");
  const Index n = theta.size();
  std::vector<Index> parent(n);
  std::iota(parent.begin(), parent.end(), Index{0});
  auto find = [&](Index x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](Index a, Index b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[std::max(a, b)] = std::min(a, b);
  };
  for (const Equivalence* e : {&theta, &gamma}) {
    std::vector<Index> first(e->block_count(), npos);
    for (Index u = 0; u < n; ++u) {
      Index& f = first[e->block(u)];
      if (f == npos)
        f = u;
      else
        unite(f, u);
    }
  }
  std::vector<Index> b(n);
  for (Index u = 0; u < n; ++u) b[u] = find(u);
  return Equivalence(std::move(b));
}

Equivalence least_upper_equivalence(const Equivalence& theta, const Equivalence& gamma) {
  auto s = star(theta, gamma);
  if (!s.commuting())
    throw StructureError(fmt::format("equivalences do not commute: ({},{}) in product but not in reverse product",
                                     s.witness.first, s.witness.second));
  if (!(*s.product == equivalence_join(theta, gamma)))
    throw std::logic_error("star product of commuting equivalences differs from their join");
  return *s.product;
}

StarFamily StarFamily::create(Index universe, std::vector<std::string> labels, std::vector<Equivalence> members) {
  if (labels.size() != members.size()) throw FormatError("one label per equivalence required");
  for (Index i = 0; i < members.size(); ++i)
    if (members[i].size() != universe)
      throw FormatError(fmt::format("equivalence '{}' has size {}, expected {}", labels[i], members[i].size(),
                                    universe));
  for (Index i = 0; i < labels.size(); ++i)
    for (Index j = i + 1; j < labels.size(); ++j)
      if (labels[i] == labels[j]) throw FormatError(fmt::format("duplicate label '{}'", labels[i]));

  StarFamily f;
  f.universe_ = universe;
  f.labels_ = std::move(labels);
  f.members_ = std::move(members);
  const Index k = f.members_.size();
  f.product_.assign(k, std::vector<Index>(k, npos));
  for (Index i = 0; i < k; ++i)
    for (Index j = 0; j < k; ++j) {
      auto s = star(f.members_[i], f.members_[j]);
      if (!s.commuting())
        throw StructureError(fmt::format("'{}' and '{}' do not commute: ({},{}) in product but not in reverse",
                                         f.labels_[i], f.labels_[j], s.witness.first, s.witness.second));
      auto found = f.find(*s.product);
      if (!found)
        throw StructureError(fmt::format("family not star-closed: '{}'*'{}' = {} missing", f.labels_[i],
                                         f.labels_[j], to_string(*s.product)));
      f.product_[i][j] = *found;
    }
  return f;
}

std::optional<Index> StarFamily::find(const Equivalence& e) const {
  for (Index i = 0; i < members_.size(); ++i)
    if (members_[i] == e) return i;
  return std::nullopt;
}

std::optional<Index> StarFamily::find_label(const std::string& label) const {
  for (Index i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return i;
  return std::nullopt;
}

StarFamily star_closure(Index universe, std::vector<std::string> labels, std::vector<Equivalence> members) {
  if (labels.size() != members.size()) throw FormatError("one label per equivalence required");
  // Worklist fixed point: every pair is multiplied once; new products join
  // the end of the list and are paired with everything before them.
  for (Index j = 0; j < members.size(); ++j) {
    for (Index i = 0; i <= j; ++i) {
      auto s = star(members[i], members[j]);
      if (!s.commuting())
        throw StructureError(fmt::format("'{}' and '{}' do not commute: ({},{}) in product but not in reverse",
                                         labels[i], labels[j], s.witness.first, s.witness.second));
      if (std::find(members.begin(), members.end(), *s.product) == members.end()) {
        members.push_back(*s.product);
        labels.push_back(labels[i] + "*" + labels[j]);
      }
    }
  }
  return StarFamily::create(universe, std::move(labels), std::move(members));
}

Check is_downward_directed(const StarFamily& family) {
  const Index k = family.size();
  for (Index i = 0; i < k; ++i)
    for (Index j = i + 1; j < k; ++j) {
      bool found = false;
      for (Index m = 0; m < k && !found; ++m)
        found = family.member(m).is_subset_of(family.member(i)) && family.member(m).is_subset_of(family.member(j));
      if (!found)
        return Check::fail(
            fmt::format("no member below both '{}' and '{}'", family.label(i), family.label(j)), {i, j});
    }
  return Check::pass();
}

namespace {

void grow_partitions(Index n, std::vector<Index>& rgs, Index used, std::vector<Equivalence>& out) {
  if (rgs.size() == n) {
    out.emplace_back(rgs);
    return;
  }
  for (Index b = 0; b <= used && b < n; ++b) {
    rgs.push_back(b);
    grow_partitions(n, rgs, std::max(used, b + 1), out);
    rgs.pop_back();
  }
}

}  // namespace

std::vector<Equivalence> all_equivalences(Index n) {
  std::vector<Equivalence> out;
  std::vector<Index> rgs;
  if (n == 0) {
    out.emplace_back(std::vector<Index>{});
    return out;
  }
  grow_partitions(n, rgs, 0, out);
  return out;
}

}  // namespace infalg
