#include "infalg/examples.hpp"

#include <fmt/format.h>

namespace infalg {

namespace {

struct StringCarrier {
  Index k = 0;
  Index n = 0;
  std::vector<Index> offset;  // first index of each length
  std::vector<Index> power;   // k^i
  Index zero = 0;

  StringCarrier(Index k_, Index n_, Index cap) : k(k_), n(n_) {
    Index total = 0;
    Index p = 1;
    for (Index len = 0; len <= n; ++len) {
      offset.push_back(total);
      power.push_back(p);
      total += p;
      if (total + 1 > cap) throw CapExceeded(fmt::format("string carrier exceeds cap {}", cap));
      if (len < n) p *= k;
    }
    offset.push_back(total);
    zero = total;
  }

  Index length(Index x) const {
    Index len = 0;
    while (offset[len + 1] <= x) ++len;
    return len;
  }
  Index value(Index x) const { return x - offset[length(x)]; }
  Index prefix(Index x, Index len) const {
    const Index l = length(x);
    if (l <= len) return x;
    return offset[len] + value(x) / power[l - len];
  }
  bool is_prefix(Index r, Index s) const {
    const Index lr = length(r);
    return lr <= length(s) && prefix(s, lr) == r;
  }
  std::string name(Index x) const {
    if (x == zero) return "0";
    const Index l = length(x);
    if (l == 0) return "_";
    std::string out;
    Index v = value(x);
    for (Index i = l; i-- > 0;) {
      const Index d = v / power[i];
      v %= power[i];
      out += k <= 26 ? std::string(1, static_cast<char>('a' + d)) : fmt::format("[{}]", d);
    }
    return out;
  }
};

Index checked_product(const std::vector<Index>& domains, Index cap, const char* what) {
  Index p = 1;
  for (Index d : domains) {
    if (d == 0) throw FormatError("variable domains must be nonempty");
    if (p > cap / d) throw CapExceeded(fmt::format("{} exceeds cap {}", what, cap));
    p *= d;
  }
  return p;
}

// Tuples agreeing on the variables in `mask` share a block.
Equivalence agreement(const std::vector<Index>& domains, Index mask) {
  const Index count = checked_product(domains, npos, "tuple count");
  std::vector<Index> block(count);
  for (Index t = 0; t < count; ++t) {
    Index rest = t;
    Index key = 0;
    Index scale = 1;
    for (Index v = 0; v < domains.size(); ++v) {
      const Index digit = rest % domains[v];
      rest /= domains[v];
      if (mask >> v & 1) key += digit * scale;
      scale *= domains[v];
    }
    block[t] = key;
  }
  return Equivalence(std::move(block));
}

}  // namespace

Index string_index(Index k, const std::vector<Index>& letters) {
  Index offset = 0;
  Index p = 1;
  for (Index len = 0; len < letters.size(); ++len) {
    offset += p;
    p *= k;
  }
  Index value = 0;
  for (Index d : letters) value = value * k + d;
  return offset + value;
}

InfoAlgebra gen_string(Index k, Index n, Index cap) {
  if (k < 1 || n < 1) throw FormatError("string algebra needs k >= 1 and N >= 1");
  const StringCarrier c(k, n, cap);
  const Index size = c.zero + 1;

  IndexTable join(size, std::vector<Index>(size, c.zero));
  for (Index r = 0; r < c.zero; ++r)
    for (Index s = 0; s < c.zero; ++s) {
      if (c.is_prefix(r, s))
        join[r][s] = s;
      else if (c.is_prefix(s, r))
        join[r][s] = r;
    }

  std::vector<Extractor> ex;
  for (Index len = 0; len <= n; ++len) {
    Extractor e{fmt::format("e{}", len), std::vector<Index>(size, c.zero)};
    for (Index x = 0; x < c.zero; ++x) e.map[x] = c.prefix(x, len);
    ex.push_back(std::move(e));
  }

  InfoAlgebra a(BoundedJoinSemilattice::from_trusted_join_table(std::move(join), 0, c.zero), std::move(ex));
  std::vector<std::string> names;
  for (Index x = 0; x < size; ++x) names.push_back(c.name(x));
  a.set_element_labels(std::move(names));
  return a;
}

std::string variable_set_label(Index mask, Index variables) {
  std::vector<Index> vars;
  for (Index v = 0; v < variables; ++v)
    if (mask >> v & 1) vars.push_back(v);
  return fmt::format("{{{}}}", fmt::join(vars, ","));
}

SetAlgebra gen_multivariate(const std::vector<Index>& domains, Index cap) {
  if (domains.empty()) throw FormatError("at least one variable required");
  if (domains.size() >= 32) throw CapExceeded("too many variables");
  const Index count = checked_product(domains, cap, "tuple count");
  if (count >= 63 || (Index{1} << count) > cap)
    throw CapExceeded(fmt::format("power set of {} tuples exceeds cap {}", count, cap));

  std::vector<Subset> family;
  for (Index mask = 0; mask < (Index{1} << count); ++mask) {
    Subset s(count);
    for (Index t = 0; t < count; ++t)
      if (mask >> t & 1) s.set(t);
    family.push_back(std::move(s));
  }

  std::vector<std::string> labels;
  std::vector<Equivalence> members;
  for (Index mask = 0; mask < (Index{1} << domains.size()); ++mask) {
    labels.push_back(variable_set_label(mask, domains.size()));
    members.push_back(agreement(domains, mask));
  }
  return SetAlgebra::create(count, std::move(family), StarFamily::create(count, std::move(labels), std::move(members)));
}

InfoAlgebra gen_lattice_valued(const std::vector<Index>& domains, const FiniteLattice& values, Index cap) {
  if (domains.empty()) throw FormatError("at least one variable required");
  if (domains.size() >= 32) throw CapExceeded("too many variables");
  if (auto c = is_distributive(values); !c) throw StructureError("value lattice not distributive: " + c.message());
  const Index tuples = checked_product(domains, cap, "tuple count");
  const Index m = values.size();
  const Index size = checked_product(std::vector<Index>(tuples, m), cap, "lattice-valued carrier");

  auto decode = [&](Index x) {
    std::vector<Index> v(tuples);
    for (Index t = 0; t < tuples; ++t) {
      v[t] = x % m;
      x /= m;
    }
    return v;
  };
  auto encode = [&](const std::vector<Index>& v) {
    Index x = 0;
    for (Index t = tuples; t-- > 0;) x = x * m + v[t];
    return x;
  };

  std::vector<std::vector<Index>> maps(size);
  for (Index x = 0; x < size; ++x) maps[x] = decode(x);

  IndexTable join(size, std::vector<Index>(size));
  for (Index x = 0; x < size; ++x)
    for (Index y = x; y < size; ++y) {
      std::vector<Index> v(tuples);
      for (Index t = 0; t < tuples; ++t) v[t] = values.meet(maps[x][t], maps[y][t]);
      join[x][y] = join[y][x] = encode(v);
    }
  const Index unit = encode(std::vector<Index>(tuples, values.zero()));
  const Index zero = encode(std::vector<Index>(tuples, values.unit()));

  std::vector<Extractor> ex;
  for (Index mask = 0; mask < (Index{1} << domains.size()); ++mask) {
    const Equivalence agree = agreement(domains, mask);
    Extractor e{variable_set_label(mask, domains.size()), std::vector<Index>(size)};
    for (Index x = 0; x < size; ++x) {
      std::vector<Index> block_join(agree.block_count(), values.unit());
      for (Index t = 0; t < tuples; ++t)
        block_join[agree.block(t)] = values.join(block_join[agree.block(t)], maps[x][t]);
      std::vector<Index> v(tuples);
      for (Index t = 0; t < tuples; ++t) v[t] = block_join[agree.block(t)];
      e.map[x] = encode(v);
    }
    ex.push_back(std::move(e));
  }

  InfoAlgebra a(BoundedJoinSemilattice::from_trusted_join_table(std::move(join), unit, zero), std::move(ex));
  std::vector<std::string> names;
  for (Index x = 0; x < size; ++x) names.push_back(fmt::format("[{}]", fmt::join(maps[x], ",")));
  a.set_element_labels(std::move(names));
  return a;
}

}  // namespace infalg
