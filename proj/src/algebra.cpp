#include "infalg/algebra.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include <fmt/format.h>

namespace infalg {

std::vector<Index> compose_maps(const std::vector<Index>& e, const std::vector<Index>& f) {
  std::vector<Index> out(f.size());
  for (Index x = 0; x < f.size(); ++x) out[x] = e[f[x]];
  return out;
}

std::vector<Index> identity_map(Index n) {
  std::vector<Index> out(n);
  std::iota(out.begin(), out.end(), Index{0});
  return out;
}

InfoAlgebra::InfoAlgebra(BoundedJoinSemilattice sl, std::vector<Extractor> extractors)
    : sl_(std::move(sl)), extractors_(std::move(extractors)) {
  const Index n = sl_.size();
  const Index k = extractors_.size();
  for (Index e = 0; e < k; ++e) {
    const auto& ex = extractors_[e];
    if (ex.map.size() != n)
      throw FormatError(fmt::format("extractor '{}' has {} entries, expected {}", ex.label, ex.map.size(), n));
    for (Index x = 0; x < n; ++x)
      if (ex.map[x] >= n)
        throw FormatError(fmt::format("extractor '{}' maps {} to {}, out of range", ex.label, x, ex.map[x]));
    for (Index f = 0; f < e; ++f)
      if (extractors_[f].label == ex.label) throw FormatError(fmt::format("duplicate label '{}'", ex.label));
  }

  std::map<std::vector<Index>, Index> by_map;
  for (Index e = 0; e < k; ++e) by_map.try_emplace(extractors_[e].map, e);
  composition_.assign(k, std::vector<Index>(k, npos));
  for (Index e = 0; e < k; ++e)
    for (Index f = 0; f < k; ++f) {
      auto it = by_map.find(compose_maps(extractors_[e].map, extractors_[f].map));
      if (it != by_map.end()) composition_[e][f] = it->second;
    }
}

std::optional<Index> InfoAlgebra::find_label(const std::string& label) const {
  for (Index e = 0; e < extractors_.size(); ++e)
    if (extractors_[e].label == label) return e;
  return std::nullopt;
}

std::optional<Index> InfoAlgebra::find_map(const std::vector<Index>& map) const {
  for (Index e = 0; e < extractors_.size(); ++e)
    if (extractors_[e].map == map) return e;
  return std::nullopt;
}

bool InfoAlgebra::is_closed() const {
  for (const auto& row : composition_)
    for (Index c : row)
      if (c == npos) return false;
  return true;
}

void InfoAlgebra::require_closed() const {
  for (Index e = 0; e < composition_.size(); ++e)
    for (Index f = 0; f < composition_.size(); ++f)
      if (composition_[e][f] == npos)
        throw StructureError(fmt::format("extractors not composition-closed: '{}'.'{}' missing", label(e), label(f)));
}

void InfoAlgebra::set_element_labels(std::vector<std::string> labels) {
  if (!labels.empty() && labels.size() != size())
    throw FormatError(fmt::format("{} element labels for {} elements", labels.size(), size()));
  element_labels_ = std::move(labels);
}

std::string InfoAlgebra::element_name(Index x) const {
  return element_labels_.empty() ? std::to_string(x) : element_labels_[x];
}

bool AxiomReport::ok() const {
  for (const auto& [name, check] : entries())
    if (!check->ok()) return false;
  return true;
}

std::vector<std::pair<std::string, const Check*>> AxiomReport::entries() const {
  std::vector<std::pair<std::string, const Check*>> out{
      {"N", &nullity},     {"A", &assertion},   {"Q", &quantifier}, {"C", &commutation},
      {"I", &idempotence}, {"unit", &unit_fixed}};
  if (!lenient) out.emplace_back("closure", &closure);
  return out;
}

AxiomReport verify_axioms(const InfoAlgebra& a, bool lenient) {
  const Index n = a.size();
  const Index k = a.extractor_count();
  AxiomReport r;
  r.lenient = lenient;

  for (Index e = 0; e < k && r.nullity.ok(); ++e)
    if (a.apply(e, a.zero()) != a.zero())
      r.nullity = Check::fail(fmt::format("'{}' does not fix zero", a.label(e)), {e});

  for (Index e = 0; e < k && r.assertion.ok(); ++e)
    for (Index x = 0; x < n; ++x)
      if (!a.leq(a.apply(e, x), x)) {
        r.assertion = Check::fail(fmt::format("'{}'({}) = {} is not below {}", a.label(e), x, a.apply(e, x), x),
                                  {e, x});
        break;
      }

  for (Index e = 0; e < k && r.quantifier.ok(); ++e)
    for (Index x = 0; x < n && r.quantifier.ok(); ++x) {
      const Index ex = a.apply(e, x);
      for (Index y = 0; y < n; ++y)
        if (a.apply(e, a.combine(ex, y)) != a.combine(ex, a.apply(e, y))) {
          r.quantifier = Check::fail(
              fmt::format("'{0}'('{0}'({1}) v {2}) != '{0}'({1}) v '{0}'({2})", a.label(e), x, y), {e, x, y});
          break;
        }
    }

  for (Index e = 0; e < k && r.commutation.ok(); ++e)
    for (Index f = e + 1; f < k && r.commutation.ok(); ++f)
      for (Index x = 0; x < n; ++x)
        if (a.apply(e, a.apply(f, x)) != a.apply(f, a.apply(e, x))) {
          r.commutation =
              Check::fail(fmt::format("'{}' and '{}' do not commute at {}", a.label(e), a.label(f), x), {e, f, x});
          break;
        }

  for (Index e = 0; e < k && r.idempotence.ok(); ++e)
    for (Index x = 0; x < n; ++x)
      if (a.apply(e, a.apply(e, x)) != a.apply(e, x)) {
        r.idempotence = Check::fail(fmt::format("'{}' not idempotent at {}", a.label(e), x), {e, x});
        break;
      }

  for (Index e = 0; e < k && r.unit_fixed.ok(); ++e)
    if (a.apply(e, a.unit()) != a.unit())
      r.unit_fixed = Check::fail(fmt::format("'{}' does not fix unit", a.label(e)), {e});

  for (Index e = 0; e < k && r.closure.ok(); ++e)
    for (Index f = 0; f < k; ++f)
      if (a.compose(e, f) == npos) {
        r.closure = Check::fail(
            fmt::format("not composition-closed: '{}'.'{}' missing", a.label(e), a.label(f)), {e, f});
        break;
      }
  return r;
}

Check check_extraction_map(const BoundedJoinSemilattice& sl, const std::vector<Index>& map) {
  const Index n = sl.size();
  if (map[sl.zero()] != sl.zero()) return Check::fail("N: zero not fixed");
  for (Index x = 0; x < n; ++x)
    if (!sl.leq(map[x], x)) return Check::fail(fmt::format("A: image of {} not below it", x), {x});
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (map[sl.join(map[x], y)] != sl.join(map[x], map[y]))
        return Check::fail(fmt::format("Q: fails at ({},{})", x, y), {x, y});
  for (Index x = 0; x < n; ++x)
    if (map[map[x]] != map[x]) return Check::fail(fmt::format("I: fails at {}", x), {x});
  return Check::pass();
}

Equivalence kernel(const InfoAlgebra& a, Index e) { return Equivalence::kernel_of(a.map(e)); }

Check check_kernel_theorem(const InfoAlgebra& a) {
  const Index k = a.extractor_count();
  for (Index e = 0; e < k; ++e)
    for (Index f = 0; f < k; ++f) {
      auto s = star(kernel(a, e), kernel(a, f));
      if (!s.commuting())
        return Check::fail(fmt::format("kernels of '{}' and '{}' do not commute", a.label(e), a.label(f)), {e, f});
      if (!(*s.product == Equivalence::kernel_of(compose_maps(a.map(e), a.map(f)))))
        return Check::fail(
            fmt::format("ker '{0}' * ker '{1}' != ker('{0}'.'{1}')", a.label(e), a.label(f)), {e, f});
    }
  return Check::pass();
}

AlgebraMorphism identity_morphism(const InfoAlgebra& a) {
  return {identity_map(a.size()), identity_map(a.extractor_count())};
}

Check is_homomorphism(const AlgebraMorphism& m, const InfoAlgebra& a, const InfoAlgebra& b) {
  const Index n = a.size();
  const Index k = a.extractor_count();
  if (m.f.size() != n) return Check::fail(fmt::format("f has {} entries, expected {}", m.f.size(), n));
  if (m.g.size() != k) return Check::fail(fmt::format("g has {} entries, expected {}", m.g.size(), k));
  for (Index x = 0; x < n; ++x)
    if (m.f[x] >= b.size()) return Check::fail(fmt::format("f({}) out of range", x), {x});
  for (Index e = 0; e < k; ++e)
    if (m.g[e] >= b.extractor_count()) return Check::fail(fmt::format("g('{}') out of range", a.label(e)), {e});

  const auto& f = m.f;
  for (Index x = 0; x < n; ++x)
    for (Index y = x + 1; y < n; ++y)
      if (f[a.combine(x, y)] != b.combine(f[x], f[y]))
        return Check::fail(fmt::format("f does not preserve combination at ({},{})", x, y), {x, y});
  if (f[a.unit()] != b.unit()) return Check::fail("f does not preserve unit");
  if (f[a.zero()] != b.zero()) return Check::fail("f does not preserve zero");

  for (Index e = 0; e < k; ++e)
    for (Index h = 0; h < k; ++h) {
      const Index eh = a.compose(e, h);
      if (eh == npos) continue;
      if (b.map(m.g[eh]) != compose_maps(b.map(m.g[e]), b.map(m.g[h])))
        return Check::fail(fmt::format("g does not preserve composition at ('{}','{}')", a.label(e), a.label(h)),
                           {e, h});
    }

  for (Index e = 0; e < k; ++e)
    for (Index x = 0; x < n; ++x)
      if (f[a.apply(e, x)] != b.apply(m.g[e], f[x]))
        return Check::fail(fmt::format("f('{0}'({1})) != g('{0}')(f({1}))", a.label(e), x), {e, x});

  if (is_distributive_cdf(a) && is_distributive_cdf(b)) {
    const auto la = a.lattice();
    const auto lb = b.lattice();
    for (Index x = 0; x < n; ++x)
      for (Index y = x + 1; y < n; ++y)
        if (f[la.meet(x, y)] != lb.meet(f[x], f[y]))
          return Check::fail(fmt::format("f does not preserve meet at ({},{})", x, y), {x, y});
  }
  return Check::pass();
}

namespace {

std::optional<Index> first_collision(const std::vector<Index>& map, Index codomain) {
  std::vector<bool> seen(codomain, false);
  for (Index x = 0; x < map.size(); ++x) {
    if (seen[map[x]]) return x;
    seen[map[x]] = true;
  }
  return std::nullopt;
}

}  // namespace

Check is_isomorphism(const AlgebraMorphism& m, const InfoAlgebra& a, const InfoAlgebra& b) {
  if (auto c = is_homomorphism(m, a, b); !c) return c;
  if (a.size() != b.size()) return Check::fail(fmt::format("carrier sizes differ: {} vs {}", a.size(), b.size()));
  if (auto x = first_collision(m.f, b.size())) return Check::fail(fmt::format("f not injective at {}", *x), {*x});
  if (a.extractor_count() != b.extractor_count())
    return Check::fail(fmt::format("extractor counts differ: {} vs {}", a.extractor_count(), b.extractor_count()));
  if (auto e = first_collision(m.g, b.extractor_count()))
    return Check::fail(fmt::format("g not injective at '{}'", a.label(*e)), {*e});
  return Check::pass();
}

Subalgebra extraction_image(const InfoAlgebra& a, Index e) {
  const Index n = a.size();
  std::vector<Index> pos(n, npos);
  std::vector<Index> elements;
  for (Index x = 0; x < n; ++x) {
    const Index y = a.apply(e, x);
    if (pos[y] == npos) {
      pos[y] = 0;
      elements.push_back(y);
    }
  }
  std::sort(elements.begin(), elements.end());
  for (Index i = 0; i < elements.size(); ++i) pos[elements[i]] = i;

  const Index m = elements.size();
  auto locate = [&](Index x, const char* what) {
    if (pos[x] == npos)
      throw StructureError(fmt::format("image of '{}' not closed: {} {} outside", a.label(e), what, x));
    return pos[x];
  };
  IndexTable join(m, std::vector<Index>(m));
  for (Index i = 0; i < m; ++i)
    for (Index j = 0; j < m; ++j) join[i][j] = locate(a.combine(elements[i], elements[j]), "combination");
  const Index unit = locate(a.unit(), "unit");
  const Index zero = locate(a.zero(), "zero");

  std::vector<Extractor> ex;
  for (Index h = 0; h < a.extractor_count(); ++h) {
    Extractor r{a.label(h), std::vector<Index>(m)};
    for (Index i = 0; i < m; ++i) r.map[i] = locate(a.apply(h, elements[i]), "extraction value");
    ex.push_back(std::move(r));
  }

  Subalgebra out;
  out.algebra = InfoAlgebra(BoundedJoinSemilattice::from_join_table(std::move(join), unit, zero), std::move(ex));
  if (!a.element_labels().empty()) {
    std::vector<std::string> names;
    for (Index x : elements) names.push_back(a.element_labels()[x]);
    out.algebra.set_element_labels(std::move(names));
  }
  // Restrictions of distinct extractors may coincide; e.h depends only on
  // the restriction of h, so it is the consistent choice of image.
  std::vector<Index> g(a.extractor_count());
  for (Index h = 0; h < g.size(); ++h) {
    g[h] = a.compose(e, h);
    if (g[h] == npos)
      throw StructureError(fmt::format("composite '{}'.'{}' missing", a.label(e), a.label(h)));
  }
  out.embedding = {elements, std::move(g)};
  out.elements = std::move(elements);
  return out;
}

Check is_distributive_cdf(const InfoAlgebra& a) {
  const auto lat = a.lattice();
  if (auto c = is_distributive(lat); !c) return c;
  const Index n = a.size();
  for (Index e = 0; e < a.extractor_count(); ++e)
    for (Index x = 0; x < n; ++x)
      for (Index y = x + 1; y < n; ++y)
        if (a.apply(e, lat.meet(x, y)) != lat.meet(a.apply(e, x), a.apply(e, y)))
          return Check::fail(fmt::format("'{}' does not preserve the meet of ({},{})", a.label(e), x, y), {e, x, y});
  return Check::pass();
}

IdealCompletion ideal_completion(const InfoAlgebra& a) {
  const Index n = a.size();
  const auto& order = a.order();

  // In a finite semilattice every ideal is generated by the join of its
  // members, so the ideals are exactly the principal down-sets.
  IdealCompletion out;
  std::map<Subset, Index> index_of;
  for (Index x = 0; x < n; ++x) {
    out.ideals.push_back(order.down(x));
    index_of.emplace(order.down(x), x);
  }
  auto locate = [&](const Subset& s) {
    auto it = index_of.find(s);
    if (it == index_of.end()) throw std::logic_error("ideal completion produced a non-ideal " + format_set(s));
    return it->second;
  };

  IndexTable join(n, std::vector<Index>(n));
  for (Index i = 0; i < n; ++i)
    for (Index j = i; j < n; ++j) {
      Subset s(n);
      const auto& ii = out.ideals[i];
      const auto& jj = out.ideals[j];
      for (auto y1 = ii.find_first(); y1 != Subset::npos; y1 = ii.find_next(y1))
        for (auto y2 = jj.find_first(); y2 != Subset::npos; y2 = jj.find_next(y2)) s |= order.down(a.combine(y1, y2));
      join[i][j] = join[j][i] = locate(s);
    }

  std::vector<Extractor> ex;
  for (Index e = 0; e < a.extractor_count(); ++e) {
    Extractor hat{a.label(e), std::vector<Index>(n)};
    for (Index i = 0; i < n; ++i) {
      Subset s(n);
      const auto& ii = out.ideals[i];
      for (auto y = ii.find_first(); y != Subset::npos; y = ii.find_next(y)) s |= order.down(a.apply(e, y));
      hat.map[i] = locate(s);
    }
    ex.push_back(std::move(hat));
  }

  out.algebra = InfoAlgebra(
      BoundedJoinSemilattice::from_join_table(std::move(join), locate(order.down(a.unit())), locate(order.down(a.zero()))),
      std::move(ex));
  out.embedding.f.resize(n);
  for (Index x = 0; x < n; ++x) out.embedding.f[x] = locate(order.down(x));
  out.embedding.g = identity_map(a.extractor_count());
  return out;
}

InfoAlgebra close_extractors(const InfoAlgebra& a, bool with_identity, Index cap) {
  std::vector<Extractor> ex = a.extractors();
  auto present = [&](const std::vector<Index>& map) {
    return std::any_of(ex.begin(), ex.end(), [&](const Extractor& x) { return x.map == map; });
  };
  auto add = [&](std::string label, std::vector<Index> map) {
    if (ex.size() >= cap) throw CapExceeded(fmt::format("composition closure exceeds {} extractors", cap));
    while (std::any_of(ex.begin(), ex.end(), [&](const Extractor& x) { return x.label == label; })) label += "'";
    ex.push_back({std::move(label), std::move(map)});
  };

  if (with_identity && !present(identity_map(a.size()))) add("id", identity_map(a.size()));
  for (Index k = 0; k < ex.size(); ++k)
    for (Index i = 0; i <= k; ++i) {
      for (auto [p, q] : {std::pair{i, k}, std::pair{k, i}}) {
        auto map = compose_maps(ex[p].map, ex[q].map);
        if (!present(map)) add(ex[p].label + "." + ex[q].label, std::move(map));
      }
    }

  InfoAlgebra out(a.semilattice(), std::move(ex));
  out.set_element_labels(a.element_labels());
  return out;
}

}  // namespace infalg
