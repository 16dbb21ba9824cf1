#include "infalg/duality.hpp"

#include <algorithm>
#include <map>

#include <fmt/format.h>

namespace infalg {

namespace {

using Relation = std::vector<Subset>;

Relation order_relation(const FinitePoset& order) {
  Relation r;
  for (Index x = 0; x < order.size(); ++x) r.push_back(order.up(x));
  return r;
}

Relation equivalence_relation(const Equivalence& theta) {
  const auto blocks = theta.blocks();
  Relation r;
  for (Index x = 0; x < theta.size(); ++x) r.push_back(blocks[theta.block(x)]);
  return r;
}

// (x, z) when x r y and y s z for some y.
Relation compose(const Relation& r, const Relation& s) {
  Relation out;
  for (const auto& row : r) {
    Subset acc(row.size());
    for (auto y = row.find_first(); y != Subset::npos; y = row.find_next(y)) acc |= s[y];
    out.push_back(std::move(acc));
  }
  return out;
}

Subset preimage(const std::vector<Index>& alpha, const Subset& v) {
  Subset out(alpha.size());
  for (Index p = 0; p < alpha.size(); ++p)
    if (v[alpha[p]]) out.set(p);
  return out;
}

Equivalence block_plus_singletons(const Subset& block) {
  std::vector<Index> b(block.size());
  for (Index v = 0; v < block.size(); ++v) b[v] = block[v] ? block.size() : v;
  return Equivalence(std::move(b));
}

}  // namespace

QSpace QSpace::create(FinitePoset order, StarFamily eqs) {
  if (eqs.universe() != order.size())
    throw FormatError(fmt::format("equivalences live on {} points, order on {}", eqs.universe(), order.size()));
  for (Index t = 0; t < eqs.size(); ++t)
    if (auto c = check_separating(order, eqs.member(t)); !c)
      throw StructureError(fmt::format("'{}' is not separating: {}", eqs.label(t), c.message()));
  QSpace s;
  s.order_ = std::move(order);
  s.eqs_ = std::move(eqs);
  return s;
}

Check check_separating(const FinitePoset& order, const Equivalence& theta) {
  const Index n = order.size();
  if (theta.size() != n) return Check::fail("equivalence and order differ in size");
  const auto ups = up_sets(order);
  std::vector<Subset> saturated;
  for (const auto& u : ups) {
    Subset s = saturate(theta, u);
    if (!order.is_up_set(s))
      return Check::fail(fmt::format("saturation of up-set {} is {}, not an up-set", format_set(u), format_set(s)),
                         members(u));
    if (s == u) saturated.push_back(u);
  }
  for (Index p = 0; p < n; ++p)
    for (Index q = p + 1; q < n; ++q) {
      if (theta.related(p, q)) continue;
      bool split = std::any_of(saturated.begin(), saturated.end(), [&](const Subset& v) { return v[p] != v[q]; });
      if (!split) return Check::fail(fmt::format("no saturated up-set splits {} and {}", p, q), {p, q});
    }
  return Check::pass();
}

Check check_A(const FinitePoset& order, const Equivalence& theta) {
  const Index n = order.size();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y) {
      if (!order.leq(x, y)) continue;
      for (Index u = 0; u < n; ++u) {
        if (!theta.related(y, u)) continue;
        for (Index v = 0; v < n; ++v) {
          if (!order.leq(u, v)) continue;
          bool exists = false;
          for (Index y2 = 0; y2 < n && !exists; ++y2) exists = order.leq(x, y2) && theta.related(y2, v);
          if (!exists) return Check::fail(fmt::format("A fails at ({},{},{},{})", x, y, u, v), {x, y, u, v});
        }
      }
    }
  return Check::pass();
}

Check check_B(const FinitePoset& order, const Equivalence& theta) {
  const Index n = order.size();
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      for (Index x2 = 0; x2 < n; ++x2) {
        if (!order.leq(x, x2) || !theta.related(x2, y)) continue;
        for (Index y2 = 0; y2 < n; ++y2) {
          if (!order.leq(y, y2) || !theta.related(y2, x)) continue;
          if (!theta.related(x, y))
            return Check::fail(fmt::format("B fails at ({},{},{},{})", x, y, x2, y2), {x, y, x2, y2});
        }
      }
  return Check::pass();
}

Check check_Cij(const Equivalence& theta_i, const Equivalence& theta_j) {
  const Index n = theta_i.size();
  for (Index x = 0; x < n; ++x)
    for (Index u = 0; u < n; ++u) {
      if (!theta_i.related(x, u)) continue;
      for (Index y = 0; y < n; ++y) {
        if (!theta_j.related(u, y)) continue;
        bool exists = false;
        for (Index u2 = 0; u2 < n && !exists; ++u2) exists = theta_j.related(x, u2) && theta_i.related(u2, y);
        if (!exists) return Check::fail(fmt::format("C fails at ({},{},{})", x, u, y), {x, u, y});
      }
    }
  return Check::pass();
}

Check check_Bij(const FinitePoset& order, const Equivalence& theta_i, const Equivalence& theta_j) {
  const Index n = order.size();
  const Relation leq = order_relation(order);
  const Relation ti = equivalence_relation(theta_i);
  const Relation tj = equivalence_relation(theta_j);
  const Relation path = compose(compose(compose(leq, ti), leq), tj);
  const Relation link = compose(ti, tj);
  for (Index x = 0; x < n; ++x)
    for (Index y = 0; y < n; ++y)
      if (path[x][y] && path[y][x] && !link[x][y])
        return Check::fail(fmt::format("Bij fails at ({},{})", x, y), {x, y});
  return Check::pass();
}

Dual dualize(const InfoAlgebra& a) {
  a.require_closed();
  if (auto c = is_distributive_cdf(a); !c) throw StructureError("not a distributive algebra: " + c.message());
  const auto lat = a.lattice();

  Dual d;
  d.points = meet_irreducibles(lat);
  const Index m = d.points.size();
  FinitePoset order = induced_order(a.order(), d.points);

  std::vector<std::string> labels;
  std::vector<Equivalence> members;
  for (Index e = 0; e < a.extractor_count(); ++e) {
    Subset image(a.size());
    for (Index x = 0; x < a.size(); ++x) image.set(a.apply(e, x));
    std::map<Subset, Index> ids;
    std::vector<Index> block(m);
    for (Index p = 0; p < m; ++p) {
      Subset trace = image & a.order().down(d.points[p]);
      block[p] = ids.try_emplace(std::move(trace), ids.size()).first->second;
    }
    labels.push_back(a.label(e));
    members.emplace_back(std::move(block));
  }
  for (Index i = 0; i < members.size(); ++i)
    for (Index j = i + 1; j < members.size(); ++j)
      if (auto s = star(members[i], members[j]); !s.commuting())
        throw StructureError(fmt::format("dual kernels of '{}' and '{}' do not commute: points ({},{})", labels[i],
                                         labels[j], d.points[s.witness.first], d.points[s.witness.second]));
  d.space = QSpace::create(std::move(order), StarFamily::create(m, std::move(labels), std::move(members)));
  return d;
}

Subset dual_up_set(const InfoAlgebra& a, const Dual& d, Index x) {
  Subset s(d.points.size());
  for (Index p = 0; p < d.points.size(); ++p)
    if (a.leq(x, d.points[p])) s.set(p);
  return s;
}

SetAlgebra reconstruct(const QSpace& s) { return SetAlgebra::create(s.size(), up_sets(s.order()), s.eqs()); }

AlgebraRoundTrip round_trip_algebra(const InfoAlgebra& a) {
  AlgebraRoundTrip r;
  r.dual = dualize(a);
  r.reconstructed = reconstruct(r.dual.space);
  for (Index x = 0; x < a.size(); ++x) {
    auto idx = r.reconstructed.find(dual_up_set(a, r.dual, x));
    if (!idx) throw std::logic_error(fmt::format("points above {} do not form an up-set", x));
    r.kappa.f.push_back(*idx);
  }
  r.kappa.g = identity_map(a.extractor_count());
  r.iso = is_isomorphism(r.kappa, a, r.reconstructed.algebra());
  return r;
}

QMorphism identity_q_morphism(const QSpace& s) { return {identity_map(s.size()), identity_map(s.eqs().size())}; }

Check check_q_morphism(const QMorphism& m, const QSpace& from, const QSpace& to) {
  const auto& y = from.eqs();
  const auto& z = to.eqs();
  if (m.alpha.size() != from.size())
    return Check::fail(fmt::format("alpha has {} entries, expected {}", m.alpha.size(), from.size()));
  if (m.omega.size() != z.size())
    return Check::fail(fmt::format("omega has {} entries, expected {}", m.omega.size(), z.size()));
  for (Index p = 0; p < m.alpha.size(); ++p)
    if (m.alpha[p] >= to.size()) return Check::fail(fmt::format("alpha({}) out of range", p), {p});
  for (Index g = 0; g < m.omega.size(); ++g)
    if (m.omega[g] >= y.size()) return Check::fail(fmt::format("omega('{}') out of range", z.label(g)), {g});

  for (Index p = 0; p < from.size(); ++p)
    for (Index q = 0; q < from.size(); ++q)
      if (from.order().leq(p, q) && !to.order().leq(m.alpha[p], m.alpha[q]))
        return Check::fail(fmt::format("alpha not order-preserving at ({},{})", p, q), {p, q});

  for (Index g = 0; g < z.size(); ++g)
    for (Index h = 0; h < z.size(); ++h)
      if (!(y.member(m.omega[z.product(g, h)]) == y.member(y.product(m.omega[g], m.omega[h]))))
        return Check::fail(fmt::format("omega does not preserve the product of ('{}','{}')", z.label(g), z.label(h)),
                           {g, h});

  const auto ups = up_sets(to.order());
  for (Index g = 0; g < z.size(); ++g)
    for (Index v = 0; v < ups.size(); ++v) {
      Subset lhs = preimage(m.alpha, saturate(z.member(g), ups[v]));
      Subset rhs = saturate(y.member(m.omega[g]), preimage(m.alpha, ups[v]));
      if (lhs != rhs)
        return Check::fail(
            fmt::format("saturation law fails for '{}' at up-set {}", z.label(g), format_set(ups[v])), {g, v});
    }
  return Check::pass();
}

Check is_q_isomorphism(const QMorphism& m, const QSpace& from, const QSpace& to) {
  if (auto c = check_q_morphism(m, from, to); !c) return c;
  if (from.size() != to.size()) return Check::fail("point counts differ");
  if (from.eqs().size() != to.eqs().size()) return Check::fail("family sizes differ");
  std::vector<bool> hit(to.size(), false);
  for (Index p = 0; p < from.size(); ++p) {
    if (hit[m.alpha[p]]) return Check::fail(fmt::format("alpha not injective at {}", p), {p});
    hit[m.alpha[p]] = true;
  }
  for (Index p = 0; p < from.size(); ++p)
    for (Index q = 0; q < from.size(); ++q)
      if (to.order().leq(m.alpha[p], m.alpha[q]) && !from.order().leq(p, q))
        return Check::fail(fmt::format("alpha does not reflect order at ({},{})", p, q), {p, q});
  std::vector<bool> used(from.eqs().size(), false);
  for (Index g = 0; g < m.omega.size(); ++g) {
    if (used[m.omega[g]]) return Check::fail(fmt::format("omega not injective at '{}'", to.eqs().label(g)), {g});
    used[m.omega[g]] = true;
  }
  for (Index g = 0; g < m.omega.size(); ++g)
    for (Index p = 0; p < from.size(); ++p)
      for (Index q = 0; q < from.size(); ++q)
        if (from.eqs().member(m.omega[g]).related(p, q) != to.eqs().member(g).related(m.alpha[p], m.alpha[q]))
          return Check::fail(fmt::format("'{}' does not correspond at ({},{})", to.eqs().label(g), p, q), {g, p, q});
  return Check::pass();
}

SpaceRoundTrip round_trip_space(const QSpace& s) {
  SpaceRoundTrip r;
  r.algebra = reconstruct(s);
  r.dual = dualize(r.algebra.algebra());
  for (Index p = 0; p < s.size(); ++p) {
    const Index element = *r.algebra.find(s.order().up(p));
    auto it = std::find(r.dual.points.begin(), r.dual.points.end(), element);
    if (it == r.dual.points.end()) {
      r.iso = Check::fail(fmt::format("up-set of {} is not meet-irreducible", p), {p});
      return r;
    }
    r.lambda.alpha.push_back(static_cast<Index>(it - r.dual.points.begin()));
  }
  r.lambda.omega = identity_map(s.eqs().size());
  r.iso = is_q_isomorphism(r.lambda, s, r.dual.space);
  return r;
}

DualizedMorphism dualize_morphism(const AlgebraMorphism& m, const InfoAlgebra& a, const InfoAlgebra& b,
                                  bool require_homomorphism) {
  if (require_homomorphism)
    if (auto c = is_homomorphism(m, a, b); !c) throw StructureError("not a homomorphism: " + c.message());
  if (m.f.size() != a.size() || m.g.size() != a.extractor_count()) throw FormatError("morphism has the wrong shape");
  for (Index x : m.f)
    if (x >= b.size()) throw FormatError("element map out of range");
  for (Index e : m.g)
    if (e >= b.extractor_count()) throw FormatError("extractor map out of range");

  const auto la = a.lattice();
  const auto lb = b.lattice();
  if (m.f[a.unit()] != b.unit() || m.f[a.zero()] != b.zero())
    throw StructureError("element map does not preserve unit and zero");
  for (Index x = 0; x < a.size(); ++x)
    for (Index y = x + 1; y < a.size(); ++y)
      if (m.f[la.join(x, y)] != lb.join(m.f[x], m.f[y]) || m.f[la.meet(x, y)] != lb.meet(m.f[x], m.f[y]))
        throw StructureError(fmt::format("element map is not a lattice homomorphism at ({},{})", x, y));

  DualizedMorphism d;
  d.target = dualize(a);
  d.source = dualize(b);
  for (Index mu : d.source.points) {
    Index gen = a.unit();
    for (Index x = 0; x < a.size(); ++x)
      if (b.leq(m.f[x], mu)) gen = a.combine(gen, x);
    auto it = std::find(d.target.points.begin(), d.target.points.end(), gen);
    if (it == d.target.points.end())
      throw std::logic_error(fmt::format("preimage of the ideal below {} is not prime", mu));
    d.q.alpha.push_back(static_cast<Index>(it - d.target.points.begin()));
  }

  const auto& ta = d.target.space.eqs();
  const auto& sb = d.source.space.eqs();
  for (Index e = 0; e < a.extractor_count(); ++e)
    for (Index h = e + 1; h < a.extractor_count(); ++h)
      if (ta.member(e) == ta.member(h) && !(sb.member(m.g[e]) == sb.member(m.g[h])))
        throw StructureError(fmt::format("extractor map not well defined on equal duals of '{}' and '{}'",
                                         a.label(e), a.label(h)));
  d.q.omega = m.g;
  return d;
}

Check check_dual_square(const AlgebraMorphism& m, const InfoAlgebra& a, const InfoAlgebra& b,
                        const DualizedMorphism& d) {
  for (Index x = 0; x < a.size(); ++x)
    if (preimage(d.q.alpha, dual_up_set(a, d.target, x)) != dual_up_set(b, d.source, m.f[x]))
      return Check::fail(fmt::format("preimage of the points above {} is not the points above its image", x), {x});
  return Check::pass();
}

BooleanDiagnostics boolean_diagnostics(const InfoAlgebra& a) {
  const auto lat = a.lattice();
  if (auto c = is_distributive(lat); !c) throw StructureError("lattice not distributive: " + c.message());
  const auto comp = complements(lat);
  if (!comp.complemented()) throw StructureError(fmt::format("element {} has no complement", *comp.missing));

  BooleanDiagnostics r;
  r.dual = dualize(a);
  r.antichain = r.dual.space.order().is_antichain();
  for (Index p = 0; p < r.dual.points.size() && r.maximal.ok(); ++p) {
    const Index mu = r.dual.points[p];
    for (Index y = 0; y < a.size(); ++y)
      if (y != mu && y != a.zero() && a.leq(mu, y)) {
        r.maximal = Check::fail(fmt::format("ideal below {} is contained in the ideal below {}", mu, y), {p});
        break;
      }
  }
  return r;
}

NontrivialSeparating make_nontrivial_separating(const FinitePoset& order) {
  const Index n = order.size();
  if (n < 2) throw FormatError("need at least two points");

  auto attempt = [&](const Subset& u) -> std::optional<Equivalence> {
    if (u.count() < 2 || u.all()) return std::nullopt;
    Equivalence theta = block_plus_singletons(u);
    if (theta.is_identity() || theta.is_all()) return std::nullopt;
    if (!check_separating(order, theta)) return std::nullopt;
    return theta;
  };

  NontrivialSeparating r;
  for (Index x = 0; x < n; ++x)
    if (auto theta = attempt(order.up(x))) {
      r.theta = std::move(theta);
      r.block = order.up(x);
      r.note = fmt::format("block is the up-set of {}", x);
      return r;
    }
  for (const auto& u : up_sets(order)) {
    bool principal = false;
    for (Index x = 0; x < n && !principal; ++x) principal = order.up(x) == u;
    if (principal) continue;
    if (auto theta = attempt(u)) {
      r.theta = std::move(theta);
      r.block = u;
      r.note = fmt::format("block is the non-principal up-set {}", format_set(u));
      return r;
    }
  }
  r.block = Subset(n);
  r.note = "every up-set block gives the identity or the all-relation";
  return r;
}

}  // namespace infalg
