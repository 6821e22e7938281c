#include "bifrac/finset/functor.hpp"

#include <algorithm>

#include "bifrac/error.hpp"

namespace bifrac::finset {

namespace {

[[noreturn]] void violation(const std::string& what) { throw Error(ErrorKind::AxiomViolation, what); }

// Composition triples of `c` bucketed by their largest morphism index, so a
// left-to-right assignment can check each triple as soon as it is complete.
std::vector<std::vector<FiniteCategory::Triple>> triples_by_last(const FiniteCategory& c) {
  std::vector<std::vector<FiniteCategory::Triple>> out(c.morphism_count());
  for (const auto& t : c.composition_triples()) out[std::max({t[0], t[1], t[2]})].push_back(t);
  return out;
}

}  // namespace

void check_functor(const FiniteFunctor& f) {
  const auto& a = *f.source;
  const auto& b = *f.target;
  if (f.obj_map.size() != a.object_count() || f.mor_map.size() != a.morphism_count()) {
    violation("functor " + a.name() + "→" + b.name() + " has incomplete maps");
  }
  for (auto o : f.obj_map) {
    if (o >= b.object_count()) violation("functor object map leaves " + b.name());
  }
  for (std::uint32_t m = 0; m < a.morphism_count(); ++m) {
    const auto fm = f.mor_map[m];
    if (fm >= b.morphism_count() || b.source(fm) != f.obj_map[a.source(m)] || b.target(fm) != f.obj_map[a.target(m)]) {
      violation("functor does not preserve endpoints of " + a.morphism(m).name);
    }
  }
  for (std::uint32_t o = 0; o < a.object_count(); ++o) {
    if (f.mor_map[a.identity(o)] != b.identity(f.obj_map[o])) violation("functor does not preserve identities");
  }
  for (auto [g, h, gh] : a.composition_triples()) {
    if (f.mor_map[gh] != b.compose(f.mor_map[g], f.mor_map[h])) violation("functor does not preserve composites");
  }
}

void check_nat_trans(const FiniteNatTrans& t) {
  const auto& a = *t.source.source;
  const auto& b = *t.source.target;
  if (t.target.source != t.source.source || t.target.target != t.source.target) {
    violation("natural transformation between non-parallel functors");
  }
  if (t.components.size() != a.object_count()) violation("natural transformation has incomplete components");
  for (std::uint32_t o = 0; o < a.object_count(); ++o) {
    const auto c = t.components[o];
    if (c >= b.morphism_count() || b.source(c) != t.source.obj_map[o] || b.target(c) != t.target.obj_map[o]) {
      violation("component at " + a.object_name(o) + " has the wrong endpoints");
    }
  }
  for (std::uint32_t m = 0; m < a.morphism_count(); ++m) {
    const auto lhs = b.compose(t.target.mor_map[m], t.components[a.source(m)]);
    const auto rhs = b.compose(t.components[a.target(m)], t.source.mor_map[m]);
    if (lhs != rhs) violation("naturality fails at " + a.morphism(m).name);
  }
}

FiniteFunctor identity_functor(const CategoryPtr& c) {
  FiniteFunctor f{c, c, {}, {}};
  for (std::uint32_t o = 0; o < c->object_count(); ++o) f.obj_map.push_back(o);
  for (std::uint32_t m = 0; m < c->morphism_count(); ++m) f.mor_map.push_back(m);
  return f;
}

FiniteFunctor compose(const FiniteFunctor& g, const FiniteFunctor& f) {
  if (f.target != g.source) throw Error(ErrorKind::CodomainMismatch, "functors are not composable");
  FiniteFunctor out{f.source, g.target, {}, {}};
  out.obj_map.reserve(f.obj_map.size());
  out.mor_map.reserve(f.mor_map.size());
  for (auto o : f.obj_map) out.obj_map.push_back(g.obj_map[o]);
  for (auto m : f.mor_map) out.mor_map.push_back(g.mor_map[m]);
  return out;
}

FiniteNatTrans identity_nat_trans(const FiniteFunctor& f) {
  FiniteNatTrans t{f, f, {}};
  for (auto o : f.obj_map) t.components.push_back(f.target->identity(o));
  return t;
}

FiniteNatTrans vcomp(const FiniteNatTrans& b, const FiniteNatTrans& a) {
  if (!(a.target == b.source)) throw Error(ErrorKind::BoundaryMismatch, "natural transformations not composable");
  FiniteNatTrans t{a.source, b.target, {}};
  const auto& c = *a.source.target;
  for (std::size_t o = 0; o < a.components.size(); ++o) t.components.push_back(c.compose(b.components[o], a.components[o]));
  return t;
}

FiniteNatTrans whisker_left(const FiniteFunctor& h, const FiniteNatTrans& a) {
  FiniteNatTrans t{compose(h, a.source), compose(h, a.target), {}};
  for (auto c : a.components) t.components.push_back(h.mor_map[c]);
  return t;
}

FiniteNatTrans whisker_right(const FiniteNatTrans& a, const FiniteFunctor& h) {
  FiniteNatTrans t{compose(a.source, h), compose(a.target, h), {}};
  for (auto o : h.obj_map) t.components.push_back(a.components[o]);
  return t;
}

bool is_invertible(const FiniteNatTrans& a) {
  const auto& c = *a.source.target;
  return std::all_of(a.components.begin(), a.components.end(), [&](auto m) { return c.inverse(m).has_value(); });
}

std::vector<FiniteFunctor> enumerate_functors(const CategoryPtr& a, const CategoryPtr& b) {
  std::vector<FiniteFunctor> out;
  const auto na = a->object_count(), nb = b->object_count(), nm = a->morphism_count();
  if (nb == 0) {
    if (na == 0) out.push_back({a, b, {}, {}});
    return out;
  }
  const auto checks = triples_by_last(*a);
  std::vector<std::uint32_t> obj(na, 0), mor(nm, kNone);

  std::function<void(std::size_t)> assign = [&](std::size_t i) {
    if (i == nm) {
      out.push_back({a, b, obj, mor});
      return;
    }
    const auto& m = a->morphism(static_cast<std::uint32_t>(i));
    for (std::uint32_t cand : b->hom(obj[m.source], obj[m.target])) {
      if (a->identity(m.source) == i && cand != b->identity(obj[m.source])) continue;
      mor[i] = cand;
      bool ok = true;
      for (const auto& [g, f, gf] : checks[i]) {
        if (b->compose(mor[g], mor[f]) != mor[gf]) {
          ok = false;
          break;
        }
      }
      if (ok) assign(i + 1);
    }
    mor[i] = kNone;
  };

  while (true) {
    assign(0);
    std::size_t k = na;
    while (k > 0) {
      --k;
      if (++obj[k] < nb) break;
      obj[k] = 0;
      if (k == 0) return out;
    }
    if (na == 0) return out;
  }
}

std::vector<FiniteNatTrans> enumerate_nat_trans(const FiniteFunctor& f, const FiniteFunctor& g) {
  std::vector<FiniteNatTrans> out;
  if (f.source != g.source || f.target != g.target) return out;
  const auto& a = *f.source;
  const auto& b = *f.target;
  const auto na = a.object_count();
  // Naturality squares checked once both endpoints have components.
  std::vector<std::vector<std::uint32_t>> squares(na);
  for (std::uint32_t m = 0; m < a.morphism_count(); ++m) squares[std::max(a.source(m), a.target(m))].push_back(m);
  std::vector<std::uint32_t> comp(na, kNone);

  std::function<void(std::size_t)> assign = [&](std::size_t o) {
    if (o == na) {
      out.push_back({f, g, comp});
      return;
    }
    for (std::uint32_t c : b.hom(f.obj_map[o], g.obj_map[o])) {
      comp[o] = c;
      bool ok = true;
      for (auto m : squares[o]) {
        if (b.compose(g.mor_map[m], comp[a.source(m)]) != b.compose(comp[a.target(m)], f.mor_map[m])) {
          ok = false;
          break;
        }
      }
      if (ok) assign(o + 1);
    }
    comp[o] = kNone;
  };
  assign(0);
  return out;
}

bool functor_fully_faithful(const FiniteFunctor& f) {
  const auto& a = *f.source;
  const auto& b = *f.target;
  for (std::uint32_t x = 0; x < a.object_count(); ++x) {
    for (std::uint32_t y = 0; y < a.object_count(); ++y) {
      const auto src = a.hom(x, y);
      const auto tgt = b.hom(f.obj_map[x], f.obj_map[y]);
      if (src.size() != tgt.size()) return false;
      std::vector<std::uint32_t> image;
      for (auto m : src) image.push_back(f.mor_map[m]);
      std::sort(image.begin(), image.end());
      if (std::adjacent_find(image.begin(), image.end()) != image.end()) return false;
    }
  }
  return true;
}

bool object_surjective(const FiniteFunctor& f) {
  std::vector<bool> hit(f.target->object_count(), false);
  for (auto o : f.obj_map) hit[o] = true;
  return std::all_of(hit.begin(), hit.end(), [](bool h) { return h; });
}

bool essentially_surjective(const FiniteFunctor& f) {
  const auto& b = *f.target;
  for (std::uint32_t y = 0; y < b.object_count(); ++y) {
    bool reached = false;
    for (auto o : f.obj_map) {
      if (b.isomorphic(o, y)) {
        reached = true;
        break;
      }
    }
    if (!reached) return false;
  }
  return true;
}

bool j_of_t_membership(const FiniteFunctor& f, const ObjectCover& cover) {
  return functor_fully_faithful(f) && cover(f);
}

Pullback strict_pullback(const FiniteFunctor& q, const FiniteFunctor& f, const ObjectCover& cover) {
  if (q.target != f.target) {
    throw Error(ErrorKind::CodomainMismatch,
                "cannot pull back " + q.source->name() + "→" + q.target->name() + " along a functor into " +
                    f.target->name());
  }
  if (!j_of_t_membership(q, cover)) violation("pullback requested along a functor outside J(T)");
  const auto& u = *q.source;
  const auto& y = *f.source;

  std::vector<std::string> objs;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> obj_pairs;
  std::vector<std::vector<std::uint32_t>> obj_index(y.object_count(), std::vector<std::uint32_t>(u.object_count(), kNone));
  for (std::uint32_t a = 0; a < y.object_count(); ++a) {
    for (std::uint32_t b = 0; b < u.object_count(); ++b) {
      if (f.obj_map[a] != q.obj_map[b]) continue;
      obj_index[a][b] = static_cast<std::uint32_t>(obj_pairs.size());
      obj_pairs.emplace_back(a, b);
      objs.push_back("(" + y.object_name(a) + "," + u.object_name(b) + ")");
    }
  }
  std::vector<FiniteCategory::Morphism> mors;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> mor_pairs;
  std::vector<std::vector<std::uint32_t>> mor_index(y.morphism_count(),
                                                    std::vector<std::uint32_t>(u.morphism_count(), kNone));
  for (std::uint32_t m = 0; m < y.morphism_count(); ++m) {
    for (std::uint32_t n = 0; n < u.morphism_count(); ++n) {
      if (f.mor_map[m] != q.mor_map[n]) continue;
      mor_index[m][n] = static_cast<std::uint32_t>(mor_pairs.size());
      mor_pairs.emplace_back(m, n);
      mors.push_back({"(" + y.morphism(m).name + "," + u.morphism(n).name + ")",
                      obj_index[y.source(m)][u.source(n)], obj_index[y.target(m)][u.target(n)]});
    }
  }
  std::vector<std::uint32_t> ids;
  for (auto [a, b] : obj_pairs) ids.push_back(mor_index[y.identity(a)][u.identity(b)]);
  std::vector<FiniteCategory::Triple> comp;
  for (std::uint32_t g = 0; g < mor_pairs.size(); ++g) {
    for (std::uint32_t h = 0; h < mor_pairs.size(); ++h) {
      if (mors[h].target != mors[g].source) continue;
      const auto ym = y.compose(mor_pairs[g].first, mor_pairs[h].first);
      const auto um = u.compose(mor_pairs[g].second, mor_pairs[h].second);
      comp.push_back({g, h, mor_index[ym][um]});
    }
  }
  auto apex = std::make_shared<const FiniteCategory>(y.name() + "x" + u.name(), std::move(objs), std::move(mors),
                                                    std::move(ids), comp);
  Pullback out{apex, {apex, f.source, {}, {}}, {apex, q.source, {}, {}}};
  for (auto [a, b] : obj_pairs) {
    out.to_f_side.obj_map.push_back(a);
    out.to_q_side.obj_map.push_back(b);
  }
  for (auto [m, n] : mor_pairs) {
    out.to_f_side.mor_map.push_back(m);
    out.to_q_side.mor_map.push_back(n);
  }
  check_functor(out.to_f_side);
  check_functor(out.to_q_side);
  if (!j_of_t_membership(out.to_f_side, cover)) violation("pulled-back projection is not in J(T)");
  return out;
}

std::optional<FiniteFunctor> find_isomorphism(const CategoryPtr& a, const CategoryPtr& b) {
  if (a->object_count() != b->object_count() || a->morphism_count() != b->morphism_count()) return std::nullopt;
  for (auto& f : enumerate_functors(a, b)) {
    auto objs = f.obj_map;
    auto mors = f.mor_map;
    std::sort(objs.begin(), objs.end());
    std::sort(mors.begin(), mors.end());
    if (std::adjacent_find(objs.begin(), objs.end()) == objs.end() &&
        std::adjacent_find(mors.begin(), mors.end()) == mors.end()) {
      return f;
    }
  }
  return std::nullopt;
}

}  // namespace bifrac::finset
