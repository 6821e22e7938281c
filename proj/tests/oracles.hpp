#pragma once

// Brute-force reference computations used to pin down expected values.
// Nothing here calls into the engine's search or enumeration code.

#include <cstdint>
#include <functional>
#include <vector>

#include "bifrac/finset/instance.hpp"
#include "bifrac/two_category.hpp"

namespace oracle {

using bifrac::finset::FiniteCategory;
using bifrac::finset::FiniteFunctor;

inline bool iso_objects(const FiniteCategory& c, std::uint32_t a, std::uint32_t b) {
  for (std::uint32_t f = 0; f < c.morphism_count(); ++f) {
    if (c.source(f) != a || c.target(f) != b) continue;
    for (std::uint32_t g = 0; g < c.morphism_count(); ++g) {
      if (c.source(g) != b || c.target(g) != a) continue;
      if (c.compose(g, f) == c.identity(a) && c.compose(f, g) == c.identity(b)) return true;
    }
  }
  return false;
}

/// Functors a → b, counted by trying every object map and every morphism map.
inline std::size_t count_functors(const FiniteCategory& a, const FiniteCategory& b) {
  const std::size_t na = a.object_count(), ma = a.morphism_count();
  std::size_t count = 0;
  std::vector<std::uint32_t> obj(na, 0), mor(ma, 0);
  std::function<void(std::size_t)> morphisms = [&](std::size_t i) {
    if (i == ma) {
      for (std::uint32_t o = 0; o < na; ++o) {
        if (mor[a.identity(o)] != b.identity(obj[o])) return;
      }
      for (std::uint32_t g = 0; g < ma; ++g) {
        for (std::uint32_t f = 0; f < ma; ++f) {
          const auto gf = a.compose(g, f);
          if (gf != bifrac::finset::kNone && b.compose(mor[g], mor[f]) != mor[gf]) return;
        }
      }
      ++count;
      return;
    }
    for (std::uint32_t m = 0; m < b.morphism_count(); ++m) {
      if (b.source(m) != obj[a.source(i)] || b.target(m) != obj[a.target(i)]) continue;
      mor[i] = m;
      morphisms(i + 1);
    }
  };
  std::function<void(std::size_t)> objects = [&](std::size_t i) {
    if (i == na) return morphisms(0);
    for (std::uint32_t o = 0; o < b.object_count(); ++o) {
      obj[i] = o;
      objects(i + 1);
    }
  };
  objects(0);
  return count;
}

/// Natural transformations f ⇒ g, by trying every family of components.
inline std::size_t count_nat_trans(const FiniteFunctor& f, const FiniteFunctor& g) {
  const FiniteCategory& a = *f.source;
  const FiniteCategory& b = *f.target;
  std::size_t count = 0;
  std::vector<std::uint32_t> comp(a.object_count(), 0);
  std::function<void(std::size_t)> go = [&](std::size_t i) {
    if (i == a.object_count()) {
      for (std::uint32_t m = 0; m < a.morphism_count(); ++m) {
        const auto s = a.source(m), t = a.target(m);
        if (b.compose(comp[t], f.mor_map[m]) != b.compose(g.mor_map[m], comp[s])) return;
      }
      ++count;
      return;
    }
    for (std::uint32_t m = 0; m < b.morphism_count(); ++m) {
      if (b.source(m) != f.obj_map[i] || b.target(m) != g.obj_map[i]) continue;
      comp[i] = m;
      go(i + 1);
    }
  };
  go(0);
  return count;
}

inline bool fully_faithful(const FiniteFunctor& f) {
  const FiniteCategory& a = *f.source;
  const FiniteCategory& b = *f.target;
  for (std::uint32_t x = 0; x < a.object_count(); ++x) {
    for (std::uint32_t y = 0; y < a.object_count(); ++y) {
      std::vector<int> hit(b.morphism_count(), 0);
      std::size_t n = 0;
      for (std::uint32_t m = 0; m < a.morphism_count(); ++m) {
        if (a.source(m) != x || a.target(m) != y) continue;
        if (hit[f.mor_map[m]]++) return false;
        ++n;
      }
      std::size_t target_hom = 0;
      for (std::uint32_t m = 0; m < b.morphism_count(); ++m) {
        if (b.source(m) == f.obj_map[x] && b.target(m) == f.obj_map[y]) ++target_hom;
      }
      if (n != target_hom) return false;
    }
  }
  return true;
}

inline bool essentially_surjective(const FiniteFunctor& f) {
  const FiniteCategory& b = *f.target;
  for (std::uint32_t y = 0; y < b.object_count(); ++y) {
    bool hit = false;
    for (std::uint32_t x : f.obj_map) hit = hit || iso_objects(b, x, y);
    if (!hit) return false;
  }
  return true;
}

inline bool surjective_on_objects(const FiniteFunctor& f) {
  std::vector<bool> hit(f.target->object_count(), false);
  for (std::uint32_t x : f.obj_map) hit[x] = true;
  for (bool h : hit) {
    if (!h) return false;
  }
  return true;
}

/// Componentwise composite g∘f, computed without the library helpers.
inline FiniteFunctor compose_functors(const FiniteFunctor& g, const FiniteFunctor& f) {
  FiniteFunctor out{f.source, g.target, {}, {}};
  for (auto o : f.obj_map) out.obj_map.push_back(g.obj_map[o]);
  for (auto m : f.mor_map) out.mor_map.push_back(g.mor_map[m]);
  return out;
}

/// Every composition table entry of the finset window, recomputed from the
/// functors and components. Returns the number of mismatches.
inline std::size_t table_mismatches(const bifrac::finset::FinsetWindow& fw) {
  using namespace bifrac;
  const Window& w = fw.window();
  std::size_t bad = 0;
  for (const auto& [g, f, gf] : w.data().compose1) {
    const auto expect = compose_functors(fw.functor(OneCell{g}), fw.functor(OneCell{f}));
    const auto& got = fw.functor(OneCell{gf});
    if (got.obj_map != expect.obj_map || got.mor_map != expect.mor_map) ++bad;
  }
  for (const auto& [b, a, ba] : w.data().vcomp) {
    const auto& nb = fw.nat_trans(TwoCell{b});
    const auto& na = fw.nat_trans(TwoCell{a});
    const auto& cat = *na.source.target;
    const auto& got = fw.nat_trans(TwoCell{ba});
    for (std::size_t i = 0; i < na.components.size(); ++i) {
      if (got.components[i] != cat.compose(nb.components[i], na.components[i])) {
        ++bad;
        break;
      }
    }
  }
  for (const auto& [h, a, ha] : w.data().whisker_l) {
    const auto& fh = fw.functor(OneCell{h});
    const auto& na = fw.nat_trans(TwoCell{a});
    const auto& got = fw.nat_trans(TwoCell{ha});
    for (std::size_t i = 0; i < na.components.size(); ++i) {
      if (got.components[i] != fh.mor_map[na.components[i]]) {
        ++bad;
        break;
      }
    }
  }
  for (const auto& [a, h, ah] : w.data().whisker_r) {
    const auto& fh = fw.functor(OneCell{h});
    const auto& na = fw.nat_trans(TwoCell{a});
    const auto& got = fw.nat_trans(TwoCell{ah});
    for (std::size_t i = 0; i < fh.obj_map.size(); ++i) {
      if (got.components[i] != na.components[fh.obj_map[i]]) {
        ++bad;
        break;
      }
    }
  }
  return bad;
}

struct Span {
  bifrac::ObjId apex;
  bifrac::OneCell back, fwd;
};

struct Rep {
  bifrac::ObjId v;
  bifrac::OneCell p1, p2;
  bifrac::TwoCell alpha, beta;
};

/// All 2-cell representatives between two spans, by scanning every mediator,
/// leg pair and pair of cells.
inline std::vector<Rep> reps(const bifrac::TwoCategory& k, const std::function<bool(bifrac::OneCell)>& in_w,
                             const Span& s1, const Span& s2) {
  using namespace bifrac;
  std::vector<Rep> out;
  for (ObjId v : k.objects()) {
    for (OneCell p1 : k.hom(v, s1.apex)) {
      const OneCell w1p1 = k.compose(s1.back, p1);
      if (!in_w(w1p1)) continue;
      for (OneCell p2 : k.hom(v, s2.apex)) {
        for (TwoCell a : k.cells(w1p1, k.compose(s2.back, p2))) {
          if (!bifrac::inverse(k, a)) continue;
          for (TwoCell b : k.cells(k.compose(s1.fwd, p1), k.compose(s2.fwd, p2))) out.push_back({v, p1, p2, a, b});
        }
      }
    }
  }
  return out;
}

/// One-step equivalence of representatives, by scanning every (t, q, q', γ1, γ2).
inline bool one_step(const bifrac::TwoCategory& k, const std::function<bool(bifrac::OneCell)>& in_w, const Span& s1,
                     const Span& s2, const Rep& r, const Rep& r2) {
  using namespace bifrac;
  for (ObjId t : k.objects()) {
    for (OneCell q : k.hom(t, r.v)) {
      const OneCell p1q = k.compose(r.p1, q), p2q = k.compose(r.p2, q);
      if (!in_w(k.compose(s1.back, p1q))) continue;
      for (OneCell q2 : k.hom(t, r2.v)) {
        const OneCell p1q2 = k.compose(r2.p1, q2), p2q2 = k.compose(r2.p2, q2);
        if (!in_w(k.compose(s1.back, p1q2))) continue;
        const TwoCell rhs1 = k.whisker_right(r2.alpha, q2), rhs2 = k.whisker_right(r2.beta, q2);
        for (TwoCell g1 : k.cells(p1q2, p1q)) {
          if (!bifrac::inverse(k, g1)) continue;
          for (TwoCell g2 : k.cells(p2q, p2q2)) {
            if (!bifrac::inverse(k, g2)) continue;
            const TwoCell l1 = k.vcomp(k.whisker_left(s2.back, g2),
                                       k.vcomp(k.whisker_right(r.alpha, q), k.whisker_left(s1.back, g1)));
            if (l1 != rhs1) continue;
            const TwoCell l2 = k.vcomp(k.whisker_left(s2.fwd, g2),
                                       k.vcomp(k.whisker_right(r.beta, q), k.whisker_left(s1.fwd, g1)));
            if (l2 == rhs2) return true;
          }
        }
      }
    }
  }
  return false;
}

/// Partition of `rs` under the equivalence relation generated by one_step.
/// Entry i is the smallest index in the class of i.
inline std::vector<std::size_t> partition(const bifrac::TwoCategory& k,
                                          const std::function<bool(bifrac::OneCell)>& in_w, const Span& s1,
                                          const Span& s2, const std::vector<Rep>& rs) {
  std::vector<std::size_t> parent(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) parent[i] = i;
  std::function<std::size_t(std::size_t)> find = [&](std::size_t i) {
    return parent[i] == i ? i : parent[i] = find(parent[i]);
  };
  for (std::size_t i = 0; i < rs.size(); ++i) {
    for (std::size_t j = 0; j < rs.size(); ++j) {
      if (i == j || find(i) == find(j)) continue;
      if (one_step(k, in_w, s1, s2, rs[i], rs[j])) {
        const auto a = find(i), b = find(j);
        parent[std::max(a, b)] = std::min(a, b);
      }
    }
  }
  std::vector<std::size_t> out(rs.size());
  for (std::size_t i = 0; i < rs.size(); ++i) out[i] = find(i);
  return out;
}

}  // namespace oracle
