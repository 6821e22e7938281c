#include "bifrac/slice.hpp"

#include "bifrac/error.hpp"

namespace bifrac {

const char* to_string(SliceVariant v) {
  switch (v) {
    case SliceVariant::Lax: return "lax";
    case SliceVariant::Strict: return "strict";
    case SliceVariant::Groupoid: return "groupoid";
  }
  return "?";
}

std::optional<SliceVariant> parse_slice_variant(const std::string& s) {
  if (s == "lax") return SliceVariant::Lax;
  if (s == "strict") return SliceVariant::Strict;
  if (s == "groupoid") return SliceVariant::Groupoid;
  return std::nullopt;
}

std::optional<ObjId> SliceInstance::object(OneCell p) const {
  auto it = object_of_.find(p.value);
  if (it == object_of_.end()) return std::nullopt;
  return it->second;
}

std::optional<OneCell> SliceInstance::one_cell(ObjId src, ObjId tgt, OneCell f, TwoCell a) const {
  auto it = one_cell_of_.find({src.value, tgt.value, f.value, a.value});
  if (it == one_cell_of_.end()) return std::nullopt;
  return it->second;
}

std::optional<TwoCell> SliceInstance::two_cell(OneCell src, OneCell tgt, TwoCell theta) const {
  auto it = two_cell_of_.find({src.value, tgt.value, theta.value});
  if (it == two_cell_of_.end()) return std::nullopt;
  return it->second;
}

SliceInstance build_lax_slice(std::shared_ptr<const TwoCategory> base, ObjId x, SliceVariant variant) {
  const TwoCategory& k = *base;
  if (!x.valid() || x.index() >= k.object_count()) throw Error(ErrorKind::NotAnObject, "slice base is not an object");
  if (variant == SliceVariant::Groupoid) {
    for (TwoCell a : k.two_cells()) {
      if (!is_invertible(k, a)) throw Error(ErrorKind::NotAGroupoid, "2-cell " + k.name(a) + " is not invertible");
    }
  }
  SliceInstance s;
  s.base_ = base;
  s.over_ = x;
  s.variant_ = variant;
  WindowData d;

  for (ObjId z : k.objects()) {
    for (OneCell p : k.hom(z, x)) {
      s.object_of_[p.value] = ObjId{static_cast<std::uint32_t>(d.objects.size())};
      s.structure_.push_back(p);
      d.objects.push_back(k.name(p));
    }
  }
  const auto n = static_cast<std::uint32_t>(d.objects.size());
  auto carrier = [&](std::uint32_t i) { return k.source(s.structure_[i]); };

  std::vector<std::vector<std::uint32_t>> hom(std::size_t{n} * n);
  for (std::uint32_t i = 0; i < n; ++i) {
    const OneCell p1 = s.structure_[i];
    for (std::uint32_t j = 0; j < n; ++j) {
      const OneCell p2 = s.structure_[j];
      for (OneCell f : k.hom(carrier(i), carrier(j))) {
        for (TwoCell a : k.cells(k.compose(p2, f), p1)) {
          if (variant != SliceVariant::Lax && !is_invertible(k, a)) continue;
          const auto id = static_cast<std::uint32_t>(d.one_cells.size());
          s.one_cell_of_[{i, j, f.value, a.value}] = OneCell{id};
          s.one_cells_.push_back({f, a});
          hom[std::size_t{i} * n + j].push_back(id);
          d.one_cells.push_back({"(" + k.name(f) + "," + k.name(a) + "):" + d.objects[i] + "->" + d.objects[j], i, j});
        }
      }
    }
  }
  auto lookup1 = [&](std::uint32_t i, std::uint32_t j, OneCell f, TwoCell a) {
    auto c = s.one_cell(ObjId{i}, ObjId{j}, f, a);
    if (!c) throw Error(ErrorKind::CrossCheckFailure, "slice 1-cell missing for " + k.name(f));
    return c->value;
  };
  for (std::uint32_t i = 0; i < n; ++i) {
    const OneCell p = s.structure_[i];
    d.identity1.push_back(lookup1(i, i, k.identity(carrier(i)), k.identity(p)));
  }

  std::vector<std::vector<std::uint32_t>> from(d.one_cells.size());  // 2-cells by source 1-cell
  for (const auto& h : hom) {
    for (std::uint32_t c1 : h) {
      const auto [f1, a1] = s.one_cells_[c1];
      const OneCell p2 = s.structure_[d.one_cells[c1].target];
      for (std::uint32_t c2 : h) {
        const auto [f2, a2] = s.one_cells_[c2];
        for (TwoCell t : k.cells(f1, f2)) {
          if (k.vcomp(a2, k.whisker_left(p2, t)) != a1) continue;
          const auto id = static_cast<std::uint32_t>(d.two_cells.size());
          s.two_cell_of_[{c1, c2, t.value}] = TwoCell{id};
          s.two_cells_.push_back(t);
          from[c1].push_back(id);
          d.two_cells.push_back({k.name(t) + ":" + d.one_cells[c1].name + "=>" + d.one_cells[c2].name, c1, c2});
        }
      }
    }
  }
  auto lookup2 = [&](std::uint32_t c1, std::uint32_t c2, TwoCell t) {
    auto c = s.two_cell(OneCell{c1}, OneCell{c2}, t);
    if (!c) throw Error(ErrorKind::CrossCheckFailure, "slice 2-cell missing for " + k.name(t));
    return c->value;
  };
  for (std::uint32_t c = 0; c < d.one_cells.size(); ++c) {
    d.identity2.push_back(lookup2(c, c, k.identity(s.one_cells_[c].first)));
  }

  // compose1: (g, b)∘(f, a) = (g∘f, a·(b∘f))
  std::vector<std::uint32_t> comp;  // composite per (g, f) in row order
  for (std::uint32_t i = 0; i < n; ++i) {
    for (std::uint32_t j = 0; j < n; ++j) {
      for (std::uint32_t fc : hom[std::size_t{i} * n + j]) {
        const auto [f, a] = s.one_cells_[fc];
        for (std::uint32_t l = 0; l < n; ++l) {
          for (std::uint32_t gc : hom[std::size_t{j} * n + l]) {
            const auto [g, b] = s.one_cells_[gc];
            const std::uint32_t gf = lookup1(i, l, k.compose(g, f), k.vcomp(a, k.whisker_right(b, f)));
            d.compose1.push_back({gc, fc, gf});
          }
        }
      }
    }
  }
  auto compose_of = [&](std::uint32_t gc, std::uint32_t fc) {
    const auto [f, a] = s.one_cells_[fc];
    const auto [g, b] = s.one_cells_[gc];
    return lookup1(d.one_cells[fc].source, d.one_cells[gc].target, k.compose(g, f), k.vcomp(a, k.whisker_right(b, f)));
  };

  for (std::uint32_t x1 = 0; x1 < d.two_cells.size(); ++x1) {
    const auto& c = d.two_cells[x1];
    for (std::uint32_t x2 : from[c.target]) {
      d.vcomp.push_back({x2, x1, lookup2(c.source, d.two_cells[x2].target, k.vcomp(s.two_cells_[x2], s.two_cells_[x1]))});
    }
  }
  for (std::uint32_t x1 = 0; x1 < d.two_cells.size(); ++x1) {
    const auto& c = d.two_cells[x1];
    const std::uint32_t i = d.one_cells[c.source].source, j = d.one_cells[c.source].target;
    const TwoCell t = s.two_cells_[x1];
    for (std::uint32_t l = 0; l < n; ++l) {
      for (std::uint32_t h : hom[std::size_t{j} * n + l]) {
        d.whisker_l.push_back(
            {h, x1, lookup2(compose_of(h, c.source), compose_of(h, c.target), k.whisker_left(s.one_cells_[h].first, t))});
      }
      for (std::uint32_t h : hom[std::size_t{l} * n + i]) {
        d.whisker_r.push_back(
            {x1, h, lookup2(compose_of(c.source, h), compose_of(c.target, h), k.whisker_right(t, s.one_cells_[h].first))});
      }
    }
  }
  s.window_ = std::make_shared<const Window>(std::move(d));
  return s;
}

std::optional<FillerSquare> slice_pullback_lift(const TwoSite& base, const SliceInstance& slice, OneCell q, OneCell f) {
  const TwoCategory& k = base.cat();
  const Window& sw = slice.window();
  if (sw.target(q) != sw.target(f)) throw Error(ErrorKind::CodomainMismatch, "lift needs a common codomain");
  const OneCell w = slice.base_cell(q), fb = slice.base_cell(f);
  const TwoCell a = slice.triangle(q), b = slice.triangle(f);
  auto sq = find_filler(base, w, fb, SearchBudget::exhaustive(k));
  if (!sq) return std::nullopt;
  auto a_inv = inverse(k, a);
  if (!a_inv) return std::nullopt;
  const ObjId u = sw.source(q), y = sw.source(f), z = sw.target(q);
  const OneCell ft = sq->top, wt = sq->left;
  const OneCell py = slice.structure(y), pz = slice.structure(z);
  auto corner = slice.object(k.compose(py, wt));
  if (!corner) return std::nullopt;
  const TwoCell c =
      vchain(k, {k.whisker_right(*a_inv, ft), k.whisker_left(pz, sq->cell), k.whisker_right(b, wt)});
  auto left = slice.one_cell(*corner, y, wt, k.identity(slice.structure(*corner)));
  auto top = slice.one_cell(*corner, u, ft, c);
  if (!left || !top) return std::nullopt;
  auto cell = slice.two_cell(sw.compose(q, *top), sw.compose(f, *left), sq->cell);
  if (!cell) return std::nullopt;
  return FillerSquare{q, f, *corner, *top, *left, *cell};
}

std::optional<OneCell> alternative_structure_iso(const SliceInstance& slice, const FillerSquare& lifted) {
  const TwoCategory& k = slice.base();
  const Window& sw = slice.window();
  const OneCell ft = slice.base_cell(lifted.top);
  auto alt = slice.object(k.compose(slice.structure(sw.target(lifted.top)), ft));
  if (!alt) return std::nullopt;
  return slice.one_cell(lifted.corner, *alt, k.identity(k.source(ft)), slice.triangle(lifted.top));
}

Coverage slice_coverage(const TwoSite& base, const std::shared_ptr<const SliceInstance>& slice) {
  const TwoCategory& k = base.cat();
  CellClass cells = CellClass::of(slice->window(), base.j.cells.name() + "_X", [&](OneCell f) {
    return base.j.cells.contains(slice->base_cell(f)) && is_invertible(k, slice->triangle(f));
  });
  return Coverage{std::move(cells), [base, slice](OneCell q, OneCell f) {
                    return slice_pullback_lift(base, *slice, q, f);
                  }};
}

TwoSite slice_site(const TwoSite& base, const std::shared_ptr<const SliceInstance>& slice) {
  return TwoSite{slice->window_ptr(), slice_coverage(base, slice), nullptr};
}

SliceReport verify_slice_is_2site(const TwoSite& base, const std::shared_ptr<const SliceInstance>& slice,
                                  const SearchBudget& budget) {
  const TwoCategory& k = base.cat();
  const TwoSite site = slice_site(base, slice);
  const Window& sw = slice->window();
  SliceReport r;
  r.axioms = verify_coverage_axioms(site, budget);
  for (const auto& sq : r.axioms.squares) {
    if (slice_pullback_lift(base, *slice, sq.q, sq.f)) ++r.pullback_lifts;
  }
  for (OneCell q : site.j.cells.members()) {
    const OneCell w = slice->base_cell(q);
    const ObjId z2 = sw.source(q);
    for (ObjId z1 : sw.objects()) {
      const auto hom = sw.hom(z1, z2);
      for (OneCell fs : hom) {
        for (OneCell gs : hom) {
          for (TwoCell alpha : sw.cells(sw.compose(q, fs), sw.compose(q, gs))) {
            ++r.lifting.checked;
            const TwoCell ab = slice->base_cell(alpha);
            std::optional<TwoCell> beta;
            std::size_t count = 0;
            for (TwoCell t : k.cells(slice->base_cell(fs), slice->base_cell(gs))) {
              if (k.whisker_left(w, t) == ab) {
                beta = t;
                ++count;
              }
            }
            if (count != 1) {
              r.lifting.fail(sw.name(alpha) + ": " + std::to_string(count) + " base solutions of w∘β = α");
              continue;
            }
            auto lifted = slice->two_cell(fs, gs, *beta);
            if (!lifted || sw.whisker_left(q, *lifted) != alpha) {
              r.lifting.fail(sw.name(alpha) + ": β does not lift to the slice");
            }
          }
        }
      }
    }
  }
  return r;
}

}  // namespace bifrac
