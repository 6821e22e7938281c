#include "bifrac/site.hpp"

#include <algorithm>

#include "bifrac/error.hpp"

namespace bifrac {

CellClass CellClass::all(const TwoCategory& k) { return CellClass("all", std::vector<bool>(k.one_cell_count(), true)); }

CellClass CellClass::identities(const TwoCategory& k) {
  return of(k, "identities", [&](OneCell f) { return is_identity(k, f); });
}

CellClass CellClass::of(const TwoCategory& k, std::string name, const std::function<bool(OneCell)>& pred) {
  std::vector<bool> m(k.one_cell_count());
  for (OneCell f : k.one_cells()) m[f.index()] = pred(f);
  return CellClass(std::move(name), std::move(m));
}

CellClass CellClass::extensional(const TwoCategory& k, std::string name, const std::vector<std::string>& cells) {
  std::vector<bool> m(k.one_cell_count());
  for (const auto& n : cells) {
    auto f = k.find_one_cell(n);
    if (!f) throw Error(ErrorKind::NotAOneCell, "'" + n + "' is not a 1-cell of the instance");
    m[f->index()] = true;
  }
  return CellClass(std::move(name), std::move(m));
}

std::size_t CellClass::size() const { return static_cast<std::size_t>(std::count(members_.begin(), members_.end(), true)); }

std::vector<OneCell> CellClass::members() const {
  std::vector<OneCell> out;
  for (std::uint32_t i = 0; i < members_.size(); ++i)
    if (members_[i]) out.emplace_back(i);
  return out;
}

std::vector<OneCell> CellClass::into(const TwoCategory& k, ObjId y) const {
  std::vector<OneCell> out;
  for (ObjId x : k.objects())
    for (OneCell f : k.hom(x, y))
      if (contains(f)) out.push_back(f);
  return out;
}

Coverage identities_only(const TwoCategory& k) { return Coverage{CellClass::identities(k), nullptr}; }

std::string validate(const TwoCategory& k, const CellClass& j, const FillerSquare& sq) {
  if (!j.contains(sq.q)) return "q is not in " + j.name();
  if (!j.contains(sq.left)) return "left leg " + k.name(sq.left) + " is not in " + j.name();
  if (k.target(sq.q) != k.target(sq.f)) return "q and f do not share a codomain";
  if (k.source(sq.top) != sq.corner || k.target(sq.top) != k.source(sq.q)) return "top leg has the wrong boundary";
  if (k.source(sq.left) != sq.corner || k.target(sq.left) != k.source(sq.f)) return "left leg has the wrong boundary";
  if (k.source(sq.cell) != k.compose(sq.q, sq.top) || k.target(sq.cell) != k.compose(sq.f, sq.left)) {
    return "2-cell is not q∘top ⇒ f∘left";
  }
  if (!is_invertible(k, sq.cell)) return "2-cell is not invertible";
  return {};
}

std::string validate(const TwoCategory& k, const CellClass& j, const LocalSplitting& s) {
  if (!j.contains(s.cover)) return "cover " + k.name(s.cover) + " is not in " + j.name();
  if (k.target(s.cover) != k.target(s.f)) return "cover does not land in the codomain";
  if (k.source(s.section) != k.source(s.cover) || k.target(s.section) != k.source(s.f)) {
    return "section has the wrong boundary";
  }
  if (k.source(s.cell) != k.compose(s.f, s.section) || k.target(s.cell) != s.cover) {
    return "2-cell is not f∘section ⇒ cover";
  }
  if (!is_invertible(k, s.cell)) return "2-cell is not invertible";
  return {};
}

SearchResult<FillerSquare> find_filler(const TwoSite& site, OneCell q, OneCell f, const SearchBudget& budget) {
  const TwoCategory& k = site.cat();
  if (site.j.filler_oracle) {
    if (auto sq = site.j.filler_oracle(q, f)) {
      if (auto why = validate(k, site.j.cells, *sq); !why.empty()) {
        throw Error(ErrorKind::CrossCheckFailure, "filler oracle answer rejected: " + why);
      }
      return SearchResult<FillerSquare>::found(*sq);
    }
  }
  Meter meter(budget);
  const ObjId u = k.source(q), y = k.source(f);
  std::size_t depth = 0;
  for (ObjId v : k.objects()) {
    if (!meter.depth_ok(depth++)) break;
    for (OneCell left : k.hom(v, y)) {
      if (!site.j.cells.contains(left)) continue;
      const OneCell fl = k.compose(f, left);
      for (OneCell top : k.hom(v, u)) {
        if (!meter.charge()) return SearchResult<FillerSquare>::none(meter.miss());
        if (auto c = find_invertible(k, k.compose(q, top), fl)) {
          return SearchResult<FillerSquare>::found({q, f, v, top, left, *c});
        }
      }
    }
  }
  return SearchResult<FillerSquare>::none(meter.miss());
}

const char* to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "FAIL";
    case Status::Unverified: return "unverified";
  }
  return "?";
}

AxiomReport verify_coverage_axioms(const TwoSite& site, const SearchBudget& budget) {
  const TwoCategory& k = site.cat();
  const CellClass& j = site.j.cells;
  AxiomReport r;

  for (ObjId x : k.objects()) {
    ++r.closure.checked;
    if (!j.contains(k.identity(x))) r.closure.fail("identity on " + k.name(x) + " is not in " + j.name());
  }
  const auto members = j.members();
  for (OneCell f : members) {
    for (OneCell g : members) {
      if (k.source(g) != k.target(f)) continue;
      ++r.closure.checked;
      if (!j.contains(k.compose(g, f))) {
        r.closure.fail("composite " + k.name(g) + "∘" + k.name(f) + " is not in " + j.name());
      }
    }
  }

  for (OneCell q : members) {
    for (ObjId y : k.objects()) {
      for (OneCell f : k.hom(y, k.target(q))) {
        auto sq = find_filler(site, q, f, budget);
        if (sq) {
          ++r.fillers.checked;
          r.squares.push_back(*sq);
        } else if (sq.outcome == Outcome::BudgetExhausted) {
          ++r.fillers.remaining;
          if (r.fillers.status == Status::Pass) r.fillers.status = Status::Unverified;
        } else {
          ++r.fillers.checked;
          r.fillers.fail("no filler for q=" + k.name(q) + " along f=" + k.name(f));
        }
      }
    }
  }

  for (OneCell q : members) {
    ++r.ff.checked;
    auto v = is_ff_one_cell(k, q);
    if (!v.ff) r.ff.fail(k.name(q) + " is not ff: " + describe(k, *v.witness));
  }
  return r;
}

SearchResult<LocalSplitting> is_j_locally_split(const TwoSite& site, OneCell f, const SearchBudget& budget) {
  const TwoCategory& k = site.cat();
  const ObjId x = k.source(f), y = k.target(f);
  Meter meter(budget);
  SearchResult<LocalSplitting> result = SearchResult<LocalSplitting>::none(Outcome::NotFound);
  std::size_t depth = 0;
  for (ObjId u : k.objects()) {
    if (result || !meter.depth_ok(depth++)) break;
    for (OneCell cover : k.hom(u, y)) {
      if (result) break;
      if (!site.j.cells.contains(cover)) continue;
      for (OneCell s : k.hom(u, x)) {
        if (!meter.charge()) break;
        if (auto c = find_invertible(k, k.compose(f, s), cover)) {
          result = SearchResult<LocalSplitting>::found({f, cover, s, *c});
          break;
        }
      }
    }
  }
  if (!result) result.outcome = meter.miss();
  if (site.split_criterion && result.outcome != Outcome::BudgetExhausted) {
    if (auto expected = site.split_criterion(f); expected && *expected != result.value.has_value()) {
      throw Error(ErrorKind::CrossCheckFailure,
                  "J-local splitting search disagrees with the internal criterion at " + k.name(f));
    }
  }
  return result;
}

const char* to_string(WeVerdict::Kind k) {
  switch (k) {
    case WeVerdict::Kind::WeakEquivalence: return "WeakEquivalence";
    case WeVerdict::Kind::NotFF: return "NotFF";
    case WeVerdict::Kind::NotSplit: return "NotSplit";
    case WeVerdict::Kind::NotSplitWithinBound: return "NotSplitWithinBound";
  }
  return "?";
}

WeVerdict is_weak_equivalence(const TwoSite& site, OneCell f, const SearchBudget& budget) {
  WeVerdict v{WeVerdict::Kind::NotFF, is_ff_one_cell(site.cat(), f), std::nullopt};
  if (!v.ff.ff) return v;
  auto s = is_j_locally_split(site, f, budget);
  if (s) {
    v.kind = WeVerdict::Kind::WeakEquivalence;
    v.splitting = *s;
  } else {
    v.kind = s.outcome == Outcome::BudgetExhausted ? WeVerdict::Kind::NotSplitWithinBound : WeVerdict::Kind::NotSplit;
  }
  return v;
}

CellClass weak_equivalences(const TwoSite& site, const SearchBudget& budget) {
  const TwoCategory& k = site.cat();
  return CellClass::of(k, "W_" + site.j.cells.name(), [&](OneCell f) {
    auto v = is_weak_equivalence(site, f, budget);
    if (v.kind == WeVerdict::Kind::NotSplitWithinBound) {
      throw Error(ErrorKind::CrossCheckFailure, "budget too small to decide W membership of " + k.name(f));
    }
    return v.weak_equivalence();
  });
}

SearchResult<LocalSplitting> compose_splittings(const TwoSite& site, const LocalSplitting& g, const LocalSplitting& f,
                                                const SearchBudget& budget) {
  const TwoCategory& k = site.cat();
  // Complete the cospan cover_f → y ← section_g with a J-leg on the g side.
  auto sq = find_filler(site, f.cover, g.section, budget);
  if (!sq) return SearchResult<LocalSplitting>::none(sq.outcome);
  const OneCell t = sq->top, kk = sq->left;
  const TwoCell step1 = k.whisker_left(g.f, k.whisker_right(f.cell, t));  // g f a t ⇒ g q t
  const TwoCell step2 = k.whisker_left(g.f, sq->cell);                    // g q t ⇒ g s k
  const TwoCell step3 = k.whisker_right(g.cell, kk);                      // g s k ⇒ p k
  return SearchResult<LocalSplitting>::found(
      {k.compose(g.f, f.f), k.compose(g.cover, kk), k.compose(f.section, t), vchain(k, {step1, step2, step3})});
}

LocalSplitting transport_splitting(const TwoCategory& k, const LocalSplitting& w, TwoCell a) {
  auto inv = inverse(k, a);
  if (!inv) throw Error(ErrorKind::BoundaryMismatch, "transport along a non-invertible 2-cell");
  return {k.target(a), w.cover, w.section, k.vcomp(w.cell, k.whisker_right(*inv, w.section))};
}

SearchResult<CofinalWitness> find_cofinal_witness(const TwoCategory& k, const CellClass& sub, OneCell f,
                                                  const SearchBudget& budget) {
  Meter meter(budget);
  const ObjId x = k.source(f), y = k.target(f);
  std::size_t depth = 0;
  for (ObjId z : k.objects()) {
    if (!meter.depth_ok(depth++)) break;
    for (OneCell g : k.hom(z, y)) {
      if (!sub.contains(g)) continue;
      for (OneCell s : k.hom(z, x)) {
        if (!meter.charge()) return SearchResult<CofinalWitness>::none(meter.miss());
        if (auto c = find_invertible(k, k.compose(f, s), g)) {
          return SearchResult<CofinalWitness>::found({f, g, s, *c});
        }
      }
    }
  }
  return SearchResult<CofinalWitness>::none(meter.miss());
}

CofinalVerdict is_cofinal(const TwoCategory& k, const CellClass& sub, const CellClass& cls, const SearchBudget& budget) {
  CofinalVerdict v;
  for (OneCell f : cls.members()) {
    auto w = find_cofinal_witness(k, sub, f, budget);
    if (w) {
      v.witnesses.push_back(*w);
    } else if (w.outcome == Outcome::BudgetExhausted) {
      if (v.status == Status::Pass) v.status = Status::Unverified;
    } else {
      v.status = Status::Fail;
      v.counterexample = f;
      return v;
    }
  }
  return v;
}

}  // namespace bifrac
