#include "bifrac/bf.hpp"

#include "bifrac/error.hpp"

namespace bifrac {

AxiomVerdict check_bf1(const TwoCategory& k, const CellClass& w, const SearchBudget& budget,
                       std::vector<Pseudoinverse>* equivalences) {
  AxiomVerdict v{"BF1 equivalences lie in W"};
  for (OneCell f : k.one_cells()) {
    auto p = find_pseudoinverse(k, f, budget);
    if (!p) {
      if (p.outcome == Outcome::BudgetExhausted) {
        ++v.remaining;
        if (v.status == Status::Pass) v.status = Status::Unverified;
      }
      continue;
    }
    ++v.checked;
    if (equivalences) equivalences->push_back(*p);
    if (!w.contains(f)) v.fail("equivalence " + k.name(f) + " is not in " + w.name());
  }
  return v;
}

AxiomVerdict check_bf2(const TwoCategory& k, const CellClass& w) {
  AxiomVerdict v{"BF2 closure under composition and isomorphism"};
  const auto members = w.members();
  for (ObjId x : k.objects()) {
    ++v.checked;
    if (!w.contains(k.identity(x))) v.fail("identity on " + k.name(x) + " is not in " + w.name());
  }
  for (OneCell f : members) {
    for (OneCell g : members) {
      if (k.source(g) != k.target(f)) continue;
      ++v.checked;
      if (!w.contains(k.compose(g, f))) v.fail("composite " + k.name(g) + "∘" + k.name(f) + " is not in " + w.name());
    }
  }
  for (OneCell a : members) {
    for (OneCell f : k.hom(k.source(a), k.target(a))) {
      if (w.contains(f) || !find_invertible(k, a, f)) continue;
      ++v.checked;
      v.fail(k.name(f) + " is isomorphic to " + k.name(a) + " but not in " + w.name());
    }
  }
  return v;
}

SearchResult<Bf3Square> check_bf3(const TwoCategory& k, const CellClass& w, OneCell wc, OneCell f,
                                  const SearchBudget& budget) {
  if (k.target(wc) != k.target(f)) throw Error(ErrorKind::CodomainMismatch, "BF3 needs a common codomain");
  Meter meter(budget);
  const ObjId a2 = k.source(wc), c = k.source(f);
  std::size_t depth = 0;
  for (ObjId p : k.objects()) {
    if (!meter.depth_ok(depth++)) break;
    for (OneCell v : k.hom(p, c)) {
      if (!w.contains(v)) continue;
      const OneCell fv = k.compose(f, v);
      for (OneCell top : k.hom(p, a2)) {
        if (!meter.charge()) return SearchResult<Bf3Square>::none(meter.miss());
        if (auto cell = find_invertible(k, k.compose(wc, top), fv)) {
          return SearchResult<Bf3Square>::found({wc, f, p, top, v, *cell});
        }
      }
    }
  }
  return SearchResult<Bf3Square>::none(meter.miss());
}

SearchResult<Bf3Square> bf3_from_site(const TwoSite& site, const CellClass& w, OneCell wc, OneCell f,
                                      const SearchBudget& budget) {
  const TwoCategory& k = site.cat();
  if (k.target(wc) != k.target(f)) throw Error(ErrorKind::CodomainMismatch, "BF3 needs a common codomain");
  std::optional<LocalSplitting> split;
  if (site.j.cells.contains(wc)) {
    split = LocalSplitting{wc, wc, k.identity(k.source(wc)), k.identity(wc)};
  } else if (auto s = is_j_locally_split(site, wc, budget)) {
    split = *s;
  } else {
    return SearchResult<Bf3Square>::none(s.outcome);
  }
  auto sq = find_filler(site, split->cover, f, budget);
  if (!sq) return SearchResult<Bf3Square>::none(sq.outcome);
  // w∘s∘t ⇒ c∘t ⇒ f∘v
  const TwoCell cell = k.vcomp(sq->cell, k.whisker_right(split->cell, sq->top));
  Bf3Square out{wc, f, sq->corner, k.compose(split->section, sq->top), sq->left, cell};
  if (!w.contains(out.v)) return SearchResult<Bf3Square>::none(Outcome::NotFound);
  return SearchResult<Bf3Square>::found(out);
}

Bf4Outcome check_bf4(const TwoCategory& k, const CellClass& w, OneCell wc, TwoCell alpha, const SearchBudget& budget,
                     const std::vector<std::pair<OneCell, TwoCell>>& extra) {
  const OneCell wf = k.source(alpha), wg = k.target(alpha);
  Bf4Outcome out{SearchResult<Bf4Witness>::none(Outcome::NotFound), is_ff_one_cell(k, wc).ff, {}};
  // Recover f and g from the boundary: both are 1-cells into dom w.
  std::optional<std::pair<OneCell, OneCell>> fg;
  const ObjId a = k.source(wf), a2 = k.source(wc);
  for (OneCell f : k.hom(a, a2)) {
    if (k.compose(wc, f) != wf) continue;
    for (OneCell g : k.hom(a, a2)) {
      if (k.compose(wc, g) == wg) {
        fg = {f, g};
        break;
      }
    }
    if (fg) break;
  }
  if (!fg) throw Error(ErrorKind::BoundaryMismatch, "alpha is not a 2-cell between composites with w");
  return check_bf4(k, w, wc, fg->first, fg->second, alpha, budget, extra, out.w_ff);
}

Bf4Outcome check_bf4(const TwoCategory& k, const CellClass& w, OneCell wc, OneCell f, OneCell g, TwoCell alpha,
                     const SearchBudget& budget, const std::vector<std::pair<OneCell, TwoCell>>& extra, bool w_ff) {
  Bf4Outcome out{SearchResult<Bf4Witness>::none(Outcome::NotFound), w_ff, {}};
  const ObjId a = k.source(f);
  const bool alpha_inv = is_invertible(k, alpha);
  if (w_ff) {
    const OneCell v = k.identity(a);
    std::optional<TwoCell> beta;
    std::size_t count = 0;
    for (TwoCell b : k.cells(f, g)) {
      if (k.whisker_left(wc, b) != alpha) continue;
      if (!beta) beta = b;
      ++count;
    }
    if (!beta) {
      out.failure = "no beta with w∘beta = alpha";
      return out;
    }
    Bf4Witness wit{wc, f, g, alpha, v, *beta, count, {}};
    if (count != 1) out.failure = "beta is not unique (" + std::to_string(count) + " solutions)";
    if (alpha_inv && !is_invertible(k, *beta)) out.failure = "alpha invertible but beta is not";
    auto compare = [&](OneCell v2, TwoCell beta2) {
      const OneCell u2 = k.identity(k.source(v2));
      Bf4Comparison c{v2, beta2, v2, u2, k.identity(v2)};
      const TwoCell top = k.vcomp(k.whisker_left(g, c.eps), k.whisker_right(*beta, c.u));
      const TwoCell bottom = k.vcomp(k.whisker_right(beta2, u2), k.whisker_left(f, c.eps));
      if (top != bottom && out.failure.empty()) {
        out.failure = "comparison square fails against (" + k.name(v2) + ", " + k.name(beta2) + ")";
      }
      wit.comparisons.push_back(c);
    };
    for (OneCell v2 : w.into(k, a)) {
      const TwoCell av2 = k.whisker_right(alpha, v2);
      for (TwoCell b2 : k.cells(k.compose(f, v2), k.compose(g, v2))) {
        if (k.whisker_left(wc, b2) == av2) compare(v2, b2);
      }
    }
    for (const auto& [v2, b2] : extra) {
      if (!w.contains(v2) || k.target(v2) != a || k.whisker_left(wc, b2) != k.whisker_right(alpha, v2)) {
        throw Error(ErrorKind::BoundaryMismatch, "supplied pair is not a BF4 answer for alpha");
      }
      compare(v2, b2);
    }
    out.witness = SearchResult<Bf4Witness>::found(std::move(wit));
    return out;
  }
  Meter meter(budget);
  for (OneCell v : w.into(k, a)) {
    const TwoCell av = k.whisker_right(alpha, v);
    std::optional<TwoCell> beta;
    std::size_t count = 0;
    for (TwoCell b : k.cells(k.compose(f, v), k.compose(g, v))) {
      if (!meter.charge()) break;
      if (k.whisker_left(wc, b) != av || (alpha_inv && !is_invertible(k, b))) continue;
      if (!beta) beta = b;
      ++count;
    }
    if (beta) {
      out.witness = SearchResult<Bf4Witness>::found({wc, f, g, alpha, v, *beta, count, {}});
      return out;
    }
    if (meter.exhausted()) break;
  }
  out.witness.outcome = meter.miss();
  out.failure = meter.exhausted() ? "no (v, beta) within budget" : "no v in " + w.name() + " with a matching beta";
  return out;
}

FractionAxiomReport verify_fraction_axioms(const TwoSite& site, const SearchBudget& budget, const std::string& instance_hash) {
  const TwoCategory& k = site.cat();
  const CellClass& j = site.j.cells;
  FractionAxiomReport r;
  r.coverage = j.name();
  r.w = weak_equivalences(site, budget);
  r.certificates.instance_hash = instance_hash;
  r.certificates.coverage = j.name();
  const Classes classes{&j, &r.w};
  auto emit = [&](Claim c) { r.certificates.certificates.push_back(certify(k, classes, std::move(c))); };

  std::vector<Pseudoinverse> equivalences;
  r.bf1 = check_bf1(k, r.w, budget, &equivalences);
  for (const auto& p : equivalences) {
    if (r.w.contains(p.f)) emit(Bf1Equivalence{p});
  }

  r.bf2 = check_bf2(k, r.w);
  const auto members = r.w.members();
  std::vector<std::optional<LocalSplitting>> splitting(k.one_cell_count());
  for (OneCell f : members) {
    if (auto s = is_j_locally_split(site, f, budget)) splitting[f.index()] = *s;
  }
  for (OneCell f : members) {
    for (OneCell g : members) {
      if (k.source(g) != k.target(f)) continue;
      auto s = compose_splittings(site, *splitting[g.index()], *splitting[f.index()], budget);
      if (!s) {
        r.bf2.fail("no pasted splitting for " + k.name(g) + "∘" + k.name(f));
        continue;
      }
      if (auto why = validate(k, j, *s); !why.empty()) {
        r.bf2.fail("pasted splitting for " + k.name(g) + "∘" + k.name(f) + " invalid: " + why);
        continue;
      }
      if (r.w.contains(k.compose(g, f))) emit(Bf2Composite{g, f, *s});
    }
    for (OneCell h : k.hom(k.source(f), k.target(f))) {
      auto a = find_invertible(k, f, h);
      if (!a || h == f) continue;
      ++r.bf2.checked;
      const LocalSplitting t = transport_splitting(k, *splitting[f.index()], *a);
      if (auto why = validate(k, j, t); !why.empty()) r.bf2.fail("transported splitting of " + k.name(h) + " invalid: " + why);
    }
  }

  // The proof uses J ⊂ W_J; range over both so a non-ff cover is exposed.
  std::vector<OneCell> proof_class;
  for (OneCell f : k.one_cells()) {
    if (r.w.contains(f) || j.contains(f)) proof_class.push_back(f);
  }

  for (OneCell wc : proof_class) {
    for (ObjId c : k.objects()) {
      for (OneCell f : k.hom(c, k.target(wc))) {
        ++r.bf3.checked;
        auto sq = bf3_from_site(site, r.w, wc, f, budget);
        if (!sq) {
          if (sq.outcome == Outcome::BudgetExhausted) {
            ++r.bf3.remaining;
            if (r.bf3.status == Status::Pass) r.bf3.status = Status::Unverified;
          } else {
            r.bf3.fail("no square with v in W for w=" + k.name(wc) + " along f=" + k.name(f));
          }
          continue;
        }
        if (r.w.contains(wc)) emit(*sq);
      }
    }
  }

  for (OneCell wc : proof_class) {
    const bool ff = is_ff_one_cell(k, wc).ff;
    const ObjId a2 = k.source(wc);
    for (ObjId a : k.objects()) {
      const auto hom = k.hom(a, a2);
      for (OneCell f : hom) {
        for (OneCell g : hom) {
          for (TwoCell alpha : k.cells(k.compose(wc, f), k.compose(wc, g))) {
            ++r.bf4.checked;
            auto o = check_bf4(k, r.w, wc, f, g, alpha, budget, {}, ff);
            if (!o.ok()) {
              if (o.witness.outcome == Outcome::BudgetExhausted) {
                ++r.bf4.remaining;
                if (r.bf4.status == Status::Pass) r.bf4.status = Status::Unverified;
              } else {
                r.bf4.fail("w=" + k.name(wc) + ", alpha=" + k.name(alpha) + ": " + o.failure);
              }
              continue;
            }
            if (o.witness->v != k.identity(a)) r.bf4.fail("w=" + k.name(wc) + ": witness v is not an identity");
            if (r.w.contains(wc)) emit(*o.witness);
          }
        }
      }
    }
  }
  return r;
}

}  // namespace bifrac
