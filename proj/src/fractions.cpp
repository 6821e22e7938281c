#include "bifrac/fractions.hpp"

#include <numeric>

#include "bifrac/error.hpp"

namespace bifrac {

const char* to_string(Equivalence e) {
  switch (e) {
    case Equivalence::Equivalent: return "Equivalent";
    case Equivalence::NotEquivalent: return "NotEquivalent";
    case Equivalence::NotEquivalentWithinBound: return "NotEquivalentWithinBound";
  }
  return "?";
}

std::size_t HomCatPresentation::two_cell_classes() const {
  std::size_t n = 0;
  for (const auto& [key, classes] : two_cells) n += classes.size();
  return n;
}

Fractions::Fractions(const TwoSite& site, CellClass w, SearchBudget budget)
    : site_(site), w_(std::move(w)), budget_(budget) {}

FractionSpan Fractions::localise(OneCell f) const {
  const TwoCategory& k = cat();
  const ObjId x = k.source(f);
  return {x, k.target(f), x, k.identity(x), f};
}

FractionSpan Fractions::identity_span(ObjId x) const { return localise(cat().identity(x)); }

std::string Fractions::validate(const FractionSpan& s) const {
  const TwoCategory& k = cat();
  if (k.source(s.back) != s.apex || k.target(s.back) != s.source) return "backward leg is not apex → source";
  if (k.source(s.fwd) != s.apex || k.target(s.fwd) != s.target) return "forward leg is not apex → target";
  if (!w_.contains(s.back)) return "backward leg " + k.name(s.back) + " is not in " + w_.name();
  return {};
}

std::string Fractions::validate(const SpanPair& sp, const FractionTwoCellRep& r) const {
  Evaluator ev(cat(), classes());
  return check(ev, FractionEquivalence{sp, r, r, reflexivity(r)});
}

std::string Fractions::validate(const SpanPair& sp, const FractionTwoCellRep& r1, const FractionTwoCellRep& r2,
                                const EquivalenceWitness& e) const {
  Evaluator ev(cat(), classes());
  return check(ev, FractionEquivalence{sp, r1, r2, e});
}

FractionSpan Fractions::compose(const FractionSpan& g, const FractionSpan& f, const Bf3Square& sq) const {
  const TwoCategory& k = cat();
  if (sq.w != g.back || sq.f != f.fwd) throw Error(ErrorKind::BoundaryMismatch, "square does not fit the spans");
  FractionSpan out{f.source, g.target, sq.corner, k.compose(f.back, sq.v), k.compose(g.fwd, sq.top)};
  if (auto why = validate(out); !why.empty()) throw Error(ErrorKind::CrossCheckFailure, "composite span: " + why);
  return out;
}

SearchResult<FractionSpan> Fractions::compose(const FractionSpan& g, const FractionSpan& f) const {
  if (f.target != g.source) throw Error(ErrorKind::CodomainMismatch, "spans are not composable");
  auto sq = bf3_from_site(site_, w_, g.back, f.fwd, budget_);
  if (!sq) sq = check_bf3(cat(), w_, g.back, f.fwd, budget_);
  if (!sq) return SearchResult<FractionSpan>::none(sq.outcome);
  return SearchResult<FractionSpan>::found(compose(g, f, *sq));
}

FractionTwoCellRep Fractions::identity_rep(const FractionSpan& s) const {
  const TwoCategory& k = cat();
  const OneCell id = k.identity(s.apex);
  return {s.apex, id, id, k.identity(s.back), k.identity(s.fwd)};
}

std::optional<FractionTwoCellRep> Fractions::formal_inverse(const SpanPair&, const FractionTwoCellRep& r) const {
  auto a = inverse(cat(), r.alpha);
  auto b = inverse(cat(), r.beta);
  if (!a || !b) return std::nullopt;
  return FractionTwoCellRep{r.mediator, r.p2, r.p1, *a, *b};
}

std::vector<FractionTwoCellRep> Fractions::reps(const SpanPair& sp) const {
  const TwoCategory& k = cat();
  std::vector<FractionTwoCellRep> out;
  for (ObjId v : k.objects()) {
    for (OneCell p1 : k.hom(v, sp.s1.apex)) {
      const OneCell w1p1 = k.compose(sp.s1.back, p1);
      if (!w_.contains(w1p1)) continue;
      for (OneCell p2 : k.hom(v, sp.s2.apex)) {
        const OneCell w2p2 = k.compose(sp.s2.back, p2);
        if (!w_.contains(w2p2)) continue;
        const auto betas = k.cells(k.compose(sp.s1.fwd, p1), k.compose(sp.s2.fwd, p2));
        for (TwoCell a : k.cells(w1p1, w2p2)) {
          if (!is_invertible(k, a)) continue;
          for (TwoCell b : betas) out.push_back({v, p1, p2, a, b});
        }
      }
    }
  }
  return out;
}

SearchResult<FractionTwoCellRep> Fractions::find_invertible_rep(const SpanPair& sp) const {
  const TwoCategory& k = cat();
  Meter meter(budget_);
  std::size_t depth = 0;
  for (ObjId v : k.objects()) {
    if (!meter.depth_ok(depth++)) break;
    for (OneCell p1 : k.hom(v, sp.s1.apex)) {
      const OneCell w1p1 = k.compose(sp.s1.back, p1);
      if (!w_.contains(w1p1)) continue;
      for (OneCell p2 : k.hom(v, sp.s2.apex)) {
        if (!meter.charge()) return SearchResult<FractionTwoCellRep>::none(meter.miss());
        const OneCell w2p2 = k.compose(sp.s2.back, p2);
        if (!w_.contains(w2p2)) continue;
        auto a = find_invertible(k, w1p1, w2p2);
        if (!a) continue;
        if (auto b = find_invertible(k, k.compose(sp.s1.fwd, p1), k.compose(sp.s2.fwd, p2))) {
          return SearchResult<FractionTwoCellRep>::found({v, p1, p2, *a, *b});
        }
      }
    }
  }
  return SearchResult<FractionTwoCellRep>::none(meter.miss());
}

EquivalenceResult Fractions::equivalent(const SpanPair& sp, const FractionTwoCellRep& r1,
                                        const FractionTwoCellRep& r2) const {
  for (const auto* r : {&r1, &r2}) {
    if (auto why = validate(sp, *r); !why.empty()) {
      throw Error(ErrorKind::BoundaryMismatch, "not a 2-cell representative between the spans: " + why);
    }
  }
  const TwoCategory& k = cat();
  const OneCell w1 = sp.s1.back, w2 = sp.s2.back, f1 = sp.s1.fwd, f2 = sp.s2.fwd;
  Meter meter(budget_);
  std::size_t depth = 0;
  for (ObjId t : k.objects()) {
    if (!meter.depth_ok(depth++)) break;
    for (OneCell q : k.hom(t, r1.mediator)) {
      const OneCell p1q = k.compose(r1.p1, q), p2q = k.compose(r1.p2, q);
      if (!w_.contains(k.compose(w1, p1q))) continue;
      const TwoCell aq = k.whisker_right(r1.alpha, q), bq = k.whisker_right(r1.beta, q);
      for (OneCell q2 : k.hom(t, r2.mediator)) {
        if (!meter.charge()) return {meter.miss() == Outcome::BudgetExhausted ? Equivalence::NotEquivalentWithinBound
                                                                              : Equivalence::NotEquivalent,
                                     std::nullopt};
        const OneCell p1q2 = k.compose(r2.p1, q2), p2q2 = k.compose(r2.p2, q2);
        if (!w_.contains(k.compose(w1, p1q2))) continue;
        const TwoCell a2 = k.whisker_right(r2.alpha, q2), b2 = k.whisker_right(r2.beta, q2);
        for (TwoCell g1 : k.cells(p1q2, p1q)) {
          if (!is_invertible(k, g1)) continue;
          const TwoCell wa = k.vcomp(aq, k.whisker_left(w1, g1));
          const TwoCell fb = k.vcomp(bq, k.whisker_left(f1, g1));
          for (TwoCell g2 : k.cells(p2q, p2q2)) {
            if (!is_invertible(k, g2)) continue;
            if (k.vcomp(k.whisker_left(w2, g2), wa) != a2) continue;
            if (k.vcomp(k.whisker_left(f2, g2), fb) != b2) continue;
            return {Equivalence::Equivalent, EquivalenceWitness{t, q, q2, g1, g2}};
          }
        }
      }
    }
  }
  return {meter.miss() == Outcome::BudgetExhausted ? Equivalence::NotEquivalentWithinBound : Equivalence::NotEquivalent,
          std::nullopt};
}

EquivalenceWitness Fractions::reflexivity(const FractionTwoCellRep& r) const {
  const TwoCategory& k = cat();
  const OneCell id = k.identity(r.mediator);
  return {r.mediator, id, id, k.identity(r.p1), k.identity(r.p2)};
}

EquivalenceWitness Fractions::symmetry(const EquivalenceWitness& e) const {
  const TwoCategory& k = cat();
  auto g1 = inverse(k, e.gamma1), g2 = inverse(k, e.gamma2);
  if (!g1 || !g2) throw Error(ErrorKind::BoundaryMismatch, "witness 2-cells are not invertible");
  return {e.t, e.q2, e.q, *g1, *g2};
}

SearchResult<CospanFiller> Fractions::chosen_filler(const SpanPair& sp) const {
  const TwoCategory& k = cat();
  auto sq = bf3_from_site(site_, w_, sp.s1.back, sp.s2.back, budget_);
  if (!sq) sq = check_bf3(k, w_, sp.s1.back, sp.s2.back, budget_);
  if (!sq) return SearchResult<CospanFiller>::none(sq.outcome);
  CospanFiller c{sq->corner, sq->top, sq->v, sq->cell};
  if (!w_.contains(k.compose(sp.s1.back, c.p1)) || !w_.contains(k.compose(sp.s2.back, c.p2))) {
    throw Error(ErrorKind::CrossCheckFailure, "chosen filler legs do not compose into W");
  }
  return SearchResult<CospanFiller>::found(c);
}

FractionTwoCellRep Fractions::from_normal_form(const SpanPair&, const CospanFiller& c, const NormalFormData& n) const {
  const TwoCategory& k = cat();
  return {k.source(n.q), k.compose(c.p1, n.q), k.compose(c.p2, n.q), k.whisker_right(c.alpha, n.q), n.beta};
}

std::optional<NormalFormData> Fractions::as_normal_form(const SpanPair&, const CospanFiller& c,
                                                        const FractionTwoCellRep& r) const {
  const TwoCategory& k = cat();
  for (OneCell q : k.hom(r.mediator, c.v)) {
    if (!w_.contains(q)) continue;
    if (k.compose(c.p1, q) == r.p1 && k.compose(c.p2, q) == r.p2 && k.whisker_right(c.alpha, q) == r.alpha) {
      return NormalFormData{q, r.beta};
    }
  }
  return std::nullopt;
}

SearchResult<FractionTwoCellRep> Fractions::normal_form(const SpanPair& sp, const FractionTwoCellRep& r,
                                                        const CospanFiller& c) const {
  if (auto why = validate(sp, r); !why.empty()) throw Error(ErrorKind::BoundaryMismatch, why);
  if (as_normal_form(sp, c, r)) return SearchResult<FractionTwoCellRep>::found(r);
  return class_key(sp, r, c);
}

SearchResult<FractionTwoCellRep> Fractions::class_key(const SpanPair& sp, const FractionTwoCellRep& r,
                                                      const CospanFiller& c, const CellClass* legs) const {
  const TwoCategory& k = cat();
  const CellClass& qs = legs ? *legs : w_;
  Meter meter(budget_);
  bool within_bound = false;
  std::size_t depth = 0;
  for (ObjId v2 : k.objects()) {
    if (!meter.depth_ok(depth++)) break;
    for (OneCell q : k.hom(v2, c.v)) {
      if (!qs.contains(q)) continue;
      const OneCell p1q = k.compose(c.p1, q), p2q = k.compose(c.p2, q);
      for (TwoCell b : k.cells(k.compose(sp.s1.fwd, p1q), k.compose(sp.s2.fwd, p2q))) {
        if (!meter.charge()) return SearchResult<FractionTwoCellRep>::none(meter.miss());
        const FractionTwoCellRep n = from_normal_form(sp, c, {q, b});
        auto e = equivalent(sp, r, n);
        if (e) return SearchResult<FractionTwoCellRep>::found(n);
        within_bound |= e.verdict == Equivalence::NotEquivalentWithinBound;
      }
    }
  }
  return SearchResult<FractionTwoCellRep>::none(within_bound ? Outcome::BudgetExhausted : meter.miss());
}

SearchResult<FractionTwoCellRep> Fractions::vertical_compose(const FractionSpan& s1, const FractionSpan& s2,
                                                             const FractionSpan& s3, const FractionTwoCellRep& r23,
                                                             const FractionTwoCellRep& r12) const {
  const TwoCategory& k = cat();
  if (auto why = validate(SpanPair{s1, s2}, r12); !why.empty()) throw Error(ErrorKind::BoundaryMismatch, why);
  if (auto why = validate(SpanPair{s2, s3}, r23); !why.empty()) throw Error(ErrorKind::BoundaryMismatch, why);
  // Common refinement of p2: v → u2 and p2': v' → u2 over x.
  const OneCell w2 = s2.back;
  const OneCell a_leg = k.compose(w2, r23.p1), b_leg = k.compose(w2, r12.p2);
  auto sq = bf3_from_site(site_, w_, a_leg, b_leg, budget_);
  if (!sq) sq = check_bf3(k, w_, a_leg, b_leg, budget_);
  if (!sq) return SearchResult<FractionTwoCellRep>::none(sq.outcome);
  const OneCell s = sq->top, r = sq->v;  // s: t → v', r: t → v, delta: w2 p2' s ⇒ w2 p2 r
  const OneCell lhs = k.compose(r23.p1, s), rhs = k.compose(r12.p2, r);
  auto lift = check_bf4(k, w_, w2, lhs, rhs, sq->cell, budget_, {}, is_ff_one_cell(k, w2).ff);
  if (!lift.witness) return SearchResult<FractionTwoCellRep>::none(lift.witness.outcome);
  const OneCell z = lift.witness->v;
  auto eps_inv = inverse(k, lift.witness->beta);  // eps: p2' s z ⇒ p2 r z
  if (!eps_inv) throw Error(ErrorKind::CrossCheckFailure, "BF4 lift of an invertible cell is not invertible");
  const OneCell rz = k.compose(r, z), sz = k.compose(s, z);
  FractionTwoCellRep out{k.source(z), k.compose(r12.p1, rz), k.compose(r23.p2, sz),
                         vchain(k, {k.whisker_right(r12.alpha, rz), k.whisker_left(w2, *eps_inv),
                                    k.whisker_right(r23.alpha, sz)}),
                         vchain(k, {k.whisker_right(r12.beta, rz), k.whisker_left(s2.fwd, *eps_inv),
                                    k.whisker_right(r23.beta, sz)})};
  if (auto why = validate(SpanPair{s1, s3}, out); !why.empty()) {
    throw Error(ErrorKind::CrossCheckFailure, "vertical composite is not a representative: " + why);
  }
  return SearchResult<FractionTwoCellRep>::found(out);
}

SearchResult<NormalizedSpan> Fractions::normalize_backward_leg(const FractionSpan& s, const CellClass& v) const {
  const TwoCategory& k = cat();
  if (v.contains(s.back)) return SearchResult<NormalizedSpan>::found({s, identity_rep(s)});
  auto c = find_cofinal_witness(k, v, s.back, budget_);
  if (!c) return SearchResult<NormalizedSpan>::none(c.outcome);
  auto phi_inv = inverse(k, c->cell);
  const ObjId z = k.source(c->g);
  NormalizedSpan out{{s.source, s.target, z, c->g, k.compose(s.fwd, c->s)}, {}};
  out.iso = {z, k.identity(z), c->s, *phi_inv, k.identity(out.span.fwd)};
  if (auto why = validate(SpanPair{out.span, s}, out.iso); !why.empty()) {
    throw Error(ErrorKind::CrossCheckFailure, "normalized span: " + why);
  }
  return SearchResult<NormalizedSpan>::found(out);
}

Retraction Fractions::retract_to_cofinal(const SpanPair& sp, const CospanFiller& c, const NormalFormData& n,
                                         const CofinalTriangle& t) const {
  const TwoCategory& k = cat();
  if (k.target(t.r) != c.v || k.source(t.s) != k.source(t.r) || k.target(t.s) != k.source(n.q) ||
      k.source(t.phi) != k.compose(n.q, t.s) || k.target(t.phi) != t.r) {
    throw Error(ErrorKind::BoundaryMismatch, "triangle does not fit q");
  }
  auto phi_inv = inverse(k, t.phi);
  if (!phi_inv) throw Error(ErrorKind::BoundaryMismatch, "phi is not invertible");
  const OneCell f1p1 = k.compose(sp.s1.fwd, c.p1), f2p2 = k.compose(sp.s2.fwd, c.p2);
  const TwoCell gamma =
      vchain(k, {k.whisker_left(f1p1, *phi_inv), k.whisker_right(n.beta, t.s), k.whisker_left(f2p2, t.phi)});
  Retraction out{from_normal_form(sp, c, {t.r, gamma}), {}};
  const ObjId v0 = k.source(t.r);
  out.witness = {v0, t.s, k.identity(v0), k.whisker_left(c.p1, *phi_inv), k.whisker_left(c.p2, t.phi)};
  const FractionTwoCellRep from = from_normal_form(sp, c, n);
  if (auto why = validate(sp, from, out.rep, out.witness); !why.empty()) {
    throw Error(ErrorKind::CrossCheckFailure, "retraction witness: " + why);
  }
  return out;
}

SearchResult<Retraction> Fractions::retract_to_cofinal(const SpanPair& sp, const CospanFiller& c,
                                                       const NormalFormData& n, const CellClass& v) const {
  auto w = find_cofinal_witness(cat(), v, n.q, budget_);
  if (!w) return SearchResult<Retraction>::none(w.outcome);
  return SearchResult<Retraction>::found(retract_to_cofinal(sp, c, n, {w->g, w->s, w->cell}));
}

HomCatPresentation Fractions::hom_category(ObjId x, ObjId y, const CellClass& v, bool with_vcomp) const {
  const TwoCategory& k = cat();
  HomCatPresentation h{x, y, {}, {}, {}, {}, {}, Outcome::Found};
  auto note = [&](Outcome o) {
    if (o == Outcome::BudgetExhausted) h.outcome = Outcome::BudgetExhausted;
  };
  for (ObjId u : k.objects()) {
    for (OneCell back : k.hom(u, x)) {
      if (!v.contains(back)) continue;
      for (OneCell fwd : k.hom(u, y)) h.spans.push_back({x, y, u, back, fwd});
    }
  }
  for (std::size_t i = 0; i < h.spans.size(); ++i) {
    std::size_t cls = h.class_reps.size();
    for (std::size_t c = 0; c < h.class_reps.size(); ++c) {
      auto iso = find_invertible_rep({h.spans[h.class_reps[c]], h.spans[i]});
      note(iso.outcome);
      if (iso) {
        cls = c;
        break;
      }
    }
    if (cls == h.class_reps.size()) h.class_reps.push_back(i);
    h.span_class.push_back(cls);
  }

  std::map<std::pair<std::size_t, std::size_t>, CospanFiller> fillers;
  const std::size_t n = h.class_reps.size();
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const SpanPair sp{h.spans[h.class_reps[i]], h.spans[h.class_reps[j]]};
      auto c = chosen_filler(sp);
      if (!c) {
        note(c.outcome);
        continue;
      }
      fillers.emplace(std::pair{i, j}, *c);
      auto& classes = h.two_cells[{i, j}];
      for (ObjId v2 : k.objects()) {
        for (OneCell q : k.hom(v2, c->v)) {
          if (!v.contains(q)) continue;
          const OneCell p1q = k.compose(c->p1, q), p2q = k.compose(c->p2, q);
          for (TwoCell b : k.cells(k.compose(sp.s1.fwd, p1q), k.compose(sp.s2.fwd, p2q))) {
            const FractionTwoCellRep cand = from_normal_form(sp, *c, {q, b});
            bool joined = false;
            for (const auto& rep : classes) {
              auto e = equivalent(sp, rep, cand);
              note(e.verdict == Equivalence::NotEquivalentWithinBound ? Outcome::BudgetExhausted : Outcome::Found);
              if (e) {
                joined = true;
                break;
              }
            }
            if (!joined) classes.push_back(cand);
          }
        }
      }
    }
  }
  if (!with_vcomp) return h;

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t l = 0; l < n; ++l) {
        const auto& ab = h.two_cells[{i, j}];
        const auto& bc = h.two_cells[{j, l}];
        const auto& ac = h.two_cells[{i, l}];
        const FractionSpan &s1 = h.spans[h.class_reps[i]], &s2 = h.spans[h.class_reps[j]],
                           &s3 = h.spans[h.class_reps[l]];
        for (std::size_t a = 0; a < ab.size(); ++a) {
          for (std::size_t b = 0; b < bc.size(); ++b) {
            auto comp = vertical_compose(s1, s2, s3, bc[b], ab[a]);
            if (!comp) {
              note(comp.outcome);
              continue;
            }
            std::optional<std::size_t> found;
            for (std::size_t c = 0; c < ac.size() && !found; ++c) {
              if (equivalent({s1, s3}, ac[c], *comp)) found = c;
            }
            if (!found) {
              throw Error(ErrorKind::CrossCheckFailure, "vertical composite lies in no enumerated 2-cell class");
            }
            h.vcomp[{i, j, l, a, b}] = *found;
          }
        }
      }
    }
  }
  return h;
}

SearchResult<LocalisationInverse> Fractions::localisation_inverse(const FractionSpan& f) const {
  const TwoCategory& k = cat();
  const FractionSpan idx = identity_span(f.source), idy = identity_span(f.target);
  Meter meter(budget_);
  bool within_bound = false;
  std::size_t depth = 0;
  for (ObjId u : k.objects()) {
    if (!meter.depth_ok(depth++)) break;
    for (OneCell back : k.hom(u, f.target)) {
      if (!w_.contains(back)) continue;
      for (OneCell fwd : k.hom(u, f.source)) {
        if (!meter.charge()) return SearchResult<LocalisationInverse>::none(meter.miss());
        const FractionSpan g{f.target, f.source, u, back, fwd};
        auto gf = compose(g, f);
        auto fg = compose(f, g);
        if (!gf || !fg) {
          within_bound |= gf.outcome == Outcome::BudgetExhausted || fg.outcome == Outcome::BudgetExhausted;
          continue;
        }
        auto unit = find_invertible_rep({idx, *gf});
        auto counit = find_invertible_rep({*fg, idy});
        within_bound |= unit.outcome == Outcome::BudgetExhausted || counit.outcome == Outcome::BudgetExhausted;
        if (unit && counit) {
          return SearchResult<LocalisationInverse>::found({g, *gf, *fg, *unit, *counit});
        }
      }
    }
  }
  return SearchResult<LocalisationInverse>::none(within_bound ? Outcome::BudgetExhausted : meter.miss());
}

}  // namespace bifrac
