// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <string>

#include "bifrac/bf.hpp"
#include "bifrac/fractions.hpp"
#include "bifrac/slice.hpp"
#include "bifrac/window_io.hpp"
#include "mutation.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bifrac;
using support::Finset;

namespace {

struct Verdict {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond && ok) {
      ok = false;
      note.str("");
      note << "failed: " << what;
    }
  }
};

int failures = 0;

void criterion(int n, const char* title, double limit_s, const std::function<void(Verdict&)>& body) {
  Verdict o;
  const auto t0 = std::chrono::steady_clock::now();
  try {
    body(o);
  } catch (const std::exception& e) {
    o.ok = false;
    o.note.str("");
    o.note << "threw: " << e.what();
  }
  const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  if (limit_s > 0 && s > limit_s) {
    o.ok = false;
    o.note << " (over the " << limit_s << " s limit)";
  }
  failures += !o.ok;
  std::printf("%s  %d  %s  [%.2f s]  %s\n", o.ok ? "PASS" : "FAIL", n, title, s, o.note.str().c_str());
  std::fflush(stdout);
}

FractionSpan standard(const Finset& fx, int i) {
  const ObjId c2 = fx.obj("C2codisc"), bz = fx.obj("BZ2"), one = fx.obj("1");
  if (i == 1) return {c2, bz, c2, fx.one("id_C2codisc"), fx.one("C2codisc_to_BZ2_1")};
  return {c2, bz, one, fx.one("1_to_C2codisc_0"), fx.one("1_to_BZ2")};
}

const std::map<std::pair<std::string, std::string>, std::array<std::size_t, 4>>& frozen_homs() {
  static const std::map<std::pair<std::string, std::string>, std::array<std::size_t, 4>> m = {
      {{"1", "1"}, {2, 1, 1, 1}},          {{"1", "C2codisc"}, {6, 1, 1, 1}},
      {{"1", "D2"}, {4, 2, 2, 2}},         {{"1", "BZ2"}, {3, 1, 2, 4}},
      {{"1", "1+1"}, {4, 2, 2, 2}},        {{"C2codisc", "1"}, {2, 1, 1, 1}},
      {{"C2codisc", "C2codisc"}, {8, 1, 1, 1}}, {{"C2codisc", "D2"}, {4, 2, 2, 2}},
      {{"C2codisc", "BZ2"}, {4, 1, 2, 4}}, {{"C2codisc", "1+1"}, {4, 2, 2, 2}},
      {{"D2", "1"}, {4, 1, 1, 1}},         {{"D2", "C2codisc"}, {16, 1, 1, 1}},
      {{"D2", "D2"}, {16, 4, 4, 4}},       {{"D2", "BZ2"}, {4, 1, 4, 16}},
      {{"D2", "1+1"}, {16, 4, 4, 4}},      {{"BZ2", "1"}, {1, 1, 1, 1}},
      {{"BZ2", "C2codisc"}, {2, 1, 1, 1}}, {{"BZ2", "D2"}, {2, 2, 2, 2}},
      {{"BZ2", "BZ2"}, {2, 2, 4, 8}},      {{"BZ2", "1+1"}, {2, 2, 2, 2}},
      {{"1+1", "1"}, {4, 1, 1, 1}},        {{"1+1", "C2codisc"}, {16, 1, 1, 1}},
      {{"1+1", "D2"}, {16, 4, 4, 4}},      {{"1+1", "BZ2"}, {4, 1, 4, 16}},
      {{"1+1", "1+1"}, {16, 4, 4, 4}},
  };
  return m;
}

}  // namespace

int main() {
  const Finset& fx = support::fixture();
  const TwoCategory& k = fx.k();
  const std::string hash = content_hash(fx.fw->window());

  criterion(1, "coverage axioms (i)-(iii) on the fixture window", 60, [&](Verdict& o) {
    const auto r = verify_coverage_axioms(fx.site, fx.all());
    for (const auto* v : {&r.closure, &r.fillers, &r.ff}) {
      o.require(v->status == Status::Pass && v->counterexamples.empty(), v->axiom);
    }
    if (o.ok) o.note << r.closure.checked << "+" << r.fillers.checked << "+" << r.ff.checked << " checks, 0 counterexamples";
  });

  criterion(2, "BF1-BF4 for W_J with unique beta and v = id", 300, [&](Verdict& o) {
    const auto r = verify_fraction_axioms(fx.site, fx.all(), hash);
    for (const auto* v : {&r.bf1, &r.bf2, &r.bf3, &r.bf4}) o.require(v->status == Status::Pass, v->axiom);
    std::size_t bf4 = 0;
    for (const auto& c : r.certificates.certificates) {
      const auto* w = std::get_if<Bf4Witness>(&c.claim);
      if (!w) continue;
      ++bf4;
      o.require(is_identity(k, w->v), "v = id for " + k.name(w->w));
      std::size_t betas = 0;
      for (TwoCell b : k.cells(w->f, w->g)) betas += k.whisker_left(w->w, b) == w->alpha;
      o.require(betas == 1 && w->beta_count == 1, "unique beta for " + k.name(w->alpha));
    }
    o.require(bf4 == r.bf4.checked, "one witness per tested (w, alpha)");
    if (o.ok) {
      o.note << "BF1 " << r.bf1.checked << ", BF2 " << r.bf2.checked << ", BF3 " << r.bf3.checked << ", BF4 " << bf4
             << " (each beta unique by enumeration)";
    }
  });

  criterion(3, "weak equivalence iff fully faithful and essentially surjective", 0, [&](Verdict& o) {
    const auto w = weak_equivalences(fx.site, fx.all());
    std::size_t n = 0;
    for (OneCell f : k.one_cells()) {
      const auto& F = fx.fw->functor(f);
      o.require(w.contains(f) == (oracle::fully_faithful(F) && oracle::essentially_surjective(F)), k.name(f));
      ++n;
    }
    if (o.ok) o.note << n << "/" << n << " functors agree, |W| = " << w.size();
  });

  criterion(4, "localisation inverses of weak equivalences; none for D2 -> 1", 0, [&](Verdict& o) {
    const auto w = weak_equivalences(fx.site, fx.all());
    Fractions fr(fx.site, w, fx.all());
    for (OneCell f : w.members()) {
      const FractionSpan s = fr.localise(f);
      const auto li = fr.localisation_inverse(s);
      o.require(bool(li), "inverse for " + k.name(f));
      if (!li) continue;
      o.require(fr.validate({fr.identity_span(s.source), li->gf}, li->unit).empty(), "unit rep of " + k.name(f));
      o.require(fr.validate({li->fg, fr.identity_span(s.target)}, li->counit).empty(), "counit rep of " + k.name(f));
      o.require(is_invertible(k, li->unit.beta) && is_invertible(k, li->counit.beta), "invertible unit/counit");
    }
    const auto none = fr.localisation_inverse(fr.localise(fx.one("D2_to_1")));
    o.require(!none && none.outcome == Outcome::NotFound, "D2_to_1 exhaustively without inverse");
    if (o.ok) o.note << w.size() << " inverses certified; D2_to_1: NotFound under exhaustive search";
  });

  const auto w = weak_equivalences(fx.site, fx.all());
  Fractions fr(fx.site, w, fx.all());
  const SpanPair sp{standard(fx, 1), standard(fx, 2)};

  criterion(5, "2-cell equivalence: reflexive, symmetric, transitive, independently re-validated", 0, [&](Verdict& o) {
    const auto reps = fr.reps(sp);
    CertificateBundle bundle{hash, fx.site.j.cells.name(), {}};
    std::size_t steps = 0, triples = 0;
    for (const auto& r : reps) {
      bundle.certificates.push_back(certify(k, fr.classes(), FractionEquivalence{sp, r, r, fr.reflexivity(r)}));
      for (const auto& r2 : reps) {
        const auto e = fr.equivalent(sp, r, r2);
        if (!e) continue;
        ++steps;
        bundle.certificates.push_back(certify(k, fr.classes(), FractionEquivalence{sp, r, r2, *e.witness}));
        bundle.certificates.push_back(
            certify(k, fr.classes(), FractionEquivalence{sp, r2, r, fr.symmetry(*e.witness)}));
        for (const auto& r3 : reps) {
          if (!fr.equivalent(sp, r2, r3)) continue;
          ++triples;
          const auto t = fr.equivalent(sp, r, r3);
          o.require(bool(t), "transitivity");
          if (t) bundle.certificates.push_back(certify(k, fr.classes(), FractionEquivalence{sp, r, r3, *t.witness}));
        }
      }
    }
    finset::FinsetSemantics sem(fx.fw);
    const auto v = validate_bundle(sem, fr.classes(), hash, to_json(k, bundle));
    o.require(v.ok && v.checked == bundle.certificates.size(), "independent re-validation");
    if (o.ok) {
      o.note << reps.size() << " reps, " << steps << " equivalent pairs, " << triples << " triples, "
             << v.checked << " witnesses re-validated by componentwise evaluation";
    }
  });

  criterion(6, "normal forms exist, have q in W, and induce the brute-force partition", 0, [&](Verdict& o) {
    const auto reps = fr.reps(sp);
    const auto c = fr.chosen_filler(sp);
    o.require(bool(c), "chosen filler");
    if (!c) return;
    auto in_w = [&](OneCell f) { return w.contains(f); };
    const oracle::Span o1{sp.s1.apex, sp.s1.back, sp.s1.fwd}, o2{sp.s2.apex, sp.s2.back, sp.s2.fwd};
    const auto expect = oracle::partition(k, in_w, o1, o2, oracle::reps(k, in_w, o1, o2));
    std::vector<FractionTwoCellRep> keys;
    for (const auto& r : reps) {
      const auto n = fr.normal_form(sp, r, *c);
      o.require(bool(n), "normal form exists");
      if (!n) return;
      const auto data = fr.as_normal_form(sp, *c, *n);
      o.require(data && w.contains(data->q), "q' in W");
      const auto e = fr.equivalent(sp, r, *n);
      o.require(e && fr.validate(sp, r, *n, *e.witness).empty(), "certified equivalent to its normal form");
      keys.push_back(*fr.class_key(sp, r, *c));
    }
    o.require(expect.size() == reps.size(), "oracle enumerates the same reps");
    for (std::size_t i = 0; i < reps.size(); ++i) {
      for (std::size_t j = 0; j < reps.size(); ++j) {
        o.require((keys[i] == keys[j]) == (expect[i] == expect[j]), "partition agreement");
      }
    }
    if (o.ok) {
      o.note << reps.size() << " reps, " << std::set<std::size_t>(expect.begin(), expect.end()).size()
             << " classes, keys match brute-force partition";
    }
  });

  criterion(7, "hom-categories over the cofinal class V = J", 0, [&](Verdict& o) {
    const CellClass& v = fx.site.j.cells;
    o.require(is_cofinal(k, v, w, fx.all()).status == Status::Pass, "J cofinal in W_J");
    std::size_t classes = 0, retracted = 0;
    for (ObjId x : k.objects()) {
      for (ObjId y : k.objects()) {
        const auto h = fr.hom_category(x, y, v);
        const std::string at = k.name(x) + "->" + k.name(y);
        o.require(h.outcome == Outcome::Found, "terminates at " + at);
        const auto& want = frozen_homs().at({k.name(x), k.name(y)});
        o.require(h.spans.size() == want[0] && h.span_classes() == want[1] && h.two_cell_classes() == want[2] &&
                      h.vcomp.size() == want[3],
                  "frozen counts at " + at);
        classes += h.span_classes();
        for (std::size_t a = 0; a < h.class_reps.size(); ++a) {
          for (std::size_t b = 0; b < h.class_reps.size(); ++b) {
            const SpanPair pair{h.spans[h.class_reps[a]], h.spans[h.class_reps[b]]};
            const auto c = fr.chosen_filler(pair);
            if (!c) continue;
            for (const auto& r : fr.reps(pair)) {
              const auto nf = fr.normal_form(pair, r, *c);
              if (!nf) continue;
              const auto n = *fr.as_normal_form(pair, *c, *nf);
              const auto ret = fr.retract_to_cofinal(pair, *c, n, v);
              o.require(bool(ret), "retraction at " + at);
              if (!ret) continue;
              o.require(fr.validate(pair, *nf, ret->rep, ret->witness).empty(), "retraction certified at " + at);
              ++retracted;
            }
          }
        }
      }
    }
    if (o.ok) o.note << "25 pairs, " << classes << " span classes (frozen), " << retracted << " reps retracted into V";
  });

  criterion(8, "slices are 2-sites admitting fractions (lax, strict, groupoid over 1 and C2codisc)", 600,
            [&](Verdict& o) {
              const Finset cat({support::one(), support::c2(), support::arrow()});
              const Finset gpd({support::one(), support::c2(), support::bz2()}, true);
              std::size_t sites = 0;
              for (const char* x : {"1", "C2codisc"}) {
                for (auto variant : {SliceVariant::Lax, SliceVariant::Strict, SliceVariant::Groupoid}) {
                  const Finset& base = variant == SliceVariant::Groupoid ? gpd : cat;
                  auto s = std::make_shared<const SliceInstance>(build_lax_slice(base.site.k, base.obj(x), variant));
                  const auto budget = SearchBudget::exhaustive(s->window());
                  const std::string at = std::string(to_string(variant)) + " over " + x;
                  o.require(validate_window(s->window()).valid(), "slice window laws, " + at);
                  o.require(verify_slice_is_2site(base.site, s, budget).passed(), "2-site, " + at);
                  o.require(verify_fraction_axioms(slice_site(base.site, s), budget).passed(), "BF1-BF4, " + at);
                  ++sites;
                }
              }
              if (o.ok) o.note << sites << " slice sites pass";
            });

  criterion(9, "determinism, certificate re-validation and mutation rejection", 0, [&](Verdict& o) {
    const auto a = verify_fraction_axioms(fx.site, fx.all(), hash);
    const auto b = verify_fraction_axioms(fx.site, fx.all(), hash);
    const std::string ta = to_json(k, a.certificates).dump(), tb = to_json(k, b.certificates).dump();
    o.require(ta == tb, "byte-identical certificate bundles");
    auto hom_dump = [&] {
      std::ostringstream s;
      for (ObjId x : k.objects()) {
        for (ObjId y : k.objects()) {
          const auto h = fr.hom_category(x, y, fx.site.j.cells);
          for (std::size_t c : h.span_class) s << c << ",";
          for (const auto& [key, reps] : h.two_cells) {
            for (const auto& r : reps) s << k.name(r.p1) << k.name(r.beta) << ";";
          }
          for (const auto& [key, c] : h.vcomp) s << c << ".";
        }
      }
      return s.str();
    };
    o.require(hom_dump() == hom_dump(), "identical hom-category presentations");

    const Json bundle = parse_bundle(ta);
    const Classes classes{&fx.site.j.cells, &a.w};
    const auto v = validate_bundle(k, classes, hash, bundle);
    o.require(v.ok && v.checked == a.certificates.certificates.size(), "every certificate re-validates");
    const auto& certs = bundle.at("certificates");
    std::size_t rejected = 0;
    for (std::size_t i = 0; i < certs.size(); ++i) {
      const std::size_t n = certs[i].at("pastings").size();
      rejected += !validate_bundle(k, classes, hash, mutation::mutant(k, bundle, i, (i * 7) % n)).ok;
    }
    o.require(rejected == certs.size(), "every mutant rejected");
    if (o.ok) {
      o.note << v.checked << " certificates valid, " << rejected << "/" << certs.size() << " mutants rejected";
    }
  });

  std::printf("%s: %d of 9 criteria failed\n", failures ? "FAIL" : "PASS", failures);
  return failures ? 1 : 0;
}
