#include <doctest.h>

#include "bifrac/site.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bifrac;
using support::Finset;

namespace {

// J(T) with `extra` added and no filler oracle.
TwoSite augmented(const Finset& fx, const std::string& extra) {
  const OneCell e = fx.one(extra);
  auto cells = CellClass::of(fx.k(), "J+", [&](OneCell f) { return fx.site.j.cells.contains(f) || f == e; });
  return TwoSite{fx.site.k, Coverage{std::move(cells), nullptr}, nullptr};
}

}  // namespace

TEST_CASE("identity coverage passes with identity squares") {
  const auto& fx = support::fixture();
  TwoSite site{fx.site.k, identities_only(fx.k()), nullptr};
  const auto r = verify_coverage_axioms(site, fx.all());
  CHECK(r.passed());
  for (const auto& sq : r.squares) {
    CHECK(is_identity(fx.k(), sq.left));
    CHECK(validate(fx.k(), site.j.cells, sq).empty());
  }
}

TEST_CASE("J(surjections) is a coverage") {
  Finset small({support::one(), support::c2(), support::d2()});
  CHECK(verify_coverage_axioms(small.site, small.all()).passed());

  const auto& fx = support::fixture();
  const auto r = verify_coverage_axioms(fx.site, fx.all());
  CHECK(r.passed());
  CHECK(r.closure.checked == 46);
  CHECK(r.fillers.checked == 161);
  CHECK(r.ff.checked == 13);
  for (const auto& sq : r.squares) CHECK(validate(fx.k(), fx.site.j.cells, sq).empty());
  CHECK(fx.site.j.cells.size() == 13);
  for (OneCell f : fx.k().one_cells()) {
    const auto& F = fx.fw->functor(f);
    CHECK(fx.site.j.cells.contains(f) == (oracle::fully_faithful(F) && oracle::surjective_on_objects(F)));
  }
}

TEST_CASE("a non-ff cover breaks axiom (iii)") {
  Finset small({support::one(), support::c2(), support::d2()});
  const auto site = augmented(small, "D2_to_1");
  const auto r = verify_coverage_axioms(site, small.all());
  CHECK(r.ff.status == Status::Fail);
  REQUIRE(r.ff.counterexamples.size() == 1);
  CHECK(r.ff.counterexamples.front().find("D2_to_1") != std::string::npos);
}

TEST_CASE("budget exhaustion is reported as unverified") {
  const auto& fx = support::fixture();
  TwoSite searched{fx.site.k, Coverage{fx.site.j.cells, nullptr}, nullptr};
  const auto r = verify_coverage_axioms(searched, SearchBudget{std::numeric_limits<std::size_t>::max(), 1});
  CHECK(r.fillers.status == Status::Unverified);
  CHECK(r.fillers.remaining == 138);
  CHECK(r.fillers.counterexamples.empty());
  CHECK(verify_coverage_axioms(searched, fx.all()).passed());
}

TEST_CASE("J-local splittings") {
  const auto& fx = support::fixture();
  const auto& k = fx.k();
  const auto id = is_j_locally_split(fx.site, fx.one("id_BZ2"), fx.all());
  REQUIRE(id);
  CHECK(is_identity(k, id->cover));
  CHECK(is_identity(k, id->section));

  const auto pt = is_j_locally_split(fx.site, fx.one("1_to_C2codisc_0"), fx.all());
  REQUIRE(pt);
  CHECK(validate(k, fx.site.j.cells, *pt).empty());
  CHECK(is_invertible(k, pt->cell));

  const auto d = is_j_locally_split(fx.site, fx.one("D2_to_1"), fx.all());
  REQUIRE(d);
  CHECK(d->cover == fx.one("id_1"));
  CHECK(k.target(d->section) == fx.obj("D2"));
  CHECK(validate(k, fx.site.j.cells, *d).empty());
}

TEST_CASE("weak equivalences") {
  const auto& fx = support::fixture();
  CHECK(is_weak_equivalence(fx.site, fx.one("id_D2"), fx.all()).weak_equivalence());
  CHECK(is_weak_equivalence(fx.site, fx.one("C2codisc_to_1"), fx.all()).weak_equivalence());
  CHECK(is_weak_equivalence(fx.site, fx.one("1_to_C2codisc_0"), fx.all()).weak_equivalence());
  const auto d = is_weak_equivalence(fx.site, fx.one("D2_to_1"), fx.all());
  CHECK(d.kind == WeVerdict::Kind::NotFF);
  REQUIRE(d.ff.witness);
  CHECK(describe(fx.k(), *d.ff.witness).find("not full") != std::string::npos);
}

TEST_CASE("weak equivalences are the ff and essentially surjective functors") {
  for (auto cats : {finset::fixture_categories(),
                    std::vector{support::one(), support::c2(), support::arrow()},
                    std::vector{support::one(), support::c2(), support::bz2(), support::d2()}}) {
    Finset fx(cats);
    const auto w = weak_equivalences(fx.site, fx.all());
    for (OneCell f : fx.k().one_cells()) {
      const auto& F = fx.fw->functor(f);
      CAPTURE(fx.k().name(f));
      CHECK(w.contains(f) == (oracle::fully_faithful(F) && oracle::essentially_surjective(F)));
    }
  }
  CHECK(weak_equivalences(support::fixture().site, support::fixture().all()).size() == 17);
}

TEST_CASE("split epis as object covers") {
  // every surjection of finite sets splits, so the coverage coincides
  const auto& fx = support::fixture();
  const finset::ObjectCover split = [](const finset::FiniteFunctor& f) {
    std::vector<bool> hit(f.target->object_count());
    for (auto o : f.obj_map) hit[o] = true;
    return std::find(hit.begin(), hit.end(), false) == hit.end();
  };
  const auto site = finset::jt_site(fx.fw, split);
  for (OneCell f : fx.k().one_cells()) CHECK(site.j.cells.contains(f) == fx.site.j.cells.contains(f));
}

TEST_CASE("composite and transported splittings") {
  const auto& fx = support::fixture();
  const auto& k = fx.k();
  const OneCell f = fx.one("1_to_C2codisc_0"), g = fx.one("C2codisc_to_C2codisc_2");
  const auto sf = is_j_locally_split(fx.site, f, fx.all());
  const auto sg = is_j_locally_split(fx.site, g, fx.all());
  REQUIRE(sf);
  REQUIRE(sg);
  const auto c = compose_splittings(fx.site, *sg, *sf, fx.all());
  REQUIRE(c);
  CHECK(c->f == k.compose(g, f));
  CHECK(validate(k, fx.site.j.cells, *c).empty());

  const OneCell f2 = fx.one("1_to_C2codisc_1");
  const TwoCell iso = k.cells(f, f2).front();
  const auto t = transport_splitting(k, *sf, iso);
  CHECK(t.f == f2);
  CHECK(validate(k, fx.site.j.cells, t).empty());
}

TEST_CASE("cofinality") {
  const auto& fx = support::fixture();
  const auto w = weak_equivalences(fx.site, fx.all());
  CHECK(is_cofinal(fx.k(), w, w, fx.all()).status == Status::Pass);
  const auto j = is_cofinal(fx.k(), fx.site.j.cells, w, fx.all());
  CHECK(j.status == Status::Pass);
  CHECK(j.witnesses.size() == w.size());
  // C2codisc → 1 is split by a point, so even the identities are cofinal here
  const auto ids = is_cofinal(fx.k(), CellClass::identities(fx.k()), w, fx.all());
  CHECK(ids.status == Status::Pass);
  const auto cw = find_cofinal_witness(fx.k(), CellClass::identities(fx.k()), fx.one("C2codisc_to_1"), fx.all());
  REQUIRE(cw);
  CHECK(cw->g == fx.one("id_1"));
  // a point of D2 has no section up to iso
  const auto all = is_cofinal(fx.k(), CellClass::identities(fx.k()), CellClass::all(fx.k()), fx.all());
  CHECK(all.status == Status::Fail);
  REQUIRE(all.counterexample);
  CHECK(fx.k().name(*all.counterexample) == "1_to_D2_0");
}
