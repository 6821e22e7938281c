#include <doctest.h>

#include "bifrac/bf.hpp"
#include "bifrac/error.hpp"
#include "bifrac/slice.hpp"
#include "support.hpp"

using namespace bifrac;
using support::Finset;

namespace {

struct Counts {
  std::size_t objects = 0, one_cells = 0, two_cells = 0;
};

// Direct count of the slice over x: objects p: Z → x, 1-cells (f, a: p2∘f ⇒ p1),
// 2-cells θ: f1 ⇒ f2 with a2·(p2 θ) = a1.
Counts slice_counts(const TwoCategory& k, ObjId x, bool strict) {
  Counts c;
  std::vector<OneCell> ps;
  for (ObjId z : k.objects()) {
    for (OneCell p : k.hom(z, x)) ps.push_back(p);
  }
  c.objects = ps.size();
  for (OneCell p1 : ps) {
    for (OneCell p2 : ps) {
      std::vector<std::pair<OneCell, TwoCell>> cells;
      for (OneCell f : k.hom(k.source(p1), k.source(p2))) {
        for (TwoCell a : k.cells(k.compose(p2, f), p1)) {
          if (!strict || is_invertible(k, a)) cells.emplace_back(f, a);
        }
      }
      c.one_cells += cells.size();
      for (const auto& [f1, a1] : cells) {
        for (const auto& [f2, a2] : cells) {
          for (TwoCell t : k.cells(f1, f2)) c.two_cells += k.vcomp(a2, k.whisker_left(p2, t)) == a1;
        }
      }
    }
  }
  return c;
}

std::shared_ptr<const SliceInstance> slice(const Finset& fx, const std::string& x, SliceVariant v) {
  return std::make_shared<const SliceInstance>(build_lax_slice(fx.site.k, fx.obj(x), v));
}

const Finset& cat_base() {
  static const Finset f({support::one(), support::c2(), support::arrow()});
  return f;
}

const Finset& gpd_base() {
  static const Finset f({support::one(), support::c2(), support::bz2()}, true);
  return f;
}

}  // namespace

TEST_CASE("slice sizes match a direct count") {
  for (const auto* fx : {&cat_base(), &gpd_base()}) {
    for (ObjId x : fx->k().objects()) {
      for (auto v : {SliceVariant::Lax, SliceVariant::Strict}) {
        const auto s = slice(*fx, fx->k().name(x), v);
        const auto want = slice_counts(fx->k(), x, v == SliceVariant::Strict);
        CAPTURE(fx->k().name(x));
        CHECK(s->window().object_count() == want.objects);
        CHECK(s->window().one_cell_count() == want.one_cells);
        CHECK(s->window().two_cell_count() == want.two_cells);
        CHECK(validate_window(s->window()).valid());
      }
    }
  }
}

TEST_CASE("frozen slice sizes") {
  auto size = [](const SliceInstance& s) {
    return std::array{s.window().object_count(), s.window().one_cell_count(), s.window().two_cell_count()};
  };
  CHECK(size(*slice(cat_base(), "1", SliceVariant::Lax)) == std::array<std::size_t, 3>{3, 20, 51});
  CHECK(size(*slice(cat_base(), "1", SliceVariant::Strict)) == std::array<std::size_t, 3>{3, 20, 51});
  CHECK(size(*slice(cat_base(), "C2codisc", SliceVariant::Lax)) == std::array<std::size_t, 3>{10, 260, 732});
  CHECK(size(*slice(cat_base(), "2", SliceVariant::Lax)) == std::array<std::size_t, 3>{7, 80, 194});
  CHECK(size(*slice(cat_base(), "2", SliceVariant::Strict)) == std::array<std::size_t, 3>{7, 47, 109});
  CHECK(size(*slice(gpd_base(), "1", SliceVariant::Groupoid)) == std::array<std::size_t, 3>{3, 16, 41});
  CHECK(size(*slice(gpd_base(), "C2codisc", SliceVariant::Groupoid)) == std::array<std::size_t, 3>{8, 140, 424});

  Finset small({support::one(), support::c2()});
  const auto s = slice(small, "C2codisc", SliceVariant::Lax);
  CHECK(s->window().object_count() == 6);
  for (ObjId z : s->window().objects()) CHECK(small.k().target(s->structure(z)) == small.obj("C2codisc"));
}

TEST_CASE("slice over the terminal object") {
  const auto& fx = cat_base();
  const auto s = slice(fx, "1", SliceVariant::Lax);
  CHECK(s->window().object_count() == fx.k().object_count());
  for (ObjId z : fx.k().objects()) {
    const auto p = fx.k().hom(z, fx.obj("1"));
    REQUIRE(p.size() == 1);
    CHECK(s->object(p.front()));
  }
}

TEST_CASE("strict slices keep the invertible triangles") {
  const auto& fx = cat_base();
  const auto lax = slice(fx, "2", SliceVariant::Lax);
  const auto strict = slice(fx, "2", SliceVariant::Strict);
  std::size_t non_invertible = 0;
  for (OneCell f : lax->window().one_cells()) non_invertible += !is_invertible(fx.k(), lax->triangle(f));
  CHECK(non_invertible == 33);
  for (OneCell f : strict->window().one_cells()) CHECK(is_invertible(fx.k(), strict->triangle(f)));
}

TEST_CASE("slice construction errors") {
  const auto& fx = cat_base();
  try {
    build_lax_slice(fx.site.k, ObjId{99}, SliceVariant::Lax);
    FAIL("accepted an unknown object");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAnObject);
  }
  try {
    build_lax_slice(fx.site.k, fx.obj("1"), SliceVariant::Groupoid);
    FAIL("accepted a non-groupoid base");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAGroupoid);
  }
  CHECK(parse_slice_variant("strict") == SliceVariant::Strict);
  CHECK_FALSE(parse_slice_variant("oplax"));
}

TEST_CASE("slice coverage membership") {
  const auto& fx = cat_base();
  const auto& k = fx.k();
  const auto s = slice(fx, "1", SliceVariant::Lax);
  const auto site = slice_site(fx.site, s);
  const auto& w = s->window();
  for (ObjId z : w.objects()) CHECK(site.j.cells.contains(w.identity(z)));

  const ObjId c2 = *s->object(fx.one("C2codisc_to_1")), pt = *s->object(fx.one("id_1"));
  const auto cover = s->one_cell(c2, pt, fx.one("C2codisc_to_1"), k.identity(fx.one("C2codisc_to_1")));
  REQUIRE(cover);
  CHECK(site.j.cells.contains(*cover));

  const auto over2 = slice(fx, "2", SliceVariant::Lax);
  const auto site2 = slice_site(fx.site, over2);
  std::size_t rejected = 0;
  for (OneCell f : over2->window().one_cells()) {
    const bool base_j = fx.site.j.cells.contains(over2->base_cell(f));
    const bool inv = is_invertible(k, over2->triangle(f));
    CHECK(site2.j.cells.contains(f) == (base_j && inv));
    rejected += base_j && !inv;
  }
  CHECK(rejected > 0);
}

TEST_CASE("pullback lifts") {
  const auto& fx = cat_base();
  const auto& k = fx.k();
  const auto s = slice(fx, "1", SliceVariant::Lax);
  const auto site = slice_site(fx.site, s);
  const auto& w = s->window();

  const ObjId c2 = *s->object(fx.one("C2codisc_to_1")), pt = *s->object(fx.one("id_1"));
  const OneCell q = *s->one_cell(c2, pt, fx.one("C2codisc_to_1"), k.identity(fx.one("C2codisc_to_1")));
  for (OneCell f : w.one_cells()) {
    if (w.target(f) != pt) continue;
    const auto sq = slice_pullback_lift(fx.site, *s, q, f);
    REQUIRE(sq);
    CHECK(validate(w, site.j.cells, *sq).empty());
    const auto iso = alternative_structure_iso(*s, *sq);
    REQUIRE(iso);
    CHECK(is_identity(k, s->base_cell(*iso)));
    CHECK(is_invertible(k, s->triangle(*iso)));
  }

  const OneCell idq = w.identity(pt);
  const auto triv = slice_pullback_lift(fx.site, *s, idq, idq);
  REQUIRE(triv);
  CHECK(is_identity(w, triv->left));

  // a lift along a slice 1-cell with a non-identity triangle
  const auto over2 = slice(fx, "2", SliceVariant::Lax);
  const auto site2 = slice_site(fx.site, over2);
  const auto& w2 = over2->window();
  std::size_t nontrivial = 0;
  for (OneCell q2 : site2.j.cells.members()) {
    for (OneCell f : w2.one_cells()) {
      const TwoCell b = over2->triangle(f);
      if (w2.target(f) != w2.target(q2) || b == k.identity(k.source(b))) continue;
      const auto sq = slice_pullback_lift(fx.site, *over2, q2, f);
      if (!sq) continue;
      CHECK(validate(w2, site2.j.cells, *sq).empty());
      ++nontrivial;
    }
  }
  CHECK(nontrivial > 0);
}

TEST_CASE("small slices are 2-sites admitting fractions") {
  using Case = std::tuple<const Finset*, const char*, SliceVariant>;
  for (auto [fx, x, v] : {Case{&cat_base(), "1", SliceVariant::Lax}, Case{&cat_base(), "1", SliceVariant::Strict},
                          Case{&gpd_base(), "1", SliceVariant::Groupoid}, Case{&cat_base(), "2", SliceVariant::Strict}}) {
    const auto s = slice(*fx, x, v);
    CAPTURE(x);
    CAPTURE(to_string(v));
    const auto budget = SearchBudget::exhaustive(s->window());
    const auto r = verify_slice_is_2site(fx->site, s, budget);
    CHECK(r.passed());
    CHECK(r.pullback_lifts == r.axioms.squares.size());
    const auto t = verify_fraction_axioms(slice_site(fx->site, s), budget);
    CHECK(t.passed());
  }
}
