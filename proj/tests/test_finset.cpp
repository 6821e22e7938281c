#include <doctest.h>

#include "bifrac/error.hpp"
#include "bifrac/finset/io.hpp"
#include "bifrac/search.hpp"
#include "bifrac/window_io.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bifrac;
using namespace bifrac::finset;
using support::Finset;

namespace {

CategoryPtr ptr(FiniteCategory c) { return std::make_shared<const FiniteCategory>(std::move(c)); }

std::size_t hom_count(const TwoCategory& k, const std::string& x, const std::string& y) {
  return k.hom(*k.find_object(x), *k.find_object(y)).size();
}

}  // namespace

TEST_CASE("functor enumeration matches brute force on the fixture") {
  const auto cats = fixture_categories();
  for (const auto& a : cats) {
    for (const auto& b : cats) {
      CAPTURE(a.name());
      CAPTURE(b.name());
      CHECK(enumerate_functors(ptr(a), ptr(b)).size() == oracle::count_functors(a, b));
    }
  }
  const auto& fx = support::fixture();
  CHECK(fx.k().object_count() == 5);
  CHECK(fx.k().one_cell_count() == 56);
  CHECK(fx.k().two_cell_count() == 111);
}

TEST_CASE("natural transformation enumeration matches brute force") {
  const auto& fx = support::fixture();
  const auto& k = fx.k();
  for (OneCell f : k.one_cells()) {
    for (OneCell g : k.hom(k.source(f), k.target(f))) {
      const auto n = oracle::count_nat_trans(fx.fw->functor(f), fx.fw->functor(g));
      CHECK(k.cells(f, g).size() == n);
      CHECK(enumerate_nat_trans(fx.fw->functor(f), fx.fw->functor(g)).size() == n);
    }
  }
}

TEST_CASE("small windows") {
  Finset t({support::one()});
  CHECK(t.k().object_count() == 1);
  CHECK(t.k().one_cell_count() == 1);
  CHECK(t.k().two_cell_count() == 1);

  Finset c({support::one(), support::c2()});
  CHECK(c.k().object_count() == 2);
  CHECK(hom_count(c.k(), "1", "C2codisc") == 2);
  CHECK(hom_count(c.k(), "C2codisc", "1") == 1);
  CHECK(hom_count(c.k(), "C2codisc", "C2codisc") == 4);

  Finset d({support::one(), support::d2()});
  CHECK(hom_count(d.k(), "D2", "1") == 1);
  CHECK(d.k().cells(d.one("1_to_D2_0"), d.one("1_to_D2_1")).empty());
}

TEST_CASE("groupoid windows reject non-groupoids") {
  CHECK_NOTHROW(cat2_instance({support::one(), support::c2(), support::bz2()}, true));
  try {
    cat2_instance({support::one(), support::arrow()}, true);
    FAIL("accepted a non-groupoid");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAGroupoid);
  }
}

TEST_CASE("fully faithful, object surjective and essentially surjective") {
  const auto& fx = support::fixture();
  CHECK(functor_fully_faithful(fx.functor("id_C2codisc")));
  CHECK(functor_fully_faithful(fx.functor("C2codisc_to_1")));
  CHECK_FALSE(functor_fully_faithful(fx.functor("D2_to_1")));
  CHECK_FALSE(functor_fully_faithful(fx.functor("BZ2_to_1")));
  CHECK(functor_fully_faithful(fx.functor("1_to_C2codisc_0")));

  CHECK(object_surjective(fx.functor("id_D2")));
  CHECK(essentially_surjective(fx.functor("id_D2")));
  CHECK_FALSE(object_surjective(fx.functor("1_to_C2codisc_0")));
  CHECK(essentially_surjective(fx.functor("1_to_C2codisc_0")));
  CHECK(object_surjective(fx.functor("D2_to_1")));
  CHECK(essentially_surjective(fx.functor("D2_to_1")));

  CHECK(j_of_t_membership(fx.functor("id_BZ2")));
  CHECK(j_of_t_membership(fx.functor("C2codisc_to_1")));
  CHECK_FALSE(j_of_t_membership(fx.functor("1_to_C2codisc_0")));
  CHECK_FALSE(j_of_t_membership(fx.functor("D2_to_1")));

  for (OneCell f : fx.k().one_cells()) {
    const auto& F = fx.fw->functor(f);
    CAPTURE(fx.k().name(f));
    CHECK(functor_fully_faithful(F) == oracle::fully_faithful(F));
    CHECK(essentially_surjective(F) == oracle::essentially_surjective(F));
    CHECK(object_surjective(F) == oracle::surjective_on_objects(F));
  }
}

TEST_CASE("ff 1-cells in the window agree with ff functors") {
  const auto& fx = support::fixture();
  for (OneCell f : fx.k().one_cells()) {
    CAPTURE(fx.k().name(f));
    CHECK(is_ff_one_cell(fx.k(), f).ff == oracle::fully_faithful(fx.fw->functor(f)));
  }
  const auto v = is_ff_one_cell(fx.k(), fx.one("D2_to_1"));
  REQUIRE(v.witness);
  CHECK(v.witness->failure == FfWitness::Failure::NotFull);
  CHECK(fx.k().name(v.witness->z) == "1");
}

TEST_CASE("strict pullbacks") {
  const auto& fx = support::fixture();
  const auto& q = fx.functor("C2codisc_to_1");

  const auto along_id = strict_pullback(q, fx.functor("id_1"));
  CHECK(find_isomorphism(along_id.apex, fx.fw->category(fx.obj("C2codisc"))));

  const auto along_f = strict_pullback(fx.functor("id_1"), fx.functor("C2codisc_to_1"));
  CHECK(along_f.apex->object_count() == 2);

  const auto self = strict_pullback(q, q);
  const auto& p = *self.apex;
  CHECK(p.object_count() == 4);
  for (std::uint32_t a = 0; a < 4; ++a) {
    for (std::uint32_t b = 0; b < 4; ++b) CHECK(p.hom(a, b).size() == 1);
  }
  CHECK(find_isomorphism(self.apex, ptr(FiniteCategory::codiscrete(4, "C4"))));
  CHECK(j_of_t_membership(self.to_f_side));
  CHECK(j_of_t_membership(self.to_q_side));
  CHECK(compose(q, self.to_q_side) == compose(q, self.to_f_side));

  CHECK_THROWS_AS(strict_pullback(q, fx.functor("1_to_D2_0")), Error);
}

TEST_CASE("pseudoinverses") {
  const auto& fx = support::fixture();
  const auto id = find_pseudoinverse(fx.k(), fx.one("id_BZ2"), fx.all());
  REQUIRE(id);
  CHECK(id->g == fx.one("id_BZ2"));
  CHECK(validate(fx.k(), *id));

  const auto p = find_pseudoinverse(fx.k(), fx.one("C2codisc_to_1"), fx.all());
  REQUIRE(p);
  const auto g = fx.k().name(p->g);
  CHECK((g == "1_to_C2codisc_0" || g == "1_to_C2codisc_1"));
  CHECK(validate(fx.k(), *p));

  const auto none = find_pseudoinverse(fx.k(), fx.one("D2_to_1"), fx.all());
  CHECK_FALSE(none);
  CHECK(none.outcome == Outcome::NotFound);
}

TEST_CASE("finset documents round-trip") {
  FinsetDocument doc{fixture_categories(), false, CoverageDecl{std::string("jt_surjections")}};
  const std::string text = dump_canonical(finset_to_json(doc));
  const auto back = finset_from_json(Json::parse(text));
  CHECK(dump_canonical(finset_to_json(back)) == text);
  REQUIRE(back.categories.size() == 5);
  for (std::size_t i = 0; i < 5; ++i) CHECK(back.categories[i] == doc.categories[i]);
}

TEST_CASE("functor and transformation documents resolve categories by hash") {
  const auto& fx = support::fixture();
  std::vector<CategoryPtr> known;
  for (ObjId x : fx.k().objects()) known.push_back(fx.fw->category(x));
  const auto& f = fx.functor("C2codisc_to_C2codisc_2");
  const auto back = functor_from_json(functor_to_json(f), known);
  CHECK(back.obj_map == f.obj_map);
  CHECK(back.mor_map == f.mor_map);
  CHECK(back.source == f.source);

  const auto& t = fx.fw->nat_trans(fx.k().cells(fx.one("1_to_C2codisc_0"), fx.one("1_to_C2codisc_1")).front());
  const auto tb = nat_trans_from_json(nat_trans_to_json(t), known);
  CHECK(tb.components == t.components);

  Json drifted = functor_to_json(f);
  drifted["source"] = category_hash(FiniteCategory::codiscrete(3, "C3"));
  try {
    functor_from_json(drifted, known);
    FAIL("accepted a stale category hash");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::Input);
  }
}
