#include <doctest.h>

#include "bifrac/error.hpp"
#include "bifrac/window.hpp"
#include "bifrac/window_io.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace bifrac;

namespace {

WindowData terminal_data() {
  WindowData d;
  d.objects = {"*"};
  d.one_cells = {{"id", 0, 0}};
  d.two_cells = {{"id_id", 0, 0}};
  d.identity1 = {0};
  d.identity2 = {0};
  d.compose1 = {{0, 0, 0}};
  d.vcomp = {{0, 0, 0}};
  d.whisker_l = {{0, 0, 0}};
  d.whisker_r = {{0, 0, 0}};
  return d;
}

// Two objects a, b; one non-identity 1-cell f: a → b.
WindowData arrow_data() {
  WindowData d;
  d.objects = {"a", "b"};
  d.one_cells = {{"id_a", 0, 0}, {"id_b", 1, 1}, {"f", 0, 1}};
  d.two_cells = {{"i_a", 0, 0}, {"i_b", 1, 1}, {"i_f", 2, 2}};
  d.identity1 = {0, 1};
  d.identity2 = {0, 1, 2};
  d.compose1 = {{0, 0, 0}, {1, 1, 1}, {2, 0, 2}, {1, 2, 2}};
  d.vcomp = {{0, 0, 0}, {1, 1, 1}, {2, 2, 2}};
  d.whisker_l = {{0, 0, 0}, {1, 1, 1}, {2, 0, 2}, {1, 2, 2}};
  d.whisker_r = {{0, 0, 0}, {1, 1, 1}, {2, 0, 2}, {1, 2, 2}};
  return d;
}

}  // namespace

TEST_CASE("terminal window is valid") {
  Window w(terminal_data());
  CHECK(w.object_count() == 1);
  CHECK(w.one_cell_count() == 1);
  CHECK(w.two_cell_count() == 1);
  CHECK(validate_window(w).valid());
}

TEST_CASE("arrow window is valid and composes") {
  Window w(arrow_data());
  CHECK(validate_window(w).valid());
  CHECK(w.compose(OneCell{1}, OneCell{2}) == OneCell{2});
  CHECK_FALSE(w.try_compose(OneCell{2}, OneCell{2}));
  CHECK(w.hom(ObjId{0}, ObjId{1}).size() == 1);
  CHECK(w.hom(ObjId{1}, ObjId{0}).empty());
}

TEST_CASE("compose1 row with wrong boundary is reported by name") {
  auto d = arrow_data();
  d.compose1[2] = {2, 0, 0};  // f∘id_a = id_a
  Window w(std::move(d));
  const auto r = validate_window(w);
  REQUIRE_FALSE(r.valid());
  bool named = false;
  for (const auto& v : r.violations) named = named || v.detail.find("compose1(f,id_a)") != std::string::npos;
  CHECK(named);
}

TEST_CASE("missing table entries are completeness violations") {
  auto d = arrow_data();
  d.compose1.pop_back();
  Window w(std::move(d));
  const auto r = validate_window(w);
  REQUIRE_FALSE(r.valid());
  CHECK(r.violations.front().law == "completeness");
  CHECK_THROWS_AS(w.compose(OneCell{1}, OneCell{2}), Error);
}

TEST_CASE("malformed tables throw MalformedTable") {
  auto kind_of = [](WindowData d) {
    try {
      Window w(std::move(d));
    } catch (const Error& e) {
      return e.kind();
    }
    return ErrorKind::Input;
  };
  auto dup = arrow_data();
  dup.one_cells[2].name = "id_a";
  CHECK(kind_of(dup) == ErrorKind::MalformedTable);
  auto bad_obj = arrow_data();
  bad_obj.one_cells[2].target = 7;
  CHECK(kind_of(bad_obj) == ErrorKind::MalformedTable);
  auto short_ids = arrow_data();
  short_ids.identity2.pop_back();
  CHECK(kind_of(short_ids) == ErrorKind::MalformedTable);
  auto conflict = arrow_data();
  conflict.compose1.push_back({1, 2, 0});
  CHECK(kind_of(conflict) == ErrorKind::MalformedTable);
}

TEST_CASE("window JSON round-trips bit-exactly") {
  const auto& fx = support::fixture();
  const Json doc = window_to_json(fx.fw->window(), CoverageDecl{std::string("jt_surjections")});
  const std::string text = dump_canonical(doc);
  const auto back = window_from_json(Json::parse(text));
  CHECK(dump_canonical(window_to_json(back.window, back.coverage)) == text);
  CHECK(content_hash(back.window) == content_hash(fx.fw->window()));
  CHECK(content_hash(back.window).size() == 64);
  REQUIRE(back.coverage);
  CHECK(back.coverage->named());
}

TEST_CASE("window JSON input errors") {
  CHECK_THROWS_AS(window_from_json(Json::parse(R"({"schema":"other"})")), Error);
  Json doc = window_to_json(Window(arrow_data()));
  doc["tables"]["compose1"][0] = Json::array({"id_a", "nope", "id_a"});
  try {
    window_from_json(doc);
    FAIL("accepted an unknown cell");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::MalformedTable);
  }
}

TEST_CASE("fixture window satisfies every 2-category law") {
  const auto& fx = support::fixture();
  CHECK(validate_window(fx.fw->window()).valid());
  CHECK(oracle::table_mismatches(*fx.fw) == 0);
}

TEST_CASE("derived operations") {
  const auto& fx = support::fixture();
  const auto& k = fx.k();
  const OneCell f = fx.one("C2codisc_to_1");
  CHECK(is_identity(k, fx.one("id_1")));
  CHECK_FALSE(is_identity(k, f));
  for (TwoCell a : k.two_cells()) {
    if (auto inv = inverse(k, a)) {
      CHECK(k.vcomp(*inv, a) == k.identity(k.source(a)));
      CHECK(k.vcomp(a, *inv) == k.identity(k.target(a)));
    }
  }
  // interchange: hcomp agrees with both whiskering orders
  for (TwoCell a : k.two_cells()) {
    for (TwoCell b : k.two_cells()) {
      if (k.source(k.source(b)) != k.target(k.source(a))) continue;
      const TwoCell h = hcomp(k, b, a);
      const TwoCell other = k.vcomp(k.whisker_right(b, k.target(a)), k.whisker_left(k.source(b), a));
      CHECK(h == other);
    }
  }
}
