#include "bifrac/window.hpp"

#include <sstream>

#include "bifrac/error.hpp"

namespace bifrac {

namespace {

const std::vector<OneCell> kNoOneCells;
const std::vector<TwoCell> kNoTwoCells;

void index_names(const std::vector<std::string>& names, std::unordered_map<std::string, std::uint32_t>& out,
                 const char* what) {
  for (std::uint32_t i = 0; i < names.size(); ++i) {
    if (!out.emplace(names[i], i).second) {
      throw Error(ErrorKind::MalformedTable, std::string("duplicate ") + what + " name '" + names[i] + "'");
    }
  }
}

std::vector<std::string> names_of(const std::vector<WindowData::CellDecl>& decls) {
  std::vector<std::string> out;
  out.reserve(decls.size());
  for (const auto& d : decls) out.push_back(d.name);
  return out;
}

}  // namespace

Window::Window(WindowData data) : data_(std::move(data)) {
  const auto n0 = data_.objects.size();
  const auto n1 = data_.one_cells.size();
  const auto n2 = data_.two_cells.size();

  index_names(data_.objects, object_names_, "object");
  index_names(names_of(data_.one_cells), one_names_, "1-cell");
  index_names(names_of(data_.two_cells), two_names_, "2-cell");

  for (const auto& c : data_.one_cells) {
    if (c.source >= n0 || c.target >= n0) {
      throw Error(ErrorKind::MalformedTable, "1-cell '" + c.name + "' has an unknown boundary object");
    }
  }
  for (const auto& c : data_.two_cells) {
    if (c.source >= n1 || c.target >= n1) {
      throw Error(ErrorKind::MalformedTable, "2-cell '" + c.name + "' has an unknown boundary 1-cell");
    }
  }
  if (data_.identity1.size() != n0) throw Error(ErrorKind::MalformedTable, "identity table for objects incomplete");
  if (data_.identity2.size() != n1) throw Error(ErrorKind::MalformedTable, "identity table for 1-cells incomplete");
  for (auto i : data_.identity1) {
    if (i >= n1) throw Error(ErrorKind::MalformedTable, "identity entry references unknown 1-cell");
  }
  for (auto i : data_.identity2) {
    if (i >= n2) throw Error(ErrorKind::MalformedTable, "identity entry references unknown 2-cell");
  }

  auto load = [](const std::vector<WindowData::Row>& rows, Table& table, std::size_t lim_a, std::size_t lim_b,
                 std::size_t lim_r, const char* what) {
    table.reserve(rows.size());
    for (const auto& r : rows) {
      if (r[0] >= lim_a || r[1] >= lim_b || r[2] >= lim_r) {
        throw Error(ErrorKind::MalformedTable, std::string(what) + " entry references an unknown cell");
      }
      auto [it, fresh] = table.emplace(pack(r[0], r[1]), r[2]);
      if (!fresh && it->second != r[2]) {
        throw Error(ErrorKind::MalformedTable, std::string(what) + " has conflicting entries");
      }
    }
  };
  load(data_.compose1, compose1_, n1, n1, n1, "compose1");
  load(data_.vcomp, vcomp_, n2, n2, n2, "vcomp");
  load(data_.whisker_l, whisker_l_, n1, n2, n2, "whisker_l");
  load(data_.whisker_r, whisker_r_, n2, n1, n2, "whisker_r");

  out_.resize(n0);
  in_.resize(n0);
  for (std::uint32_t i = 0; i < n1; ++i) {
    const auto& c = data_.one_cells[i];
    hom_[pack(c.source, c.target)].emplace_back(i);
    out_[c.source].emplace_back(i);
    in_[c.target].emplace_back(i);
  }
  for (std::uint32_t i = 0; i < n2; ++i) {
    const auto& c = data_.two_cells[i];
    cells_[pack(c.source, c.target)].emplace_back(i);
  }
}

std::span<const OneCell> Window::hom(ObjId x, ObjId y) const {
  auto it = hom_.find(pack(x.value, y.value));
  return it == hom_.end() ? std::span<const OneCell>(kNoOneCells) : std::span<const OneCell>(it->second);
}

std::span<const TwoCell> Window::cells(OneCell f, OneCell g) const {
  auto it = cells_.find(pack(f.value, g.value));
  return it == cells_.end() ? std::span<const TwoCell>(kNoTwoCells) : std::span<const TwoCell>(it->second);
}

std::optional<OneCell> Window::try_compose(OneCell g, OneCell f) const {
  auto it = compose1_.find(pack(g.value, f.value));
  if (it == compose1_.end()) return std::nullopt;
  return OneCell{it->second};
}

std::optional<TwoCell> Window::try_vcomp(TwoCell b, TwoCell a) const {
  auto it = vcomp_.find(pack(b.value, a.value));
  if (it == vcomp_.end()) return std::nullopt;
  return TwoCell{it->second};
}

std::optional<TwoCell> Window::try_whisker_left(OneCell h, TwoCell a) const {
  auto it = whisker_l_.find(pack(h.value, a.value));
  if (it == whisker_l_.end()) return std::nullopt;
  return TwoCell{it->second};
}

std::optional<TwoCell> Window::try_whisker_right(TwoCell a, OneCell h) const {
  auto it = whisker_r_.find(pack(a.value, h.value));
  if (it == whisker_r_.end()) return std::nullopt;
  return TwoCell{it->second};
}

OneCell Window::compose(OneCell g, OneCell f) const {
  if (auto r = try_compose(g, f)) return *r;
  throw Error(ErrorKind::MalformedTable, "no compose1 entry for (" + name(g) + ", " + name(f) + ")");
}

TwoCell Window::vcomp(TwoCell b, TwoCell a) const {
  if (auto r = try_vcomp(b, a)) return *r;
  throw Error(ErrorKind::MalformedTable, "no vcomp entry for (" + name(b) + ", " + name(a) + ")");
}

TwoCell Window::whisker_left(OneCell h, TwoCell a) const {
  if (auto r = try_whisker_left(h, a)) return *r;
  throw Error(ErrorKind::MalformedTable, "no whisker_l entry for (" + name(h) + ", " + name(a) + ")");
}

TwoCell Window::whisker_right(TwoCell a, OneCell h) const {
  if (auto r = try_whisker_right(a, h)) return *r;
  throw Error(ErrorKind::MalformedTable, "no whisker_r entry for (" + name(a) + ", " + name(h) + ")");
}

std::optional<ObjId> Window::find_object(const std::string& n) const {
  auto it = object_names_.find(n);
  if (it == object_names_.end()) return std::nullopt;
  return ObjId{it->second};
}

std::optional<OneCell> Window::find_one_cell(const std::string& n) const {
  auto it = one_names_.find(n);
  if (it == one_names_.end()) return std::nullopt;
  return OneCell{it->second};
}

std::optional<TwoCell> Window::find_two_cell(const std::string& n) const {
  auto it = two_names_.find(n);
  if (it == two_names_.end()) return std::nullopt;
  return TwoCell{it->second};
}

namespace {

class Checker {
 public:
  explicit Checker(const Window& w) : w_(w) {}

  ValidationReport run() {
    check_identities();
    check_compose1();
    if (!report_.valid()) return std::move(report_);
    check_two_cells();
    return std::move(report_);
  }

 private:
  void fail(const char* law, const std::string& detail) { report_.violations.push_back({law, detail}); }

  std::string n(OneCell f) const { return w_.name(f); }
  std::string n(TwoCell a) const { return w_.name(a); }

  void check_identities() {
    for (ObjId x : w_.objects()) {
      OneCell i = w_.identity(x);
      if (w_.source(i) != x || w_.target(i) != x) fail("boundary", "identity(" + w_.name(x) + ") = " + n(i));
    }
    for (OneCell f : w_.one_cells()) {
      TwoCell i = w_.identity(f);
      if (w_.source(i) != f || w_.target(i) != f) fail("boundary", "identity(" + n(f) + ") = " + n(i));
    }
  }

  void check_compose1() {
    for (const auto& r : w_.data().compose1) {
      OneCell g{r[0]}, f{r[1]}, gf{r[2]};
      if (w_.target(f) != w_.source(g)) {
        fail("boundary", "compose1(" + n(g) + "," + n(f) + ") defined for non-composable cells");
      } else if (w_.source(gf) != w_.source(f) || w_.target(gf) != w_.target(g)) {
        fail("boundary", "compose1(" + n(g) + "," + n(f) + ") = " + n(gf) + " has the wrong source or target");
      }
    }
    if (!report_.valid()) return;
    for (OneCell f : w_.one_cells()) {
      for (OneCell g : w_.out_of(w_.target(f))) {
        auto gf = w_.try_compose(g, f);
        if (!gf) {
          fail("completeness", "compose1(" + n(g) + "," + n(f) + ") missing");
          continue;
        }
        for (OneCell h : w_.out_of(w_.target(g))) {
          auto hg = w_.try_compose(h, g);
          auto l = w_.try_compose(h, *gf);
          auto r = hg ? w_.try_compose(*hg, f) : std::nullopt;
          if (l && r && *l != *r) fail("associativity", "(" + n(h) + "," + n(g) + "," + n(f) + ")");
        }
      }
      auto left = w_.try_compose(w_.identity(w_.target(f)), f);
      auto right = w_.try_compose(f, w_.identity(w_.source(f)));
      if ((left && *left != f) || (right && *right != f)) fail("unit", "identity composite with " + n(f));
    }
  }

  bool boundary_ok(TwoCell a, OneCell s, OneCell t) const { return w_.source(a) == s && w_.target(a) == t; }

  void check_two_cells() {
    for (const auto& r : w_.data().vcomp) {
      TwoCell b{r[0]}, a{r[1]}, ba{r[2]};
      if (w_.target(a) != w_.source(b)) {
        fail("boundary", "vcomp(" + n(b) + "," + n(a) + ") defined for non-composable cells");
      } else if (!boundary_ok(ba, w_.source(a), w_.target(b))) {
        fail("boundary", "vcomp(" + n(b) + "," + n(a) + ") = " + n(ba) + " has the wrong boundary");
      }
    }
    for (const auto& r : w_.data().whisker_l) {
      OneCell h{r[0]};
      TwoCell a{r[1]}, ha{r[2]};
      auto hf = w_.try_compose(h, w_.source(a));
      auto hg = w_.try_compose(h, w_.target(a));
      if (!hf || !hg || !boundary_ok(ha, *hf, *hg)) {
        fail("boundary", "whisker_l(" + n(h) + "," + n(a) + ") = " + n(ha) + " has the wrong boundary");
      }
    }
    for (const auto& r : w_.data().whisker_r) {
      TwoCell a{r[0]}, ah{r[2]};
      OneCell h{r[1]};
      auto fh = w_.try_compose(w_.source(a), h);
      auto gh = w_.try_compose(w_.target(a), h);
      if (!fh || !gh || !boundary_ok(ah, *fh, *gh)) {
        fail("boundary", "whisker_r(" + n(a) + "," + n(h) + ") = " + n(ah) + " has the wrong boundary");
      }
    }
    if (!report_.valid()) return;

    // Vertical structure: completeness, associativity, units.
    for (TwoCell a : w_.two_cells()) {
      const OneCell f = w_.source(a), g = w_.target(a);
      if (w_.try_vcomp(w_.identity(g), a) != a || w_.try_vcomp(a, w_.identity(f)) != a) {
        fail("unit", "vertical identity law at " + n(a));
      }
      for (OneCell h : w_.hom(w_.source(f), w_.target(f))) {
        for (TwoCell b : w_.cells(g, h)) {
          auto ba = w_.try_vcomp(b, a);
          if (!ba) {
            fail("completeness", "vcomp(" + n(b) + "," + n(a) + ") missing");
            continue;
          }
          for (OneCell e : w_.hom(w_.source(f), w_.target(f))) {
            for (TwoCell c : w_.cells(h, e)) {
              auto cb = w_.try_vcomp(c, b);
              auto l = w_.try_vcomp(c, *ba);
              auto r = cb ? w_.try_vcomp(*cb, a) : std::nullopt;
              if (l && r && *l != *r) fail("associativity", "vertical (" + n(c) + "," + n(b) + "," + n(a) + ")");
            }
          }
        }
      }
    }
    if (!report_.valid()) return;

    // Whiskering: completeness and functoriality.
    for (TwoCell a : w_.two_cells()) {
      const OneCell f = w_.source(a), g = w_.target(a);
      const ObjId x = w_.source(f), y = w_.target(f);
      for (OneCell h : w_.out_of(y)) {
        auto ha = w_.try_whisker_left(h, a);
        if (!ha) {
          fail("completeness", "whisker_l(" + n(h) + "," + n(a) + ") missing");
          continue;
        }
        for (OneCell k : w_.out_of(w_.target(h))) {
          auto kh = w_.try_compose(k, h);
          auto l = w_.try_whisker_left(k, *ha);
          auto r = w_.try_whisker_left(*kh, a);
          if (l != r) fail("whiskering", "k∘(h∘a) != (k∘h)∘a at (" + n(k) + "," + n(h) + "," + n(a) + ")");
        }
        for (OneCell e : w_.hom(x, y)) {
          for (TwoCell b : w_.cells(g, e)) {
            auto hb = w_.try_whisker_left(h, b);
            auto ba = w_.try_vcomp(b, a);
            if (!hb || !ba) continue;
            if (w_.try_whisker_left(h, *ba) != w_.try_vcomp(*hb, *ha)) {
              fail("whiskering", "h∘(b·a) != (h∘b)·(h∘a) at (" + n(h) + "," + n(b) + "," + n(a) + ")");
            }
          }
        }
        if (w_.try_whisker_left(h, w_.identity(f)) != w_.identity(*w_.try_compose(h, f))) {
          fail("whiskering", "h∘id != id at (" + n(h) + "," + n(f) + ")");
        }
      }
      if (w_.try_whisker_left(w_.identity(y), a) != a) fail("whiskering", "id∘a != a at " + n(a));
      if (w_.try_whisker_right(a, w_.identity(x)) != a) fail("whiskering", "a∘id != a at " + n(a));

      for (OneCell h : w_.into(x)) {
        auto ah = w_.try_whisker_right(a, h);
        if (!ah) {
          fail("completeness", "whisker_r(" + n(a) + "," + n(h) + ") missing");
          continue;
        }
        for (OneCell k : w_.into(w_.source(h))) {
          auto hk = w_.try_compose(h, k);
          if (w_.try_whisker_right(*ah, k) != w_.try_whisker_right(a, *hk)) {
            fail("whiskering", "(a∘h)∘k != a∘(h∘k) at (" + n(a) + "," + n(h) + "," + n(k) + ")");
          }
        }
        for (OneCell e : w_.hom(x, y)) {
          for (TwoCell b : w_.cells(g, e)) {
            auto bh = w_.try_whisker_right(b, h);
            auto ba = w_.try_vcomp(b, a);
            if (!bh || !ba) continue;
            if (w_.try_whisker_right(*ba, h) != w_.try_vcomp(*bh, *ah)) {
              fail("whiskering", "(b·a)∘h != (b∘h)·(a∘h) at (" + n(b) + "," + n(a) + "," + n(h) + ")");
            }
          }
        }
        if (w_.try_whisker_right(w_.identity(f), h) != w_.identity(*w_.try_compose(f, h))) {
          fail("whiskering", "id∘h != id at (" + n(f) + "," + n(h) + ")");
        }
        for (OneCell k : w_.out_of(y)) {
          auto ka = w_.try_whisker_left(k, a);
          if (ka && w_.try_whisker_right(*ka, h) != w_.try_whisker_left(k, *ah)) {
            fail("whiskering", "(k∘a)∘h != k∘(a∘h) at (" + n(k) + "," + n(a) + "," + n(h) + ")");
          }
        }
      }
    }
    if (!report_.valid()) return;

    // Interchange: (g'∘a)·(b∘f) = (b∘f')·(g∘a) for a: f ⇒ f', b: g ⇒ g'.
    for (TwoCell a : w_.two_cells()) {
      const OneCell f = w_.source(a), f2 = w_.target(a);
      for (OneCell g : w_.out_of(w_.target(f))) {
        for (OneCell g2 : w_.hom(w_.source(g), w_.target(g))) {
          for (TwoCell b : w_.cells(g, g2)) {
            auto l = w_.try_vcomp(*w_.try_whisker_left(g2, a), *w_.try_whisker_right(b, f));
            auto r = w_.try_vcomp(*w_.try_whisker_right(b, f2), *w_.try_whisker_left(g, a));
            if (l != r) fail("interchange", "(" + n(b) + "," + n(a) + ")");
          }
        }
      }
    }
  }

  const Window& w_;
  ValidationReport report_;
};

}  // namespace

ValidationReport validate_window(const Window& w) { return Checker(w).run(); }

}  // namespace bifrac
