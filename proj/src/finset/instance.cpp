#include "bifrac/finset/instance.hpp"

#include "bifrac/error.hpp"

namespace bifrac::finset {

namespace {

std::vector<std::uint32_t> functor_key(std::uint32_t src, std::uint32_t tgt, const FiniteFunctor& f) {
  std::vector<std::uint32_t> key{src, tgt};
  key.insert(key.end(), f.obj_map.begin(), f.obj_map.end());
  key.insert(key.end(), f.mor_map.begin(), f.mor_map.end());
  return key;
}

std::vector<std::uint32_t> nat_key(std::uint32_t src, std::uint32_t tgt, const FiniteNatTrans& t) {
  std::vector<std::uint32_t> key{src, tgt};
  key.insert(key.end(), t.components.begin(), t.components.end());
  return key;
}

}  // namespace

std::optional<ObjId> FinsetWindow::find_category(const CategoryPtr& c) const {
  for (std::uint32_t i = 0; i < categories_.size(); ++i) {
    if (categories_[i] == c) return ObjId{i};
  }
  return std::nullopt;
}

std::optional<OneCell> FinsetWindow::find_functor(const FiniteFunctor& f) const {
  auto s = find_category(f.source);
  auto t = find_category(f.target);
  if (!s || !t) return std::nullopt;
  auto it = functor_index_.find(functor_key(s->value, t->value, f));
  if (it == functor_index_.end()) return std::nullopt;
  return OneCell{it->second};
}

std::optional<TwoCell> FinsetWindow::find_nat_trans(const FiniteNatTrans& t) const {
  auto s = find_functor(t.source);
  auto g = find_functor(t.target);
  if (!s || !g) return std::nullopt;
  auto it = nat_index_.find(nat_key(s->value, g->value, t));
  if (it == nat_index_.end()) return std::nullopt;
  return TwoCell{it->second};
}

FinsetWindow cat2_instance(std::vector<FiniteCategory> cats, bool groupoids_only) {
  FinsetWindow fw;
  fw.groupoids_only_ = groupoids_only;
  WindowData d;
  for (auto& c : cats) {
    if (groupoids_only && !c.is_groupoid()) {
      throw Error(ErrorKind::NotAGroupoid, "category '" + c.name() + "' has a non-invertible morphism");
    }
    d.objects.push_back(c.name());
    fw.categories_.push_back(std::make_shared<const FiniteCategory>(std::move(c)));
  }
  const auto n0 = static_cast<std::uint32_t>(fw.categories_.size());

  // 1-cells: every functor, grouped by (source, target) in load order.
  std::vector<std::vector<std::vector<std::uint32_t>>> homs(n0, std::vector<std::vector<std::uint32_t>>(n0));
  for (std::uint32_t a = 0; a < n0; ++a) {
    for (std::uint32_t b = 0; b < n0; ++b) {
      auto fs = enumerate_functors(fw.categories_[a], fw.categories_[b]);
      const std::string base = fw.categories_[a]->name() + "_to_" + fw.categories_[b]->name();
      std::size_t k = 0;
      for (auto& f : fs) {
        const auto id = static_cast<std::uint32_t>(fw.functors_.size());
        std::string name;
        if (a == b && f == identity_functor(fw.categories_[a])) {
          name = "id_" + fw.categories_[a]->name();
        } else {
          name = fs.size() == 1 ? base : base + "_" + std::to_string(k);
        }
        ++k;
        fw.functor_index_.emplace(functor_key(a, b, f), id);
        d.one_cells.push_back({std::move(name), a, b});
        homs[a][b].push_back(id);
        fw.functors_.push_back(std::move(f));
      }
    }
  }
  for (std::uint32_t a = 0; a < n0; ++a) d.identity1.push_back(fw.functor_index_.at(functor_key(a, a, identity_functor(fw.categories_[a]))));

  // 2-cells: every natural transformation f ⇒ g, f in 1-cell order.
  const auto n1 = static_cast<std::uint32_t>(fw.functors_.size());
  for (std::uint32_t f = 0; f < n1; ++f) {
    const auto& cf = d.one_cells[f];
    for (std::uint32_t g : homs[cf.source][cf.target]) {
      auto ts = enumerate_nat_trans(fw.functors_[f], fw.functors_[g]);
      std::size_t k = 0;
      for (auto& t : ts) {
        const auto id = static_cast<std::uint32_t>(fw.nat_trans_.size());
        std::string name;
        if (f == g && t == identity_nat_trans(fw.functors_[f])) {
          name = "id_" + d.one_cells[f].name;
        } else {
          name = d.one_cells[f].name + "=>" + d.one_cells[g].name;
          if (ts.size() > 1) name += "#" + std::to_string(k);
        }
        ++k;
        fw.nat_index_.emplace(nat_key(f, g, t), id);
        d.two_cells.push_back({std::move(name), f, g});
        fw.nat_trans_.push_back(std::move(t));
      }
    }
    d.identity2.push_back(fw.nat_index_.at(nat_key(f, f, identity_nat_trans(fw.functors_[f]))));
  }

  std::vector<std::uint32_t> src_of(n1), tgt_of(n1);
  for (std::uint32_t f = 0; f < n1; ++f) {
    src_of[f] = d.one_cells[f].source;
    tgt_of[f] = d.one_cells[f].target;
  }
  auto functor_id = [&](std::uint32_t s, std::uint32_t t, const FiniteFunctor& f) {
    return fw.functor_index_.at(functor_key(s, t, f));
  };
  for (std::uint32_t f = 0; f < n1; ++f) {
    for (std::uint32_t b = 0; b < n0; ++b) {
      for (std::uint32_t g : homs[tgt_of[f]][b]) {
        d.compose1.push_back({g, f, functor_id(src_of[f], b, compose(fw.functors_[g], fw.functors_[f]))});
      }
    }
  }
  Window provisional(d);
  auto nat_lookup = [&](const FiniteNatTrans& t, std::uint32_t s, std::uint32_t g) {
    return fw.nat_index_.at(nat_key(s, g, t));
  };
  const auto n2 = static_cast<std::uint32_t>(fw.nat_trans_.size());
  for (std::uint32_t a = 0; a < n2; ++a) {
    const auto f = d.two_cells[a].source, g = d.two_cells[a].target;
    for (std::uint32_t h : homs[src_of[f]][tgt_of[f]]) {
      for (TwoCell b : provisional.cells(OneCell{g}, OneCell{h})) {
        d.vcomp.push_back({b.value, a, nat_lookup(vcomp(fw.nat_trans_[b.value], fw.nat_trans_[a]), f, h)});
      }
    }
    for (std::uint32_t c = 0; c < n0; ++c) {
      for (std::uint32_t h : homs[tgt_of[f]][c]) {
        const auto hf = provisional.compose(OneCell{h}, OneCell{f}).value;
        const auto hg = provisional.compose(OneCell{h}, OneCell{g}).value;
        d.whisker_l.push_back({h, a, nat_lookup(whisker_left(fw.functors_[h], fw.nat_trans_[a]), hf, hg)});
      }
      for (std::uint32_t h : homs[c][src_of[f]]) {
        const auto fh = provisional.compose(OneCell{f}, OneCell{h}).value;
        const auto gh = provisional.compose(OneCell{g}, OneCell{h}).value;
        d.whisker_r.push_back({a, h, nat_lookup(whisker_right(fw.nat_trans_[a], fw.functors_[h]), fh, gh)});
      }
    }
  }
  fw.window_ = std::make_shared<const Window>(std::move(d));
  return fw;
}

ObjId FinsetSemantics::source(OneCell f) const { return *fw_->find_category(fw_->functor(f).source); }
ObjId FinsetSemantics::target(OneCell f) const { return *fw_->find_category(fw_->functor(f).target); }
OneCell FinsetSemantics::source(TwoCell a) const { return locate(fw_->nat_trans(a).source); }
OneCell FinsetSemantics::target(TwoCell a) const { return locate(fw_->nat_trans(a).target); }

OneCell FinsetSemantics::locate(const FiniteFunctor& f) const {
  if (auto id = fw_->find_functor(f)) return *id;
  throw Error(ErrorKind::MalformedTable, "functor outside the window");
}

TwoCell FinsetSemantics::locate(const FiniteNatTrans& t) const {
  if (auto id = fw_->find_nat_trans(t)) return *id;
  throw Error(ErrorKind::MalformedTable, "natural transformation outside the window");
}

OneCell FinsetSemantics::identity(ObjId x) const { return locate(identity_functor(fw_->category(x))); }
TwoCell FinsetSemantics::identity(OneCell f) const { return locate(identity_nat_trans(fw_->functor(f))); }

OneCell FinsetSemantics::compose(OneCell g, OneCell f) const {
  return locate(finset::compose(fw_->functor(g), fw_->functor(f)));
}

TwoCell FinsetSemantics::vcomp(TwoCell b, TwoCell a) const {
  return locate(finset::vcomp(fw_->nat_trans(b), fw_->nat_trans(a)));
}

TwoCell FinsetSemantics::whisker_left(OneCell h, TwoCell a) const {
  return locate(finset::whisker_left(fw_->functor(h), fw_->nat_trans(a)));
}

TwoCell FinsetSemantics::whisker_right(TwoCell a, OneCell h) const {
  return locate(finset::whisker_right(fw_->nat_trans(a), fw_->functor(h)));
}

}  // namespace bifrac::finset
