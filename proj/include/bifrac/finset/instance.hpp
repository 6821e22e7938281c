#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "bifrac/finset/functor.hpp"
#include "bifrac/window.hpp"

namespace bifrac::finset {

/// A finite window of Cat(FinSet) (or Gpd(FinSet)): the listed categories as
/// objects, every functor between them as 1-cells and every natural
/// transformation as 2-cells, materialized as explicit tables.
class FinsetWindow {
 public:
  const Window& window() const { return *window_; }
  std::shared_ptr<const Window> window_ptr() const { return window_; }

  const CategoryPtr& category(ObjId x) const { return categories_[x.index()]; }
  const FiniteFunctor& functor(OneCell f) const { return functors_[f.index()]; }
  const FiniteNatTrans& nat_trans(TwoCell a) const { return nat_trans_[a.index()]; }
  bool groupoids_only() const { return groupoids_only_; }

  std::optional<ObjId> find_category(const CategoryPtr& c) const;
  std::optional<OneCell> find_functor(const FiniteFunctor& f) const;
  std::optional<TwoCell> find_nat_trans(const FiniteNatTrans& t) const;

  friend FinsetWindow cat2_instance(std::vector<FiniteCategory> cats, bool groupoids_only);

 private:
  FinsetWindow() = default;

  std::vector<CategoryPtr> categories_;
  std::vector<FiniteFunctor> functors_;
  std::vector<FiniteNatTrans> nat_trans_;
  std::map<std::vector<std::uint32_t>, std::uint32_t> functor_index_, nat_index_;
  std::shared_ptr<const Window> window_;
  bool groupoids_only_ = false;
};

/// Builds the window on `cats`. Throws Error(NotAGroupoid) when
/// `groupoids_only` is set and some category has a non-invertible morphism.
FinsetWindow cat2_instance(std::vector<FiniteCategory> cats, bool groupoids_only = false);

/// The same 2-category as `FinsetWindow::window()`, but answering every
/// composition by computing functors and natural transformations
/// componentwise and locating the result. It shares no table with the window,
/// so evaluating a pasting through it is an independent check of the tables.
class FinsetSemantics final : public TwoCategory {
 public:
  explicit FinsetSemantics(std::shared_ptr<const FinsetWindow> fw) : fw_(std::move(fw)), w_(fw_->window()) {}

  std::size_t object_count() const override { return w_.object_count(); }
  std::size_t one_cell_count() const override { return w_.one_cell_count(); }
  std::size_t two_cell_count() const override { return w_.two_cell_count(); }
  const std::string& name(ObjId x) const override { return w_.name(x); }
  const std::string& name(OneCell f) const override { return w_.name(f); }
  const std::string& name(TwoCell a) const override { return w_.name(a); }
  ObjId source(OneCell f) const override;
  ObjId target(OneCell f) const override;
  OneCell source(TwoCell a) const override;
  OneCell target(TwoCell a) const override;
  std::span<const OneCell> hom(ObjId x, ObjId y) const override { return w_.hom(x, y); }
  std::span<const TwoCell> cells(OneCell f, OneCell g) const override { return w_.cells(f, g); }
  OneCell identity(ObjId x) const override;
  TwoCell identity(OneCell f) const override;
  OneCell compose(OneCell g, OneCell f) const override;
  TwoCell vcomp(TwoCell b, TwoCell a) const override;
  TwoCell whisker_left(OneCell h, TwoCell a) const override;
  TwoCell whisker_right(TwoCell a, OneCell h) const override;
  std::optional<ObjId> find_object(const std::string& n) const override { return w_.find_object(n); }
  std::optional<OneCell> find_one_cell(const std::string& n) const override { return w_.find_one_cell(n); }
  std::optional<TwoCell> find_two_cell(const std::string& n) const override { return w_.find_two_cell(n); }

 private:
  OneCell locate(const FiniteFunctor& f) const;
  TwoCell locate(const FiniteNatTrans& t) const;

  std::shared_ptr<const FinsetWindow> fw_;
  const Window& w_;
};

}  // namespace bifrac::finset
