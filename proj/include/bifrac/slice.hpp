#pragma once

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "bifrac/bf.hpp"
#include "bifrac/site.hpp"
#include "bifrac/window.hpp"

namespace bifrac {

enum class SliceVariant { Lax, Strict, Groupoid };
const char* to_string(SliceVariant v);
std::optional<SliceVariant> parse_slice_variant(const std::string& s);

/// The lax slice of a base instance over X, materialized as a window.
/// A slice 1-cell (f, a): (Z1, p1) → (Z2, p2) carries a: p2∘f ⇒ p1; a slice
/// 2-cell θ: (f1, a1) ⇒ (f2, a2) is a base θ: f1 ⇒ f2 with a2·(p2∘θ) = a1.
/// Composition is (g, b)∘(f, a) = (g∘f, a·(b∘f)).
class SliceInstance {
 public:
  const Window& window() const { return *window_; }
  std::shared_ptr<const Window> window_ptr() const { return window_; }
  const TwoCategory& base() const { return *base_; }
  ObjId over() const { return over_; }
  SliceVariant variant() const { return variant_; }

  OneCell structure(ObjId z) const { return structure_[z.index()]; }
  OneCell base_cell(OneCell f) const { return one_cells_[f.index()].first; }
  TwoCell triangle(OneCell f) const { return one_cells_[f.index()].second; }
  TwoCell base_cell(TwoCell t) const { return two_cells_[t.index()]; }

  std::optional<ObjId> object(OneCell p) const;
  std::optional<OneCell> one_cell(ObjId src, ObjId tgt, OneCell f, TwoCell a) const;
  std::optional<TwoCell> two_cell(OneCell src, OneCell tgt, TwoCell theta) const;

 private:
  friend SliceInstance build_lax_slice(std::shared_ptr<const TwoCategory> base, ObjId x, SliceVariant variant);

  std::shared_ptr<const TwoCategory> base_;
  std::shared_ptr<const Window> window_;
  ObjId over_;
  SliceVariant variant_ = SliceVariant::Lax;
  std::vector<OneCell> structure_;
  std::vector<std::pair<OneCell, TwoCell>> one_cells_;
  std::vector<TwoCell> two_cells_;
  std::map<std::uint32_t, ObjId> object_of_;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t, std::uint32_t>, OneCell> one_cell_of_;
  std::map<std::tuple<std::uint32_t, std::uint32_t, std::uint32_t>, TwoCell> two_cell_of_;
};

/// Throws Error(NotAnObject) for an unknown X, and Error(NotAGroupoid) for the
/// groupoid variant over a base with non-invertible 2-cells.
SliceInstance build_lax_slice(std::shared_ptr<const TwoCategory> base, ObjId x, SliceVariant variant);

/// J_X: base cell in J and invertible triangle; fillers by the pullback lift.
Coverage slice_coverage(const TwoSite& base, const std::shared_ptr<const SliceInstance>& slice);
TwoSite slice_site(const TwoSite& base, const std::shared_ptr<const SliceInstance>& slice);

/// The lifted square of (w, a) ∈ J_X along (f, b): base filler (w̃ ∈ J, f̃, θ),
/// structure map pY∘w̃ on the corner, legs (w̃, id) and (f̃, c) with
/// c = (b w̃)·(pZ θ)·(a⁻¹ f̃). Nullopt when the base has no filler or the
/// lifted cells fall outside the slice window.
std::optional<FillerSquare> slice_pullback_lift(const TwoSite& base, const SliceInstance& slice, OneCell q,
                                                OneCell f);

/// The slice 1-cell (id, c) from the corner with structure map pY∘w̃ to the
/// corner with structure map pU∘f̃, for a lifted square.
std::optional<OneCell> alternative_structure_iso(const SliceInstance& slice, const FillerSquare& lifted);

struct SliceReport {
  AxiomReport axioms;
  AxiomVerdict lifting{"ff lifting of base 2-cells"};
  std::size_t pullback_lifts = 0;

  bool passed() const { return axioms.passed() && lifting.status == Status::Pass; }
};

/// Coverage axioms on the slice site plus the proof's lifting of the unique
/// base β to a slice 2-cell for every q ∈ J_X.
SliceReport verify_slice_is_2site(const TwoSite& base, const std::shared_ptr<const SliceInstance>& slice,
                                  const SearchBudget& budget);

}  // namespace bifrac
