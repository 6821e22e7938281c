#include "bifrac/finset/site.hpp"

namespace bifrac::finset {

Coverage jt_coverage(const std::shared_ptr<const FinsetWindow>& fw, const ObjectCover& cover) {
  const Window& w = fw->window();
  CellClass cells = CellClass::of(w, "J(T)", [&](OneCell f) { return j_of_t_membership(fw->functor(f), cover); });
  FillerOracle oracle = [fw, cover](OneCell q, OneCell f) -> std::optional<FillerSquare> {
    const Window& w = fw->window();
    const auto pb = strict_pullback(fw->functor(q), fw->functor(f), cover);
    for (ObjId v : w.objects()) {
      auto iso = find_isomorphism(fw->category(v), pb.apex);
      if (!iso) continue;
      auto top = fw->find_functor(compose(pb.to_q_side, *iso));
      auto left = fw->find_functor(compose(pb.to_f_side, *iso));
      if (!top || !left) continue;
      const OneCell qt = w.compose(q, *top);
      if (qt != w.compose(f, *left)) continue;
      return FillerSquare{q, f, v, *top, *left, w.identity(qt)};
    }
    return std::nullopt;
  };
  return Coverage{std::move(cells), std::move(oracle)};
}

TwoSite jt_site(const std::shared_ptr<const FinsetWindow>& fw, const ObjectCover& cover) {
  SplitCriterion criterion = [fw](OneCell f) -> std::optional<bool> {
    const auto& F = fw->functor(f);
    if (!functor_fully_faithful(F)) return std::nullopt;
    return essentially_surjective(F);
  };
  return TwoSite{fw->window_ptr(), jt_coverage(fw, cover), std::move(criterion)};
}

std::vector<FiniteCategory> fixture_categories() {
  return {FiniteCategory::terminal("1"), FiniteCategory::codiscrete(2, "C2codisc"), FiniteCategory::discrete(2, "D2"),
          FiniteCategory::cyclic_group(2, "BZ2"),
          FiniteCategory::coproduct(FiniteCategory::terminal("1"), FiniteCategory::terminal("1"), "1+1")};
}

}  // namespace bifrac::finset
