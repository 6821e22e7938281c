#pragma once

#include <memory>

#include "bifrac/finset/instance.hpp"
#include "bifrac/site.hpp"

namespace bifrac::finset {

/// J(T) on a finset window: fully faithful functors whose object component is
/// a cover. The filler oracle pulls back strictly and transports the apex to
/// an isomorphic window object when there is one; otherwise it declines and
/// the generic corner search runs.
Coverage jt_coverage(const std::shared_ptr<const FinsetWindow>& fw, const ObjectCover& cover = kSurjections);

/// The reference 2-site (Cat(FinSet), J(surjections)) restricted to the window,
/// with the essential-surjectivity cross-check on J-local splitness for ff
/// functors.
TwoSite jt_site(const std::shared_ptr<const FinsetWindow>& fw, const ObjectCover& cover = kSurjections);

/// The reference fixture window {1, C2codisc, D2, BZ2, 1+1}.
std::vector<FiniteCategory> fixture_categories();

}  // namespace bifrac::finset
