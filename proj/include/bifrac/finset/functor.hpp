#pragma once

#include <functional>
#include <memory>
#include <optional>
#include <vector>

#include "bifrac/finset/category.hpp"

namespace bifrac::finset {

using CategoryPtr = std::shared_ptr<const FiniteCategory>;

struct FiniteFunctor {
  CategoryPtr source;
  CategoryPtr target;
  std::vector<std::uint32_t> obj_map;
  std::vector<std::uint32_t> mor_map;

  friend bool operator==(const FiniteFunctor& a, const FiniteFunctor& b) {
    return a.source == b.source && a.target == b.target && a.obj_map == b.obj_map && a.mor_map == b.mor_map;
  }
};

/// Natural transformation between parallel functors, one component per object
/// of the common source.
struct FiniteNatTrans {
  FiniteFunctor source;
  FiniteFunctor target;
  std::vector<std::uint32_t> components;

  friend bool operator==(const FiniteNatTrans&, const FiniteNatTrans&) = default;
};

/// Throws Error(AxiomViolation) unless `f` preserves endpoints, identities and composites.
void check_functor(const FiniteFunctor& f);
/// Throws Error(AxiomViolation) unless every naturality square commutes.
void check_nat_trans(const FiniteNatTrans& t);

FiniteFunctor identity_functor(const CategoryPtr& c);
FiniteFunctor compose(const FiniteFunctor& g, const FiniteFunctor& f);
FiniteNatTrans identity_nat_trans(const FiniteFunctor& f);
FiniteNatTrans vcomp(const FiniteNatTrans& b, const FiniteNatTrans& a);
FiniteNatTrans whisker_left(const FiniteFunctor& h, const FiniteNatTrans& a);
FiniteNatTrans whisker_right(const FiniteNatTrans& a, const FiniteFunctor& h);
bool is_invertible(const FiniteNatTrans& a);

/// All functors a → b, in lexicographic order of (object map, morphism map).
std::vector<FiniteFunctor> enumerate_functors(const CategoryPtr& a, const CategoryPtr& b);
/// All natural transformations f ⇒ g, in lexicographic order of components.
std::vector<FiniteNatTrans> enumerate_nat_trans(const FiniteFunctor& f, const FiniteFunctor& g);

bool functor_fully_faithful(const FiniteFunctor& f);
bool object_surjective(const FiniteFunctor& f);
bool essentially_surjective(const FiniteFunctor& f);

/// Which object components count as covers. The reference site is finite sets
/// with surjections; any other finite singleton pretopology can be supplied.
using ObjectCover = std::function<bool(const FiniteFunctor&)>;
inline const ObjectCover kSurjections = [](const FiniteFunctor& f) { return object_surjective(f); };

/// Membership in J(T): fully faithful with object component a cover.
bool j_of_t_membership(const FiniteFunctor& f, const ObjectCover& cover = kSurjections);

struct Pullback {
  CategoryPtr apex;
  FiniteFunctor to_f_side;  // apex → dom f, the projection opposite q
  FiniteFunctor to_q_side;  // apex → dom q
};

/// Strict pullback of q along f. Throws Error(CodomainMismatch) when the
/// codomains differ and Error(AxiomViolation) if q is not in J(T) or the
/// pulled-back projection fails to be.
Pullback strict_pullback(const FiniteFunctor& q, const FiniteFunctor& f, const ObjectCover& cover = kSurjections);

/// An isomorphism of categories a → b, if any.
std::optional<FiniteFunctor> find_isomorphism(const CategoryPtr& a, const CategoryPtr& b);

}  // namespace bifrac::finset
