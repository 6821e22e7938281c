#pragma once

#include <memory>
#include <string>
#include <vector>

#include "bifrac/finset/site.hpp"

namespace support {

using namespace bifrac;

/// A finset window, its J(surjections) site and name lookups.
struct Finset {
  std::shared_ptr<const finset::FinsetWindow> fw;
  TwoSite site;

  explicit Finset(std::vector<finset::FiniteCategory> cats, bool groupoids_only = false)
      : fw(std::make_shared<const finset::FinsetWindow>(finset::cat2_instance(std::move(cats), groupoids_only))),
        site(finset::jt_site(fw)) {}

  const TwoCategory& k() const { return site.cat(); }
  SearchBudget all() const { return SearchBudget::exhaustive(k()); }
  ObjId obj(const std::string& n) const { return *k().find_object(n); }
  OneCell one(const std::string& n) const { return *k().find_one_cell(n); }
  TwoCell two(const std::string& n) const { return *k().find_two_cell(n); }
  const finset::FiniteFunctor& functor(const std::string& n) const { return fw->functor(one(n)); }
};

inline const Finset& fixture() {
  static const Finset f(finset::fixture_categories());
  return f;
}

inline finset::FiniteCategory one() { return finset::FiniteCategory::terminal("1"); }
inline finset::FiniteCategory c2() { return finset::FiniteCategory::codiscrete(2, "C2codisc"); }
inline finset::FiniteCategory d2() { return finset::FiniteCategory::discrete(2, "D2"); }
inline finset::FiniteCategory bz2() { return finset::FiniteCategory::cyclic_group(2, "BZ2"); }
inline finset::FiniteCategory arrow() { return finset::FiniteCategory::ordinal(2, "2"); }

}  // namespace support
