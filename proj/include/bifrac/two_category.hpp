#pragma once

#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bifrac/ids.hpp"

namespace bifrac {

/// Read-only contract of a strict 2-category with finitely enumerable cells.
///
/// Composition follows the usual right-to-left convention: `compose(g, f)` is
/// g∘f, `vcomp(b, a)` is b·a (first a, then b), `whisker_left(h, a)` is h∘a and
/// `whisker_right(a, h)` is a∘h. Enumeration order is load order and every
/// search in the library iterates in that order.
///
/// Implementations are immutable after construction; concurrent reads are safe.
class TwoCategory {
 public:
  virtual ~TwoCategory() = default;

  virtual std::size_t object_count() const = 0;
  virtual std::size_t one_cell_count() const = 0;
  virtual std::size_t two_cell_count() const = 0;

  virtual const std::string& name(ObjId x) const = 0;
  virtual const std::string& name(OneCell f) const = 0;
  virtual const std::string& name(TwoCell a) const = 0;

  virtual ObjId source(OneCell f) const = 0;
  virtual ObjId target(OneCell f) const = 0;
  virtual OneCell source(TwoCell a) const = 0;
  virtual OneCell target(TwoCell a) const = 0;

  /// 1-cells x → y in load order.
  virtual std::span<const OneCell> hom(ObjId x, ObjId y) const = 0;
  /// 2-cells f ⇒ g in load order.
  virtual std::span<const TwoCell> cells(OneCell f, OneCell g) const = 0;

  virtual OneCell identity(ObjId x) const = 0;
  virtual TwoCell identity(OneCell f) const = 0;
  virtual OneCell compose(OneCell g, OneCell f) const = 0;
  virtual TwoCell vcomp(TwoCell b, TwoCell a) const = 0;
  virtual TwoCell whisker_left(OneCell h, TwoCell a) const = 0;
  virtual TwoCell whisker_right(TwoCell a, OneCell h) const = 0;

  virtual std::optional<ObjId> find_object(const std::string& name) const = 0;
  virtual std::optional<OneCell> find_one_cell(const std::string& name) const = 0;
  virtual std::optional<TwoCell> find_two_cell(const std::string& name) const = 0;

  auto objects() const { return ids<ObjId>(object_count()); }
  auto one_cells() const { return ids<OneCell>(one_cell_count()); }
  auto two_cells() const { return ids<TwoCell>(two_cell_count()); }

 private:
  template <class I>
  static std::vector<I> ids(std::size_t n) {
    std::vector<I> out;
    out.reserve(n);
    for (std::uint32_t i = 0; i < n; ++i) out.emplace_back(i);
    return out;
  }
};

/// Horizontal composite b∘a of a: f ⇒ f' (x → y) and b: g ⇒ g' (y → z),
/// derived from whiskering as (g'∘a)·(b∘f).
TwoCell hcomp(const TwoCategory& k, TwoCell b, TwoCell a);

/// The unique inverse of `a`, if one exists.
std::optional<TwoCell> inverse(const TwoCategory& k, TwoCell a);
bool is_invertible(const TwoCategory& k, TwoCell a);

/// First invertible 2-cell f ⇒ g in load order.
std::optional<TwoCell> find_invertible(const TwoCategory& k, OneCell f, OneCell g);

bool is_identity(const TwoCategory& k, OneCell f);

/// Left-to-right chain of vertical composition: vchain(k, {a, b, c}) = c·b·a.
TwoCell vchain(const TwoCategory& k, std::initializer_list<TwoCell> cells);

}  // namespace bifrac
