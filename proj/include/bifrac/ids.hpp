#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <limits>

namespace bifrac {

/// Dense index into one of the cell tables of a 2-category instance.
template <class Tag>
struct Id {
  std::uint32_t value = std::numeric_limits<std::uint32_t>::max();

  constexpr Id() = default;
  constexpr explicit Id(std::uint32_t v) : value(v) {}

  constexpr bool valid() const { return value != std::numeric_limits<std::uint32_t>::max(); }
  constexpr std::size_t index() const { return value; }

  friend constexpr auto operator<=>(Id, Id) = default;
};

using ObjId = Id<struct ObjTag>;
using OneCell = Id<struct OneCellTag>;
using TwoCell = Id<struct TwoCellTag>;

constexpr std::uint64_t pack(std::uint32_t a, std::uint32_t b) {
  return (std::uint64_t{a} << 32) | b;
}

}  // namespace bifrac

template <class Tag>
struct std::hash<bifrac::Id<Tag>> {
  std::size_t operator()(bifrac::Id<Tag> id) const noexcept { return std::hash<std::uint32_t>{}(id.value); }
};
