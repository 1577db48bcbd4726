#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <ostream>

namespace affine {

/// Dense zero-based index tagged by what it indexes, so point and line ids
/// cannot be mixed up.
template <class Tag>
struct Index {
  std::uint32_t value = 0;

  constexpr Index() = default;
  constexpr explicit Index(std::uint32_t v) : value(v) {}
  constexpr explicit Index(std::size_t v) : value(static_cast<std::uint32_t>(v)) {}
  constexpr explicit Index(int v) : value(static_cast<std::uint32_t>(v)) {}

  constexpr std::size_t get() const noexcept { return value; }

  friend constexpr auto operator<=>(Index, Index) = default;
  friend std::ostream& operator<<(std::ostream& os, Index i) { return os << i.value; }
};

struct PointTag {};
struct LineTag {};
struct DirectionTag {};

using PointId = Index<PointTag>;
using LineId = Index<LineTag>;
using DirectionId = Index<DirectionTag>;

}  // namespace affine

template <class Tag>
struct std::hash<affine::Index<Tag>> {
  std::size_t operator()(affine::Index<Tag> i) const noexcept { return std::hash<std::uint32_t>{}(i.value); }
};
