#pragma once

#include <cstdint>
#include <optional>
#include <utility>

#include "affine/incidence.hpp"

namespace affine {

inline constexpr std::uint32_t kDefaultMaxOrder = 13;

bool is_prime(std::uint32_t n) noexcept;

/// Arithmetic in Z/pZ for a prime p. Elements are kept reduced in [0, p).
class PrimeField {
 public:
  /// Throws Error(NotPrime).
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const noexcept { return p_; }

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const noexcept { return (a + b) % p_; }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const noexcept { return (a + p_ - b) % p_; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const noexcept {
    return static_cast<std::uint32_t>((std::uint64_t{a} * b) % p_);
  }
  std::uint32_t neg(std::uint32_t a) const noexcept { return (p_ - a) % p_; }
  /// Multiplicative inverse by Fermat; a must be nonzero.
  std::uint32_t inv(std::uint32_t a) const;

 private:
  std::uint32_t p_;
};

/// AG(2,p): point (x,y) has id x*p + y; lines y = m*x + b are numbered
/// m*p + b, and the vertical line x = c is p*p + c. The returned plane has
/// already been verified.
/// Throws NotPrime, or OrderTooLarge when p > max_order.
IncidencePlane build_prime_plane(std::uint32_t p, std::uint32_t max_order = kDefaultMaxOrder);

inline PointId coordinate_point(std::uint32_t p, std::uint32_t x, std::uint32_t y) {
  return PointId(x * p + y);
}

inline std::pair<std::uint32_t, std::uint32_t> point_coordinates(std::uint32_t p, PointId pt) {
  return {pt.value / p, pt.value % p};
}

/// Common point of two distinct lines, or nullopt when they are parallel.
/// Throws SameLine for l == m. Requires a verified plane.
std::optional<PointId> intersect(const IncidencePlane& plane, LineId l, LineId m);

}  // namespace affine
