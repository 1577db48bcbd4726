#include "affine/builder.hpp"

#include <string>

#include "affine/error.hpp"

namespace affine {

bool is_prime(std::uint32_t n) noexcept {
  if (n < 2) return false;
  for (std::uint32_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

PrimeField::PrimeField(std::uint32_t p) : p_(p) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, "order must be prime, got " + std::to_string(p));
}

std::uint32_t PrimeField::inv(std::uint32_t a) const {
  if (a % p_ == 0) throw std::domain_error("zero has no multiplicative inverse");
  std::uint32_t result = 1;
  std::uint32_t base = a % p_;
  for (std::uint32_t e = p_ - 2; e > 0; e >>= 1) {
    if (e & 1u) result = mul(result, base);
    base = mul(base, base);
  }
  return result;
}

IncidencePlane build_prime_plane(std::uint32_t p, std::uint32_t max_order) {
  const PrimeField field(p);
  if (p > max_order) {
    throw Error(ErrorCode::OrderTooLarge,
                "order " + std::to_string(p) + " exceeds bound " + std::to_string(max_order));
  }

  std::vector<std::vector<PointId>> lines;
  lines.reserve(std::size_t{p} * p + p);
  for (std::uint32_t m = 0; m < p; ++m) {
    for (std::uint32_t b = 0; b < p; ++b) {
      std::vector<PointId> line;
      line.reserve(p);
      for (std::uint32_t x = 0; x < p; ++x) line.push_back(coordinate_point(p, x, field.add(field.mul(m, x), b)));
      lines.push_back(std::move(line));
    }
  }
  for (std::uint32_t c = 0; c < p; ++c) {
    std::vector<PointId> line;
    for (std::uint32_t y = 0; y < p; ++y) line.push_back(coordinate_point(p, c, y));
    lines.push_back(std::move(line));
  }

  IncidencePlane plane(std::size_t{p} * p, std::move(lines));
  verify_axioms(plane);
  return plane;
}

std::optional<PointId> intersect(const IncidencePlane& plane, LineId l, LineId m) {
  plane.require_verified("intersect");
  if (l == m) throw Error(ErrorCode::SameLine, "a line meets itself in every point");
  for (PointId pt : plane.points_on(l)) {
    if (plane.incident(pt, m)) return pt;
  }
  return std::nullopt;
}

}  // namespace affine
