#ifndef PRIPS_LATTICE_HPP
#define PRIPS_LATTICE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "prips/rational.hpp"

namespace prips {

/// Largest absolute lattice coordinate for which degree-2 predicates stay
/// inside int64.
inline constexpr std::int64_t kLatticeBound = std::int64_t{1} << 28;

/// Points and a radius rescaled by a common factor onto the integer lattice.
struct LatticeCoords {
    std::vector<Vector2<std::int64_t>> points;
    std::int64_t radius = 0;
};

/// Returns false when some scaled value would exceed kLatticeBound.
bool to_lattice(std::span<const Point2> points, const Rational& radius, LatticeCoords& out);

/// Calls f(points, radius) with int64 coordinates when the input fits the
/// lattice bound and with Rational coordinates otherwise. Scaling by a
/// positive factor preserves every sign predicate, so f sees the same
/// answers either way.
template <typename F>
decltype(auto) with_exact_coords(std::span<const Point2> points, const Rational& radius, F&& f)
{
    LatticeCoords lattice;
    if (to_lattice(points, radius, lattice)) {
        return f(std::span<const Vector2<std::int64_t>>(lattice.points), lattice.radius);
    }
    return f(points, radius);
}

}  // namespace prips

#endif  // PRIPS_LATTICE_HPP
