#include "prips/lattice.hpp"

namespace prips {

namespace {

bool fits(const Integer& v) { return abs(v) <= kLatticeBound; }

}  // namespace

bool to_lattice(std::span<const Point2> points, const Rational& radius, LatticeCoords& out)
{
    Integer scale = boost::multiprecision::denominator(radius);
    for (const Point2& p : points) {
        for (int i = 0; i < 2; ++i) {
            scale = boost::multiprecision::lcm(scale, boost::multiprecision::denominator(p[i]));
            if (scale > kLatticeBound) {
                return false;
            }
        }
    }
    auto lift = [&](const Rational& v, std::int64_t& target) {
        const Integer scaled = boost::multiprecision::numerator(v) * (scale / boost::multiprecision::denominator(v));
        if (!fits(scaled)) {
            return false;
        }
        target = scaled.convert_to<std::int64_t>();
        return true;
    };
    out.points.assign(points.size(), Vector2<std::int64_t>::Zero());
    for (std::size_t i = 0; i < points.size(); ++i) {
        if (!lift(points[i].x(), out.points[i].x()) || !lift(points[i].y(), out.points[i].y())) {
            return false;
        }
    }
    return lift(radius, out.radius);
}

}  // namespace prips
