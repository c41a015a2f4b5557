#ifndef PRIPS_GEOM_HPP
#define PRIPS_GEOM_HPP

// Exact planar predicates. Every predicate is the sign of a low-degree
// polynomial in the coordinates; the templates are instantiated with
// Rational, or with std::int64_t on integer lattices whose coordinates are
// bounded so that degree-2 expressions cannot overflow.

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "prips/rational.hpp"

namespace prips {

enum class Side { Left, Right, On };
enum class SegmentRelation { Disjoint, InteriorCross, Touch };
enum class TriangleLocation { Inside, Boundary, Outside };
enum class PolygonLocation { Inside, Boundary, Outside };

// Whether a ray that only grazes the polygon (touches its boundary without
// entering the interior) beyond the target vertex violates the guard-edge
// precondition.
enum class RayGrazing { Allowed, Violates };

class GeometryError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// Raised for inputs the predicates cannot interpret: coincident line points,
/// zero-length segments, collinear triples where a triangle is required.
class DegenerateError : public GeometryError {
public:
    using GeometryError::GeometryError;
};

const char* to_string(Side side);
const char* to_string(SegmentRelation relation);
const char* to_string(TriangleLocation location);

inline Side flip(Side side)
{
    switch (side) {
    case Side::Left: return Side::Right;
    case Side::Right: return Side::Left;
    default: return Side::On;
    }
}

template <typename Scalar>
int sign(const Scalar& value)
{
    if (value > 0) {
        return 1;
    }
    if (value < 0) {
        return -1;
    }
    return 0;
}

template <typename Scalar>
Scalar cross(const Vector2<Scalar>& u, const Vector2<Scalar>& v)
{
    return u.x() * v.y() - u.y() * v.x();
}

template <typename Scalar>
Scalar dot(const Vector2<Scalar>& u, const Vector2<Scalar>& v)
{
    return u.x() * v.x() + u.y() * v.y();
}

template <typename Scalar>
Scalar squared_distance(const Vector2<Scalar>& a, const Vector2<Scalar>& b)
{
    const Scalar dx = a.x() - b.x();
    const Scalar dy = a.y() - b.y();
    return dx * dx + dy * dy;
}

/// Cross product AB x AP. Positive when p lies to the left of the directed
/// line a -> b.
template <typename Scalar>
Scalar orientation_value(const Vector2<Scalar>& a, const Vector2<Scalar>& b, const Vector2<Scalar>& p)
{
    return (b.x() - a.x()) * (p.y() - a.y()) - (b.y() - a.y()) * (p.x() - a.x());
}

template <typename Scalar>
int orientation_sign(const Vector2<Scalar>& a, const Vector2<Scalar>& b, const Vector2<Scalar>& p)
{
    return sign(orientation_value(a, b, p));
}

inline Side side_from_sign(int s) { return s > 0 ? Side::Left : (s < 0 ? Side::Right : Side::On); }

template <typename Scalar>
Side orientation(const Vector2<Scalar>& a, const Vector2<Scalar>& b, const Vector2<Scalar>& p)
{
    if (a == b) {
        throw DegenerateError("orientation: line through coincident points");
    }
    return side_from_sign(orientation_sign(a, b, p));
}

/// Left when p is strictly closer to a than to b, Right when strictly closer
/// to b, On when equidistant.
template <typename Scalar>
Side bisector_side(const Vector2<Scalar>& a, const Vector2<Scalar>& b, const Vector2<Scalar>& p)
{
    if (a == b) {
        throw DegenerateError("bisector_side: coincident points have no bisector");
    }
    return side_from_sign(sign(squared_distance(b, p) - squared_distance(a, p)));
}

template <typename Scalar>
struct Segment {
    Vector2<Scalar> a;
    Vector2<Scalar> b;

    Segment(Vector2<Scalar> first, Vector2<Scalar> second) : a(std::move(first)), b(std::move(second))
    {
        if (a == b) {
            throw DegenerateError("segment endpoints coincide");
        }
    }
};

/// p on the closed segment [a, b]; a == b is allowed and tests equality.
template <typename Scalar>
bool on_closed_segment(const Vector2<Scalar>& p, const Vector2<Scalar>& a, const Vector2<Scalar>& b)
{
    if (orientation_sign(a, b, p) != 0) {
        return false;
    }
    return std::min(a.x(), b.x()) <= p.x() && p.x() <= std::max(a.x(), b.x()) &&
           std::min(a.y(), b.y()) <= p.y() && p.y() <= std::max(a.y(), b.y());
}

template <typename Scalar>
SegmentRelation segments_intersect(const Segment<Scalar>& s, const Segment<Scalar>& t)
{
    const int o1 = orientation_sign(s.a, s.b, t.a);
    const int o2 = orientation_sign(s.a, s.b, t.b);
    const int o3 = orientation_sign(t.a, t.b, s.a);
    const int o4 = orientation_sign(t.a, t.b, s.b);

    if (o1 * o2 < 0 && o3 * o4 < 0) {
        return SegmentRelation::InteriorCross;
    }
    if (o1 == 0 && o2 == 0) {
        // Collinear: compare parameter intervals along s.
        const Vector2<Scalar> d = s.b - s.a;
        const Scalar len = dot(d, d);
        Scalar lo = dot(Vector2<Scalar>(t.a - s.a), d);
        Scalar hi = dot(Vector2<Scalar>(t.b - s.a), d);
        if (hi < lo) {
            std::swap(lo, hi);
        }
        const Scalar zero(0);
        const Scalar overlap_lo = std::max(lo, zero);
        const Scalar overlap_hi = std::min(hi, len);
        if (overlap_lo < overlap_hi) {
            return SegmentRelation::InteriorCross;
        }
        if (overlap_lo == overlap_hi) {
            return SegmentRelation::Touch;
        }
        return SegmentRelation::Disjoint;
    }
    if (on_closed_segment(t.a, s.a, s.b) || on_closed_segment(t.b, s.a, s.b) ||
        on_closed_segment(s.a, t.a, t.b) || on_closed_segment(s.b, t.a, t.b)) {
        return SegmentRelation::Touch;
    }
    return SegmentRelation::Disjoint;
}

/// Closed-segment intersection test without constructing Segment values;
/// zero-length segments behave as points.
template <typename Scalar>
bool closed_segments_meet(const Vector2<Scalar>& a, const Vector2<Scalar>& b, const Vector2<Scalar>& c,
                          const Vector2<Scalar>& d)
{
    if (a == b) {
        return on_closed_segment(a, c, d);
    }
    if (c == d) {
        return on_closed_segment(c, a, b);
    }
    return segments_intersect(Segment<Scalar>(a, b), Segment<Scalar>(c, d)) != SegmentRelation::Disjoint;
}

template <typename Scalar>
TriangleLocation in_triangle(const Vector2<Scalar>& p, const Vector2<Scalar>& a, const Vector2<Scalar>& b,
                             const Vector2<Scalar>& c)
{
    const int turn = orientation_sign(a, b, c);
    if (turn == 0) {
        if (on_closed_segment(p, a, b) || on_closed_segment(p, b, c) || on_closed_segment(p, c, a)) {
            return TriangleLocation::Boundary;
        }
        return TriangleLocation::Outside;
    }
    const int s1 = orientation_sign(a, b, p) * turn;
    const int s2 = orientation_sign(b, c, p) * turn;
    const int s3 = orientation_sign(c, a, p) * turn;
    if (s1 < 0 || s2 < 0 || s3 < 0) {
        return TriangleLocation::Outside;
    }
    if (s1 == 0 || s2 == 0 || s3 == 0) {
        return TriangleLocation::Boundary;
    }
    return TriangleLocation::Inside;
}

/// True iff c lies in conv{a, b, x}, decided by two closed half-plane tests
/// anchored at c. Rejects collinear a, b, c.
template <typename Scalar>
bool conv_abx_region_contains(const Vector2<Scalar>& a, const Vector2<Scalar>& b, const Vector2<Scalar>& c,
                              const Vector2<Scalar>& x)
{
    const int turn = orientation_sign(a, b, c);
    if (turn == 0) {
        throw DegenerateError("conv_abx_region_contains: a, b, c are collinear");
    }
    const int side_ac = orientation_sign(a, c, x);
    const int side_bc = orientation_sign(b, c, x);
    if (turn < 0) {
        // clockwise: cl(L-_AC) and cl(L+_BC)
        return side_ac <= 0 && side_bc >= 0;
    }
    return side_ac >= 0 && side_bc <= 0;
}

/// Andrew's monotone chain. Counterclockwise, without collinear boundary
/// points; degenerate inputs yield one or two points.
template <typename Scalar>
std::vector<Vector2<Scalar>> convex_hull(std::vector<Vector2<Scalar>> points)
{
    std::sort(points.begin(), points.end(), [](const auto& p, const auto& q) {
        return p.x() < q.x() || (p.x() == q.x() && p.y() < q.y());
    });
    points.erase(std::unique(points.begin(), points.end()), points.end());
    if (points.size() <= 2) {
        return points;
    }
    std::vector<Vector2<Scalar>> hull(2 * points.size());
    std::size_t k = 0;
    for (const auto& p : points) {
        while (k >= 2 && orientation_sign(hull[k - 2], hull[k - 1], p) <= 0) {
            --k;
        }
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (std::size_t i = points.size() - 1; i-- > 0;) {
        while (k >= lower && orientation_sign(hull[k - 2], hull[k - 1], points[i]) <= 0) {
            --k;
        }
        hull[k++] = points[i];
    }
    hull.resize(k - 1);
    return hull;
}

/// p in the closed convex polygon given by a hull from convex_hull().
template <typename Scalar>
bool in_hull(const Vector2<Scalar>& p, const std::vector<Vector2<Scalar>>& hull)
{
    if (hull.empty()) {
        return false;
    }
    if (hull.size() == 1) {
        return p == hull[0];
    }
    if (hull.size() == 2) {
        return on_closed_segment(p, hull[0], hull[1]);
    }
    for (std::size_t i = 0; i < hull.size(); ++i) {
        if (orientation_sign(hull[i], hull[(i + 1) % hull.size()], p) < 0) {
            return false;
        }
    }
    return true;
}

template <typename Scalar>
bool in_convex_hull(const Vector2<Scalar>& p, std::vector<Vector2<Scalar>> points)
{
    return in_hull(p, convex_hull(std::move(points)));
}

/// Closed convex hulls of two finite point sets share a point.
template <typename Scalar>
bool convex_hulls_intersect(std::vector<Vector2<Scalar>> first, std::vector<Vector2<Scalar>> second)
{
    const auto p = convex_hull(std::move(first));
    const auto q = convex_hull(std::move(second));
    if (p.empty() || q.empty()) {
        return false;
    }
    for (const auto& v : p) {
        if (in_hull(v, q)) {
            return true;
        }
    }
    for (const auto& v : q) {
        if (in_hull(v, p)) {
            return true;
        }
    }
    const std::size_t np = p.size() == 2 ? 1 : p.size();
    const std::size_t nq = q.size() == 2 ? 1 : q.size();
    if (p.size() < 2 || q.size() < 2) {
        return false;
    }
    for (std::size_t i = 0; i < np; ++i) {
        for (std::size_t j = 0; j < nq; ++j) {
            if (closed_segments_meet(p[i], p[(i + 1) % p.size()], q[j], q[(j + 1) % q.size()])) {
                return true;
            }
        }
    }
    return false;
}

/// No point lies in the closed convex hull of the others.
template <typename Scalar>
bool in_convex_position(const std::vector<Vector2<Scalar>>& points)
{
    for (std::size_t i = 0; i < points.size(); ++i) {
        std::vector<Vector2<Scalar>> rest;
        rest.reserve(points.size() - 1);
        for (std::size_t j = 0; j < points.size(); ++j) {
            if (j != i) {
                rest.push_back(points[j]);
            }
        }
        if (in_convex_hull(points[i], std::move(rest))) {
            return false;
        }
    }
    return true;
}

// Polygon predicates. Vertices are listed in boundary order; edge i joins
// vertex i and vertex i + 1 (mod size).

bool is_simple_polygon(std::span<const Point2> polygon);

PolygonLocation locate_in_polygon(const Point2& p, std::span<const Point2> polygon);

/// v is a guard point along edge_index: every segment from v to a polygon
/// vertex meets that closed edge. Requires a simple polygon and v strictly
/// outside it.
bool is_guard_point(const Point2& v, std::span<const Point2> polygon, std::size_t edge_index);

/// For every vertex P, the ray from v through P meets the polygon only
/// between v and P.
bool ray_condition_holds(const Point2& v, std::span<const Point2> polygon,
                         RayGrazing grazing = RayGrazing::Allowed);

struct GuardSearch {
    std::optional<std::size_t> edge;
    std::string reason;

    explicit operator bool() const { return edge.has_value(); }
};

GuardSearch find_guard_edge(const Point2& v, std::span<const Point2> polygon,
                            RayGrazing grazing = RayGrazing::Allowed);

}  // namespace prips

#endif  // PRIPS_GEOM_HPP
