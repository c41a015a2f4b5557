#include "prips/geom.hpp"

namespace prips {

const char* to_string(Side side)
{
    switch (side) {
    case Side::Left: return "Left";
    case Side::Right: return "Right";
    default: return "On";
    }
}

const char* to_string(SegmentRelation relation)
{
    switch (relation) {
    case SegmentRelation::Disjoint: return "Disjoint";
    case SegmentRelation::InteriorCross: return "InteriorCross";
    default: return "Touch";
    }
}

const char* to_string(TriangleLocation location)
{
    switch (location) {
    case TriangleLocation::Inside: return "Inside";
    case TriangleLocation::Boundary: return "Boundary";
    default: return "Outside";
    }
}

bool is_simple_polygon(std::span<const Point2> polygon)
{
    const std::size_t n = polygon.size();
    if (n < 3) {
        return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = i + 1; j < n; ++j) {
            if (polygon[i] == polygon[j]) {
                return false;
            }
        }
    }
    bool has_turn = false;
    for (std::size_t i = 0; i < n && !has_turn; ++i) {
        has_turn = orientation_sign(polygon[i], polygon[(i + 1) % n], polygon[(i + 2) % n]) != 0;
    }
    if (!has_turn) {
        return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        const Segment<Rational> e(polygon[i], polygon[(i + 1) % n]);
        for (std::size_t j = i + 1; j < n; ++j) {
            const Segment<Rational> f(polygon[j], polygon[(j + 1) % n]);
            const SegmentRelation rel = segments_intersect(e, f);
            const bool adjacent = j == i + 1 || (i == 0 && j == n - 1);
            if (rel == SegmentRelation::InteriorCross) {
                return false;
            }
            // Folded-back adjacent edges overlap and report InteriorCross.
            if (rel == SegmentRelation::Touch && !adjacent) {
                return false;
            }
        }
    }
    return true;
}

PolygonLocation locate_in_polygon(const Point2& p, std::span<const Point2> polygon)
{
    const std::size_t n = polygon.size();
    int winding = 0;
    for (std::size_t i = 0; i < n; ++i) {
        const Point2& a = polygon[i];
        const Point2& b = polygon[(i + 1) % n];
        if (on_closed_segment(p, a, b)) {
            return PolygonLocation::Boundary;
        }
        if (a.y() <= p.y()) {
            if (b.y() > p.y() && orientation_sign(a, b, p) > 0) {
                ++winding;
            }
        } else if (b.y() <= p.y() && orientation_sign(a, b, p) < 0) {
            --winding;
        }
    }
    return winding != 0 ? PolygonLocation::Inside : PolygonLocation::Outside;
}

namespace {

void require_simple(std::span<const Point2> polygon)
{
    if (!is_simple_polygon(polygon)) {
        throw GeometryError("polygon is not simple");
    }
}

// Parameters t with v + t (p - v) on the closed edge [a, b].
void ray_events(const Point2& v, const Point2& p, const Point2& a, const Point2& b, std::vector<Rational>& out)
{
    const Point2 d = p - v;
    const Point2 e = b - a;
    const Point2 w = a - v;
    const Rational denom = cross(d, e);
    if (denom != 0) {
        const Rational t = cross(w, e) / denom;
        const Rational s = cross(w, d) / denom;
        if (s >= 0 && s <= 1) {
            out.push_back(t);
        }
        return;
    }
    if (cross(w, d) != 0) {
        return;
    }
    const Rational dd = dot(d, d);
    out.push_back(dot(w, d) / dd);
    out.push_back(dot(Point2(b - v), d) / dd);
}

}  // namespace

bool is_guard_point(const Point2& v, std::span<const Point2> polygon, std::size_t edge_index)
{
    require_simple(polygon);
    if (edge_index >= polygon.size()) {
        throw GeometryError("edge index out of range");
    }
    if (locate_in_polygon(v, polygon) != PolygonLocation::Outside) {
        throw GeometryError("guard point candidate is not strictly outside the polygon");
    }
    const Point2& a = polygon[edge_index];
    const Point2& b = polygon[(edge_index + 1) % polygon.size()];
    for (const Point2& p : polygon) {
        if (!closed_segments_meet(v, p, a, b)) {
            return false;
        }
    }
    return true;
}

bool ray_condition_holds(const Point2& v, std::span<const Point2> polygon, RayGrazing grazing)
{
    const std::size_t n = polygon.size();
    for (const Point2& p : polygon) {
        if (p == v) {
            continue;
        }
        std::vector<Rational> events;
        for (std::size_t i = 0; i < n; ++i) {
            ray_events(v, p, polygon[i], polygon[(i + 1) % n], events);
        }
        std::vector<Rational> beyond{Rational(1)};
        for (const Rational& t : events) {
            if (t > 1) {
                beyond.push_back(t);
            }
        }
        std::sort(beyond.begin(), beyond.end());
        beyond.erase(std::unique(beyond.begin(), beyond.end()), beyond.end());
        if (grazing == RayGrazing::Violates && beyond.size() > 1) {
            return false;
        }
        // Between consecutive events the ray is either inside or outside.
        const Point2 d = p - v;
        for (std::size_t i = 0; i < beyond.size(); ++i) {
            const Rational t = i + 1 < beyond.size() ? Rational((beyond[i] + beyond[i + 1]) / 2)
                                                     : Rational(beyond[i] + 1);
            const Point2 q = v + d * t;
            if (locate_in_polygon(q, polygon) == PolygonLocation::Inside) {
                return false;
            }
        }
    }
    return true;
}

GuardSearch find_guard_edge(const Point2& v, std::span<const Point2> polygon, RayGrazing grazing)
{
    if (!is_simple_polygon(polygon)) {
        return {std::nullopt, "polygon is not simple"};
    }
    if (locate_in_polygon(v, polygon) == PolygonLocation::Inside) {
        return {std::nullopt, "point lies inside the polygon"};
    }
    if (!ray_condition_holds(v, polygon, grazing)) {
        return {std::nullopt, "a ray from the point through a vertex meets the polygon beyond that vertex"};
    }
    const std::size_t n = polygon.size();
    for (std::size_t e = 0; e < n; ++e) {
        const Point2& a = polygon[e];
        const Point2& b = polygon[(e + 1) % n];
        bool guards = true;
        for (const Point2& p : polygon) {
            if (!closed_segments_meet(v, p, a, b)) {
                guards = false;
                break;
            }
        }
        if (guards) {
            return {e, {}};
        }
    }
    return {std::nullopt, "no edge is met by every sight line"};
}

}  // namespace prips
