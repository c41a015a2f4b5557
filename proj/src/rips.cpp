#include "prips/rips.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

#include "prips/lattice.hpp"

namespace prips {

const char* to_string(ThresholdMode mode) { return mode == ThresholdMode::StrictLess ? "strict" : "atmost"; }

ThresholdMode parse_threshold_mode(std::string_view text)
{
    if (text == "strict") {
        return ThresholdMode::StrictLess;
    }
    if (text == "atmost") {
        return ThresholdMode::AtMost;
    }
    throw PreconditionError("unknown threshold mode '" + std::string(text) + "'");
}

void validate_cloud(const PointCloud& cloud)
{
    if (cloud.scale <= 0) {
        throw PreconditionError("scale must be positive");
    }
    std::vector<std::pair<Point2, std::size_t>> sorted;
    sorted.reserve(cloud.size());
    for (std::size_t i = 0; i < cloud.size(); ++i) {
        sorted.emplace_back(cloud.points[i], i);
    }
    std::sort(sorted.begin(), sorted.end(), [](const auto& p, const auto& q) {
        const auto& a = p.first;
        const auto& b = q.first;
        return a.x() < b.x() || (a.x() == b.x() && a.y() < b.y());
    });
    for (std::size_t i = 1; i < sorted.size(); ++i) {
        if (sorted[i].first == sorted[i - 1].first) {
            throw GeometryError("duplicate point: indices " + std::to_string(sorted[i - 1].second) + " and " +
                                std::to_string(sorted[i].second));
        }
    }
}

Graph build_udg(const PointCloud& cloud, ThresholdMode mode)
{
    validate_cloud(cloud);
    const int n = static_cast<int>(cloud.size());
    Graph g(n);
    with_exact_coords(cloud.points, cloud.scale, [&](auto pts, const auto& r) {
        for (int u = 0; u < n; ++u) {
            for (int v = u + 1; v < n; ++v) {
                if (within_threshold(pts[static_cast<std::size_t>(u)], pts[static_cast<std::size_t>(v)], r, mode)) {
                    g.add_edge(u, v);
                }
            }
        }
        return 0;
    });
    return g;
}

FlagComplex build_rips(const PointCloud& cloud, ThresholdMode mode) { return clique_complex(build_udg(cloud, mode)); }

namespace {

constexpr std::int64_t kCoordinateResolution = 1'000'000;

Point2 polar_point(double radius, double angle, double cx = 0.0, double cy = 0.0)
{
    return Point2(rationalize(cx + radius * std::cos(angle), kCoordinateResolution),
                  rationalize(cy + radius * std::sin(angle), kCoordinateResolution));
}

// Octahedra as six local slots: 0 and 5 are the tips, (1,4) and (2,3) the
// remaining antipodal pairs.
void add_octahedron(Graph& g, const std::array<int, 6>& slots)
{
    for (int i = 0; i < 6; ++i) {
        for (int j = i + 1; j < 6; ++j) {
            if (i + j != 5) {
                g.add_edge(slots[static_cast<std::size_t>(i)], slots[static_cast<std::size_t>(j)]);
            }
        }
    }
}

// Spindle profile: tips at 0 and kTipGap along the axis, the four side
// points at (kNear, +-kHalfWidth) and (kFar, +-kHalfWidth).
const Rational kNear(3, 5);
const Rational kHalfWidth(49, 100);

void require_graph(const PointCloud& cloud, const Graph& expected, const char* what)
{
    if (!(build_udg(cloud) == expected)) {
        throw GeometryError(std::string(what) + ": coordinates do not realize the intended graph");
    }
}

}  // namespace

PointCloud gen_cross_polytope_points(int n)
{
    if (n < 2) {
        throw PreconditionError("gen_cross_polytope_points requires n >= 2");
    }
    const int parts = n + 1;
    const int count = 2 * parts;
    const double pi = std::numbers::pi;
    // Antipodal chord is the diameter 2R; the longest other chord is
    // 2R sin((parts - 1) pi / count). Pick 2R strictly between the bounds.
    const double upper = 1.0 / std::sin((parts - 1) * pi / count);
    const double gap = upper - 1.0;
    Rational diameter;
    for (std::int64_t q = 20;; q *= 2) {
        const double p = std::round((1.0 + gap / 2) * static_cast<double>(q));
        const double candidate = p / static_cast<double>(q);
        if (candidate - 1.0 >= gap / 4 && upper - candidate >= gap / 4) {
            diameter = Rational(Integer(static_cast<long long>(p)), Integer(q));
            break;
        }
    }
    const double radius = to_double(diameter) / 2;
    PointCloud cloud;
    for (int j = 0; j < count; ++j) {
        cloud.points.push_back(polar_point(radius, 2 * pi * j / count));
    }
    Graph expected(count);
    for (int i = 0; i < count; ++i) {
        for (int j = i + 1; j < count; ++j) {
            if (j - i != parts) {
                expected.add_edge(i, j);
            }
        }
    }
    require_graph(cloud, expected, "gen_cross_polytope_points");
    return cloud;
}

PointCloud octahedron_chain_points(int k)
{
    if (k < 1) {
        throw PreconditionError("octahedron_chain_points requires k >= 1");
    }
    const Rational far(83, 100);
    const Rational tip_gap(143, 100);
    PointCloud cloud;
    Graph expected(5 * k + 1);
    for (int i = 0; i < k; ++i) {
        const Rational x0 = tip_gap * i;
        cloud.points.emplace_back(x0, Rational(0));
        cloud.points.emplace_back(x0 + kNear, kHalfWidth);
        cloud.points.emplace_back(x0 + kNear, -kHalfWidth);
        cloud.points.emplace_back(x0 + far, kHalfWidth);
        cloud.points.emplace_back(x0 + far, -kHalfWidth);
        add_octahedron(expected, {5 * i, 5 * i + 1, 5 * i + 2, 5 * i + 3, 5 * i + 4, 5 * i + 5});
    }
    cloud.points.emplace_back(tip_gap * k, Rational(0));
    require_graph(cloud, expected, "octahedron_chain_points");
    return cloud;
}

Graph octahedron_ring_graph(int m)
{
    if (m < 3) {
        throw PreconditionError("octahedron_ring_graph requires m >= 3");
    }
    Graph g(5 * m);
    for (int i = 0; i < m; ++i) {
        add_octahedron(g, {5 * i, 5 * i + 1, 5 * i + 2, 5 * i + 3, 5 * i + 4, (5 * i + 5) % (5 * m)});
    }
    return g;
}

PointCloud octahedron_ring_points(int m)
{
    const Graph expected = octahedron_ring_graph(m);
    const double near = to_double(kNear);
    const double far = 0.86;
    const double half = to_double(kHalfWidth);
    const double tip_gap = near + far;
    const double pi = std::numbers::pi;
    const double ring_radius = tip_gap / (2 * std::sin(pi / m));
    PointCloud cloud;
    for (int i = 0; i < m; ++i) {
        const double t0 = 2 * pi * i / m;
        const double t1 = 2 * pi * (i + 1) / m;
        const Eigen::Vector2d p0(ring_radius * std::cos(t0), ring_radius * std::sin(t0));
        const Eigen::Vector2d p1(ring_radius * std::cos(t1), ring_radius * std::sin(t1));
        const Eigen::Vector2d axis = (p1 - p0) / tip_gap;
        const Eigen::Vector2d normal(-axis.y(), axis.x());
        auto place = [&](double along, double across) {
            const Eigen::Vector2d q = p0 + along * axis + across * normal;
            cloud.points.emplace_back(rationalize(q.x(), kCoordinateResolution),
                                      rationalize(q.y(), kCoordinateResolution));
        };
        place(0, 0);
        place(near, half);
        place(near, -half);
        place(far, half);
        place(far, -half);
    }
    validate_cloud(cloud);
    require_graph(cloud, expected, "octahedron_ring_points");
    return cloud;
}

namespace {

void require_same_size(const PointCloud& cloud, const FlagComplex& k)
{
    if (static_cast<int>(cloud.size()) != k.vertex_count()) {
        throw PreconditionError("point cloud and complex have different vertex counts");
    }
}

}  // namespace

std::vector<EdgePair> intersecting_edge_pairs(const PointCloud& cloud, const FlagComplex& k)
{
    require_same_size(cloud, k);
    const std::vector<Edge> edges = k.graph().edges();
    std::vector<EdgePair> out;
    with_exact_coords(cloud.points, cloud.scale, [&](auto pts, const auto&) {
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto [a, b] = edges[i];
            for (std::size_t j = i + 1; j < edges.size(); ++j) {
                const auto [c, d] = edges[j];
                if (a == c || a == d || b == c || b == d) {
                    continue;
                }
                const auto& pa = pts[static_cast<std::size_t>(a)];
                const auto& pb = pts[static_cast<std::size_t>(b)];
                const auto& pc = pts[static_cast<std::size_t>(c)];
                const auto& pd = pts[static_cast<std::size_t>(d)];
                using S = std::decay_t<decltype(pa.x())>;
                if (segments_intersect(Segment<S>(pa, pb), Segment<S>(pc, pd)) == SegmentRelation::InteriorCross) {
                    out.emplace_back(edges[i], edges[j]);
                }
            }
        }
        return 0;
    });
    return out;
}

namespace {

std::string face_text(std::span<const int> vertices)
{
    std::string s = "{";
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        s += (i ? "," : "") + std::to_string(vertices[i]);
    }
    return s + "}";
}

void require_pure_closed_2d(const FlagComplex& k)
{
    for (const Simplex& f : k.facets()) {
        if (f.dimension() != 2) {
            throw PreconditionError("facet " + face_text(f.vertices()) + " has dimension " +
                                    std::to_string(f.dimension()) + ", expected 2");
        }
    }
    for (const auto& [ridge, count] : ridge_degrees(k)) {
        if (count < 2) {
            throw PreconditionError("edge " + face_text(ridge.vertices()) + " lies in only one triangle");
        }
    }
}

}  // namespace

std::vector<Gamma2Config> gamma2_configurations(const PointCloud& cloud, const FlagComplex& k)
{
    require_same_size(cloud, k);
    require_pure_closed_2d(k);
    const Graph& g = k.graph();
    std::vector<Gamma2Config> out;
    for (const auto& [e1, e2] : intersecting_edge_pairs(cloud, k)) {
        const std::array<int, 2> first{e1.first, e1.second};
        const std::array<int, 2> second{e2.first, e2.second};
        int missing = 0;
        Gamma2Config cfg;
        for (int i = 0; i < 2; ++i) {
            for (int j = 0; j < 2; ++j) {
                if (!g.adjacent(first[static_cast<std::size_t>(i)], second[static_cast<std::size_t>(j)])) {
                    ++missing;
                    cfg.d = first[static_cast<std::size_t>(i)];
                    cfg.a = first[static_cast<std::size_t>(1 - i)];
                    cfg.c = second[static_cast<std::size_t>(j)];
                    cfg.b = second[static_cast<std::size_t>(1 - j)];
                }
            }
        }
        if (missing != 1) {
            const std::array<int, 4> quad{e1.first, e1.second, e2.first, e2.second};
            throw std::logic_error("crossing edges on " + face_text(quad) + " do not span a gamma2 configuration");
        }
        if (cfg.a > cfg.b) {
            cfg = Gamma2Config{cfg.b, cfg.a, cfg.d, cfg.c};
        }
        assert(obtuse_angle_holds(cloud, cfg));
        out.push_back(cfg);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool obtuse_angle_holds(const PointCloud& cloud, const Gamma2Config& g)
{
    const auto& pts = cloud.points;
    const Point2& a = pts.at(static_cast<std::size_t>(g.a));
    const Point2& b = pts.at(static_cast<std::size_t>(g.b));
    const Point2& c = pts.at(static_cast<std::size_t>(g.c));
    const Point2& d = pts.at(static_cast<std::size_t>(g.d));
    const Point2 u1 = c - a;
    const Point2 u2 = b - a;
    const Point2 w1 = a - b;
    const Point2 w2 = d - b;
    // sin(alpha + beta) < 0 with both angles in (0, pi).
    const Rational s = abs(cross(u1, u2)) * dot(w1, w2) + dot(u1, u2) * abs(cross(w1, w2));
    return s < 0;
}

namespace {

using Triangle = std::array<Point2, 3>;

std::vector<Triangle> shadow_triangles(const PointCloud& cloud, const FlagComplex& k)
{
    std::vector<Triangle> out;
    for (const Simplex& t : cliques(k.graph(), 3)) {
        Triangle tri{cloud.points[static_cast<std::size_t>(t[0])], cloud.points[static_cast<std::size_t>(t[1])],
                     cloud.points[static_cast<std::size_t>(t[2])]};
        const int turn = orientation_sign(tri[0], tri[1], tri[2]);
        if (turn == 0) {
            continue;
        }
        if (turn < 0) {
            std::swap(tri[1], tri[2]);
        }
        out.push_back(std::move(tri));
    }
    return out;
}

bool in_closed_sector(const Point2& dir, const Point2& start, const Point2& end)
{
    return cross(start, dir) >= 0 && cross(dir, end) >= 0;
}

bool same_direction(const Point2& u, const Point2& v) { return cross(u, v) == 0 && dot(u, v) > 0; }

// A point is interior to the union of closed triangles iff the angular
// sectors the triangles occupy around it cover every direction.
bool interior_point(const Point2& x, const std::vector<Triangle>& triangles)
{
    std::vector<std::pair<Point2, Point2>> sectors;
    for (const Triangle& t : triangles) {
        const TriangleLocation loc = in_triangle(x, t[0], t[1], t[2]);
        if (loc == TriangleLocation::Inside) {
            return true;
        }
        if (loc == TriangleLocation::Outside) {
            continue;
        }
        bool at_vertex = false;
        for (std::size_t i = 0; i < 3; ++i) {
            if (x == t[i]) {
                sectors.emplace_back(t[(i + 1) % 3] - t[i], t[(i + 2) % 3] - t[i]);
                at_vertex = true;
            }
        }
        if (at_vertex) {
            continue;
        }
        for (std::size_t i = 0; i < 3; ++i) {
            const Point2& a = t[i];
            const Point2& b = t[(i + 1) % 3];
            if (on_closed_segment(x, a, b)) {
                // Counterclockwise triangle: the interior is left of a -> b.
                sectors.emplace_back(b - a, a - b);
                break;
            }
        }
    }
    if (sectors.empty()) {
        return false;
    }
    for (const auto& [s, e] : sectors) {
        bool continued = false;
        for (const auto& [s2, e2] : sectors) {
            if (in_closed_sector(e, s2, e2) && !same_direction(e, e2)) {
                continued = true;
                break;
            }
        }
        if (!continued) {
            return false;
        }
    }
    return true;
}

void segment_events(const Point2& p, const Point2& q, const Point2& a, const Point2& b, std::vector<Rational>& out)
{
    const Point2 d = q - p;
    const Point2 e = b - a;
    const Point2 w = a - p;
    const Rational denom = cross(d, e);
    auto keep = [&](const Rational& t) {
        if (t > 0 && t < 1) {
            out.push_back(t);
        }
    };
    if (denom != 0) {
        const Rational s = cross(w, d) / denom;
        if (s >= 0 && s <= 1) {
            keep(cross(w, e) / denom);
        }
        return;
    }
    if (cross(w, d) != 0) {
        return;
    }
    const Rational dd = dot(d, d);
    keep(dot(w, d) / dd);
    keep(dot(Point2(b - p), d) / dd);
}

BoundaryContact contact_with(const Point2& p, const Point2& q, const std::vector<Triangle>& triangles)
{
    std::vector<Rational> events;
    for (const Triangle& t : triangles) {
        for (std::size_t i = 0; i < 3; ++i) {
            segment_events(p, q, t[i], t[(i + 1) % 3], events);
        }
    }
    std::sort(events.begin(), events.end());
    events.erase(std::unique(events.begin(), events.end()), events.end());

    std::vector<Rational> samples;
    Rational prev(0);
    for (const Rational& t : events) {
        samples.push_back((prev + t) / 2);
        samples.push_back(t);
        prev = t;
    }
    samples.push_back((prev + 1) / 2);

    std::size_t exposed = 0;
    const Point2 d = q - p;
    for (const Rational& t : samples) {
        if (!interior_point(Point2(p + d * t), triangles)) {
            ++exposed;
        }
    }
    if (exposed == 0) {
        return BoundaryContact::None;
    }
    return exposed == samples.size() ? BoundaryContact::Full : BoundaryContact::Partial;
}

}  // namespace

BoundaryContact boundary_contact(const PointCloud& cloud, const FlagComplex& k, Edge e)
{
    require_same_size(cloud, k);
    if (!k.graph().adjacent(e.first, e.second)) {
        throw PreconditionError("boundary_contact: not an edge");
    }
    return contact_with(cloud.points[static_cast<std::size_t>(e.first)],
                        cloud.points[static_cast<std::size_t>(e.second)], shadow_triangles(cloud, k));
}

std::vector<Edge> boundary_edges(const PointCloud& cloud, const FlagComplex& k)
{
    require_same_size(cloud, k);
    const auto triangles = shadow_triangles(cloud, k);
    std::vector<Edge> out;
    for (const Edge& e : k.graph().edges()) {
        if (contact_with(cloud.points[static_cast<std::size_t>(e.first)],
                         cloud.points[static_cast<std::size_t>(e.second)], triangles) != BoundaryContact::None) {
            out.push_back(e);
        }
    }
    return out;
}

OctahedronCensus count_octahedra(const Graph& g)
{
    OctahedronCensus census;
    const int n = g.n();
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) < 4) {
            continue;
        }
        for (int w = v + 1; w < n; ++w) {
            if (g.adjacent(v, w) || g.degree(w) < 4) {
                continue;
            }
            std::vector<int> common;
            std::set_intersection(g.neighbors(v).begin(), g.neighbors(v).end(), g.neighbors(w).begin(),
                                  g.neighbors(w).end(), std::back_inserter(common));
            std::erase_if(common, [&](int x) { return x < v || g.degree(x) < 4; });
            std::vector<Edge> antipodes;
            for (std::size_t i = 0; i < common.size(); ++i) {
                for (std::size_t j = i + 1; j < common.size(); ++j) {
                    if (!g.adjacent(common[i], common[j])) {
                        antipodes.emplace_back(common[i], common[j]);
                    }
                }
            }
            for (std::size_t i = 0; i < antipodes.size(); ++i) {
                const auto [x, y] = antipodes[i];
                for (std::size_t j = i + 1; j < antipodes.size(); ++j) {
                    const auto [z, t] = antipodes[j];
                    if (x == z || x == t || y == z || y == t) {
                        continue;
                    }
                    if (x > z) {
                        continue;
                    }
                    if (g.adjacent(x, z) && g.adjacent(x, t) && g.adjacent(y, z) && g.adjacent(y, t)) {
                        std::array<int, 6> set{v, w, x, y, z, t};
                        std::sort(set.begin(), set.end());
                        census.vertex_sets.push_back(set);
                    }
                }
            }
        }
    }
    std::sort(census.vertex_sets.begin(), census.vertex_sets.end());
    census.count = census.vertex_sets.size();
    return census;
}

OctahedronCensus count_octahedra(const FlagComplex& k) { return count_octahedra(k.graph()); }

}  // namespace prips
