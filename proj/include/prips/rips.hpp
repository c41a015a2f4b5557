#ifndef PRIPS_RIPS_HPP
#define PRIPS_RIPS_HPP

#include <array>
#include <cstddef>
#include <string_view>
#include <utility>
#include <vector>

#include "prips/complex.hpp"
#include "prips/geom.hpp"
#include "prips/rational.hpp"

namespace prips {

enum class ThresholdMode { StrictLess, AtMost };

const char* to_string(ThresholdMode mode);

/// Accepts "strict" or "atmost".
ThresholdMode parse_threshold_mode(std::string_view text);

struct PointCloud {
    std::vector<Point2> points;
    Rational scale{1};

    std::size_t size() const { return points.size(); }
};

/// Throws PreconditionError for a non-positive scale and GeometryError for
/// repeated points.
void validate_cloud(const PointCloud& cloud);

template <typename Scalar>
bool within_threshold(const Vector2<Scalar>& p, const Vector2<Scalar>& q, const Scalar& r, ThresholdMode mode)
{
    const Scalar d2 = squared_distance(p, q);
    const Scalar r2 = r * r;
    return mode == ThresholdMode::StrictLess ? d2 < r2 : d2 <= r2;
}

Graph build_udg(const PointCloud& cloud, ThresholdMode mode = ThresholdMode::StrictLess);
FlagComplex build_rips(const PointCloud& cloud, ThresholdMode mode = ThresholdMode::StrictLess);

/// 2n + 2 points on a regular polygon whose Rips complex is the
/// n-dimensional cross-polytopal sphere: antipodal pairs at distance >= 1,
/// every other pair closer than 1. Requires n >= 2.
PointCloud gen_cross_polytope_points(int n);

/// k octahedra laid tip to tip along the x axis, consecutive copies sharing
/// one vertex. Requires k >= 1.
PointCloud octahedron_chain_points(int k);

/// m octahedra placed along a regular m-gon, consecutive copies sharing one
/// vertex and the last closing up with the first. The construction is
/// re-verified exactly; too small an m throws GeometryError.
PointCloud octahedron_ring_points(int m);

/// Combinatorial ring of m octahedra; vertex 5i is shared by copies i - 1 and
/// i, and each copy's two shared vertices are antipodal.
Graph octahedron_ring_graph(int m);

using EdgePair = std::pair<Edge, Edge>;

/// Vertex-disjoint edge pairs whose open segments cross, sorted.
std::vector<EdgePair> intersecting_edge_pairs(const PointCloud& cloud, const FlagComplex& k);

/// Facets {a, b, c} and {a, b, d} with c and d non-adjacent; a-d crosses b-c.
struct Gamma2Config {
    int a = 0;
    int b = 0;
    int c = 0;
    int d = 0;

    Edge base() const { return {std::min(a, b), std::max(a, b)}; }
    auto operator<=>(const Gamma2Config&) const = default;
};

/// One configuration per crossing edge pair. Requires a pure, closed,
/// two-dimensional complex; violations throw PreconditionError naming the
/// offending face.
std::vector<Gamma2Config> gamma2_configurations(const PointCloud& cloud, const FlagComplex& k);

/// angle(CAB) + angle(ABD) > 180 degrees, decided exactly.
bool obtuse_angle_holds(const PointCloud& cloud, const Gamma2Config& g);

/// How much of an edge's open segment lies on the boundary of the shadow
/// (the union of all projected triangles).
enum class BoundaryContact { None, Partial, Full };

BoundaryContact boundary_contact(const PointCloud& cloud, const FlagComplex& k, Edge e);

/// Edges whose open segment meets the shadow boundary, sorted.
std::vector<Edge> boundary_edges(const PointCloud& cloud, const FlagComplex& k);

struct OctahedronCensus {
    std::size_t count = 0;
    std::vector<std::array<int, 6>> vertex_sets;
};

/// Induced K_{2,2,2} subgraphs, each listed once as a sorted vertex set.
OctahedronCensus count_octahedra(const FlagComplex& k);
OctahedronCensus count_octahedra(const Graph& g);

}  // namespace prips

#endif  // PRIPS_RIPS_HPP
