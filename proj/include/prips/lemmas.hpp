#ifndef PRIPS_LEMMAS_HPP
#define PRIPS_LEMMAS_HPP

#include <optional>
#include <string>

#include "prips/complex.hpp"
#include "prips/rips.hpp"

namespace prips {

// Property checks for Rips complexes built from a cloud. Each returns
// whether its hypothesis was met at least once (non-vacuous) and the first
// violation found, if any. k must be the Rips complex of the cloud.

struct LemmaResult {
    bool applicable = false;
    std::optional<std::string> violation;
};

/// A~B, C~D, C!~A and closed segments AB, CD meeting imply B~D.
LemmaResult check_cone(const PointCloud& cloud, const Graph& g);

/// No vertex has six pairwise non-adjacent neighbours.
LemmaResult check_no_induced_k16(const Graph& g);

/// For every vertex v and w != v: w in conv N(v) implies w ~ v, and w never
/// lies in the hull of the neighbours of v that miss w.
LemmaResult check_hull_in_link(const PointCloud& cloud, const Graph& g);

/// Connected components of each vertex link have disjoint closed hulls.
LemmaResult check_link_component_hulls(const PointCloud& cloud, const Graph& g);

/// Pure closed 2-complexes: no facet is collinear.
LemmaResult check_nondegenerate_facets(const PointCloud& cloud, const FlagComplex& k);

/// Weak pseudomanifolds of dimension n >= 2: links of faces of codimension
/// at least two have at most two strongly connected components, and links
/// of (n - 2)-faces have at most 11 vertices.
LemmaResult check_link_strong_components(const FlagComplex& k);

/// Pure closed 2-complexes: every boundary edge lies entirely on the
/// shadow boundary.
LemmaResult check_boundary_full_contact(const PointCloud& cloud, const FlagComplex& k);

/// Pure closed 2-complexes: every gamma2 configuration is obtuse.
LemmaResult check_gamma2_obtuse(const PointCloud& cloud, const FlagComplex& k);

/// Pure closed 2-complexes: six crossing pairs per census octahedron.
LemmaResult check_census_pairs(const PointCloud& cloud, const FlagComplex& k);

/// Pure, closed and two-dimensional.
bool is_pure_closed_2d(const FlagComplex& k);

}  // namespace prips

#endif  // PRIPS_LEMMAS_HPP
