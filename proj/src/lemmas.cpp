#include "prips/lemmas.hpp"

#include <sstream>

#include "prips/geom.hpp"
#include "prips/lattice.hpp"
#include "prips/obstructions.hpp"

namespace prips {

namespace {

std::string edge_text(int a, int b)
{
    return std::to_string(a) + "-" + std::to_string(b);
}

template <typename P>
std::vector<P> gather(std::span<const P> pts, const std::vector<int>& ids)
{
    std::vector<P> out;
    out.reserve(ids.size());
    for (int v : ids) {
        out.push_back(pts[static_cast<std::size_t>(v)]);
    }
    return out;
}

}  // namespace

bool is_pure_closed_2d(const FlagComplex& k)
{
    if (k.vertex_count() == 0) {
        return false;
    }
    const Purity p = is_pure(k);
    return p.pure && p.dimension == 2 && is_closed(k);
}

LemmaResult check_cone(const PointCloud& cloud, const Graph& g)
{
    LemmaResult out;
    const auto edges = g.edges();
    with_exact_coords(cloud.points, cloud.scale, [&](auto pts, const auto&) {
        auto at = [&](int v) { return pts[static_cast<std::size_t>(v)]; };
        for (std::size_t i = 0; i < edges.size() && !out.violation; ++i) {
            for (std::size_t j = i + 1; j < edges.size() && !out.violation; ++j) {
                const auto [p, q] = edges[i];
                const auto [r, s] = edges[j];
                if (p == r || p == s || q == r || q == s) {
                    continue;
                }
                if (!closed_segments_meet(at(p), at(q), at(r), at(s))) {
                    continue;
                }
                const int first[2][2] = {{p, q}, {q, p}};
                const int second[2][2] = {{r, s}, {s, r}};
                for (const auto& ab : first) {
                    for (const auto& cd : second) {
                        const int a = ab[0], b = ab[1], c = cd[0], d = cd[1];
                        if (g.adjacent(c, a)) {
                            continue;
                        }
                        out.applicable = true;
                        if (!g.adjacent(b, d) && !out.violation) {
                            out.violation = "edges " + edge_text(a, b) + " and " + edge_text(c, d) + " meet with " +
                                            edge_text(c, a) + " missing but " + edge_text(b, d) + " absent";
                        }
                    }
                }
            }
        }
        return 0;
    });
    return out;
}

LemmaResult check_no_induced_k16(const Graph& g)
{
    LemmaResult out;
    out.applicable = g.n() > 0;
    if (auto hit = contains_induced_k16(g)) {
        std::ostringstream os;
        os << "vertex " << (*hit)[0] << " has independent neighbours";
        for (std::size_t i = 1; i < hit->size(); ++i) {
            os << ' ' << (*hit)[i];
        }
        out.violation = os.str();
    }
    return out;
}

LemmaResult check_hull_in_link(const PointCloud& cloud, const Graph& g)
{
    LemmaResult out;
    with_exact_coords(cloud.points, cloud.scale, [&](auto pts, const auto&) {
        for (int v = 0; v < g.n() && !out.violation; ++v) {
            const auto& nv = g.neighbors(v);
            if (nv.size() < 2) {
                continue;
            }
            const auto hull = convex_hull(gather(pts, nv));
            for (int w = 0; w < g.n() && !out.violation; ++w) {
                if (w == v) {
                    continue;
                }
                const auto pw = pts[static_cast<std::size_t>(w)];
                if (!g.adjacent(v, w)) {
                    if (in_hull(pw, hull)) {
                        out.violation = "vertex " + std::to_string(w) + " lies in the hull of the link of " +
                                        std::to_string(v) + " but is not adjacent to it";
                    }
                    continue;
                }
                std::vector<int> missing;
                for (int a : nv) {
                    if (a != w && !g.adjacent(a, w)) {
                        missing.push_back(a);
                    }
                }
                if (missing.size() < nv.size() - 1) {
                    std::vector<int> others;
                    for (int a : nv) {
                        if (a != w) {
                            others.push_back(a);
                        }
                    }
                    out.applicable = out.applicable || in_convex_hull(pw, gather(pts, others));
                }
                if (!missing.empty() && in_convex_hull(pw, gather(pts, missing))) {
                    out.violation = "vertex " + std::to_string(w) + " lies in the hull of link vertices of " +
                                    std::to_string(v) + " none of which it is adjacent to";
                }
            }
        }
        return 0;
    });
    return out;
}

LemmaResult check_link_component_hulls(const PointCloud& cloud, const Graph& g)
{
    LemmaResult out;
    with_exact_coords(cloud.points, cloud.scale, [&](auto pts, const auto&) {
        for (int v = 0; v < g.n() && !out.violation; ++v) {
            const auto& nv = g.neighbors(v);
            const auto parts = connected_components(g.induced(nv));
            if (parts.size() < 2) {
                continue;
            }
            out.applicable = true;
            std::vector<std::vector<int>> ids;
            for (const auto& part : parts) {
                std::vector<int> mapped;
                for (int i : part) {
                    mapped.push_back(nv[static_cast<std::size_t>(i)]);
                }
                ids.push_back(std::move(mapped));
            }
            for (std::size_t i = 0; i < ids.size() && !out.violation; ++i) {
                for (std::size_t j = i + 1; j < ids.size(); ++j) {
                    if (convex_hulls_intersect(gather(pts, ids[i]), gather(pts, ids[j]))) {
                        out.violation = "link of " + std::to_string(v) + " has components with meeting hulls";
                        break;
                    }
                }
            }
        }
        return 0;
    });
    return out;
}

LemmaResult check_nondegenerate_facets(const PointCloud& cloud, const FlagComplex& k)
{
    LemmaResult out;
    if (!is_pure_closed_2d(k)) {
        return out;
    }
    out.applicable = true;
    with_exact_coords(cloud.points, cloud.scale, [&](auto pts, const auto&) {
        for (const auto& f : k.facets()) {
            const auto& a = pts[static_cast<std::size_t>(f[0])];
            const auto& b = pts[static_cast<std::size_t>(f[1])];
            const auto& c = pts[static_cast<std::size_t>(f[2])];
            if (orientation_sign(a, b, c) == 0) {
                out.violation = "facet " + std::to_string(f[0]) + "," + std::to_string(f[1]) + "," +
                                std::to_string(f[2]) + " is collinear";
                break;
            }
        }
        return 0;
    });
    return out;
}

LemmaResult check_link_strong_components(const FlagComplex& k)
{
    LemmaResult out;
    if (k.vertex_count() == 0) {
        return out;
    }
    const Purity p = is_pure(k);
    if (!p.pure || p.dimension < 2 || !is_weak_pseudomanifold(k)) {
        return out;
    }
    out.applicable = true;
    const int n = p.dimension;
    for (int d = 0; d <= n - 2 && !out.violation; ++d) {
        for (const auto& face : cliques(k.graph(), d + 1)) {
            const Subcomplex lk = link(k, face);
            const auto scc = strongly_connected_components(lk.complex);
            std::string name;
            for (int v : face) {
                name += (name.empty() ? "" : ",") + std::to_string(v);
            }
            if (scc.size() > 2) {
                out.violation = "link of face " + name + " has " + std::to_string(scc.size()) + " strong components";
                break;
            }
            if (d == n - 2 && lk.complex.vertex_count() > 11) {
                out.violation = "link of face " + name + " has " + std::to_string(lk.complex.vertex_count()) +
                                " vertices";
                break;
            }
        }
    }
    return out;
}

LemmaResult check_boundary_full_contact(const PointCloud& cloud, const FlagComplex& k)
{
    LemmaResult out;
    if (!is_pure_closed_2d(k)) {
        return out;
    }
    out.applicable = true;
    for (const auto& e : k.graph().edges()) {
        const BoundaryContact c = boundary_contact(cloud, k, e);
        if (c == BoundaryContact::Partial) {
            out.violation = "edge " + edge_text(e.first, e.second) + " only partly on the shadow boundary";
            break;
        }
    }
    return out;
}

LemmaResult check_gamma2_obtuse(const PointCloud& cloud, const FlagComplex& k)
{
    LemmaResult out;
    if (!is_pure_closed_2d(k)) {
        return out;
    }
    for (const auto& c : gamma2_configurations(cloud, k)) {
        out.applicable = true;
        if (!obtuse_angle_holds(cloud, c)) {
            out.violation = "configuration " + std::to_string(c.a) + "," + std::to_string(c.b) + "," +
                            std::to_string(c.c) + "," + std::to_string(c.d) + " is not obtuse";
            break;
        }
    }
    return out;
}

LemmaResult check_census_pairs(const PointCloud& cloud, const FlagComplex& k)
{
    LemmaResult out;
    if (!is_pure_closed_2d(k)) {
        return out;
    }
    out.applicable = true;
    const std::size_t pairs = intersecting_edge_pairs(cloud, k).size();
    const std::size_t census = count_octahedra(k).count;
    if (pairs != 6 * census) {
        out.violation = std::to_string(pairs) + " crossing pairs for " + std::to_string(census) + " octahedra";
    }
    return out;
}

}  // namespace prips
