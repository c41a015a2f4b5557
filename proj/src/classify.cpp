#include "prips/classify.hpp"

#include <algorithm>
#include <cstdio>
#include <map>
#include <numeric>

namespace prips {

std::optional<int> detect_cross_polytope(const Graph& g)
{
    const int n = g.n();
    if (n == 0 || n % 2 != 0) {
        return std::nullopt;
    }
    for (int v = 0; v < n; ++v) {
        if (g.degree(v) != n - 2) {
            return std::nullopt;
        }
    }
    return n / 2 - 1;
}

std::optional<int> detect_cross_polytope(const FlagComplex& k) { return detect_cross_polytope(k.graph()); }

namespace {

std::string set_text(const std::vector<int>& v)
{
    std::string s = "{";
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? "," : "") + std::to_string(v[i]);
    }
    return s + "}";
}

std::vector<int> shared_vertices(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

}  // namespace

ChainResult decompose_iterated_chain(const FlagComplex& k)
{
    const Purity purity = is_pure(k);
    if (!purity.pure) {
        throw PreconditionError("decompose_iterated_chain: complex is not pure");
    }
    if (purity.dimension < 2) {
        throw PreconditionError("decompose_iterated_chain: requires dimension at least 2");
    }
    const int n = purity.dimension;
    ChainDecomposition d;
    d.n = n;
    const auto& facets = k.facets();
    for (const auto& group : strongly_connected_components(k)) {
        std::vector<int> vertices;
        for (std::size_t f : group) {
            vertices.insert(vertices.end(), facets[f].begin(), facets[f].end());
        }
        std::sort(vertices.begin(), vertices.end());
        vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
        d.components.push_back(std::move(vertices));
    }
    std::sort(d.components.begin(), d.components.end());

    for (std::size_t i = 0; i < d.components.size(); ++i) {
        const auto detected = detect_cross_polytope(k.graph().induced(d.components[i]));
        if (detected != n) {
            return {std::nullopt, "component " + set_text(d.components[i]) +
                                      " is not a cross-polytopal sphere of dimension " + std::to_string(n)};
        }
    }
    const std::size_t m = d.components.size();
    std::vector<std::vector<char>> meets(m, std::vector<char>(m, 0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t j = i + 1; j < m; ++j) {
            auto shared = shared_vertices(d.components[i], d.components[j]);
            if (shared.empty()) {
                continue;
            }
            const bool vertex = shared.size() == 1;
            const bool edge = shared.size() == 2 && n > 2 && k.graph().adjacent(shared[0], shared[1]);
            if (!vertex && !edge) {
                return {std::nullopt, "components " + set_text(d.components[i]) + " and " + set_text(d.components[j]) +
                                          " share " + set_text(shared) +
                                          (n == 2 ? ", but copies may share only one vertex"
                                                  : ", but copies may share only one vertex or one edge")};
            }
            meets[i][j] = meets[j][i] = 1;
            d.intersections.push_back({i, j, std::move(shared)});
        }
    }
    for (const auto& x : d.intersections) {
        for (std::size_t l = x.second + 1; l < m; ++l) {
            if (meets[x.first][l] && meets[x.second][l]) {
                return {std::nullopt, "components " + std::to_string(x.first) + ", " + std::to_string(x.second) +
                                          " and " + std::to_string(l) + " pairwise intersect"};
            }
        }
    }
    return {std::move(d), {}};
}

WedgeSummary wedge_summary(const ChainDecomposition& d)
{
    const std::size_t m = d.components.size();
    std::vector<std::size_t> parent(m);
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            i = parent[i] = parent[parent[i]];
        }
        return i;
    };
    std::size_t pieces = m;
    for (const auto& x : d.intersections) {
        const auto a = find(x.first);
        const auto b = find(x.second);
        if (a != b) {
            parent[a] = b;
            --pieces;
        }
    }
    const long p = static_cast<long>(d.intersections.size()) - static_cast<long>(m) + static_cast<long>(pieces);
    return {static_cast<int>(m), static_cast<int>(p), d.n};
}

namespace {

TheoremCheck vacuous(std::string why) { return {Verdict::Consistent, true, std::move(why)}; }
TheoremCheck holds(std::string what) { return {Verdict::Consistent, false, std::move(what)}; }
TheoremCheck fails(std::string what) { return {Verdict::Counterexample, false, std::move(what)}; }

std::optional<TheoremCheck> require_dimension_two_plus(const FlagComplex& k, Purity& purity)
{
    if (k.vertex_count() == 0) {
        return vacuous("empty complex");
    }
    purity = is_pure(k);
    if (!purity.pure) {
        return vacuous("complex is not pure");
    }
    if (purity.dimension < 2) {
        return vacuous("dimension below 2");
    }
    return std::nullopt;
}

}  // namespace

TheoremCheck verify_theorem_A(const FlagComplex& k)
{
    Purity purity;
    if (auto early = require_dimension_two_plus(k, purity)) {
        return *early;
    }
    if (!is_pseudomanifold(k)) {
        return vacuous("not a pseudomanifold");
    }
    const auto detected = detect_cross_polytope(k);
    if (detected != purity.dimension) {
        return fails("pseudomanifold of dimension " + std::to_string(purity.dimension) +
                     " is not a cross-polytopal sphere");
    }
    return holds("pseudomanifold is the cross-polytopal sphere of dimension " + std::to_string(purity.dimension));
}

TheoremCheck verify_theorem_A(const PointCloud& cloud, ThresholdMode mode) { return verify_theorem_A(build_rips(cloud, mode)); }

TheoremCheck verify_theorem_B(const FlagComplex& k)
{
    Purity purity;
    if (auto early = require_dimension_two_plus(k, purity)) {
        return *early;
    }
    if (!is_weak_pseudomanifold(k)) {
        return vacuous("not a weak-pseudomanifold");
    }
    const ChainResult chain = decompose_iterated_chain(k);
    if (!chain) {
        return fails("weak-pseudomanifold is not an iterated chain: " + chain.reason);
    }
    const WedgeSummary w = wedge_summary(*chain.decomposition);
    const long pieces =
        static_cast<long>(w.p) - static_cast<long>(chain.decomposition->intersections.size()) + static_cast<long>(w.m);
    const BettiVector b = betti_numbers(k, Field::GF2);
    const auto n = static_cast<std::size_t>(w.n);
    const std::string summary = "m=" + std::to_string(w.m) + " p=" + std::to_string(w.p) + " b0=" + std::to_string(b[0]) +
                                " b1=" + std::to_string(b[1]) + " b" + std::to_string(n) + "=" + std::to_string(b[n]);
    if (b[n] != w.m || b[1] != w.p || b[0] != pieces) {
        return fails("Betti numbers disagree with the wedge summary: " + summary);
    }
    return holds(summary);
}

TheoremCheck verify_theorem_B(const PointCloud& cloud, ThresholdMode mode) { return verify_theorem_B(build_rips(cloud, mode)); }

TheoremCheck verify_theorem_C(const FlagComplex& k, const PointCloud* cloud)
{
    Purity purity;
    if (auto early = require_dimension_two_plus(k, purity)) {
        return *early;
    }
    if (purity.dimension != 2) {
        return vacuous("dimension is not 2");
    }
    if (!is_closed(k)) {
        return vacuous("complex is not closed");
    }
    const OctahedronCensus census = count_octahedra(k);
    const long b2 = betti_numbers(k, Field::GF2)[2];
    std::string summary = "census=" + std::to_string(census.count) + " b2=" + std::to_string(b2);
    if (census.count < 1) {
        return fails("pure closed 2-complex without an induced octahedron: " + summary);
    }
    if (static_cast<long>(census.count) != b2) {
        return fails("octahedron census differs from b2: " + summary);
    }

    auto contains = [](const std::array<int, 6>& set, int v) { return std::binary_search(set.begin(), set.end(), v); };
    const Graph& g = k.graph();
    std::map<Edge, int> triangles_on;
    for (const auto& [ridge, count] : ridge_degrees(k)) {
        triangles_on[{ridge[0], ridge[1]}] = count;
    }
    for (const Edge& e : g.edges()) {
        int copies = 0;
        for (const auto& set : census.vertex_sets) {
            copies += contains(set, e.first) && contains(set, e.second);
        }
        if (copies > 2) {
            return fails("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) + "} lies in " +
                         std::to_string(copies) + " octahedra");
        }
        if (triangles_on[e] >= 3 && copies == 0) {
            return fails("edge {" + std::to_string(e.first) + "," + std::to_string(e.second) +
                         "} has facet-degree >= 3 but lies in no octahedron");
        }
    }

    if (cloud != nullptr) {
        const auto pairs = intersecting_edge_pairs(*cloud, k);
        summary += " crossings=" + std::to_string(pairs.size());
        if (pairs.size() != 6 * census.count) {
            return fails("crossing pairs are not six per octahedron: " + summary);
        }
        for (const auto& [e1, e2] : pairs) {
            int holders = 0;
            for (const auto& set : census.vertex_sets) {
                holders += contains(set, e1.first) && contains(set, e1.second) && contains(set, e2.first) &&
                           contains(set, e2.second);
            }
            if (holders != 1) {
                return fails("crossing pair lies in " + std::to_string(holders) + " octahedra: " + summary);
            }
        }
    }
    return holds(summary);
}

TheoremCheck verify_theorem_C(const PointCloud& cloud, ThresholdMode mode)
{
    const FlagComplex k = build_rips(cloud, mode);
    return verify_theorem_C(k, &cloud);
}

namespace {

void fill_structure(ClassificationReport& r, const FlagComplex& k)
{
    r.vertex_count = k.vertex_count();
    r.edge_count = k.graph().edge_count();
    r.facet_count = k.facets().size();
    r.dimension = k.dimension();
    r.cross_polytope = detect_cross_polytope(k);
    r.census = count_octahedra(k);
    r.betti_gf2 = betti_numbers(k, Field::GF2);
    r.betti_q = betti_numbers(k, Field::Q);
    r.euler = euler_characteristic(k);
    r.chain.reason = "not applicable: requires a pure complex of dimension at least 2";
    if (r.vertex_count == 0) {
        return;
    }
    const Purity p = is_pure(k);
    r.pure = p.pure;
    if (!p.pure || p.dimension < 1) {
        return;
    }
    r.closed = is_closed(k);
    r.weak_pseudomanifold = is_weak_pseudomanifold(k);
    r.pseudomanifold = is_pseudomanifold(k);
    if (p.dimension < 2) {
        return;
    }
    r.normal_pseudomanifold = is_normal_pseudomanifold(k);
    r.chain = decompose_iterated_chain(k);
    if (r.chain) {
        r.wedge = wedge_summary(*r.chain.decomposition);
    }
}

}  // namespace

ClassificationReport classify(const FlagComplex& k, const std::string& provenance)
{
    ClassificationReport r;
    r.provenance = provenance;
    fill_structure(r, k);
    r.theorem_a = verify_theorem_A(k);
    r.theorem_b = verify_theorem_B(k);
    r.theorem_c = verify_theorem_C(k);
    return r;
}

ClassificationReport classify(const PointCloud& cloud, ThresholdMode mode, const std::string& provenance)
{
    const FlagComplex k = build_rips(cloud, mode);
    ClassificationReport r;
    r.provenance = provenance;
    r.mode = mode;
    fill_structure(r, k);
    r.crossing_pairs = intersecting_edge_pairs(cloud, k).size();
    r.theorem_a = verify_theorem_A(k);
    r.theorem_b = verify_theorem_B(k);
    r.theorem_c = verify_theorem_C(k, &cloud);
    return r;
}

std::string fnv1a_hex(std::string_view data)
{
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : data) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

}  // namespace prips
