#include <doctest.h>

#include <numeric>
#include <random>

#include "oracles.hpp"
#include "prips/obstructions.hpp"
#include "prips/rips.hpp"

using namespace prips;

namespace {

Graph complete(int n)
{
    Graph g(n);
    for (int u = 0; u < n; ++u) {
        for (int v = u + 1; v < n; ++v) {
            g.add_edge(u, v);
        }
    }
    return g;
}

int vertex_of(const Graph& g, const std::string& label)
{
    for (int v = 0; v < g.n(); ++v) {
        if (g.label(v) == label) {
            return v;
        }
    }
    return -1;
}

bool adjacent(const Graph& g, const char* a, const char* b) { return g.adjacent(vertex_of(g, a), vertex_of(g, b)); }

// Some relabelling puts every edge of `sub` on an edge of `super`.
bool spanning_subgraph(const Graph& sub, const Graph& super)
{
    std::vector<int> p(static_cast<std::size_t>(sub.n()));
    std::iota(p.begin(), p.end(), 0);
    do {
        bool ok = true;
        for (const auto& [u, v] : sub.edges()) {
            ok = ok && super.adjacent(p[static_cast<std::size_t>(u)], p[static_cast<std::size_t>(v)]);
        }
        if (ok) {
            return true;
        }
    } while (std::next_permutation(p.begin(), p.end()));
    return false;
}

bool maps_induced(const Graph& pattern, const Graph& host, const std::vector<int>& m)
{
    for (int u = 0; u < pattern.n(); ++u) {
        for (int v = u + 1; v < pattern.n(); ++v) {
            if (pattern.adjacent(u, v) != host.adjacent(m[static_cast<std::size_t>(u)], m[static_cast<std::size_t>(v)])) {
                return false;
            }
        }
    }
    return true;
}

const CatalogEntry& entry(const std::string& id)
{
    for (const auto& e : builtin_catalog()) {
        if (e.id == id) {
            return e;
        }
    }
    throw std::out_of_range(id);
}

}  // namespace

TEST_SUITE("obstructions")
{
    TEST_CASE("family generators")
    {
        const Graph k16 = gen_k16();
        CHECK(k16.n() == 7);
        CHECK(k16.edge_count() == 6);

        for (int k = 1; k <= 4; ++k) {
            const Graph g = gen_complement_k2_plus_odd_cycle(k);
            const int n = 2 * k + 3;
            CHECK(g.n() == n);
            CHECK(g.edge_count() == static_cast<std::size_t>(n * (n - 1) / 2 - (2 * k + 2)));
            // complement of the disjoint union of K2 and the odd cycle
            Graph h = oracle::cycle(2 * k + 1);
            Graph u(n);
            u.add_edge(0, 1);
            for (const auto& [a, b] : h.edges()) {
                u.add_edge(a + 2, b + 2);
            }
            CHECK(g == u.complement());
        }
        CHECK(gen_complement_k2_plus_odd_cycle(1).edge_count() == 6);
        CHECK(oracle::isomorphic(gen_complement_k2_plus_odd_cycle(1), [] {
            Graph k23(5);
            for (int a : {0, 1}) {
                for (int b : {2, 3, 4}) {
                    k23.add_edge(a, b);
                }
            }
            return k23;
        }()));
        CHECK(gen_complement_k2_plus_odd_cycle(2).edge_count() == 15);

        for (int k = 4; k <= 6; ++k) {
            const Graph g = gen_complement_even_cycle(k);
            CHECK(g.n() == 2 * k);
            for (int v = 0; v < g.n(); ++v) {
                CHECK(g.degree(v) == 2 * k - 3);
            }
            CHECK(g == oracle::cycle(2 * k).complement());

            const Graph c = gen_cstar(k);
            CHECK(c.n() == 2 * k);
            CHECK(c.edge_count() == static_cast<std::size_t>(2 * k + k * (k - 1)));
            for (int v = 0; v < c.n(); ++v) {
                CHECK(c.degree(v) == 2 + (k - 1));
            }
        }
        CHECK_THROWS_AS(gen_complement_k2_plus_odd_cycle(0), PreconditionError);
        CHECK_THROWS_AS(gen_complement_even_cycle(3), PreconditionError);
        CHECK_THROWS_AS(gen_cstar(3), PreconditionError);
    }

    TEST_CASE("the smallest starred cycle coincides with the complement of C8")
    {
        // non-neighbours of i in C*_8 are i + 3 and i - 3, a single 8-cycle
        CHECK(oracle::isomorphic(gen_cstar(4), gen_complement_even_cycle(4)));
        CHECK_FALSE(oracle::isomorphic(gen_cstar(5).complement(), oracle::cycle(10)));
    }

    TEST_CASE("projective plane graph matches the stated adjacencies")
    {
        const Graph g = gen_rp2_7();
        CHECK(g.n() == 7);
        CHECK(g.edge_count() == 13);
        for (const char* v : {"B", "D", "E", "F", "G"}) {
            CHECK(adjacent(g, "A", v));
        }
        CHECK_FALSE(adjacent(g, "A", "C"));
        CHECK_FALSE(adjacent(g, "E", "B"));
        CHECK_FALSE(adjacent(g, "C", "F"));
        CHECK_FALSE(adjacent(g, "F", "G"));

        const Graph rp2 = gen_rp2_triangulation();
        CHECK(rp2.n() == 11);
        CHECK(rp2.edge_count() == 30);
        const std::vector<int> first7 = {0, 1, 2, 3, 4, 5, 6};
        CHECK(rp2.induced(first7) == g);
    }

    TEST_CASE("catalog contents")
    {
        const auto& cat = builtin_catalog();
        REQUIRE(cat.size() == 7);
        CHECK(cat.front().id == "rp2-7");
        CHECK(entry("rp2-7").graph.edge_count() == 13);
        CHECK(entry("k16").graph == gen_k16());
        CHECK(entry("k16").status == EntryStatus::ForbiddenNotNecessarilyMinimal);
        CHECK(entry("comp-k2-c3").graph == gen_complement_k2_plus_odd_cycle(1));
        CHECK(entry("comp-k2-c5").graph == gen_complement_k2_plus_odd_cycle(2));
        CHECK(entry("comp-c8").graph == gen_complement_even_cycle(4));
        CHECK(entry("comp-c10").graph == gen_complement_even_cycle(5));
        CHECK(entry("cstar-8").graph == gen_cstar(4));
        for (const auto& e : cat) {
            CHECK(is_connected(e.graph));
            CHECK_FALSE(e.provenance.empty());
        }
        CHECK(parse_entry_status(to_string(EntryStatus::ProvenMinimal)) == EntryStatus::ProvenMinimal);
        CHECK_THROWS_AS(parse_entry_status("maybe"), PreconditionError);
    }

    TEST_CASE("merged catalogs")
    {
        CatalogEntry extra{"wheel-extra", gen_k16(), "test", EntryStatus::ProvenMinimal};
        const std::vector<CatalogEntry> extras = {extra};
        const auto merged = merged_catalog(extras);
        CHECK(merged.size() == builtin_catalog().size() + 1);
        CHECK(merged.back().id == "wheel-extra");
        extra.id = "k16";
        const std::vector<CatalogEntry> dup = {extra};
        CHECK_THROWS_AS(merged_catalog(dup), PreconditionError);
    }

    TEST_CASE("obstruction search examples")
    {
        const auto c8 = find_obstruction(gen_complement_even_cycle(4));
        REQUIRE(c8);
        CHECK(c8->id == "comp-c8");
        CHECK(c8->embedding == std::vector<int>{0, 1, 2, 3, 4, 5, 6, 7});

        CHECK_FALSE(find_obstruction(oracle::cocktail_party(3)));

        const Graph rp2 = gen_rp2_triangulation();
        const auto hit = find_obstruction(rp2);
        REQUIRE(hit);
        CHECK(hit->id == "rp2-7");
        std::vector<std::string> labels;
        for (int v : hit->embedding) {
            labels.push_back(rp2.label(v));
        }
        CHECK(labels == std::vector<std::string>{"A", "B", "C", "D", "E", "F", "G"});
    }

    TEST_CASE("no other catalog entry sits inside the projective plane")
    {
        const Graph rp2 = gen_rp2_triangulation();
        for (const auto& e : builtin_catalog()) {
            CHECK(oracle::has_induced_copy(e.graph, rp2) == (e.id == "rp2-7"));
        }
    }

    TEST_CASE("induced embeddings agree with brute force")
    {
        std::mt19937_64 rng(41);
        for (int i = 0; i < 300; ++i) {
            const Graph pattern = oracle::random_graph(3 + static_cast<int>(rng() % 3), 0.5, rng);
            const Graph host = oracle::random_graph(5 + static_cast<int>(rng() % 5), 0.5, rng);
            const auto m = find_induced_embedding(pattern, host);
            CHECK(m.has_value() == oracle::has_induced_copy(pattern, host));
            if (m) {
                CHECK(maps_induced(pattern, host, *m));
            }
        }
    }

    TEST_CASE("induced star search")
    {
        const auto hit = contains_induced_k16(gen_k16());
        REQUIRE(hit);
        CHECK(hit->size() == 7);
        CHECK_FALSE(contains_induced_k16(complete(7)));
        Graph wheel(7);
        for (int i = 1; i <= 6; ++i) {
            wheel.add_edge(0, i);
            wheel.add_edge(i, i % 6 + 1);
        }
        CHECK_FALSE(contains_induced_k16(wheel));
        std::mt19937_64 rng(2);
        for (int i = 0; i < 200; ++i) {
            const Graph g = oracle::random_graph(9, 0.3, rng);
            CHECK(contains_induced_k16(g).has_value() == oracle::has_induced_copy(gen_k16(), g));
        }
    }

    TEST_CASE("obstruction-freeness is hereditary")
    {
        std::mt19937_64 rng(19);
        int free_graphs = 0;
        for (int i = 0; i < 60; ++i) {
            const Graph g = oracle::random_graph(8 + static_cast<int>(rng() % 3), 0.5, rng);
            if (find_obstruction(g)) {
                continue;
            }
            ++free_graphs;
            for (int drop = 0; drop < g.n(); ++drop) {
                std::vector<int> keep;
                for (int v = 0; v < g.n(); ++v) {
                    if (v != drop) {
                        keep.push_back(v);
                    }
                }
                CHECK_FALSE(find_obstruction(g.induced(keep)));
            }
        }
        CHECK(free_graphs > 0);
    }

    TEST_CASE("unit disk graphs contain no catalog entry")
    {
        for (int n = 2; n <= 5; ++n) {
            CHECK_FALSE(find_obstruction(build_udg(gen_cross_polytope_points(n))));
        }
        CHECK_FALSE(find_obstruction(build_udg(octahedron_chain_points(3))));
    }

    TEST_CASE("edge deletion from one obstruction reaches another")
    {
        // deleting two edges of complement(K2 + C5) leaves the projective
        // plane graph, which is still an obstruction
        CHECK(spanning_subgraph(gen_rp2_7(), gen_complement_k2_plus_odd_cycle(2)));
        CHECK_FALSE(oracle::has_induced_copy(gen_rp2_7(), gen_complement_k2_plus_odd_cycle(2)));
        CHECK(find_obstruction(gen_rp2_7())->id == "rp2-7");
        CHECK(find_obstruction(gen_complement_k2_plus_odd_cycle(2))->id == "comp-k2-c5");
    }
}
