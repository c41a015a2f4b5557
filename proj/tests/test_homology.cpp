#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "prips/errors.hpp"
#include "prips/homology.hpp"
#include "prips/obstructions.hpp"
#include "prips/rips.hpp"

using namespace prips;

namespace {

// Two octahedra glued at vertex 5.
Graph octahedra_at_a_vertex()
{
    Graph g(11);
    for (const auto& [u, v] : oracle::cocktail_party(3).edges()) {
        g.add_edge(u, v);
        g.add_edge(u + 5, v + 5);
    }
    return g;
}

// Rational Betti numbers by elimination on signed boundary rows built here.
std::vector<long> rational_betti_oracle(const Graph& g)
{
    const auto all = oracle::all_cliques(g);
    std::vector<std::vector<std::vector<int>>> by_dim;
    for (const auto& c : all) {
        if (by_dim.size() < c.size()) {
            by_dim.resize(c.size());
        }
        by_dim[c.size() - 1].push_back(c);
    }
    auto rank = [](std::vector<std::vector<Rational>> m) {
        std::size_t r = 0;
        const std::size_t cols = m.empty() ? 0 : m[0].size();
        for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
            std::size_t p = r;
            while (p < m.size() && m[p][c] == 0) {
                ++p;
            }
            if (p == m.size()) {
                continue;
            }
            std::swap(m[p], m[r]);
            for (std::size_t i = 0; i < m.size(); ++i) {
                if (i != r && m[i][c] != 0) {
                    const Rational f = m[i][c] / m[r][c];
                    for (std::size_t j = 0; j < cols; ++j) {
                        m[i][j] -= f * m[r][j];
                    }
                }
            }
            ++r;
        }
        return static_cast<long>(r);
    };
    std::vector<long> rk(by_dim.size() + 1, 0);
    for (std::size_t d = 1; d < by_dim.size(); ++d) {
        const auto& lower = by_dim[d - 1];
        std::vector<std::vector<Rational>> rows;
        for (const auto& f : by_dim[d]) {
            std::vector<Rational> row(lower.size(), Rational(0));
            for (std::size_t drop = 0; drop < f.size(); ++drop) {
                std::vector<int> face = f;
                face.erase(face.begin() + static_cast<std::ptrdiff_t>(drop));
                const auto at = std::lower_bound(lower.begin(), lower.end(), face) - lower.begin();
                row[static_cast<std::size_t>(at)] = (drop % 2 == 0) ? 1 : -1;
            }
            rows.push_back(row);
        }
        rk[d] = rank(rows);
    }
    std::vector<long> b;
    for (std::size_t d = 0; d < by_dim.size(); ++d) {
        b.push_back(static_cast<long>(by_dim[d].size()) - rk[d] - rk[d + 1]);
    }
    return b;
}

long euler_oracle(const Graph& g)
{
    long chi = 0;
    for (const auto& c : oracle::all_cliques(g)) {
        chi += (c.size() % 2 == 1) ? 1 : -1;
    }
    return chi;
}

}  // namespace

TEST_SUITE("homology")
{
    TEST_CASE("faces by dimension")
    {
        const auto oct = clique_complex(oracle::cocktail_party(3));
        CHECK(faces(oct, 2).size() == 8);
        CHECK(faces(oct, 1).size() == 12);
        CHECK(faces(oct, 0).size() == 6);
        CHECK(faces(oct, 3).empty());
        const auto f1 = faces(oct, 1);
        CHECK(std::is_sorted(f1.begin(), f1.end()));
    }

    TEST_CASE("betti numbers of small complexes")
    {
        const auto oct = clique_complex(oracle::cocktail_party(3));
        for (Field f : {Field::GF2, Field::Q}) {
            const auto b = betti_numbers(oct, f);
            CHECK(b.b == std::vector<long>{1, 0, 1});
            CHECK(b.field == f);
            const auto c = betti_numbers(clique_complex(oracle::cycle(6)), f);
            CHECK(c.b == std::vector<long>{1, 1});
        }
        CHECK(parse_field("q") == Field::Q);
        CHECK(parse_field(to_string(Field::GF2)) == Field::GF2);
        CHECK_THROWS(parse_field("z5"));
    }

    TEST_CASE("projective plane shows torsion")
    {
        const Graph g = gen_rp2_triangulation();
        REQUIRE(g.n() == 11);
        const auto k = clique_complex(g);
        // a closed surface: every vertex link is a single cycle
        CHECK(k.facets().size() == 20);
        for (int v = 0; v < g.n(); ++v) {
            const Graph l = link(k, Simplex{v}).complex.graph();
            CHECK(is_connected(l));
            for (int u = 0; u < l.n(); ++u) {
                CHECK(l.degree(u) == 2);
            }
        }
        CHECK(euler_oracle(g) == 1);
        CHECK(euler_characteristic(k) == 1);

        const auto gf2 = betti_numbers(k, Field::GF2);
        const auto q = betti_numbers(k, Field::Q);
        CHECK(gf2.b == std::vector<long>{1, 1, 1});
        CHECK(q.b == std::vector<long>{1, 0, 0});
        CHECK(oracle::gf2_betti(g) == gf2.b);
        CHECK(rational_betti_oracle(g) == q.b);
    }

    TEST_CASE("euler characteristic")
    {
        CHECK(euler_characteristic(clique_complex(oracle::cocktail_party(3))) == 2);
        CHECK(euler_characteristic(clique_complex(Graph(1))) == 1);
        CHECK(euler_characteristic(clique_complex(octahedra_at_a_vertex())) == 3);
    }

    TEST_CASE("boundary of a boundary vanishes")
    {
        std::mt19937_64 rng(8);
        for (int i = 0; i < 40; ++i) {
            const Graph g = oracle::random_graph(9, 0.6, rng);
            const auto k = clique_complex(g);
            CHECK(boundary_squares_to_zero(chain_complex<Gf2>(k)));
            CHECK(boundary_squares_to_zero(chain_complex<Rational>(k)));
        }
        CHECK(boundary_squares_to_zero(chain_complex<Rational>(clique_complex(gen_rp2_triangulation()))));
    }

    TEST_CASE("betti numbers agree with the oracles on random graphs")
    {
        std::mt19937_64 rng(31);
        for (int i = 0; i < 60; ++i) {
            const Graph g = oracle::random_graph(4 + static_cast<int>(rng() % 7), 0.55, rng);
            const auto k = clique_complex(g);
            const auto gf2 = betti_numbers(k, Field::GF2);
            const auto q = betti_numbers(k, Field::Q);
            CHECK(gf2.b == oracle::gf2_betti(g));
            CHECK(q.b == rational_betti_oracle(g));
            CHECK(gf2.alternating_sum() == euler_characteristic(k));
            CHECK(q.alternating_sum() == euler_characteristic(k));
            CHECK(euler_characteristic(k) == euler_oracle(g));
        }
    }

    TEST_CASE("exact rank")
    {
        DenseMatrix<Rational> m(3, 3);
        m << 1, 2, 3, 2, 4, 6, 1, 0, 1;
        CHECK(exact_rank(m) == 2);
        DenseMatrix<Gf2> z(2, 2);
        z << 1, 1, 1, 1;
        CHECK(exact_rank(z) == 1);
    }

    TEST_CASE("capacity bound")
    {
        // K25 has 2300 triangles
        Graph big(25);
        for (int u = 0; u < 25; ++u) {
            for (int v = u + 1; v < 25; ++v) {
                big.add_edge(u, v);
            }
        }
        CHECK_THROWS_AS(betti_numbers(clique_complex(big)), CapacityError);
    }

    TEST_CASE("minimal cycles")
    {
        CHECK(is_minimal_n_cycle(clique_complex(oracle::cocktail_party(3)), 2));
        CHECK_FALSE(is_minimal_n_cycle(clique_complex(octahedra_at_a_vertex()), 2));
        Graph tri(3);
        tri.add_edge(0, 1);
        tri.add_edge(1, 2);
        tri.add_edge(0, 2);
        CHECK_FALSE(is_minimal_n_cycle(clique_complex(tri), 2));
        CHECK(is_minimal_n_cycle(clique_complex(oracle::cycle(5)), 1));
        // the projective plane is a GF(2) 2-cycle with no proper sub-cycle
        CHECK(is_minimal_n_cycle(clique_complex(gen_rp2_triangulation()), 2));
        CHECK_THROWS_AS(is_minimal_n_cycle(clique_complex(oracle::cocktail_party(5)), 4), CapacityError);
        CHECK_THROWS_AS(is_minimal_n_cycle(clique_complex(tri), 1), PreconditionError);
    }

    TEST_CASE("octahedron count equals the second betti number on built complexes")
    {
        for (int k = 1; k <= 3; ++k) {
            const auto c = octahedron_chain_points(k);
            const auto cx = build_rips(c);
            CHECK(betti_numbers(cx, Field::GF2)[2] == static_cast<long>(count_octahedra(cx).count));
            CHECK(betti_numbers(cx, Field::Q)[2] == static_cast<long>(count_octahedra(cx).count));
        }
    }
}
