// Acceptance run: one PASS/FAIL line per criterion, each with its time limit.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.hpp"
#include "prips/campaign.hpp"
#include "prips/classify.hpp"
#include "prips/homology.hpp"
#include "prips/obstructions.hpp"
#include "prips/random.hpp"
#include "prips/realizer.hpp"
#include "prips/rips.hpp"

using namespace prips;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

class Recorder {
public:
    void expect(bool ok, const std::string& what)
    {
        if (!ok) {
            pass_ = false;
            if (!failures_.empty()) {
                failures_ += "; ";
            }
            failures_ += what;
        }
    }
    void note(const std::string& text)
    {
        if (!notes_.empty()) {
            notes_ += "; ";
        }
        notes_ += text;
    }
    Outcome outcome() const { return {pass_, pass_ ? notes_ : failures_ + (notes_.empty() ? "" : " | " + notes_)}; }

private:
    bool pass_ = true;
    std::string failures_;
    std::string notes_;
};

std::string str(const std::vector<long>& b)
{
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < b.size(); ++i) {
        os << (i ? "," : "") << b[i];
    }
    os << ')';
    return os.str();
}

Outcome octahedron_pipeline()
{
    Recorder r;
    const auto cloud = gen_cross_polytope_points(2);
    const auto k = build_rips(cloud);
    r.expect(k.vertex_count() == 6, "vertex count");
    r.expect(k.graph().edge_count() == 12, "edge count");
    r.expect(k.facets().size() == 8, "facet count");
    r.expect(detect_cross_polytope(k) == 2, "cross-polytope dimension");
    r.expect(betti_numbers(k, Field::GF2).b == std::vector<long>{1, 0, 1}, "GF(2) betti");
    r.expect(betti_numbers(k, Field::Q).b == std::vector<long>{1, 0, 1}, "Q betti");
    r.expect(count_octahedra(k).count == 1, "octahedron census");
    const auto pairs = intersecting_edge_pairs(cloud, k).size();
    r.expect(pairs == 6, "crossing pairs = " + std::to_string(pairs));
    r.note("6 vertices, 12 edges, 8 facets, b=(1,0,1), census 1, 6 crossing pairs");
    return r.outcome();
}

Outcome cross_polytope_family()
{
    Recorder r;
    for (int n = 2; n <= 5; ++n) {
        const auto cloud = gen_cross_polytope_points(n);
        const auto k = build_rips(cloud);
        const auto a = verify_theorem_A(k);
        const std::string tag = "n=" + std::to_string(n);
        r.expect(cloud.size() == static_cast<std::size_t>(2 * n + 2), tag + " vertex count");
        r.expect(a.consistent() && !a.vacuous, tag + " theorem A: " + a.detail);
        r.expect(k.facets().size() == (std::size_t{1} << (n + 1)), tag + " facet count");
        r.expect(oracle::maximal_cliques(k.graph()).size() == (std::size_t{1} << (n + 1)), tag + " oracle clique count");
        r.expect(detect_cross_polytope(k) == n, tag + " detected dimension");
        r.expect(k.dimension() == n, tag + " dimension");
    }
    r.note("n=2..5: 2n+2 points, 2^(n+1) facets, theorem A non-vacuous and consistent");
    return r.outcome();
}

void check_chain(Recorder& r, const std::string& tag, const FlagComplex& k, int m, int p)
{
    const auto b = verify_theorem_B(k);
    r.expect(b.consistent() && !b.vacuous, tag + " theorem B: " + b.detail);
    const auto chain = decompose_iterated_chain(k);
    if (!chain) {
        r.expect(false, tag + " not an iterated chain: " + chain.reason);
        return;
    }
    const auto w = wedge_summary(*chain.decomposition);
    r.expect(w.m == m && w.p == p,
             tag + " (m,p)=(" + std::to_string(w.m) + "," + std::to_string(w.p) + "), expected (" + std::to_string(m) + "," +
                 std::to_string(p) + ")");
    const auto betti = betti_numbers(k, Field::GF2);
    r.expect(betti[2] == m && betti[1] == p, tag + " betti " + str(betti.b));
}

Outcome chain_reconstruction()
{
    Recorder r;
    for (int k = 1; k <= 3; ++k) {
        check_chain(r, "chain-" + std::to_string(k), build_rips(octahedron_chain_points(k)), k, 0);
    }

    // Four octahedra in a cycle. No explicit construction is known, so the
    // cloud is searched for with the realizer under the default budget.
    RealizationProblem problem;
    problem.graph = octahedron_ring_graph(4);
    const auto found = realize(problem);
    if (found.verdict == RealizationVerdict::Certified) {
        PointCloud cloud;
        cloud.points = found.points;
        check_chain(r, "ring-4", build_rips(cloud), 4, 1);
    } else {
        std::ostringstream os;
        os << "ring-4: no cloud realizes four octahedra in a cycle (realizer inconclusive, best loss " << found.best_loss
           << ")";
        r.expect(false, os.str());
    }

    // the smallest ring with an explicit construction
    try {
        const auto ring = octahedron_ring_points(18);
        Recorder side;
        check_chain(side, "ring-18", build_rips(ring), 18, 1);
        r.note(side.outcome().pass ? "ring-18 cloud: (m,p)=(18,1), b1=1, b2=18"
                                   : "ring-18 cloud check failed: " + side.outcome().detail);
    } catch (const std::exception& e) {
        r.note(std::string("ring-18 construction failed: ") + e.what());
    }
    r.note("chains k=1..3: (k,0), b2=k, b1=0");
    return r.outcome();
}

Outcome theorem_c_census()
{
    Recorder r;
    CampaignConfig cfg;
    cfg.suite = Suite::TheoremC;
    cfg.seed = 7;
    cfg.count = 500;
    const auto report = run_campaign(cfg);
    const auto* t = report.find("theoremC");
    r.expect(t != nullptr, "theoremC tally missing");
    if (t) {
        r.expect(t->violations == 0, "violations: " + t->first_violation);
        r.expect(t->capacity == 0, "capacity skips: " + std::to_string(t->capacity));
        r.expect(t->non_vacuous > 0, "no non-vacuous case");
        r.note(std::to_string(report.random_clouds) + " random + " + std::to_string(report.injected_clouds) +
               " constructed clouds, " + std::to_string(t->non_vacuous) + " pure closed 2-complexes, 0 violations");
    }
    // the same equalities recomputed here for the constructed chains
    for (int k = 1; k <= 3; ++k) {
        const auto cloud = octahedron_chain_points(k);
        const auto cx = build_rips(cloud);
        const auto census = count_octahedra(cx).count;
        const auto pairs = intersecting_edge_pairs(cloud, cx).size();
        r.expect(static_cast<long>(census) == betti_numbers(cx)[2] && pairs == 6 * census,
                 "chain-" + std::to_string(k) + " census mismatch");
    }
    return r.outcome();
}

Outcome lemma_campaign()
{
    Recorder r;
    CampaignConfig cfg;
    cfg.suite = Suite::Lemmas;
    cfg.seed = 1;
    cfg.count = 1000;
    const auto report = run_campaign(cfg);
    for (const char* name : {"cone", "no-induced-k16", "hull-in-link", "link-component-hulls", "nondegenerate-facets"}) {
        const auto* t = report.find(name);
        if (!t) {
            r.expect(false, std::string(name) + " missing");
            continue;
        }
        r.expect(t->violations == 0, std::string(name) + ": " + t->first_violation);
        r.note(std::string(name) + " " + std::to_string(t->non_vacuous) + "/" + std::to_string(t->cases) + " non-vacuous");
    }
    r.expect(report.violations() == 0, "other lemma checks reported violations");
    return r.outcome();
}

Outcome homology_oracle()
{
    Recorder r;
    const auto rp2 = clique_complex(gen_rp2_triangulation());
    const auto gf2 = betti_numbers(rp2, Field::GF2);
    const auto q = betti_numbers(rp2, Field::Q);
    r.expect(gf2.b == std::vector<long>{1, 1, 1}, "RP2 GF(2) " + str(gf2.b));
    r.expect(q.b == std::vector<long>{1, 0, 0}, "RP2 Q " + str(q.b));
    r.expect(oracle::gf2_betti(rp2.graph()) == gf2.b, "RP2 GF(2) oracle");
    const auto oct = build_rips(gen_cross_polytope_points(2));
    r.expect(betti_numbers(oct, Field::GF2).b == std::vector<long>{1, 0, 1}, "octahedron GF(2)");
    r.expect(betti_numbers(oct, Field::Q).b == std::vector<long>{1, 0, 1}, "octahedron Q");

    std::vector<FlagComplex> all = {rp2, oct};
    for (const auto& nc : constructed_clouds()) {
        all.push_back(build_rips(nc.cloud));
    }
    for (std::uint64_t i = 0; i < 100; ++i) {
        all.push_back(build_rips(random_cloud(derive_seed(11, i))));
    }
    int checked = 0;
    for (const auto& k : all) {
        try {
            r.expect(boundary_squares_to_zero(chain_complex<Gf2>(k)), "GF(2) boundary composite nonzero");
            r.expect(boundary_squares_to_zero(chain_complex<Rational>(k)), "Q boundary composite nonzero");
            const long chi = euler_characteristic(k);
            r.expect(betti_numbers(k, Field::GF2).alternating_sum() == chi, "GF(2) Euler mismatch");
            r.expect(betti_numbers(k, Field::Q).alternating_sum() == chi, "Q Euler mismatch");
            ++checked;
        } catch (const CapacityError&) {
        }
    }
    r.note("RP2 GF(2) (1,1,1), Q (1,0,0); octahedron (1,0,1); boundary and Euler checks on " + std::to_string(checked) +
           " complexes");
    return r.outcome();
}

Outcome obstruction_detection()
{
    Recorder r;
    const Graph rp2 = gen_rp2_triangulation();
    const auto hit = find_obstruction(rp2);
    r.expect(hit && hit->id == "rp2-7", "RP2 skeleton hit");
    if (hit) {
        const Graph& pattern = gen_rp2_7();
        bool induced = hit->embedding.size() == 7;
        for (int u = 0; induced && u < 7; ++u) {
            for (int v = u + 1; induced && v < 7; ++v) {
                induced = pattern.adjacent(u, v) ==
                          rp2.adjacent(hit->embedding[static_cast<std::size_t>(u)], hit->embedding[static_cast<std::size_t>(v)]);
            }
        }
        r.expect(induced, "embedding is not induced");
    }
    r.expect(!find_obstruction(oracle::cocktail_party(3)), "K222 hit");
    for (int n = 2; n <= 5; ++n) {
        r.expect(!find_obstruction(build_udg(gen_cross_polytope_points(n))), "cross-polytope hit");
    }
    int hits = 0;
    for (std::uint64_t i = 0; i < 200; ++i) {
        hits += find_obstruction(build_udg(random_cloud(derive_seed(2024, i)))).has_value();
    }
    r.expect(hits == 0, std::to_string(hits) + " random clouds hit");
    r.note("RP2 -> rp2-7 on A..G; K222, cross-polytopes n=2..5 and 200 random clouds clean");
    return r.outcome();
}

Outcome minimality_audit()
{
    Recorder r;
    int deletions = 0;
    int certified = 0;
    for (const auto& e : builtin_catalog()) {
        RealizationProblem whole;
        whole.graph = e.graph;
        r.expect(realize(whole).verdict == RealizationVerdict::Inconclusive, e.id + " was certified");
        if (e.graph.n() > 9) {
            continue;
        }
        for (int drop = 0; drop < e.graph.n(); ++drop) {
            std::vector<int> keep;
            for (int v = 0; v < e.graph.n(); ++v) {
                if (v != drop) {
                    keep.push_back(v);
                }
            }
            RealizationProblem part;
            part.graph = e.graph.induced(keep);
            const auto o = realize(part);
            ++deletions;
            if (o.verdict == RealizationVerdict::Certified) {
                ++certified;
            } else {
                r.expect(false, e.id + " minus vertex " + std::to_string(drop) + " inconclusive");
            }
        }
    }
    r.note(std::to_string(certified) + "/" + std::to_string(deletions) +
           " one-vertex deletions certified; no catalog entry certified");
    return r.outcome();
}

Outcome gradient_check()
{
    Recorder r;
    std::mt19937_64 rng(derive_seed(9, 0));
    std::uniform_real_distribution<double> unif(0.0, 3.0);
    double worst = 0;
    for (int i = 0; i < 100; ++i) {
        const int n = 3 + static_cast<int>(rng() % 8);
        const Graph g = oracle::random_graph(n, 0.5, rng);
        const PenaltyModel model(g, 0.02);
        Eigen::VectorXd x(2 * n);
        for (int j = 0; j < 2 * n; ++j) {
            x[j] = unif(rng);
        }
        Eigen::VectorXd grad;
        penalty(model, x, &grad);
        Eigen::VectorXd fd(2 * n);
        const double h = 1e-6;
        for (int j = 0; j < 2 * n; ++j) {
            Eigen::VectorXd xp = x, xm = x;
            xp[j] += h;
            xm[j] -= h;
            fd[j] = (penalty(model, xp) - penalty(model, xm)) / (2 * h);
        }
        const double rel = (grad - fd).norm() / std::max(grad.norm(), 1e-8);
        worst = std::max(worst, rel);
    }
    r.expect(worst < 1e-6, "worst relative error " + std::to_string(worst));
    std::ostringstream os;
    os << "100 configurations, worst relative error " << worst;
    r.note(os.str());
    return r.outcome();
}

Outcome minimal_cycle_check()
{
    Recorder r;
    r.expect(is_minimal_n_cycle(build_rips(gen_cross_polytope_points(2)), 2), "octahedron");
    r.expect(!is_minimal_n_cycle(build_rips(octahedron_chain_points(2)), 2), "2-octahedron chain");
    Graph tri(3);
    tri.add_edge(0, 1);
    tri.add_edge(1, 2);
    tri.add_edge(0, 2);
    r.expect(!is_minimal_n_cycle(clique_complex(tri), 2), "single facet");
    r.note("octahedron true; chain and single facet false");
    return r.outcome();
}

struct Criterion {
    int id;
    const char* name;
    double limit_seconds;  // 0 = no limit
    std::function<Outcome()> run;
};

}  // namespace

int main()
{
    const std::vector<Criterion> criteria = {
        {1, "octahedron pipeline", 1, octahedron_pipeline},
        {2, "cross-polytope family", 5, cross_polytope_family},
        {3, "chain reconstruction", 10, chain_reconstruction},
        {4, "octahedron census campaign", 60, theorem_c_census},
        {5, "lemma property campaign", 120, lemma_campaign},
        {6, "homology oracle", 0, homology_oracle},
        {7, "obstruction detection", 30, obstruction_detection},
        {8, "minimality audit", 600, minimality_audit},
        {9, "realizer gradient check", 0, gradient_check},
        {10, "minimal-cycle check", 5, minimal_cycle_check},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        if (c.limit_seconds > 0 && secs > c.limit_seconds) {
            o.pass = false;
            o.detail += " | time limit exceeded";
        }
        failed += o.pass ? 0 : 1;
        char limit[32] = "none";
        if (c.limit_seconds > 0) {
            std::snprintf(limit, sizeof limit, "%g s", c.limit_seconds);
        }
        std::printf("%s %2d %-28s %8.3f s (limit %s)  %s\n", o.pass ? "PASS" : "FAIL", c.id, c.name, secs, limit,
                    o.detail.c_str());
        std::fflush(stdout);
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
    return failed == 0 ? 0 : 1;
}
