#include "prips/campaign.hpp"

#include <functional>
#include <set>

#include "prips/classify.hpp"
#include "prips/errors.hpp"
#include "prips/lemmas.hpp"
#include "prips/random.hpp"

namespace prips {

PointCloud random_cloud(std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> size(4, 30);
    std::uniform_int_distribution<int> coord(0, 3000);
    const int n = size(rng);
    std::set<std::pair<int, int>> seen;
    PointCloud cloud;
    for (int i = 0; i < n; ++i) {
        const int x = coord(rng);
        const int y = coord(rng);
        if (seen.emplace(x, y).second) {
            cloud.points.emplace_back(Rational(x, 1000), Rational(y, 1000));
        }
    }
    return cloud;
}

PointCloud rotate_translate(const PointCloud& cloud, const Point2& shift)
{
    const Rational c(3, 5);
    const Rational s(4, 5);
    PointCloud out;
    out.scale = cloud.scale;
    for (const auto& p : cloud.points) {
        out.points.emplace_back(c * p.x() - s * p.y() + shift.x(), s * p.x() + c * p.y() + shift.y());
    }
    return out;
}

std::vector<NamedCloud> constructed_clouds()
{
    std::vector<NamedCloud> out;
    for (int n = 2; n <= 4; ++n) {
        out.push_back({"cross-polytope-" + std::to_string(n), gen_cross_polytope_points(n)});
    }
    for (int k = 1; k <= 3; ++k) {
        out.push_back({"chain-" + std::to_string(k), octahedron_chain_points(k)});
    }
    out.push_back({"ring-18", octahedron_ring_points(18)});
    out.push_back({"cross-polytope-2-moved", rotate_translate(gen_cross_polytope_points(2), make_point("7/3", "-5/2"))});
    out.push_back({"chain-2-moved", rotate_translate(octahedron_chain_points(2), make_point("1/7", "2"))});

    PointCloud pair = gen_cross_polytope_points(2);
    for (const auto& p : gen_cross_polytope_points(2).points) {
        pair.points.emplace_back(p.x() + 10, p.y());
    }
    out.push_back({"two-octahedra", std::move(pair)});
    return out;
}

const char* to_string(Suite suite)
{
    switch (suite) {
    case Suite::Lemmas:
        return "lemmas";
    case Suite::TheoremA:
        return "theoremA";
    case Suite::TheoremB:
        return "theoremB";
    case Suite::TheoremC:
        return "theoremC";
    case Suite::All:
        return "all";
    }
    return "all";
}

Suite parse_suite(std::string_view text)
{
    for (Suite s : {Suite::Lemmas, Suite::TheoremA, Suite::TheoremB, Suite::TheoremC, Suite::All}) {
        if (text == to_string(s)) {
            return s;
        }
    }
    throw PreconditionError("unknown suite '" + std::string(text) + "'");
}

std::size_t CampaignReport::violations() const
{
    std::size_t total = 0;
    for (const auto& c : checks) {
        total += c.violations;
    }
    return total;
}

std::size_t CampaignReport::capacity_skips() const
{
    std::size_t total = 0;
    for (const auto& c : checks) {
        total += c.capacity;
    }
    return total;
}

const CheckTally* CampaignReport::find(std::string_view name) const
{
    for (const auto& c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

namespace {

struct CloudView {
    const std::string& name;
    const PointCloud& cloud;
    const FlagComplex& k;
    ThresholdMode mode;
};

using CheckFn = std::function<LemmaResult(const CloudView&)>;

struct Check {
    std::string name;
    CheckFn run;
};

LemmaResult from_theorem(const TheoremCheck& t)
{
    LemmaResult r;
    r.applicable = !t.vacuous;
    if (!t.consistent()) {
        r.violation = t.detail;
    }
    return r;
}

std::vector<Check> lemma_checks()
{
    return {
        {"cone", [](const CloudView& v) { return check_cone(v.cloud, v.k.graph()); }},
        {"no-induced-k16", [](const CloudView& v) { return check_no_induced_k16(v.k.graph()); }},
        {"hull-in-link", [](const CloudView& v) { return check_hull_in_link(v.cloud, v.k.graph()); }},
        {"link-component-hulls", [](const CloudView& v) { return check_link_component_hulls(v.cloud, v.k.graph()); }},
        {"nondegenerate-facets", [](const CloudView& v) { return check_nondegenerate_facets(v.cloud, v.k); }},
        {"link-strong-components", [](const CloudView& v) { return check_link_strong_components(v.k); }},
        {"boundary-full-contact", [](const CloudView& v) { return check_boundary_full_contact(v.cloud, v.k); }},
        {"gamma2-obtuse", [](const CloudView& v) { return check_gamma2_obtuse(v.cloud, v.k); }},
        {"census-pairs", [](const CloudView& v) { return check_census_pairs(v.cloud, v.k); }},
    };
}

std::vector<Check> checks_for(Suite suite)
{
    std::vector<Check> out;
    if (suite == Suite::Lemmas || suite == Suite::All) {
        out = lemma_checks();
    }
    if (suite == Suite::TheoremA || suite == Suite::All) {
        out.push_back({"theoremA", [](const CloudView& v) { return from_theorem(verify_theorem_A(v.k)); }});
    }
    if (suite == Suite::TheoremB || suite == Suite::All) {
        out.push_back({"theoremB", [](const CloudView& v) { return from_theorem(verify_theorem_B(v.k)); }});
    }
    if (suite == Suite::TheoremC || suite == Suite::All) {
        out.push_back({"theoremC", [](const CloudView& v) { return from_theorem(verify_theorem_C(v.k, &v.cloud)); }});
    }
    return out;
}

void run_one(const std::vector<Check>& checks, std::vector<CheckTally>& tallies, const std::string& name,
             const PointCloud& cloud, ThresholdMode mode)
{
    const FlagComplex k = build_rips(cloud, mode);
    const CloudView view{name, cloud, k, mode};
    for (std::size_t i = 0; i < checks.size(); ++i) {
        CheckTally& t = tallies[i];
        ++t.cases;
        try {
            const LemmaResult r = checks[i].run(view);
            t.non_vacuous += r.applicable ? 1 : 0;
            if (r.violation) {
                if (t.violations == 0) {
                    t.first_violation = name + ": " + *r.violation;
                }
                ++t.violations;
            }
        } catch (const CapacityError&) {
            ++t.capacity;
        }
    }
}

}  // namespace

CampaignReport run_campaign(const CampaignConfig& config)
{
    if (config.count < 0) {
        throw PreconditionError("campaign count must be non-negative");
    }
    const auto checks = checks_for(config.suite);
    CampaignReport report;
    report.config = config;
    for (const auto& c : checks) {
        CheckTally t;
        t.name = c.name;
        report.checks.push_back(std::move(t));
    }
    for (int i = 0; i < config.count; ++i) {
        const PointCloud cloud = random_cloud(derive_seed(config.seed, static_cast<std::uint64_t>(i)));
        run_one(checks, report.checks, "random-" + std::to_string(i), cloud, config.mode);
        ++report.random_clouds;
    }
    if (config.inject) {
        for (const auto& nc : constructed_clouds()) {
            run_one(checks, report.checks, nc.name, nc.cloud, config.mode);
            ++report.injected_clouds;
        }
    }
    return report;
}

Json campaign_to_json(const CampaignReport& report)
{
    Json j;
    j["suite"] = to_string(report.config.suite);
    j["seed"] = report.config.seed;
    j["count"] = report.config.count;
    j["mode"] = to_string(report.config.mode);
    j["random_clouds"] = report.random_clouds;
    j["injected_clouds"] = report.injected_clouds;
    Json checks = Json::array();
    for (const auto& c : report.checks) {
        Json t;
        t["name"] = c.name;
        t["cases"] = c.cases;
        t["non_vacuous"] = c.non_vacuous;
        t["violations"] = c.violations;
        t["capacity_skips"] = c.capacity;
        t["first_violation"] = c.violations ? Json(c.first_violation) : Json(nullptr);
        checks.push_back(std::move(t));
    }
    j["checks"] = std::move(checks);
    j["violations"] = report.violations();
    return j;
}

}  // namespace prips
