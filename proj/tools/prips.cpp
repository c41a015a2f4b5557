// Command-line front end: build, classify, verify, homology, obstruct,
// realize, catalog.
//
// Exit codes: 0 success / consistent / none found / certified,
// 1 obstruction found / inconclusive, 2 counterexample, 3 capacity,
// 4 usage or input error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "prips/campaign.hpp"
#include "prips/classify.hpp"
#include "prips/errors.hpp"
#include "prips/homology.hpp"
#include "prips/io.hpp"
#include "prips/obstructions.hpp"
#include "prips/realizer.hpp"
#include "prips/rips.hpp"

namespace {

using namespace prips;

constexpr int kExitUsage = 4;

struct Options {
    std::string input;
    std::string mode = "strict";
    std::string field = "gf2";
    std::uint64_t seed = 0;
    int count = 100;
    std::string budget = "200x2000";
    std::string margin = "1/100";
    std::string catalog;
    std::string out;
    std::string format = "json";
    std::string suite;
    std::string action;
};

// What an input file turned out to be.
struct Loaded {
    std::optional<PointCloud> cloud;
    FlagComplex complex;
    std::string text;
};

bool looks_like_json(const std::string& path, const std::string& text)
{
    if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) {
        return true;
    }
    const auto first = text.find_first_not_of(" \t\r\n");
    return first != std::string::npos && (text[first] == '{' || text[first] == '[');
}

Loaded load_input(const std::string& path, ThresholdMode mode)
{
    Loaded in;
    in.text = read_file(path);
    if (looks_like_json(path, in.text)) {
        const Json j = parse_json(in.text, path);
        if (j.is_object() && j.contains("points")) {
            in.cloud = points_from_json(j);
            in.complex = build_rips(*in.cloud, mode);
        } else {
            in.complex = complex_from_json(j);
        }
        return in;
    }
    std::istringstream stream(in.text);
    in.cloud = read_points_csv(stream);
    in.complex = build_rips(*in.cloud, mode);
    return in;
}

void emit(const Options& opt, const std::string& text)
{
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opt.out, std::ios::binary);
    if (!file) {
        throw ParseError("cannot write " + opt.out);
    }
    file << text;
}

std::string join(const std::vector<long>& v)
{
    std::string s;
    for (std::size_t i = 0; i < v.size(); ++i) {
        s += (i ? " " : "") + std::to_string(v[i]);
    }
    return s;
}

std::string report_text(const ClassificationReport& r)
{
    std::ostringstream os;
    auto flag = [](const std::optional<bool>& b) { return b ? (*b ? "true" : "false") : "n/a"; };
    os << "provenance: " << r.provenance << '\n';
    os << "mode: " << (r.mode ? to_string(*r.mode) : "n/a") << '\n';
    os << "vertices: " << r.vertex_count << "\nedges: " << r.edge_count << "\nfacets: " << r.facet_count << '\n';
    os << "dimension: " << r.dimension << "\npure: " << (r.pure ? "true" : "false") << '\n';
    os << "closed: " << flag(r.closed) << "\nweak_pseudomanifold: " << flag(r.weak_pseudomanifold) << '\n';
    os << "pseudomanifold: " << flag(r.pseudomanifold) << "\nnormal_pseudomanifold: " << flag(r.normal_pseudomanifold)
       << '\n';
    os << "cross_polytope: " << (r.cross_polytope ? std::to_string(*r.cross_polytope) : "none") << '\n';
    if (r.wedge) {
        os << "wedge: m=" << r.wedge->m << " p=" << r.wedge->p << " n=" << r.wedge->n << '\n';
    } else {
        os << "wedge: none (" << r.chain.reason << ")\n";
    }
    os << "census: " << r.census.count << '\n';
    os << "betti_gf2: " << join(r.betti_gf2.b) << "\nbetti_q: " << join(r.betti_q.b) << '\n';
    os << "euler: " << r.euler << '\n';
    if (r.crossing_pairs) {
        os << "crossing_pairs: " << *r.crossing_pairs << '\n';
    }
    const std::pair<const char*, const TheoremCheck*> checks[] = {
        {"A", &r.theorem_a}, {"B", &r.theorem_b}, {"C", &r.theorem_c}};
    for (const auto& [name, t] : checks) {
        os << "theorem_" << name << ": " << (t->consistent() ? "consistent" : "counterexample")
           << (t->vacuous ? " (vacuous)" : "") << (t->detail.empty() ? "" : " - " + t->detail) << '\n';
    }
    return os.str();
}

std::pair<int, int> parse_budget(const std::string& text)
{
    const auto x = text.find('x');
    try {
        if (x != std::string::npos) {
            return {std::stoi(text.substr(0, x)), std::stoi(text.substr(x + 1))};
        }
    } catch (const std::exception&) {
    }
    throw ParseError("budget must look like RESTARTSxITERATIONS, got '" + text + "'");
}

std::vector<CatalogEntry> load_catalog(const Options& opt)
{
    if (opt.catalog.empty()) {
        return builtin_catalog();
    }
    const auto extras = catalog_from_json(parse_json(read_file(opt.catalog), opt.catalog));
    return merged_catalog(extras);
}

int cmd_build(const Options& opt)
{
    const ThresholdMode mode = parse_threshold_mode(opt.mode);
    const PointCloud cloud = load_points(opt.input);
    emit(opt, dump(complex_to_json(build_rips(cloud, mode), mode)));
    return 0;
}

int cmd_classify(const Options& opt)
{
    const ThresholdMode mode = parse_threshold_mode(opt.mode);
    const Loaded in = load_input(opt.input, mode);
    const std::string prov = "fnv1a:" + fnv1a_hex(in.text);
    const ClassificationReport r = in.cloud ? classify(*in.cloud, mode, prov) : classify(in.complex, prov);
    emit(opt, opt.format == "text" ? report_text(r) : dump(report_to_json(r)));
    return 0;
}

int cmd_verify(const Options& opt)
{
    CampaignConfig config;
    config.suite = parse_suite(opt.suite);
    config.seed = opt.seed;
    config.count = opt.count;
    config.mode = parse_threshold_mode(opt.mode);
    const CampaignReport report = run_campaign(config);
    if (opt.format == "text") {
        std::ostringstream os;
        os << "suite " << to_string(config.suite) << " seed " << config.seed << " random " << report.random_clouds
           << " injected " << report.injected_clouds << '\n';
        for (const auto& c : report.checks) {
            os << c.name << ": cases " << c.cases << " non-vacuous " << c.non_vacuous << " violations " << c.violations
               << " capacity " << c.capacity << (c.violations ? " first: " + c.first_violation : "") << '\n';
        }
        emit(opt, os.str());
    } else {
        emit(opt, dump(campaign_to_json(report)));
    }
    if (report.violations() > 0) {
        return 2;
    }
    return report.capacity_skips() > 0 ? 3 : 0;
}

int cmd_homology(const Options& opt)
{
    const Loaded in = load_input(opt.input, parse_threshold_mode(opt.mode));
    const BettiVector b = betti_numbers(in.complex, parse_field(opt.field));
    emit(opt, opt.format == "text" ? join(b.b) + "\n" : dump(betti_to_json(b)));
    return 0;
}

int cmd_obstruct(const Options& opt)
{
    const auto catalog = load_catalog(opt);
    const std::string text = read_file(opt.input);
    Graph g;
    const bool graph_json = looks_like_json(opt.input, text) && [&] {
        const Json j = parse_json(text, opt.input);
        return j.is_object() && !j.contains("points");
    }();
    if (graph_json) {
        g = graph_from_json(parse_json(text, opt.input));
    } else {
        g = load_input(opt.input, parse_threshold_mode(opt.mode)).complex.graph();
    }
    const auto hit = find_obstruction(g, catalog);
    Json j;
    j["found"] = hit.has_value();
    if (hit) {
        j["id"] = hit->id;
        j["embedding"] = hit->embedding;
        std::vector<std::string> labels;
        for (int v : hit->embedding) {
            labels.push_back(g.label(v));
        }
        j["embedding_labels"] = labels;
    }
    if (opt.format == "text") {
        emit(opt, hit ? hit->id + "\n" : std::string("none\n"));
    } else {
        emit(opt, dump(j));
    }
    return hit ? 1 : 0;
}

int cmd_realize(const Options& opt)
{
    RealizationProblem p;
    p.graph = graph_from_json(parse_json(read_file(opt.input), opt.input));
    try {
        p.epsilon = parse_rational(opt.margin);
    } catch (const std::invalid_argument& e) {
        throw ParseError(std::string("--margin: ") + e.what());
    }
    std::tie(p.restarts, p.iterations) = parse_budget(opt.budget);
    p.seed = opt.seed;
    const RealizationOutcome o = realize(p);
    Json j;
    j["seed"] = opt.seed;
    j["margin"] = to_string(p.epsilon);
    j["budget"] = {{"restarts", p.restarts}, {"iterations", p.iterations}};
    const Json body = outcome_to_json(o);
    for (auto it = body.begin(); it != body.end(); ++it) {
        j[it.key()] = *it;
    }
    if (opt.format == "text") {
        emit(opt, std::string(to_string(o.verdict)) + "\n");
    } else {
        emit(opt, dump(j));
    }
    return o.verdict == RealizationVerdict::Certified ? 0 : 1;
}

int cmd_catalog(const Options& opt)
{
    const auto catalog = load_catalog(opt);
    if (opt.action == "export") {
        emit(opt, dump(catalog_to_json(catalog)));
        return 0;
    }
    std::ostringstream os;
    for (const auto& e : catalog) {
        os << e.id << "  n=" << e.graph.n() << " edges=" << e.graph.edge_count() << " " << to_string(e.status) << "  "
           << e.provenance << '\n';
    }
    emit(opt, os.str());
    return 0;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Planar Rips complexes: construction, classification and obstructions"};
    app.require_subcommand(1);
    Options opt;

    auto add_mode = [&](CLI::App* c) {
        c->add_option("--mode", opt.mode, "threshold: strict (d < r) or atmost (d <= r)")
            ->check(CLI::IsMember({"strict", "atmost"}));
    };
    auto add_out = [&](CLI::App* c) {
        c->add_option("--out", opt.out, "write to this file instead of stdout");
        c->add_option("--format", opt.format, "json or text")->check(CLI::IsMember({"json", "text"}));
    };

    auto* build = app.add_subcommand("build", "points file -> complex JSON");
    build->add_option("points", opt.input)->required();
    add_mode(build);
    add_out(build);

    auto* cls = app.add_subcommand("classify", "points file or complex JSON -> report");
    cls->add_option("input", opt.input)->required();
    add_mode(cls);
    add_out(cls);

    auto* verify = app.add_subcommand("verify", "seeded property campaign");
    verify->add_option("suite", opt.suite)->required()->check(
        CLI::IsMember({"lemmas", "theoremA", "theoremB", "theoremC", "all"}));
    verify->add_option("--seed", opt.seed);
    verify->add_option("--count", opt.count)->check(CLI::NonNegativeNumber);
    add_mode(verify);
    add_out(verify);

    auto* hom = app.add_subcommand("homology", "Betti numbers of a complex");
    hom->add_option("input", opt.input)->required();
    hom->add_option("--field", opt.field)->check(CLI::IsMember({"gf2", "q"}));
    add_mode(hom);
    add_out(hom);

    auto* obs = app.add_subcommand("obstruct", "search a graph for catalog obstructions");
    obs->add_option("input", opt.input)->required();
    obs->add_option("--catalog", opt.catalog, "extra catalog entries (JSON)");
    add_mode(obs);
    add_out(obs);

    auto* rea = app.add_subcommand("realize", "search for a unit disk realization");
    rea->add_option("graph", opt.input)->required();
    rea->add_option("--seed", opt.seed);
    rea->add_option("--budget", opt.budget, "RESTARTSxITERATIONS");
    rea->add_option("--margin", opt.margin, "certified margin, rational in (0, 1/2)");
    add_out(rea);

    auto* cat = app.add_subcommand("catalog", "list or export the obstruction catalog");
    cat->add_option("action", opt.action)->required()->check(CLI::IsMember({"list", "export"}));
    cat->add_option("--catalog", opt.catalog, "extra catalog entries (JSON)");
    add_out(cat);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        if (*build) return cmd_build(opt);
        if (*cls) return cmd_classify(opt);
        if (*verify) return cmd_verify(opt);
        if (*hom) return cmd_homology(opt);
        if (*obs) return cmd_obstruct(opt);
        if (*rea) return cmd_realize(opt);
        if (*cat) return cmd_catalog(opt);
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}
