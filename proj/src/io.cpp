#include "prips/io.hpp"

#include <fstream>
#include <istream>
#include <sstream>

#include "prips/errors.hpp"

namespace prips {

namespace {

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r");
    return s.substr(first, last - first + 1);
}

Rational rational_from_json(const Json& j, const std::string& where)
{
    try {
        if (j.is_string()) {
            return parse_rational(j.get<std::string>());
        }
        if (j.is_number()) {
            return parse_rational(j.dump());
        }
    } catch (const std::invalid_argument& e) {
        throw ParseError(where + ": " + e.what());
    }
    throw ParseError(where + ": expected a number or a numeric string");
}

template <typename T>
Json optional_json(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

Json theorem_json(const TheoremCheck& t)
{
    Json j;
    j["verdict"] = t.consistent() ? "consistent" : "counterexample";
    j["vacuous"] = t.vacuous;
    j["detail"] = t.detail;
    return j;
}

}  // namespace

PointCloud read_points_csv(std::istream& in)
{
    PointCloud cloud;
    std::string line;
    int line_no = 0;
    bool header_seen = false;
    while (std::getline(in, line)) {
        ++line_no;
        const std::string_view text = trim(line);
        if (text.empty() || text.front() == '#') {
            continue;
        }
        const auto comma = text.find(',');
        if (comma == std::string_view::npos || text.find(',', comma + 1) != std::string_view::npos) {
            throw ParseError("line " + std::to_string(line_no) + ": expected two comma-separated fields");
        }
        const std::string_view x = trim(text.substr(0, comma));
        const std::string_view y = trim(text.substr(comma + 1));
        if (!header_seen) {
            header_seen = true;
            if (x == "x" && y == "y") {
                continue;
            }
        }
        try {
            cloud.points.emplace_back(parse_rational(x), parse_rational(y));
        } catch (const std::invalid_argument& e) {
            throw ParseError("line " + std::to_string(line_no) + ": " + e.what());
        }
    }
    if (cloud.points.empty()) {
        throw ParseError("point file contains no points");
    }
    validate_cloud(cloud);
    return cloud;
}

PointCloud points_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("points") || !j["points"].is_array()) {
        throw ParseError("point JSON needs a \"points\" array");
    }
    PointCloud cloud;
    if (j.contains("r")) {
        cloud.scale = rational_from_json(j["r"], "r");
    }
    const auto& pts = j["points"];
    for (std::size_t i = 0; i < pts.size(); ++i) {
        const auto& p = pts[i];
        const std::string where = "points[" + std::to_string(i) + "]";
        if (!p.is_array() || p.size() != 2) {
            throw ParseError(where + ": expected [x, y]");
        }
        cloud.points.emplace_back(rational_from_json(p[0], where), rational_from_json(p[1], where));
    }
    if (cloud.points.empty()) {
        throw ParseError("point JSON contains no points");
    }
    validate_cloud(cloud);
    return cloud;
}

Json points_to_json(const PointCloud& cloud)
{
    Json j;
    j["r"] = to_string(cloud.scale);
    Json pts = Json::array();
    for (const auto& p : cloud.points) {
        pts.push_back({to_string(p.x()), to_string(p.y())});
    }
    j["points"] = std::move(pts);
    return j;
}

Json graph_to_json(const Graph& g)
{
    Json j;
    j["n"] = g.n();
    Json edges = Json::array();
    for (const auto& [u, v] : g.edges()) {
        edges.push_back({u, v});
    }
    j["edges"] = std::move(edges);
    if (!g.labels().empty()) {
        j["labels"] = g.labels();
    }
    return j;
}

Graph graph_from_json(const Json& j)
{
    if (!j.is_object() || !j.contains("n") || !j["n"].is_number_integer()) {
        throw ParseError("graph JSON needs an integer \"n\"");
    }
    const int n = j["n"].get<int>();
    if (n < 0) {
        throw ParseError("graph JSON: negative vertex count");
    }
    Graph g(n);
    if (j.contains("edges")) {
        const auto& edges = j["edges"];
        if (!edges.is_array()) {
            throw ParseError("graph JSON: \"edges\" must be an array");
        }
        for (std::size_t i = 0; i < edges.size(); ++i) {
            const auto& e = edges[i];
            const std::string where = "edges[" + std::to_string(i) + "]";
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() || !e[1].is_number_integer()) {
                throw ParseError(where + ": expected [u, v]");
            }
            const int u = e[0].get<int>();
            const int v = e[1].get<int>();
            if (u < 0 || v < 0 || u >= n || v >= n || u == v) {
                throw ParseError(where + ": invalid endpoints");
            }
            g.add_edge(u, v);
        }
    }
    if (j.contains("labels")) {
        try {
            g.set_labels(j["labels"].get<std::vector<std::string>>());
        } catch (const std::exception& e) {
            throw ParseError(std::string("graph JSON labels: ") + e.what());
        }
    }
    return g;
}

Json complex_to_json(const FlagComplex& k, std::optional<ThresholdMode> mode)
{
    Json j;
    if (mode) {
        j["mode"] = to_string(*mode);
    }
    Json g = graph_to_json(k.graph());
    j["n"] = std::move(g["n"]);
    j["edges"] = std::move(g["edges"]);
    if (g.contains("labels")) {
        j["labels"] = std::move(g["labels"]);
    }
    Json facets = Json::array();
    for (const auto& f : k.facets()) {
        facets.push_back(f.vertices());
    }
    j["facets"] = std::move(facets);
    return j;
}

FlagComplex complex_from_json(const Json& j)
{
    FlagComplex k = clique_complex(graph_from_json(j));
    if (j.contains("facets")) {
        std::vector<Simplex> listed;
        try {
            for (const auto& f : j["facets"]) {
                listed.emplace_back(f.get<std::vector<int>>());
            }
        } catch (const std::exception& e) {
            throw ParseError(std::string("complex JSON facets: ") + e.what());
        }
        std::sort(listed.begin(), listed.end());
        if (listed != k.facets()) {
            throw ParseError("complex JSON: facets are not the maximal cliques of the graph");
        }
    }
    return k;
}

Json betti_to_json(const BettiVector& b)
{
    Json j;
    j["field"] = to_string(b.field);
    j["betti"] = b.b;
    return j;
}

Json report_to_json(const ClassificationReport& r)
{
    Json j;
    j["provenance"] = r.provenance;
    j["mode"] = r.mode ? Json(to_string(*r.mode)) : Json(nullptr);
    j["vertices"] = r.vertex_count;
    j["edges"] = r.edge_count;
    j["facets"] = r.facet_count;
    j["dimension"] = r.dimension;
    j["pure"] = r.pure;
    j["closed"] = optional_json(r.closed);
    j["weak_pseudomanifold"] = optional_json(r.weak_pseudomanifold);
    j["pseudomanifold"] = optional_json(r.pseudomanifold);
    j["normal_pseudomanifold"] = optional_json(r.normal_pseudomanifold);
    j["cross_polytope"] = optional_json(r.cross_polytope);
    if (r.chain.decomposition) {
        const auto& d = *r.chain.decomposition;
        Json chain;
        chain["n"] = d.n;
        chain["components"] = d.components;
        Json inter = Json::array();
        for (const auto& i : d.intersections) {
            inter.push_back({{"first", i.first}, {"second", i.second}, {"shared", i.shared}});
        }
        chain["intersections"] = std::move(inter);
        j["chain"] = std::move(chain);
    } else {
        j["chain"] = nullptr;
    }
    j["chain_reason"] = r.chain.reason;
    if (r.wedge) {
        j["wedge"] = {{"m", r.wedge->m}, {"p", r.wedge->p}, {"n", r.wedge->n},
                      {"p_model", "cycle rank of the component intersection multigraph"}};
    } else {
        j["wedge"] = nullptr;
    }
    Json octahedra = Json::array();
    for (const auto& s : r.census.vertex_sets) {
        octahedra.push_back(s);
    }
    j["census"] = {{"count", r.census.count}, {"octahedra", std::move(octahedra)}};
    j["betti"] = {{"gf2", r.betti_gf2.b}, {"q", r.betti_q.b}};
    j["euler"] = r.euler;
    j["crossing_pairs"] = optional_json(r.crossing_pairs);
    j["theorems"] = {{"A", theorem_json(r.theorem_a)}, {"B", theorem_json(r.theorem_b)}, {"C", theorem_json(r.theorem_c)}};
    return j;
}

Json outcome_to_json(const RealizationOutcome& o)
{
    Json j;
    j["verdict"] = to_string(o.verdict);
    if (o.verdict == RealizationVerdict::Certified) {
        j["restart"] = o.restart;
        Json pts = Json::array();
        for (const auto& p : o.points) {
            pts.push_back({to_string(p.x()), to_string(p.y())});
        }
        j["points"] = std::move(pts);
    }
    j["best_loss"] = o.best_loss;
    j["trace"] = o.trace;
    return j;
}

Json catalog_to_json(std::span<const CatalogEntry> entries)
{
    Json list = Json::array();
    for (const auto& e : entries) {
        Json j;
        j["id"] = e.id;
        const Json g = graph_to_json(e.graph);
        j["n"] = g["n"];
        j["edges"] = g["edges"];
        if (g.contains("labels")) {
            j["labels"] = g["labels"];
        }
        j["provenance"] = e.provenance;
        j["status"] = to_string(e.status);
        list.push_back(std::move(j));
    }
    return list;
}

std::vector<CatalogEntry> catalog_from_json(const Json& j)
{
    if (!j.is_array()) {
        throw ParseError("catalog JSON must be a list");
    }
    std::vector<CatalogEntry> out;
    for (std::size_t i = 0; i < j.size(); ++i) {
        const auto& e = j[i];
        const std::string where = "catalog[" + std::to_string(i) + "]";
        if (!e.is_object() || !e.contains("id") || !e["id"].is_string()) {
            throw ParseError(where + ": missing string \"id\"");
        }
        CatalogEntry entry;
        entry.id = e["id"].get<std::string>();
        entry.graph = graph_from_json(e);
        entry.provenance = e.value("provenance", "");
        try {
            entry.status = parse_entry_status(e.value("status", "proven-minimal"));
        } catch (const PreconditionError& err) {
            throw ParseError(where + ": " + err.what());
        }
        if (!is_connected(entry.graph)) {
            throw ParseError(where + ": catalog graphs must be connected");
        }
        out.push_back(std::move(entry));
    }
    return out;
}

std::string read_file(const std::filesystem::path& path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw ParseError("cannot open " + path.string());
    }
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

Json parse_json(const std::string& text, const std::string& origin)
{
    try {
        return Json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(origin + ": " + e.what());
    }
}

PointCloud load_points(const std::filesystem::path& path)
{
    const std::string text = read_file(path);
    if (path.extension() == ".json") {
        return points_from_json(parse_json(text, path.string()));
    }
    std::istringstream in(text);
    return read_points_csv(in);
}

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

}  // namespace prips
