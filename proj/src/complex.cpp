#include "prips/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace prips {

Graph::Graph(int n) : n_(n)
{
    if (n < 0) {
        throw PreconditionError("graph size must be non-negative");
    }
    adj_.resize(static_cast<std::size_t>(n));
    matrix_.assign(static_cast<std::size_t>(n) * static_cast<std::size_t>(n), 0);
}

Graph Graph::from_edges(int n, std::span<const Edge> edges)
{
    Graph g(n);
    for (const auto& [u, v] : edges) {
        g.add_edge(u, v);
    }
    return g;
}

int Graph::check(int v) const
{
    if (v < 0 || v >= n_) {
        throw PreconditionError("vertex id " + std::to_string(v) + " out of range");
    }
    return v;
}

void Graph::add_edge(int u, int v)
{
    if (u == v) {
        throw PreconditionError("self-loop at vertex " + std::to_string(u));
    }
    if (adjacent(u, v)) {
        return;
    }
    matrix_[index(u, v)] = 1;
    matrix_[index(v, u)] = 1;
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nu.insert(std::lower_bound(nu.begin(), nu.end(), v), v);
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

void Graph::remove_edge(int u, int v)
{
    if (u == v || !adjacent(u, v)) {
        return;
    }
    matrix_[index(u, v)] = 0;
    matrix_[index(v, u)] = 0;
    auto& nu = adj_[static_cast<std::size_t>(u)];
    auto& nv = adj_[static_cast<std::size_t>(v)];
    nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --edge_count_;
}

std::vector<Edge> Graph::edges() const
{
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (int u = 0; u < n_; ++u) {
        for (int v : adj_[static_cast<std::size_t>(u)]) {
            if (u < v) {
                out.emplace_back(u, v);
            }
        }
    }
    return out;
}

void Graph::set_labels(std::vector<std::string> labels)
{
    if (!labels.empty() && labels.size() != static_cast<std::size_t>(n_)) {
        throw PreconditionError("label count does not match vertex count");
    }
    labels_ = std::move(labels);
}

std::string Graph::label(int v) const
{
    check(v);
    return labels_.empty() ? std::to_string(v) : labels_[static_cast<std::size_t>(v)];
}

Graph Graph::induced(std::span<const int> vertices) const
{
    Graph h(static_cast<int>(vertices.size()));
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (vertices[i] == vertices[j]) {
                throw PreconditionError("repeated vertex in induced subgraph");
            }
            if (adjacent(vertices[i], vertices[j])) {
                h.add_edge(static_cast<int>(i), static_cast<int>(j));
            }
        }
    }
    if (!labels_.empty()) {
        std::vector<std::string> sub;
        for (int v : vertices) {
            sub.push_back(labels_[static_cast<std::size_t>(v)]);
        }
        h.labels_ = std::move(sub);
    }
    return h;
}

Graph Graph::complement() const
{
    Graph h(n_);
    for (int u = 0; u < n_; ++u) {
        for (int v = u + 1; v < n_; ++v) {
            if (!adjacent(u, v)) {
                h.add_edge(u, v);
            }
        }
    }
    h.labels_ = labels_;
    return h;
}

Simplex::Simplex(std::vector<int> vertices) : vertices_(std::move(vertices))
{
    std::sort(vertices_.begin(), vertices_.end());
    if (std::adjacent_find(vertices_.begin(), vertices_.end()) != vertices_.end()) {
        throw PreconditionError("simplex has a repeated vertex");
    }
}

bool Simplex::contains(int v) const { return std::binary_search(vertices_.begin(), vertices_.end(), v); }

namespace {

std::vector<int> intersect_sorted(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

void bron_kerbosch(const Graph& g, std::vector<int>& r, std::vector<int> p, std::vector<int> x,
                   std::vector<Simplex>& out)
{
    if (p.empty()) {
        if (x.empty()) {
            out.emplace_back(r);
        }
        return;
    }
    int pivot = -1;
    std::size_t best = 0;
    for (const auto* set : {&p, &x}) {
        for (int u : *set) {
            const std::size_t hits = intersect_sorted(p, g.neighbors(u)).size();
            if (pivot < 0 || hits > best) {
                pivot = u;
                best = hits;
            }
        }
    }
    std::vector<int> candidates;
    std::set_difference(p.begin(), p.end(), g.neighbors(pivot).begin(), g.neighbors(pivot).end(),
                        std::back_inserter(candidates));
    for (int v : candidates) {
        r.push_back(v);
        bron_kerbosch(g, r, intersect_sorted(p, g.neighbors(v)), intersect_sorted(x, g.neighbors(v)), out);
        r.pop_back();
        p.erase(std::lower_bound(p.begin(), p.end(), v));
        x.insert(std::lower_bound(x.begin(), x.end(), v), v);
    }
}

void extend_cliques(const Graph& g, std::vector<int>& current, const std::vector<int>& candidates,
                    std::size_t target, std::vector<Simplex>& out)
{
    if (current.size() == target) {
        out.emplace_back(current);
        return;
    }
    for (std::size_t i = 0; i < candidates.size(); ++i) {
        if (current.size() + (candidates.size() - i) < target) {
            return;
        }
        const int v = candidates[i];
        std::vector<int> next;
        for (std::size_t j = i + 1; j < candidates.size(); ++j) {
            if (g.adjacent(v, candidates[j])) {
                next.push_back(candidates[j]);
            }
        }
        current.push_back(v);
        extend_cliques(g, current, next, target, out);
        current.pop_back();
    }
}

Purity require_pure(const FlagComplex& k, int min_dimension, const char* what)
{
    const Purity p = is_pure(k);
    if (!p.pure) {
        throw PreconditionError(std::string(what) + ": complex is not pure");
    }
    if (p.dimension < min_dimension) {
        throw PreconditionError(std::string(what) + ": requires dimension at least " + std::to_string(min_dimension));
    }
    return p;
}

std::map<Simplex, int> ridge_map(const FlagComplex& k)
{
    std::map<Simplex, int> ridges;
    for (const Simplex& f : k.facets()) {
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            std::vector<int> r;
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (i != drop) {
                    r.push_back(f[i]);
                }
            }
            ++ridges[Simplex(std::move(r))];
        }
    }
    return ridges;
}

}  // namespace

std::vector<Simplex> maximal_cliques(const Graph& g)
{
    std::vector<Simplex> out;
    std::vector<int> r;
    std::vector<int> p(static_cast<std::size_t>(g.n()));
    std::iota(p.begin(), p.end(), 0);
    if (!p.empty()) {
        bron_kerbosch(g, r, std::move(p), {}, out);
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Simplex> cliques(const Graph& g, int cardinality)
{
    std::vector<Simplex> out;
    if (cardinality <= 0) {
        return out;
    }
    std::vector<int> all(static_cast<std::size_t>(g.n()));
    std::iota(all.begin(), all.end(), 0);
    std::vector<int> current;
    extend_cliques(g, current, all, static_cast<std::size_t>(cardinality), out);
    return out;
}

bool is_clique(const Graph& g, std::span<const int> vertices)
{
    for (std::size_t i = 0; i < vertices.size(); ++i) {
        for (std::size_t j = i + 1; j < vertices.size(); ++j) {
            if (!g.adjacent(vertices[i], vertices[j])) {
                return false;
            }
        }
    }
    return true;
}

std::vector<std::vector<int>> connected_components(const Graph& g)
{
    std::vector<int> component(static_cast<std::size_t>(g.n()), -1);
    std::vector<std::vector<int>> out;
    for (int s = 0; s < g.n(); ++s) {
        if (component[static_cast<std::size_t>(s)] >= 0) {
            continue;
        }
        const int id = static_cast<int>(out.size());
        out.emplace_back();
        std::vector<int> stack{s};
        component[static_cast<std::size_t>(s)] = id;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            out.back().push_back(v);
            for (int w : g.neighbors(v)) {
                if (component[static_cast<std::size_t>(w)] < 0) {
                    component[static_cast<std::size_t>(w)] = id;
                    stack.push_back(w);
                }
            }
        }
        std::sort(out.back().begin(), out.back().end());
    }
    return out;
}

bool is_connected(const Graph& g) { return connected_components(g).size() <= 1; }

FlagComplex::FlagComplex() : FlagComplex(Graph()) {}

FlagComplex::FlagComplex(Graph graph)
{
    auto state = std::make_shared<State>();
    state->graph = std::move(graph);
    state_ = std::move(state);
}

const std::vector<Simplex>& FlagComplex::facets() const
{
    std::call_once(state_->once, [this] { state_->facets = maximal_cliques(state_->graph); });
    return state_->facets;
}

bool FlagComplex::has_face(const Simplex& s) const
{
    for (int v : s) {
        if (v < 0 || v >= vertex_count()) {
            return false;
        }
    }
    return is_clique(graph(), s.vertices());
}

int FlagComplex::dimension() const
{
    int d = -1;
    for (const Simplex& f : facets()) {
        d = std::max(d, f.dimension());
    }
    return d;
}

FlagComplex clique_complex(const Graph& g) { return FlagComplex(g); }

Graph skeleton_1(const FlagComplex& k) { return k.graph(); }

Subcomplex link(const FlagComplex& k, const Simplex& s)
{
    if (!k.has_face(s)) {
        throw PreconditionError("link: simplex is not a face of the complex");
    }
    std::vector<int> common;
    if (s.size() == 0) {
        common.resize(static_cast<std::size_t>(k.vertex_count()));
        std::iota(common.begin(), common.end(), 0);
    } else {
        common = k.graph().neighbors(s[0]);
        for (std::size_t i = 1; i < s.size(); ++i) {
            common = intersect_sorted(common, k.graph().neighbors(s[i]));
        }
    }
    return {FlagComplex(k.graph().induced(common)), common};
}

Subcomplex induced_subcomplex(const FlagComplex& k, std::vector<int> vertices)
{
    std::sort(vertices.begin(), vertices.end());
    vertices.erase(std::unique(vertices.begin(), vertices.end()), vertices.end());
    for (int v : vertices) {
        if (v < 0 || v >= k.vertex_count()) {
            throw PreconditionError("induced_subcomplex: unknown vertex id " + std::to_string(v));
        }
    }
    return {FlagComplex(k.graph().induced(vertices)), vertices};
}

Purity is_pure(const FlagComplex& k)
{
    if (k.vertex_count() == 0) {
        throw PreconditionError("is_pure: empty complex");
    }
    const auto& facets = k.facets();
    const int d = facets.front().dimension();
    for (const Simplex& f : facets) {
        if (f.dimension() != d) {
            return {false, k.dimension()};
        }
    }
    return {true, d};
}

std::vector<std::pair<Simplex, int>> ridge_degrees(const FlagComplex& k)
{
    const auto m = ridge_map(k);
    return {m.begin(), m.end()};
}

bool is_closed(const FlagComplex& k)
{
    require_pure(k, 1, "is_closed");
    for (const auto& [ridge, count] : ridge_map(k)) {
        if (count < 2) {
            return false;
        }
    }
    return true;
}

std::vector<std::vector<std::size_t>> strongly_connected_components(const FlagComplex& k)
{
    require_pure(k, 0, "strongly_connected_components");
    const auto& facets = k.facets();
    std::vector<std::size_t> parent(facets.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t i) {
        while (parent[i] != i) {
            parent[i] = parent[parent[i]];
            i = parent[i];
        }
        return i;
    };
    std::map<Simplex, std::size_t> first_owner;
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
        const Simplex& f = facets[fi];
        for (std::size_t drop = 0; drop < f.size(); ++drop) {
            std::vector<int> r;
            for (std::size_t i = 0; i < f.size(); ++i) {
                if (i != drop) {
                    r.push_back(f[i]);
                }
            }
            auto [it, inserted] = first_owner.emplace(Simplex(std::move(r)), fi);
            if (!inserted) {
                parent[find(fi)] = find(it->second);
            }
        }
    }
    std::map<std::size_t, std::vector<std::size_t>> groups;
    for (std::size_t fi = 0; fi < facets.size(); ++fi) {
        groups[find(fi)].push_back(fi);
    }
    std::vector<std::vector<std::size_t>> out;
    for (auto& [root, members] : groups) {
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_strongly_connected(const FlagComplex& k) { return strongly_connected_components(k).size() == 1; }

bool is_weak_pseudomanifold(const FlagComplex& k)
{
    require_pure(k, 1, "is_weak_pseudomanifold");
    for (const auto& [ridge, count] : ridge_map(k)) {
        if (count != 2) {
            return false;
        }
    }
    return true;
}

bool is_pseudomanifold(const FlagComplex& k) { return is_weak_pseudomanifold(k) && is_strongly_connected(k); }

bool is_normal_pseudomanifold(const FlagComplex& k)
{
    const Purity p = require_pure(k, 2, "is_normal_pseudomanifold");
    if (!is_pseudomanifold(k)) {
        return false;
    }
    for (int size = 1; size <= p.dimension - 1; ++size) {
        for (const Simplex& s : cliques(k.graph(), size)) {
            if (!is_connected(link(k, s).complex.graph())) {
                return false;
            }
        }
    }
    return true;
}

}  // namespace prips
