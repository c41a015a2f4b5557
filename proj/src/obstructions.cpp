#include "prips/obstructions.hpp"

#include <set>

namespace prips {

const char* to_string(EntryStatus status)
{
    return status == EntryStatus::ProvenMinimal ? "proven-minimal" : "forbidden";
}

EntryStatus parse_entry_status(std::string_view text)
{
    if (text == "proven-minimal") {
        return EntryStatus::ProvenMinimal;
    }
    if (text == "forbidden") {
        return EntryStatus::ForbiddenNotNecessarilyMinimal;
    }
    throw PreconditionError("unknown catalog status '" + std::string(text) + "'");
}

namespace {

std::vector<std::string> letter_labels(int n)
{
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels.emplace_back(1, static_cast<char>('A' + i));
    }
    return labels;
}

Graph from_letter_pairs(int n, std::initializer_list<const char*> pairs)
{
    Graph g(n);
    for (const char* p : pairs) {
        g.add_edge(p[0] - 'A', p[1] - 'A');
    }
    g.set_labels(letter_labels(n));
    return g;
}

}  // namespace

Graph gen_k16()
{
    Graph g(7);
    for (int leaf = 1; leaf <= 6; ++leaf) {
        g.add_edge(0, leaf);
    }
    return g;
}

Graph gen_complement_k2_plus_odd_cycle(int k)
{
    if (k < 1) {
        throw PreconditionError("gen_complement_k2_plus_odd_cycle requires k >= 1");
    }
    const int cycle = 2 * k + 1;
    Graph g(cycle + 2);
    g.add_edge(0, 1);
    for (int i = 0; i < cycle; ++i) {
        g.add_edge(2 + i, 2 + (i + 1) % cycle);
    }
    return g.complement();
}

Graph gen_complement_even_cycle(int k)
{
    if (k < 4) {
        throw PreconditionError("gen_complement_even_cycle requires k >= 4");
    }
    Graph g(2 * k);
    for (int i = 0; i < 2 * k; ++i) {
        g.add_edge(i, (i + 1) % (2 * k));
    }
    return g.complement();
}

Graph gen_cstar(int k)
{
    if (k < 4) {
        throw PreconditionError("gen_cstar requires k >= 4");
    }
    const int n = 2 * k;
    Graph g(n);
    for (int i = 0; i < n; ++i) {
        g.add_edge(i, (i + 1) % n);
        for (int j = i + 2; j < n; j += 2) {
            g.add_edge(i, j);
        }
    }
    return g;
}

Graph gen_rp2_7()
{
    return from_letter_pairs(7, {"AB", "AD", "AE", "AF", "AG", "BC", "BF", "BG", "CD", "CE", "DE", "DG", "EF"});
}

Graph gen_rp2_triangulation()
{
    return from_letter_pairs(11, {"AB", "AD", "AE", "AF", "AG", "BC", "BF", "BG", "BH", "BK", "CD", "CE", "CH", "CK", "DE",
                                  "DG", "DJ", "DK", "EF", "EH", "EI", "FI", "FJ", "FK", "GH", "GI", "GJ", "HI", "IJ", "JK"});
}

const std::vector<CatalogEntry>& builtin_catalog()
{
    static const std::vector<CatalogEntry> entries = [] {
        std::vector<CatalogEntry> v;
        v.push_back({"rp2-7", gen_rp2_7(),
                     "induced on A..G in the 11-vertex flag triangulation of the projective plane",
                     EntryStatus::ProvenMinimal});
        v.push_back({"k16", gen_k16(), "star with six independent leaves; forbidden, minimality not asserted",
                     EntryStatus::ForbiddenNotNecessarilyMinimal});
        v.push_back({"comp-k2-c3", gen_complement_k2_plus_odd_cycle(1), "complement of K2 + C3 (K_{2,3})",
                     EntryStatus::ProvenMinimal});
        v.push_back({"comp-k2-c5", gen_complement_k2_plus_odd_cycle(2),
                     "complement of K2 + C5 (suspension of C5)", EntryStatus::ProvenMinimal});
        v.push_back({"comp-c8", gen_complement_even_cycle(4), "complement of C8", EntryStatus::ProvenMinimal});
        v.push_back({"comp-c10", gen_complement_even_cycle(5), "complement of C10", EntryStatus::ProvenMinimal});
        v.push_back({"cstar-8", gen_cstar(4), "C8 with both alternating classes completed to cliques",
                     EntryStatus::ProvenMinimal});
        return v;
    }();
    return entries;
}

std::vector<CatalogEntry> merged_catalog(std::span<const CatalogEntry> extras)
{
    std::vector<CatalogEntry> out = builtin_catalog();
    std::set<std::string> ids;
    for (const auto& e : out) {
        ids.insert(e.id);
    }
    for (const auto& e : extras) {
        if (!ids.insert(e.id).second) {
            throw PreconditionError("duplicate catalog id '" + e.id + "'");
        }
        out.push_back(e);
    }
    return out;
}

namespace {

class EmbeddingSearch {
public:
    EmbeddingSearch(const Graph& pattern, const Graph& host)
        : pattern_(pattern), host_(host), map_(static_cast<std::size_t>(pattern.n()), -1),
          used_(static_cast<std::size_t>(host.n()), 0)
    {
    }

    bool run() { return extend(0); }
    const std::vector<int>& embedding() const { return map_; }

private:
    bool extend(int i)
    {
        if (i == pattern_.n()) {
            return true;
        }
        const int need = pattern_.degree(i);
        for (int h = 0; h < host_.n(); ++h) {
            if (used_[static_cast<std::size_t>(h)] || host_.degree(h) < need) {
                continue;
            }
            bool fits = true;
            for (int j = 0; j < i && fits; ++j) {
                fits = pattern_.adjacent(i, j) == host_.adjacent(h, map_[static_cast<std::size_t>(j)]);
            }
            if (!fits) {
                continue;
            }
            map_[static_cast<std::size_t>(i)] = h;
            used_[static_cast<std::size_t>(h)] = 1;
            if (extend(i + 1)) {
                return true;
            }
            used_[static_cast<std::size_t>(h)] = 0;
        }
        map_[static_cast<std::size_t>(i)] = -1;
        return false;
    }

    const Graph& pattern_;
    const Graph& host_;
    std::vector<int> map_;
    std::vector<char> used_;
};

}  // namespace

std::optional<std::vector<int>> find_induced_embedding(const Graph& pattern, const Graph& host)
{
    if (pattern.n() > host.n() || pattern.edge_count() > host.edge_count()) {
        return std::nullopt;
    }
    EmbeddingSearch search(pattern, host);
    if (!search.run()) {
        return std::nullopt;
    }
    return search.embedding();
}

std::optional<ObstructionHit> find_obstruction(const Graph& g, std::span<const CatalogEntry> catalog)
{
    for (const auto& entry : catalog) {
        if (auto emb = find_induced_embedding(entry.graph, g)) {
            return ObstructionHit{entry.id, std::move(*emb)};
        }
    }
    return std::nullopt;
}

std::optional<ObstructionHit> find_obstruction(const Graph& g) { return find_obstruction(g, builtin_catalog()); }

namespace {

bool independent_extend(const Graph& g, const std::vector<int>& pool, std::size_t start, std::vector<int>& chosen,
                        std::size_t target)
{
    if (chosen.size() == target) {
        return true;
    }
    for (std::size_t i = start; i < pool.size(); ++i) {
        if (chosen.size() + (pool.size() - i) < target) {
            return false;
        }
        bool free = true;
        for (int c : chosen) {
            if (g.adjacent(c, pool[i])) {
                free = false;
                break;
            }
        }
        if (!free) {
            continue;
        }
        chosen.push_back(pool[i]);
        if (independent_extend(g, pool, i + 1, chosen, target)) {
            return true;
        }
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<int>> contains_induced_k16(const Graph& g)
{
    for (int v = 0; v < g.n(); ++v) {
        if (g.degree(v) < 6) {
            continue;
        }
        std::vector<int> chosen;
        if (independent_extend(g, g.neighbors(v), 0, chosen, 6)) {
            chosen.insert(chosen.begin(), v);
            return chosen;
        }
    }
    return std::nullopt;
}

}  // namespace prips
