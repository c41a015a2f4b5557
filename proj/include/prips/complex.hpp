#ifndef PRIPS_COMPLEX_HPP
#define PRIPS_COMPLEX_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "prips/errors.hpp"

namespace prips {

using Edge = std::pair<int, int>;

/// Simple undirected graph on vertices 0..n-1 with sorted neighbor lists.
class Graph {
public:
    Graph() = default;
    explicit Graph(int n);

    static Graph from_edges(int n, std::span<const Edge> edges);

    int n() const { return n_; }
    std::size_t edge_count() const { return edge_count_; }

    bool adjacent(int u, int v) const { return matrix_[index(u, v)] != 0; }
    const std::vector<int>& neighbors(int v) const { return adj_[check(v)]; }
    int degree(int v) const { return static_cast<int>(neighbors(v).size()); }

    /// Adds u-v; repeated edges are ignored. Throws on self-loops.
    void add_edge(int u, int v);
    void remove_edge(int u, int v);

    /// Edges (u, v) with u < v in lexicographic order.
    std::vector<Edge> edges() const;

    const std::vector<std::string>& labels() const { return labels_; }
    void set_labels(std::vector<std::string> labels);
    std::string label(int v) const;

    /// Subgraph induced on the listed vertices; vertex i of the result is
    /// vertices[i]. Labels are carried over.
    Graph induced(std::span<const int> vertices) const;
    Graph complement() const;

    /// Structural equality; labels are ignored.
    bool operator==(const Graph& other) const { return n_ == other.n_ && matrix_ == other.matrix_; }

private:
    int check(int v) const;
    std::size_t index(int u, int v) const
    {
        return static_cast<std::size_t>(check(u)) * static_cast<std::size_t>(n_) + static_cast<std::size_t>(check(v));
    }

    int n_ = 0;
    std::size_t edge_count_ = 0;
    std::vector<std::vector<int>> adj_;
    std::vector<char> matrix_;
    std::vector<std::string> labels_;
};

/// Sorted, duplicate-free vertex list.
class Simplex {
public:
    Simplex() = default;
    explicit Simplex(std::vector<int> vertices);
    Simplex(std::initializer_list<int> vertices) : Simplex(std::vector<int>(vertices)) {}

    const std::vector<int>& vertices() const { return vertices_; }
    std::size_t size() const { return vertices_.size(); }
    int dimension() const { return static_cast<int>(vertices_.size()) - 1; }
    bool contains(int v) const;
    int operator[](std::size_t i) const { return vertices_[i]; }
    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }

    auto operator<=>(const Simplex&) const = default;

private:
    std::vector<int> vertices_;
};

/// Flag complex stored as its 1-skeleton. Maximal cliques are enumerated on
/// first request; copies share the cache.
class FlagComplex {
public:
    FlagComplex();
    explicit FlagComplex(Graph graph);

    const Graph& graph() const { return state_->graph; }
    int vertex_count() const { return state_->graph.n(); }

    /// Maximal cliques in lexicographic order.
    const std::vector<Simplex>& facets() const;

    bool has_face(const Simplex& s) const;
    int dimension() const;

private:
    struct State {
        Graph graph;
        mutable std::once_flag once;
        mutable std::vector<Simplex> facets;
    };
    std::shared_ptr<const State> state_;
};

/// An induced piece of a complex together with its vertex correspondence:
/// vertex i of `complex` is vertex `vertex_map[i]` of the parent.
struct Subcomplex {
    FlagComplex complex;
    std::vector<int> vertex_map;
};

struct Purity {
    bool pure = false;
    int dimension = -1;
};

/// Maximal cliques by pivoted Bron-Kerbosch, sorted lexicographically.
std::vector<Simplex> maximal_cliques(const Graph& g);

/// All cliques of the given cardinality in lexicographic order.
std::vector<Simplex> cliques(const Graph& g, int cardinality);

bool is_clique(const Graph& g, std::span<const int> vertices);

std::vector<std::vector<int>> connected_components(const Graph& g);
bool is_connected(const Graph& g);

FlagComplex clique_complex(const Graph& g);
Graph skeleton_1(const FlagComplex& k);

Subcomplex link(const FlagComplex& k, const Simplex& s);
Subcomplex induced_subcomplex(const FlagComplex& k, std::vector<int> vertices);

/// Throws PreconditionError on the empty complex.
Purity is_pure(const FlagComplex& k);

/// Facet counts of every codimension-one face, keyed by face.
std::vector<std::pair<Simplex, int>> ridge_degrees(const FlagComplex& k);

bool is_closed(const FlagComplex& k);

/// Facet indices grouped by shared codimension-one faces.
std::vector<std::vector<std::size_t>> strongly_connected_components(const FlagComplex& k);
bool is_strongly_connected(const FlagComplex& k);

bool is_weak_pseudomanifold(const FlagComplex& k);
bool is_pseudomanifold(const FlagComplex& k);
bool is_normal_pseudomanifold(const FlagComplex& k);

}  // namespace prips

#endif  // PRIPS_COMPLEX_HPP
