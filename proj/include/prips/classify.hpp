#ifndef PRIPS_CLASSIFY_HPP
#define PRIPS_CLASSIFY_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "prips/complex.hpp"
#include "prips/homology.hpp"
#include "prips/rips.hpp"

namespace prips {

/// Dimension n when the graph is K_{(n+1)x2}: 2n + 2 vertices, each missing
/// exactly one other. A pair of isolated vertices yields 0.
std::optional<int> detect_cross_polytope(const Graph& g);
std::optional<int> detect_cross_polytope(const FlagComplex& k);

struct ComponentIntersection {
    std::size_t first = 0;
    std::size_t second = 0;
    std::vector<int> shared;  // one vertex, or the two ends of an edge
};

struct ChainDecomposition {
    int n = 0;
    std::vector<std::vector<int>> components;  // sorted vertex sets
    std::vector<ComponentIntersection> intersections;
};

struct ChainResult {
    std::optional<ChainDecomposition> decomposition;
    std::string reason;

    explicit operator bool() const { return decomposition.has_value(); }
};

/// Strongly connected components checked against the iterated-chain rules.
/// Requires k pure of dimension at least 2.
ChainResult decompose_iterated_chain(const FlagComplex& k);

struct WedgeSummary {
    int m = 0;  // n-spheres
    int p = 0;  // circles
    int n = 0;
};

/// m = component count, p = cycle rank of the intersection graph.
WedgeSummary wedge_summary(const ChainDecomposition& d);

enum class Verdict { Consistent, Counterexample };

struct TheoremCheck {
    Verdict verdict = Verdict::Consistent;
    bool vacuous = true;
    std::string detail;

    bool consistent() const { return verdict == Verdict::Consistent; }
};

/// Pseudomanifolds of dimension n >= 2 are cross-polytopal spheres.
TheoremCheck verify_theorem_A(const FlagComplex& k);
TheoremCheck verify_theorem_A(const PointCloud& cloud, ThresholdMode mode = ThresholdMode::StrictLess);

/// Weak-pseudomanifolds of dimension n >= 2 are iterated chains whose Betti
/// numbers match the wedge summary.
TheoremCheck verify_theorem_B(const FlagComplex& k);
TheoremCheck verify_theorem_B(const PointCloud& cloud, ThresholdMode mode = ThresholdMode::StrictLess);

/// Pure closed two-dimensional complexes: octahedron census equals b2, and
/// with coordinates, crossing pairs and per-edge copy counts agree with it.
TheoremCheck verify_theorem_C(const FlagComplex& k, const PointCloud* cloud = nullptr);
TheoremCheck verify_theorem_C(const PointCloud& cloud, ThresholdMode mode = ThresholdMode::StrictLess);

struct ClassificationReport {
    std::string provenance;
    std::optional<ThresholdMode> mode;
    int vertex_count = 0;
    std::size_t edge_count = 0;
    std::size_t facet_count = 0;
    int dimension = -1;
    bool pure = false;
    std::optional<bool> closed;
    std::optional<bool> weak_pseudomanifold;
    std::optional<bool> pseudomanifold;
    std::optional<bool> normal_pseudomanifold;
    std::optional<int> cross_polytope;
    ChainResult chain;
    std::optional<WedgeSummary> wedge;
    OctahedronCensus census;
    BettiVector betti_gf2;
    BettiVector betti_q;
    long euler = 0;
    std::optional<std::size_t> crossing_pairs;
    TheoremCheck theorem_a;
    TheoremCheck theorem_b;
    TheoremCheck theorem_c;
};

ClassificationReport classify(const FlagComplex& k, const std::string& provenance);
ClassificationReport classify(const PointCloud& cloud, ThresholdMode mode, const std::string& provenance);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::string fnv1a_hex(std::string_view data);

}  // namespace prips

#endif  // PRIPS_CLASSIFY_HPP
