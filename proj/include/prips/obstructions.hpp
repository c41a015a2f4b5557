#ifndef PRIPS_OBSTRUCTIONS_HPP
#define PRIPS_OBSTRUCTIONS_HPP

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "prips/complex.hpp"

namespace prips {

enum class EntryStatus { ProvenMinimal, ForbiddenNotNecessarilyMinimal };

const char* to_string(EntryStatus status);
EntryStatus parse_entry_status(std::string_view text);

struct CatalogEntry {
    std::string id;
    Graph graph;
    std::string provenance;
    EntryStatus status = EntryStatus::ProvenMinimal;
};

/// Star with six leaves.
Graph gen_k16();

/// Complement of the disjoint union of K2 and C_{2k+1}; k >= 1.
Graph gen_complement_k2_plus_odd_cycle(int k);

/// Complement of C_{2k}; k >= 4.
Graph gen_complement_even_cycle(int k);

/// C_{2k} with each of its two alternating classes completed to a clique;
/// k >= 4.
Graph gen_cstar(int k);

/// Seven-vertex graph on A..G carved out of the minimal flag triangulation
/// of the real projective plane.
Graph gen_rp2_7();

/// 1-skeleton of the 11-vertex flag triangulation of the real projective
/// plane, vertices labelled A..K.
Graph gen_rp2_triangulation();

/// Built-in entries in search order.
const std::vector<CatalogEntry>& builtin_catalog();

/// Built-ins followed by the extras; duplicate ids throw PreconditionError.
std::vector<CatalogEntry> merged_catalog(std::span<const CatalogEntry> extras);

/// Lexicographically first injective map from pattern vertices to host
/// vertices that preserves adjacency and non-adjacency.
std::optional<std::vector<int>> find_induced_embedding(const Graph& pattern, const Graph& host);

struct ObstructionHit {
    std::string id;
    std::vector<int> embedding;
};

/// First catalog entry (in catalog order) found as an induced subgraph.
std::optional<ObstructionHit> find_obstruction(const Graph& g, std::span<const CatalogEntry> catalog);
std::optional<ObstructionHit> find_obstruction(const Graph& g);

/// Centre followed by six pairwise non-adjacent neighbours.
std::optional<std::vector<int>> contains_induced_k16(const Graph& g);

}  // namespace prips

#endif  // PRIPS_OBSTRUCTIONS_HPP
