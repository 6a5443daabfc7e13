#pragma once

// Finite undirected multigraphs (loops and parallel edges allowed) and the
// deletion / contraction minors. Edge ids survive both minor operations.

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace potts {

using Vertex = std::uint32_t;

struct EdgeId {
    std::uint32_t value = 0;

    friend auto operator<=>(const EdgeId&, const EdgeId&) = default;
};

struct Edge {
    EdgeId id;
    Vertex a = 0;
    Vertex b = 0;

    bool is_loop() const noexcept { return a == b; }
};

/// Set of edge ids, kept sorted and duplicate free.
class EdgeSubset {
public:
    EdgeSubset() = default;
    EdgeSubset(std::initializer_list<std::uint32_t> ids);
    explicit EdgeSubset(std::vector<EdgeId> ids);

    std::span<const EdgeId> members() const noexcept { return members_; }
    std::size_t size() const noexcept { return members_.size(); }
    bool empty() const noexcept { return members_.empty(); }
    bool contains(EdgeId id) const;

    friend bool operator==(const EdgeSubset&, const EdgeSubset&) = default;

private:
    std::vector<EdgeId> members_;
};

class Multigraph {
public:
    Multigraph() = default;
    /// Throws InvalidGraph on an out-of-range endpoint or a repeated edge id.
    /// Edges are stored sorted by id.
    Multigraph(std::size_t vertex_count, std::vector<Edge> edges);

    /// Convenience: edges given as endpoint pairs get ids 0, 1, 2, ...
    static Multigraph from_pairs(std::size_t vertex_count,
                                 std::initializer_list<std::pair<Vertex, Vertex>> pairs);

    std::size_t vertex_count() const noexcept { return vertex_count_; }
    std::size_t edge_count() const noexcept { return edges_.size(); }
    std::span<const Edge> edges() const noexcept { return edges_; }

    bool has_edge(EdgeId id) const;
    const Edge& edge(EdgeId id) const;
    /// Index of the edge in edges(); throws InvalidSubset if absent.
    std::size_t position_of(EdgeId id) const;

    EdgeSubset all_edges() const;

    /// Bit i of the mask selects edges()[i]. Requires edge_count() <= 64.
    EdgeSubset subset_from_mask(std::uint64_t mask) const;
    std::uint64_t mask_of(const EdgeSubset& subset) const;

    /// Same vertex count and, per edge id, the same unordered endpoint pair.
    friend bool operator==(const Multigraph& x, const Multigraph& y);

private:
    std::size_t vertex_count_ = 0;
    std::vector<Edge> edges_;
};

/// Number of connected components of the spanning subgraph (V, a).
std::size_t component_count(const Multigraph& g, const EdgeSubset& a);

/// |V| - component_count(g, a).
std::size_t graph_rank(const Multigraph& g, const EdgeSubset& a);

/// G - F: same vertices, edges of F removed, surviving edges untouched.
Multigraph delete_edges(const Multigraph& g, const EdgeSubset& f);

/// G / F: every component of (V, F) becomes one vertex. Merged classes are
/// numbered by their smallest original vertex; loops and parallel edges that
/// arise are kept.
Multigraph contract_edges(const Multigraph& g, const EdgeSubset& f);

/// Vertex relabelling that contract_edges applies: old vertex -> new vertex.
std::vector<Vertex> contraction_map(const Multigraph& g, const EdgeSubset& f);

/// Small named graphs used throughout tests and examples.
namespace graphs {
Multigraph edgeless(std::size_t n);
Multigraph single_loop();
Multigraph single_edge();
Multigraph triangle();
/// Square on vertices 0..3 with edges e=0 (0-1), 1 (1-2), 2 (2-3), f=3 (3-0)
/// and the diagonal 4 (1-3).
Multigraph square_with_diagonal();
} // namespace graphs

} // namespace potts
