#include "potts/multigraph.hpp"

#include "potts/errors.hpp"
#include "potts/union_find.hpp"

#include <algorithm>
#include <string>

namespace potts {

namespace {

std::string describe(EdgeId id) { return "edge id " + std::to_string(id.value); }

// Union-find over (V, f), validating every id of f against g.
UnionFind components_of(const Multigraph& g, const EdgeSubset& f) {
    UnionFind uf(g.vertex_count());
    for (EdgeId id : f.members()) {
        const Edge& e = g.edge(id);
        uf.unite(e.a, e.b);
    }
    return uf;
}

} // namespace

EdgeSubset::EdgeSubset(std::initializer_list<std::uint32_t> ids) {
    members_.reserve(ids.size());
    for (auto id : ids) members_.push_back(EdgeId{id});
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

EdgeSubset::EdgeSubset(std::vector<EdgeId> ids) : members_(std::move(ids)) {
    std::sort(members_.begin(), members_.end());
    members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool EdgeSubset::contains(EdgeId id) const {
    return std::binary_search(members_.begin(), members_.end(), id);
}

Multigraph::Multigraph(std::size_t vertex_count, std::vector<Edge> edges)
    : vertex_count_(vertex_count), edges_(std::move(edges)) {
    std::sort(edges_.begin(), edges_.end(), [](const Edge& x, const Edge& y) { return x.id < y.id; });
    for (std::size_t i = 0; i < edges_.size(); ++i) {
        const Edge& e = edges_[i];
        if (e.a >= vertex_count_ || e.b >= vertex_count_) {
            throw InvalidGraph(describe(e.id) + " has an endpoint outside 0.." +
                               std::to_string(vertex_count_ == 0 ? 0 : vertex_count_ - 1));
        }
        if (i > 0 && edges_[i - 1].id == e.id) throw InvalidGraph("duplicate " + describe(e.id));
    }
}

Multigraph Multigraph::from_pairs(std::size_t vertex_count,
                                  std::initializer_list<std::pair<Vertex, Vertex>> pairs) {
    std::vector<Edge> edges;
    std::uint32_t next = 0;
    for (const auto& [a, b] : pairs) edges.push_back({EdgeId{next++}, a, b});
    return Multigraph(vertex_count, std::move(edges));
}

std::size_t Multigraph::position_of(EdgeId id) const {
    auto it = std::lower_bound(edges_.begin(), edges_.end(), id,
                               [](const Edge& e, EdgeId key) { return e.id < key; });
    if (it == edges_.end() || it->id != id) throw InvalidSubset("unknown " + describe(id));
    return static_cast<std::size_t>(it - edges_.begin());
}

bool Multigraph::has_edge(EdgeId id) const {
    return std::binary_search(edges_.begin(), edges_.end(), Edge{id, 0, 0},
                              [](const Edge& x, const Edge& y) { return x.id < y.id; });
}

const Edge& Multigraph::edge(EdgeId id) const { return edges_[position_of(id)]; }

EdgeSubset Multigraph::all_edges() const {
    std::vector<EdgeId> ids;
    ids.reserve(edges_.size());
    for (const Edge& e : edges_) ids.push_back(e.id);
    return EdgeSubset(std::move(ids));
}

EdgeSubset Multigraph::subset_from_mask(std::uint64_t mask) const {
    std::vector<EdgeId> ids;
    for (std::size_t i = 0; i < edges_.size() && i < 64; ++i) {
        if (mask >> i & 1U) ids.push_back(edges_[i].id);
    }
    return EdgeSubset(std::move(ids));
}

std::uint64_t Multigraph::mask_of(const EdgeSubset& subset) const {
    std::uint64_t mask = 0;
    for (EdgeId id : subset.members()) {
        const auto pos = position_of(id);
        if (pos >= 64) throw TooLarge("edge position beyond 64-bit mask");
        mask |= std::uint64_t{1} << pos;
    }
    return mask;
}

bool operator==(const Multigraph& x, const Multigraph& y) {
    if (x.vertex_count_ != y.vertex_count_ || x.edges_.size() != y.edges_.size()) return false;
    for (std::size_t i = 0; i < x.edges_.size(); ++i) {
        const Edge& p = x.edges_[i];
        const Edge& r = y.edges_[i];
        if (p.id != r.id) return false;
        if (std::minmax(p.a, p.b) != std::minmax(r.a, r.b)) return false;
    }
    return true;
}

std::size_t component_count(const Multigraph& g, const EdgeSubset& a) {
    return components_of(g, a).components();
}

std::size_t graph_rank(const Multigraph& g, const EdgeSubset& a) {
    return g.vertex_count() - component_count(g, a);
}

Multigraph delete_edges(const Multigraph& g, const EdgeSubset& f) {
    for (EdgeId id : f.members()) g.position_of(id);
    std::vector<Edge> kept;
    kept.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        if (!f.contains(e.id)) kept.push_back(e);
    }
    return Multigraph(g.vertex_count(), std::move(kept));
}

std::vector<Vertex> contraction_map(const Multigraph& g, const EdgeSubset& f) {
    UnionFind uf = components_of(g, f);
    constexpr Vertex unset = ~Vertex{0};
    std::vector<Vertex> label_of_root(g.vertex_count(), unset);
    std::vector<Vertex> map(g.vertex_count());
    Vertex next = 0;
    // Scanning in vertex order numbers each class by its smallest member.
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        const Vertex root = uf.find(v);
        if (label_of_root[root] == unset) label_of_root[root] = next++;
        map[v] = label_of_root[root];
    }
    return map;
}

Multigraph contract_edges(const Multigraph& g, const EdgeSubset& f) {
    const auto map = contraction_map(g, f);
    const std::size_t n = g.vertex_count() == 0 ? 0 : *std::max_element(map.begin(), map.end()) + 1;
    std::vector<Edge> kept;
    kept.reserve(g.edge_count());
    for (const Edge& e : g.edges()) {
        if (!f.contains(e.id)) kept.push_back({e.id, map[e.a], map[e.b]});
    }
    return Multigraph(n, std::move(kept));
}

namespace graphs {

Multigraph edgeless(std::size_t n) { return Multigraph(n, {}); }

Multigraph single_loop() { return Multigraph::from_pairs(1, {{0, 0}}); }

Multigraph single_edge() { return Multigraph::from_pairs(2, {{0, 1}}); }

Multigraph triangle() { return Multigraph::from_pairs(3, {{0, 1}, {1, 2}, {2, 0}}); }

Multigraph square_with_diagonal() {
    return Multigraph::from_pairs(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}, {1, 3}});
}

} // namespace graphs

} // namespace potts
