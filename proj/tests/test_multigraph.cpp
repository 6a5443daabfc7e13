#include "oracles.hpp"

#include "potts/errors.hpp"
#include "potts/multigraph.hpp"
#include "potts/union_find.hpp"

#include <gtest/gtest.h>

#include <algorithm>

using namespace potts;

namespace {

// Endpoint pairs of every edge, unordered.
std::vector<std::pair<Vertex, Vertex>> shape(const Multigraph& g) {
    std::vector<std::pair<Vertex, Vertex>> out;
    for (const Edge& e : g.edges()) out.emplace_back(std::min(e.a, e.b), std::max(e.a, e.b));
    std::sort(out.begin(), out.end());
    return out;
}

std::size_t loops(const Multigraph& g) {
    return static_cast<std::size_t>(std::count_if(g.edges().begin(), g.edges().end(),
                                                  [](const Edge& e) { return e.is_loop(); }));
}

} // namespace

TEST(UnionFind, Basics) {
    UnionFind uf(5);
    EXPECT_EQ(uf.components(), 5U);
    EXPECT_TRUE(uf.unite(0, 1));
    EXPECT_FALSE(uf.unite(1, 0));
    EXPECT_TRUE(uf.unite(3, 4));
    EXPECT_TRUE(uf.same(3, 4));
    EXPECT_FALSE(uf.same(0, 4));
    EXPECT_EQ(uf.components(), 3U);
}

TEST(Multigraph, Construction) {
    EXPECT_THROW(Multigraph(2, {{EdgeId{0}, 0, 2}}), InvalidGraph);
    EXPECT_THROW(Multigraph(2, {{EdgeId{0}, 0, 1}, {EdgeId{0}, 1, 0}}), InvalidGraph);
    const Multigraph g(3, {{EdgeId{7}, 2, 1}, {EdgeId{2}, 0, 1}});
    EXPECT_EQ(g.edges()[0].id.value, 2U);
    EXPECT_EQ(g.position_of(EdgeId{7}), 1U);
    EXPECT_THROW(g.position_of(EdgeId{3}), InvalidSubset);
}

TEST(Multigraph, ComponentCount) {
    EXPECT_EQ(component_count(graphs::edgeless(3), {}), 3U);
    const auto c3 = graphs::triangle();
    EXPECT_EQ(component_count(c3, c3.all_edges()), 1U);
    const auto fig = graphs::square_with_diagonal();
    EXPECT_EQ(component_count(fig, EdgeSubset{0, 3}), 2U);
    EXPECT_THROW(component_count(fig, EdgeSubset{9}), InvalidSubset);
}

TEST(Multigraph, Rank) {
    const auto c3 = graphs::triangle();
    EXPECT_EQ(graph_rank(c3, c3.all_edges()), 2U);
    EXPECT_EQ(graph_rank(c3, {}), 0U);
    const auto fig = graphs::square_with_diagonal();
    EXPECT_EQ(graph_rank(fig, fig.all_edges()), 3U);
    EXPECT_EQ(graph_rank(graphs::single_loop(), EdgeSubset{0}), 0U);
}

TEST(Multigraph, FigureDeletion) {
    const auto fig = graphs::square_with_diagonal();
    const auto minus = delete_edges(fig, EdgeSubset{0, 3});
    EXPECT_EQ(minus.vertex_count(), 4U);
    EXPECT_EQ(minus.edge_count(), 3U);
    // A triangle on three vertices plus one isolated vertex.
    EXPECT_EQ(component_count(minus, {}), 4U);
    EXPECT_EQ(component_count(minus, minus.all_edges()), 2U);
    EXPECT_EQ(graph_rank(minus, minus.all_edges()), 2U);
    EXPECT_EQ(loops(minus), 0U);
    EXPECT_FALSE(minus.has_edge(EdgeId{0}));
    EXPECT_TRUE(minus.has_edge(EdgeId{4}));
}

TEST(Multigraph, FigureContraction) {
    const auto fig = graphs::square_with_diagonal();
    const auto over = contract_edges(fig, EdgeSubset{0, 3});
    EXPECT_EQ(over.vertex_count(), 2U);
    EXPECT_EQ(over.edge_count(), 3U);
    EXPECT_EQ(loops(over), 1U);
    const auto s = shape(over);
    EXPECT_EQ(std::count(s.begin(), s.end(), std::make_pair(Vertex{0}, Vertex{1})), 2);
}

TEST(Multigraph, TrivialMinors) {
    const auto fig = graphs::square_with_diagonal();
    EXPECT_EQ(delete_edges(fig, {}), fig);
    EXPECT_EQ(contract_edges(fig, {}), fig);
    const auto point = delete_edges(graphs::single_loop(), EdgeSubset{0});
    EXPECT_EQ(point.vertex_count(), 1U);
    EXPECT_EQ(point.edge_count(), 0U);
    const auto merged = contract_edges(graphs::single_edge(), EdgeSubset{0});
    EXPECT_EQ(merged.vertex_count(), 1U);
    EXPECT_EQ(merged.edge_count(), 0U);
    EXPECT_THROW(delete_edges(fig, EdgeSubset{5}), InvalidSubset);
    EXPECT_THROW(contract_edges(fig, EdgeSubset{5}), InvalidSubset);
}

TEST(MultigraphProperty, ComponentsMatchSearch) {
    oracle::Gen gen(3);
    for (int trial = 0; trial < 300; ++trial) {
        const auto g = gen.multigraph(7, 9);
        for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); mask += 1 + mask / 3) {
            const auto a = g.subset_from_mask(mask);
            ASSERT_EQ(component_count(g, a), oracle::components(g.vertex_count(), oracle::endpoints(g, mask)));
            ASSERT_EQ(graph_rank(g, a) + component_count(g, a), g.vertex_count());
        }
    }
}

TEST(MultigraphProperty, MinorsCommuteAndCount) {
    oracle::Gen gen(4);
    for (int trial = 0; trial < 200; ++trial) {
        const auto g = gen.multigraph(6, 8);
        const std::uint64_t all = (std::uint64_t{1} << g.edge_count()) - 1;
        const std::uint64_t f1 = gen.uniform(0, all);
        const std::uint64_t f2 = gen.uniform(0, all) & ~f1;
        const auto a = g.subset_from_mask(f1);
        const auto b = g.subset_from_mask(f2);
        const auto ab = g.subset_from_mask(f1 | f2);

        EXPECT_EQ(delete_edges(delete_edges(g, a), b), delete_edges(g, ab));
        EXPECT_EQ(contract_edges(contract_edges(g, a), b), contract_edges(g, ab));
        EXPECT_EQ(contract_edges(delete_edges(g, a), b), delete_edges(contract_edges(g, b), a));

        const auto over = contract_edges(g, a);
        EXPECT_EQ(over.vertex_count(), g.vertex_count() - graph_rank(g, a));
        EXPECT_EQ(over.edge_count(), g.edge_count() - a.size());
        EXPECT_EQ(delete_edges(g, a).edge_count(), g.edge_count() - a.size());
        // r(G/A) = r(G) - r(A).
        EXPECT_EQ(graph_rank(over, over.all_edges()), graph_rank(g, g.all_edges()) - graph_rank(g, a));
    }
}
