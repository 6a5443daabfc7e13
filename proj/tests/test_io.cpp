#include "oracles.hpp"

#include "potts/errors.hpp"
#include "potts/io.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace potts;

namespace {

GraphDocument graph_from(const std::string& text) {
    std::istringstream in(text);
    return parse_graph(in);
}

int parse_error_line(const std::string& text) {
    try {
        std::istringstream in(text);
        parse_document(in);
    } catch (const ParseError& e) {
        return static_cast<int>(e.line());
    }
    return -1;
}

} // namespace

TEST(GraphFormat, ParsesWeightsAndOrientation) {
    const auto doc = graph_from("c comment\np graph 3 3\ne 0 0 1\ne 1 1 2\n\ne 2 2 0\nw 1 -1/2*q^1\no 2 0 2\n");
    EXPECT_EQ(doc.graph, graphs::triangle());
    EXPECT_EQ(doc.weights.at(1), QMonomialWeight(make_rational(-1, 2), 1));
    EXPECT_EQ(doc.orientation.at(EdgeId{2}).tail, 0U);
    EXPECT_EQ(doc.orientation.at(EdgeId{0}).tail, 0U);
    EXPECT_THROW(doc.numeric_weights(), IncompleteAssignment);
}

TEST(GraphFormat, ErrorsCarryLineNumbers) {
    EXPECT_EQ(parse_error_line("p graph 2 1\ne 0 0 5\n"), 2);
    EXPECT_EQ(parse_error_line("p graph 2 2\ne 0 0 1\nc\ne 0 1 0\n"), 4);
    EXPECT_EQ(parse_error_line("p graph 2 1\ne 0 0 1\nw 3 1\n"), 3);
    EXPECT_EQ(parse_error_line("p graph 2 1\ne 0 0 1\nw 0 1/0\n"), 3);
    EXPECT_EQ(parse_error_line("p graph 2 2\ne 0 0 1\n"), 2);
    EXPECT_EQ(parse_error_line("e 0 0 1\n"), 1);
    EXPECT_EQ(parse_error_line("p graph 2 1\ne 0 0 1\no 0 1 1\n"), 3);
    EXPECT_EQ(parse_error_line("p matroid 1\nr 0 0\nr 1 2\n"), -1);
    EXPECT_EQ(parse_error_line("p matroid 1\nr 0 0\nr 2 1\n"), 3);
    EXPECT_EQ(parse_error_line("p matroid 1\nr 0 0\n"), 2);
}

TEST(MatroidFormat, ParsesHexMasks) {
    std::istringstream in("p matroid 2\nr 0x0 0\nr 1 1\nr 2 1\nr 3 1\n");
    const auto doc = parse_matroid(in);
    EXPECT_TRUE(same_rank_function(doc.matroid(), Matroid::uniform(1, 2)));
    std::istringstream bad("p matroid 2\nr 0 0\nr 1 1\nr 2 1\nr 3 3\n");
    EXPECT_THROW(parse_matroid(bad).matroid(), AxiomViolation);
}

TEST(FormatProperty, RoundTrip) {
    oracle::Gen gen(51);
    for (int trial = 0; trial < 100; ++trial) {
        GraphDocument doc;
        doc.graph = gen.multigraph(6, 9);
        doc.orientation = Orientation::flipped(doc.graph, gen.uniform(0, 511));
        for (const Edge& e : doc.graph.edges()) {
            if (gen.coin(0.7)) doc.weights[e.id.value] = QMonomialWeight(gen.nonzero_rational(), 0);
        }
        std::ostringstream out;
        write_graph(out, doc);
        std::istringstream in(out.str());
        const auto back = parse_graph(in);
        ASSERT_EQ(back.graph, doc.graph);
        ASSERT_EQ(back.weights, doc.weights);
        for (const Edge& e : doc.graph.edges()) {
            ASSERT_EQ(back.orientation.at(e.id).tail, doc.orientation.at(e.id).tail);
        }
        std::ostringstream again;
        write_graph(again, back);
        ASSERT_EQ(again.str(), out.str());

        const auto table = tabulate(Matroid::cycle(doc.graph), 9);
        std::ostringstream mout;
        write_matroid(mout, table);
        std::istringstream min(mout.str());
        const auto mback = parse_matroid(min);
        ASSERT_EQ(mback.ranks, table.ranks);
    }
}
