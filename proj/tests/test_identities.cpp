#include "oracles.hpp"

#include "potts/errors.hpp"
#include "potts/identities.hpp"
#include "potts/partition.hpp"

#include <gtest/gtest.h>

using namespace potts;

namespace {

LaurentPoly q(int e = 1) { return LaurentPoly::q(e); }
QMonomialWeight w(long num, long den = 1, int power = 0) { return {make_rational(num, den), power}; }

// (v/u)^E sum_F prod_{e in F} (u_e/v_e - 1) Z(G-F; u), from the oracle engine.
LaurentPoly deletion_rhs(const Multigraph& g, const WeightAssignment& v, const WeightAssignment& u) {
    LaurentPoly sum;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
        LaurentPoly term = oracle::z(delete_edges(g, g.subset_from_mask(mask)), u);
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            if (mask >> i & 1U) {
                const auto id = g.edges()[i].id.value;
                term *= (u.at(id) * v.at(id).inverse()).as_poly() - LaurentPoly(1L);
            }
        }
        sum += term;
    }
    for (const Edge& e : g.edges()) sum *= (v.at(e.id.value) * u.at(e.id.value).inverse()).as_poly();
    return sum;
}

// sum_F prod_{e in F} (v_e - u_e) Z(G/F; u), from the oracle engine.
LaurentPoly contraction_rhs(const Multigraph& g, const WeightAssignment& v, const WeightAssignment& u) {
    LaurentPoly sum;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.edge_count()); ++mask) {
        LaurentPoly term = oracle::z(contract_edges(g, g.subset_from_mask(mask)), u);
        for (std::size_t i = 0; i < g.edge_count(); ++i) {
            if (mask >> i & 1U) {
                const auto id = g.edges()[i].id.value;
                term *= v.at(id).as_poly() - u.at(id).as_poly();
            }
        }
        sum += term;
    }
    return sum;
}

// q^{r(E)-|E|} v^E Zt(M; q/v), from the oracle engine.
LaurentPoly dual_rhs(const Matroid& m, const WeightAssignment& v) {
    LaurentPoly out = oracle::zt(m, v.transformed(q_over));
    for (auto label : m.labels()) out *= v.at(label).as_poly();
    return out.shifted(static_cast<int>(m.full_rank()) - static_cast<int>(m.ground_size()));
}

std::size_t nonzero_summands(const IdentityReport& r) { return r.witness.size(); }

VerifyOptions with_witness() {
    VerifyOptions opts;
    opts.witness = true;
    return opts;
}

} // namespace

TEST(DeletionExpansion, EqualWeightsLeaveOnlyTheEmptySet) {
    const auto fig = graphs::square_with_diagonal();
    const auto v = WeightAssignment::uniform(fig, w(2, 3));
    const auto r = expand_deletions_graph(fig, v, v, with_witness());
    EXPECT_TRUE(r.pass) << r.counterexample;
    EXPECT_EQ(nonzero_summands(r), 1U);
    EXPECT_EQ(r.witness.front().subset, "{}");
}

TEST(DeletionExpansion, TriangleUnitAgainstTwo) {
    const auto c3 = graphs::triangle();
    const auto v = WeightAssignment::uniform(c3, w(1));
    const auto u = WeightAssignment::uniform(c3, w(2));
    const auto r = expand_deletions_graph(c3, v, u);
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.lhs, oracle::z(c3, v));
    EXPECT_EQ(r.rhs, deletion_rhs(c3, v, u));
}

TEST(DeletionExpansion, ZeroWeightsRejected) {
    const auto c3 = graphs::triangle();
    auto v = WeightAssignment::uniform(c3, w(1));
    const auto u = WeightAssignment::uniform(c3, w(2));
    v.set(1, w(0));
    EXPECT_THROW(expand_deletions_graph(c3, v, u), DegenerateWeight);
    EXPECT_THROW(expand_deletions_graph(c3, u, v), DegenerateWeight);
    EXPECT_NO_THROW(expand_contractions_graph(c3, v, u));
}

TEST(ContractionExpansion, SingleLoop) {
    const auto loop = graphs::single_loop();
    const auto r = expand_contractions_graph(loop, WeightAssignment::uniform(loop, w(3)),
                                             WeightAssignment::uniform(loop, w(1)), with_witness());
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.lhs, Rational(4) * q());
    EXPECT_EQ(r.rhs, Rational(4) * q());
    ASSERT_EQ(r.witness.size(), 2U);
    EXPECT_EQ(r.witness[0].term, Rational(2) * q());
    EXPECT_EQ(r.witness[1].term, Rational(2) * q());
}

TEST(ContractionExpansion, EqualWeightsLeaveOnlyTheEmptySet) {
    const auto c3 = graphs::triangle();
    const auto v = WeightAssignment::uniform(c3, w(-5, 2));
    const auto r = expand_contractions_graph(c3, v, v, with_witness());
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(nonzero_summands(r), 1U);
}

TEST(GraphExpansions, FigureGraphRandomWeights) {
    const auto fig = graphs::square_with_diagonal();
    oracle::Gen gen(31);
    for (int trial = 0; trial < 20; ++trial) {
        const auto v = gen.weights(fig, trial % 2 == 1);
        const auto u = gen.weights(fig, trial % 2 == 1);
        const auto del = expand_deletions_graph(fig, v, u);
        EXPECT_TRUE(del.pass) << del.counterexample;
        EXPECT_EQ(del.rhs, deletion_rhs(fig, v, u));
        const auto con = expand_contractions_graph(fig, v, u);
        EXPECT_TRUE(con.pass) << con.counterexample;
        EXPECT_EQ(con.rhs, contraction_rhs(fig, v, u));
        EXPECT_EQ(con.lhs, oracle::z(fig, v));
    }
}

TEST(MatroidExpansions, UniformExamples) {
    const auto u12 = Matroid::uniform(1, 2);
    const auto del = expand_deletions_matroid(u12, WeightAssignment::uniform(u12, w(1)),
                                              WeightAssignment::uniform(u12, w(2)));
    EXPECT_TRUE(del.pass);
    EXPECT_EQ(del.lhs, LaurentPoly(1L) + Rational(3) * q(-1));
    const auto u24 = Matroid::uniform(2, 4);
    const auto con = expand_contractions_matroid(u24, WeightAssignment::uniform(u24, w(1)),
                                                 WeightAssignment::uniform(u24, w(-1)));
    EXPECT_TRUE(con.pass);
    EXPECT_EQ(con.lhs, oracle::zt(u24, WeightAssignment::uniform(u24, w(1))));
    const auto same = expand_contractions_matroid(u24, WeightAssignment::uniform(u24, w(3)),
                                                  WeightAssignment::uniform(u24, w(3)), with_witness());
    EXPECT_TRUE(same.pass);
    EXPECT_EQ(nonzero_summands(same), 1U);
}

TEST(MatroidExpansions, BridgeToGraphs) {
    oracle::Gen gen(32);
    for (const auto& g : {graphs::triangle(), graphs::square_with_diagonal()}) {
        const auto v = gen.weights(g);
        const auto u = gen.weights(g);
        const auto bridge = contraction_bridge(g, v, u);
        EXPECT_TRUE(bridge.pass) << bridge.counterexample;
        const auto m = Matroid::cycle(g);
        EXPECT_EQ(expand_contractions_matroid(m, v, u).rhs.shifted(static_cast<int>(g.vertex_count())),
                  expand_contractions_graph(g, v, u).rhs);
        EXPECT_TRUE(expand_deletions_matroid(m, v, u).pass);
    }
}

TEST(DualTransform, Examples) {
    const auto u12 = Matroid::uniform(1, 2);
    const auto r = dual_transform(u12, WeightAssignment::uniform(u12, w(1)));
    EXPECT_TRUE(r.pass);
    EXPECT_EQ(r.lhs, LaurentPoly(1L) + Rational(3) * q(-1));
    const auto empty = dual_transform(Matroid::uniform(0, 0), {});
    EXPECT_TRUE(empty.pass);
    EXPECT_EQ(empty.lhs, LaurentPoly(1L));
    const auto c3 = Matroid::cycle(graphs::triangle());
    const auto minus = WeightAssignment::uniform(c3, w(-1));
    const auto r3 = dual_transform(c3, minus);
    EXPECT_TRUE(r3.pass);
    EXPECT_EQ(r3.lhs, oracle::zt(dual(c3), minus));
    EXPECT_EQ(r3.rhs, dual_rhs(c3, minus));
    EXPECT_TRUE(dual_transform_twice(c3, minus).pass);
}

TEST(DualDerivation, Examples) {
    const auto u12 = Matroid::uniform(1, 2);
    const auto r = derive_contraction_from_biggs(u12, WeightAssignment::uniform(u12, w(2)),
                                                 WeightAssignment::uniform(u12, w(3)), with_witness());
    EXPECT_TRUE(r.pass) << r.counterexample;
    for (const auto& t : r.witness) {
        ASSERT_TRUE(t.alternate.has_value());
        EXPECT_EQ(t.term, *t.alternate) << t.subset;
    }
    const auto same = derive_contraction_from_biggs(u12, WeightAssignment::uniform(u12, w(2)),
                                                    WeightAssignment::uniform(u12, w(2)), with_witness());
    EXPECT_TRUE(same.pass);
    EXPECT_EQ(nonzero_summands(same), 1U);
}

TEST(Judge, CorruptedCoefficientFails) {
    const auto c3 = graphs::triangle();
    auto r = expand_deletions_graph(c3, WeightAssignment::uniform(c3, w(1)), WeightAssignment::uniform(c3, w(2)));
    ASSERT_TRUE(r.pass);
    r.rhs.add_term(2, Rational(1));
    judge(r);
    EXPECT_FALSE(r.pass);
    EXPECT_EQ(r.counterexample, "coefficient of q^2: lhs 3, rhs 4");
}

TEST(Judge, CorruptedSummandFails) {
    const auto u12 = Matroid::uniform(1, 2);
    auto r = derive_contraction_from_biggs(u12, WeightAssignment::uniform(u12, w(2)),
                                           WeightAssignment::uniform(u12, w(3)), with_witness());
    ASSERT_TRUE(r.pass);
    r.witness.back().alternate = *r.witness.back().alternate + LaurentPoly(1L);
    judge(r);
    EXPECT_FALSE(r.pass);
    EXPECT_NE(r.counterexample.find("summand F="), std::string::npos);
}

TEST(IdentityProperty, RandomMultigraphs) {
    oracle::Gen gen(33);
    for (int trial = 0; trial < 120; ++trial) {
        const auto g = gen.multigraph(5, 7);
        const auto v = gen.weights(g, trial % 4 == 0);
        const auto u = gen.weights(g, trial % 4 == 1);
        const auto m = Matroid::cycle(g);
        for (const auto& r : {expand_deletions_graph(g, v, u), expand_contractions_graph(g, v, u),
                              expand_deletions_matroid(m, v, u), expand_contractions_matroid(m, v, u),
                              dual_transform(m, v), dual_transform_twice(m, v),
                              derive_contraction_from_biggs(m, v, u), engine_agreement(g, v),
                              normalization_bridge(g, v), contraction_bridge(g, v, u)}) {
            ASSERT_TRUE(r.pass) << r.identity << " on " << describe(g) << ": " << r.counterexample;
        }
        ASSERT_EQ(expand_deletions_graph(g, v, u).rhs, deletion_rhs(g, v, u));
        ASSERT_EQ(dual_transform(m, v).rhs, dual_rhs(m, v));
    }
}

TEST(IdentityProperty, UniformMatroids) {
    oracle::Gen gen(34);
    for (std::size_t n = 0; n <= 7; ++n) {
        for (std::size_t r = 0; r <= n; ++r) {
            const auto m = Matroid::uniform(r, n);
            const auto v = gen.weights(m);
            const auto u = gen.weights(m);
            for (const auto& rep : {expand_deletions_matroid(m, v, u), expand_contractions_matroid(m, v, u),
                                    dual_transform(m, v), dual_transform_twice(m, v),
                                    derive_contraction_from_biggs(m, v, u)}) {
                ASSERT_TRUE(rep.pass) << rep.identity << " on " << describe(m) << ": " << rep.counterexample;
            }
            ASSERT_EQ(dual_transform(m, v).lhs, oracle::zt(dual(m), v));
        }
    }
}
