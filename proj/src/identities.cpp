#include "potts/identities.hpp"

#include "potts/errors.hpp"

#include <set>
#include <sstream>

namespace potts {

namespace {

std::string subset_label(const Multigraph& g, std::uint64_t mask) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    const EdgeSubset subset = g.subset_from_mask(mask);
    for (EdgeId id : subset.members()) {
        if (!first) out << ',';
        first = false;
        out << id.value;
    }
    out << '}';
    return out.str();
}

std::string subset_label(const Matroid& m, std::uint64_t mask) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (std::size_t i = 0; i < m.ground_size(); ++i) {
        if ((mask >> i & 1U) == 0) continue;
        if (!first) out << ',';
        first = false;
        out << m.labels()[i];
    }
    out << '}';
    return out.str();
}

void require_nonzero(std::span<const QMonomialWeight> weights, const char* name) {
    for (std::size_t i = 0; i < weights.size(); ++i) {
        if (weights[i].is_zero()) {
            throw DegenerateWeight(std::string("weight ") + name + " at position " + std::to_string(i) +
                                   " is zero but appears in a denominator");
        }
    }
}

void require_enumerable(std::size_t n, const EngineLimits& limits) {
    if (n > limits.subset_cap || n > 62) {
        throw TooLarge("identity over " + std::to_string(n) + " elements exceeds the subset cap of " +
                       std::to_string(limits.subset_cap));
    }
}

// prod_{i in mask} factors[i]
LaurentPoly product_over(std::span<const LaurentPoly> factors, std::uint64_t mask) {
    LaurentPoly out(1L);
    while (mask != 0) {
        out *= factors[static_cast<std::size_t>(std::countr_zero(mask))];
        mask &= mask - 1;
    }
    return out;
}

std::vector<LaurentPoly> combine_all(std::span<const QMonomialWeight> v, std::span<const QMonomialWeight> u,
                                     CombineMode mode) {
    std::vector<LaurentPoly> out;
    out.reserve(v.size());
    for (std::size_t i = 0; i < v.size(); ++i) out.push_back(weight_combine(v[i], u[i], mode));
    return out;
}

QMonomialWeight monomial_product(std::span<const QMonomialWeight> weights) {
    QMonomialWeight out(Rational(1), 0);
    for (const auto& w : weights) out = out * w;
    return out;
}

// (v/u)^E as a monomial.
QMonomialWeight growth_prefactor(std::span<const QMonomialWeight> v, std::span<const QMonomialWeight> u) {
    return monomial_product(v) * monomial_product(u).inverse();
}

IdentityReport start(std::string identity, std::string instance, const VerifyOptions& opts) {
    IdentityReport report;
    report.identity = std::move(identity);
    report.instance = opts.instance.empty() ? std::move(instance) : opts.instance;
    return report;
}

void record(IdentityReport& report, const VerifyOptions& opts, std::string subset, LaurentPoly coefficient,
            LaurentPoly minor_value, const LaurentPoly& term, std::optional<LaurentPoly> alternate = {}) {
    report.rhs += term;
    if (opts.witness || alternate.has_value()) {
        report.witness.push_back(
            {std::move(subset), std::move(coefficient), std::move(minor_value), term, std::move(alternate)});
    }
}

IdentityReport finish(IdentityReport report) {
    judge(report);
    return report;
}

} // namespace

void judge(IdentityReport& report) {
    report.counterexample.clear();
    for (const auto& w : report.witness) {
        if (w.alternate.has_value() && *w.alternate != w.term) {
            report.counterexample = "summand F=" + w.subset + ": " + to_string(w.term) + " vs " + to_string(*w.alternate);
            report.pass = false;
            return;
        }
    }
    if (report.lhs == report.rhs) {
        report.pass = true;
        return;
    }
    std::set<int, std::greater<>> exponents;
    for (const auto& [e, c] : report.lhs.terms()) exponents.insert(e);
    for (const auto& [e, c] : report.rhs.terms()) exponents.insert(e);
    for (int e : exponents) {
        const Rational a = report.lhs.coefficient(e);
        const Rational b = report.rhs.coefficient(e);
        if (a != b) {
            report.counterexample =
                "coefficient of q^" + std::to_string(e) + ": lhs " + to_string(a) + ", rhs " + to_string(b);
            break;
        }
    }
    report.pass = false;
}

std::string describe(const Multigraph& g) {
    return "graph(V=" + std::to_string(g.vertex_count()) + ",E=" + std::to_string(g.edge_count()) + ")";
}

std::string describe(const Matroid& m) {
    return m.provenance() + "[n=" + std::to_string(m.ground_size()) + "]";
}

IdentityReport expand_deletions_graph(const Multigraph& g, const WeightAssignment& v, const WeightAssignment& u,
                                      const VerifyOptions& opts) {
    require_enumerable(g.edge_count(), opts.limits);
    const auto vw = v.for_graph(g);
    const auto uw = u.for_graph(g);
    require_nonzero(vw, "v");
    require_nonzero(uw, "u");

    auto report = start("deletion-expansion", describe(g), opts);
    report.lhs = z_subset(g, v, opts.limits);
    const auto ratios = combine_all(vw, uw, CombineMode::ratio_minus_one);
    const LaurentPoly prefactor = growth_prefactor(vw, uw).as_poly();
    const std::uint64_t count = std::uint64_t{1} << g.edge_count();
    for (std::uint64_t f = 0; f < count; ++f) {
        LaurentPoly coefficient = product_over(ratios, f);
        if (coefficient.is_zero()) continue;
        LaurentPoly minor = z_subset(delete_edges(g, g.subset_from_mask(f)), u, opts.limits);
        const LaurentPoly term = prefactor * coefficient * minor;
        record(report, opts, subset_label(g, f), std::move(coefficient), std::move(minor), term);
    }
    return finish(std::move(report));
}

IdentityReport expand_contractions_graph(const Multigraph& g, const WeightAssignment& v,
                                         const WeightAssignment& u, const VerifyOptions& opts) {
    require_enumerable(g.edge_count(), opts.limits);
    const auto vw = v.for_graph(g);
    const auto uw = u.for_graph(g);

    auto report = start("contraction-expansion", describe(g), opts);
    report.lhs = z_subset(g, v, opts.limits);
    const auto increments = combine_all(vw, uw, CombineMode::difference);
    const std::uint64_t count = std::uint64_t{1} << g.edge_count();
    for (std::uint64_t f = 0; f < count; ++f) {
        LaurentPoly coefficient = product_over(increments, f);
        if (coefficient.is_zero()) continue;
        LaurentPoly minor = z_subset(contract_edges(g, g.subset_from_mask(f)), u, opts.limits);
        const LaurentPoly term = coefficient * minor;
        record(report, opts, subset_label(g, f), std::move(coefficient), std::move(minor), term);
    }
    return finish(std::move(report));
}

IdentityReport expand_deletions_matroid(const Matroid& m, const WeightAssignment& v, const WeightAssignment& u,
                                        const VerifyOptions& opts) {
    require_enumerable(m.ground_size(), opts.limits);
    const auto vw = v.for_matroid(m);
    const auto uw = u.for_matroid(m);
    require_nonzero(vw, "v");
    require_nonzero(uw, "u");

    auto report = start("matroid-deletion-expansion", describe(m), opts);
    report.lhs = zt_matroid(m, v, opts.limits);
    const auto ratios = combine_all(vw, uw, CombineMode::ratio_minus_one);
    const LaurentPoly prefactor = growth_prefactor(vw, uw).as_poly();
    const std::uint64_t count = std::uint64_t{1} << m.ground_size();
    for (std::uint64_t f = 0; f < count; ++f) {
        LaurentPoly coefficient = product_over(ratios, f);
        if (coefficient.is_zero()) continue;
        LaurentPoly minor = zt_matroid(delete_elements(m, {f}), u, opts.limits);
        const LaurentPoly term = prefactor * coefficient * minor;
        record(report, opts, subset_label(m, f), std::move(coefficient), std::move(minor), term);
    }
    return finish(std::move(report));
}

IdentityReport expand_contractions_matroid(const Matroid& m, const WeightAssignment& v,
                                           const WeightAssignment& u, const VerifyOptions& opts) {
    require_enumerable(m.ground_size(), opts.limits);
    const auto vw = v.for_matroid(m);
    const auto uw = u.for_matroid(m);

    auto report = start("matroid-contraction-expansion", describe(m), opts);
    report.lhs = zt_matroid(m, v, opts.limits);
    const auto increments = combine_all(vw, uw, CombineMode::difference);
    const std::uint64_t count = std::uint64_t{1} << m.ground_size();
    for (std::uint64_t f = 0; f < count; ++f) {
        LaurentPoly coefficient = product_over(increments, f);
        if (coefficient.is_zero()) continue;
        coefficient = coefficient.shifted(-static_cast<int>(m.rank({f})));
        LaurentPoly minor = zt_matroid(contract_elements(m, {f}), u, opts.limits);
        const LaurentPoly term = coefficient * minor;
        record(report, opts, subset_label(m, f), std::move(coefficient), std::move(minor), term);
    }
    return finish(std::move(report));
}

IdentityReport dual_transform(const Matroid& m, const WeightAssignment& v, const VerifyOptions& opts) {
    require_enumerable(m.ground_size(), opts.limits);
    const auto vw = v.for_matroid(m);
    require_nonzero(vw, "v");

    auto report = start("dual-transform", describe(m), opts);
    report.lhs = zt_matroid(dual(m), v, opts.limits);
    const int shift = static_cast<int>(m.full_rank()) - static_cast<int>(m.ground_size());
    report.rhs = (monomial_product(vw).as_poly() * zt_matroid(m, v.transformed(q_over), opts.limits)).shifted(shift);
    return finish(std::move(report));
}

IdentityReport dual_transform_twice(const Matroid& m, const WeightAssignment& v, const VerifyOptions& opts) {
    require_enumerable(m.ground_size(), opts.limits);
    const auto vw = v.for_matroid(m);
    require_nonzero(vw, "v");

    auto report = start("dual-transform-twice", describe(m), opts);
    report.lhs = zt_matroid(m, v, opts.limits);
    const int n = static_cast<int>(m.ground_size());
    const int r = static_cast<int>(m.full_rank());
    const int dual_rank = n - r;
    // Z~(M**; v) = q^{r*(E)-|E|} v^E Z~(M*; q/v)
    //            = q^{r*(E)-|E|} v^E q^{r(E)-|E|} (q/v)^E Z~(M; v)
    std::vector<QMonomialWeight> inverted;
    for (const auto& w : vw) inverted.push_back(q_over(w));
    const LaurentPoly outer = monomial_product(vw).as_poly().shifted(dual_rank - n);
    const LaurentPoly inner = monomial_product(inverted).as_poly().shifted(r - n);
    report.rhs = outer * inner * zt_matroid(m, v, opts.limits);
    return finish(std::move(report));
}

IdentityReport derive_contraction_from_biggs(const Matroid& m, const WeightAssignment& v,
                                             const WeightAssignment& u, const VerifyOptions& opts) {
    require_enumerable(m.ground_size(), opts.limits);
    const auto vw = v.for_matroid(m);
    const auto uw = u.for_matroid(m);
    require_nonzero(vw, "v");
    require_nonzero(uw, "u");

    auto report = start("dual-derivation", describe(m), opts);
    report.lhs = zt_matroid(m, v, opts.limits);

    // Deletion expansion of M* at the substituted weights v' = q/v, u' = q/u.
    const WeightAssignment v_dual = v.transformed(q_over);
    const WeightAssignment u_dual = u.transformed(q_over);
    const auto vdw = v_dual.for_matroid(m);
    const auto udw = u_dual.for_matroid(m);
    const Matroid m_star = dual(m);
    const auto ratios = combine_all(vdw, udw, CombineMode::ratio_minus_one);
    const auto increments = combine_all(vw, uw, CombineMode::difference);

    // Undo the transform on the left side: Z~(M; v) = q^{|E|-r(E)} v'^{-E} Z~(M*; v').
    const int n = static_cast<int>(m.ground_size());
    const int r = static_cast<int>(m.full_rank());
    const LaurentPoly unwind =
        (monomial_product(vdw).inverse() * growth_prefactor(vdw, udw)).as_poly().shifted(n - r);

    const std::uint64_t count = std::uint64_t{1} << m.ground_size();
    for (std::uint64_t f = 0; f < count; ++f) {
        LaurentPoly direct_coefficient = product_over(increments, f);
        LaurentPoly dual_coefficient = product_over(ratios, f);
        if (direct_coefficient.is_zero() && dual_coefficient.is_zero()) continue;

        LaurentPoly dual_minor = zt_matroid(delete_elements(m_star, {f}), u_dual, opts.limits);
        const LaurentPoly derived = unwind * dual_coefficient * dual_minor;

        LaurentPoly direct = direct_coefficient.shifted(-static_cast<int>(m.rank({f})));
        direct *= zt_matroid(contract_elements(m, {f}), u, opts.limits);
        record(report, opts, subset_label(m, f), std::move(dual_coefficient), std::move(dual_minor), derived,
               std::move(direct));
    }
    if (!opts.witness) {
        // Per-summand checks need the witness; judge first, then drop it.
        judge(report);
        report.witness.clear();
        return report;
    }
    return finish(std::move(report));
}

IdentityReport engine_agreement(const Multigraph& g, const WeightAssignment& v, const VerifyOptions& opts) {
    auto report = start("engine-agreement", describe(g), opts);
    report.lhs = z_delcon(g, v);
    report.rhs = z_subset(g, v, opts.limits);
    return finish(std::move(report));
}

IdentityReport normalization_bridge(const Multigraph& g, const WeightAssignment& v, const VerifyOptions& opts) {
    auto report = start("normalization-bridge", describe(g), opts);
    report.lhs = z_subset(g, v, opts.limits);
    report.rhs = zt_matroid(Matroid::cycle(g), v, opts.limits).shifted(static_cast<int>(g.vertex_count()));
    return finish(std::move(report));
}

IdentityReport contraction_bridge(const Multigraph& g, const WeightAssignment& v, const WeightAssignment& u,
                                  const VerifyOptions& opts) {
    VerifyOptions with_terms = opts;
    with_terms.witness = true;
    const auto graph_side = expand_contractions_graph(g, v, u, with_terms);
    const auto matroid_side = expand_contractions_matroid(Matroid::cycle(g), v, u, with_terms);

    auto report = start("contraction-bridge", describe(g), opts);
    report.lhs = graph_side.rhs;
    const int vertices = static_cast<int>(g.vertex_count());
    // Both expansions enumerate F in the same order and skip the same zero terms.
    for (std::size_t i = 0; i < matroid_side.witness.size(); ++i) {
        const auto& mt = matroid_side.witness[i];
        std::optional<LaurentPoly> graph_term;
        if (i < graph_side.witness.size() && graph_side.witness[i].subset == mt.subset) {
            graph_term = graph_side.witness[i].term;
        } else {
            graph_term = LaurentPoly::monomial(Rational(0), 0);
        }
        record(report, with_terms, mt.subset, mt.coefficient, mt.minor_value, mt.term.shifted(vertices),
               std::move(graph_term));
    }
    if (graph_side.witness.size() != matroid_side.witness.size()) {
        report.counterexample = "summand counts differ";
        report.pass = false;
        return report;
    }
    if (!opts.witness) {
        judge(report);
        report.witness.clear();
        return report;
    }
    return finish(std::move(report));
}

} // namespace potts
