#include "potts/specialize.hpp"

#include <stdexcept>

namespace potts {

namespace {

const QMonomialWeight kMinusOne{Rational(-1), 0};
const QMonomialWeight kMinusQ{Rational(-1), 1};

std::uint64_t checked_power(std::uint64_t base, std::size_t exponent, std::uint64_t guard, const char* what) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < exponent; ++i) {
        if (base != 0 && out > guard / base) {
            throw TooLarge(std::string(what) + " enumeration exceeds the guard of " + std::to_string(guard));
        }
        out *= base;
    }
    return out;
}

LaurentPoly sign_power(std::size_t n) { return LaurentPoly(n % 2 == 0 ? 1L : -1L); }

LaurentPoly one_minus_q() { return LaurentPoly(1L) - LaurentPoly::q(); }

} // namespace

LaurentPoly chromatic_poly(const Multigraph& g, const EngineLimits& limits) {
    return z_subset(g, WeightAssignment::uniform(g, kMinusOne), limits);
}

LaurentPoly flow_poly(const Multigraph& g, const EngineLimits& limits) {
    LaurentPoly z = z_subset(g, WeightAssignment::uniform(g, kMinusQ), limits);
    LaurentPoly out = (sign_power(g.edge_count()) * z).shifted(-static_cast<int>(g.vertex_count()));
    if (!out.is_zero() && out.min_exponent() < 0) {
        throw std::logic_error("flow polynomial with a negative exponent: " + to_string(out));
    }
    return out;
}

Orientation Orientation::natural(const Multigraph& g) {
    Orientation o;
    for (const Edge& e : g.edges()) o.arcs_[e.id] = {e.a, e.b};
    return o;
}

Orientation Orientation::flipped(const Multigraph& g, std::uint64_t flip_mask) {
    Orientation o = natural(g);
    for (std::size_t i = 0; i < g.edge_count() && i < 64; ++i) {
        if ((flip_mask >> i & 1U) == 0) continue;
        const Edge& e = g.edges()[i];
        o.arcs_[e.id] = {e.b, e.a};
    }
    return o;
}

void Orientation::set(const Multigraph& g, EdgeId id, Arc arc) {
    const Edge& e = g.edge(id);
    const bool forward = arc.tail == e.a && arc.head == e.b;
    const bool backward = arc.tail == e.b && arc.head == e.a;
    if (!forward && !backward) {
        throw InvalidGraph("orientation of edge " + std::to_string(id.value) + " does not match its endpoints");
    }
    arcs_[id] = arc;
}

const Orientation::Arc& Orientation::at(EdgeId id) const {
    auto it = arcs_.find(id);
    if (it == arcs_.end()) throw InvalidSubset("edge " + std::to_string(id.value) + " has no orientation");
    return it->second;
}

std::uint64_t count_proper_colorings(const Multigraph& g, unsigned q, std::uint64_t guard) {
    if (q == 0) throw InvalidParameter("q must be positive");
    for (const Edge& e : g.edges()) {
        if (e.is_loop()) return 0;
    }
    const std::size_t n = g.vertex_count();
    const std::uint64_t total = checked_power(q, n, guard, "coloring");
    std::vector<unsigned> color(n, 0);
    std::uint64_t proper = 0;
    for (std::uint64_t step = 0; step < total; ++step) {
        bool ok = true;
        for (const Edge& e : g.edges()) {
            if (color[e.a] == color[e.b]) {
                ok = false;
                break;
            }
        }
        if (ok) ++proper;
        // Odometer increment.
        for (std::size_t i = 0; i < n; ++i) {
            if (++color[i] < q) break;
            color[i] = 0;
        }
    }
    return proper;
}

std::uint64_t count_nowhere_zero_flows(const Multigraph& g, unsigned q, const Orientation& o, std::uint64_t guard) {
    if (q == 0) throw InvalidParameter("q must be positive");
    const std::size_t m = g.edge_count();
    if (m == 0) return 1;
    if (q == 1) return 0;
    std::vector<Orientation::Arc> arcs;
    arcs.reserve(m);
    for (const Edge& e : g.edges()) arcs.push_back(o.at(e.id));
    const std::uint64_t total = checked_power(q - 1, m, guard, "flow");

    std::vector<unsigned> value(m, 1);
    std::vector<long long> net(g.vertex_count());
    std::uint64_t flows = 0;
    for (std::uint64_t step = 0; step < total; ++step) {
        std::fill(net.begin(), net.end(), 0);
        for (std::size_t i = 0; i < m; ++i) {
            // Outflow minus inflow; a loop adds and removes the same amount.
            net[arcs[i].tail] += value[i];
            net[arcs[i].head] -= value[i];
        }
        bool conserved = true;
        for (long long x : net) {
            if (x % static_cast<long long>(q) != 0) {
                conserved = false;
                break;
            }
        }
        if (conserved) ++flows;
        for (std::size_t i = 0; i < m; ++i) {
            if (++value[i] < q) break;
            value[i] = 1;
        }
    }
    return flows;
}

std::vector<IdentityReport> verify_specialization_proofs(const Multigraph& g, unsigned q, const VerifyOptions& opts) {
    if (q == 0) throw InvalidParameter("q must be positive");
    const std::size_t m = g.edge_count();
    if (m > opts.limits.subset_cap || m > kMaxInversionSize) {
        throw TooLarge("specialization sums over " + std::to_string(m) + " edges");
    }
    const Rational x(q);
    const std::string instance = (opts.instance.empty() ? describe(g) : opts.instance) + " q=" + std::to_string(q);
    const std::uint64_t count = std::uint64_t{1} << m;
    const auto rank_all = static_cast<int>(graph_rank(g, g.all_edges()));

    auto power = [&x](int e) {
        Rational out(1);
        for (int i = 0; i < e; ++i) out *= x;
        return out;
    };

    IdentityReport colorings;
    colorings.identity = "coloring-sum";
    colorings.instance = instance;
    colorings.lhs = LaurentPoly(power(static_cast<int>(g.vertex_count())));

    IdentityReport flows;
    flows.identity = "flow-sum";
    flows.instance = instance;
    flows.lhs = LaurentPoly(power(static_cast<int>(m) - rank_all));

    // f(A) = q^{k(A)} and f(A) = q^{|E-A| - r(E-A)} for the inversion step.
    auto color_f = SubsetFunction<Rational>::filled(m, Rational(0));
    auto flow_f = SubsetFunction<Rational>::filled(m, Rational(0));

    const std::uint64_t all = count - 1;
    for (std::uint64_t f = 0; f < count; ++f) {
        const EdgeSubset subset = g.subset_from_mask(f);
        const Rational chi = chromatic_poly(contract_edges(g, subset), opts.limits).evaluate(x);
        const Rational chi_star = flow_poly(delete_edges(g, subset), opts.limits).evaluate(x);
        colorings.rhs += LaurentPoly(chi);
        flows.rhs += LaurentPoly(chi_star);
        if (opts.witness) {
            const std::string label = "mask=" + std::to_string(f);
            colorings.witness.push_back({label, LaurentPoly(1L), LaurentPoly(chi), LaurentPoly(chi), {}});
            flows.witness.push_back({label, LaurentPoly(1L), LaurentPoly(chi_star), LaurentPoly(chi_star), {}});
        }

        color_f[f] = power(static_cast<int>(component_count(g, subset)));
        const EdgeSubset rest = g.subset_from_mask(all & ~f);
        const int nullity = static_cast<int>(rest.size()) - static_cast<int>(graph_rank(g, rest));
        flow_f[f] = power(nullity);
    }
    judge(colorings);
    judge(flows);

    IdentityReport color_inverse;
    color_inverse.identity = "coloring-inversion";
    color_inverse.instance = instance;
    color_inverse.lhs = LaurentPoly(chromatic_poly(g, opts.limits).evaluate(x));
    color_inverse.rhs = LaurentPoly(mobius_invert(color_f)[0]);
    judge(color_inverse);

    IdentityReport flow_inverse;
    flow_inverse.identity = "flow-inversion";
    flow_inverse.instance = instance;
    flow_inverse.lhs = LaurentPoly(flow_poly(g, opts.limits).evaluate(x));
    flow_inverse.rhs = LaurentPoly(mobius_invert(flow_f)[0]);
    judge(flow_inverse);

    return {colorings, flows, color_inverse, flow_inverse};
}

std::vector<IdentityReport> verify_coloring_flow_expansions(const Multigraph& g, const VerifyOptions& opts) {
    const std::size_t m = g.edge_count();
    if (m > opts.limits.subset_cap || m > 62) throw TooLarge("expansion over " + std::to_string(m) + " edges");
    const std::string instance = opts.instance.empty() ? describe(g) : opts.instance;
    const std::uint64_t count = std::uint64_t{1} << m;
    const int vertices = static_cast<int>(g.vertex_count());
    const int edges = static_cast<int>(m);
    const LaurentPoly base = one_minus_q();

    IdentityReport coloring;
    coloring.identity = "coloring-expansion";
    coloring.instance = instance;
    coloring.lhs = chromatic_poly(g, opts.limits);

    IdentityReport flow;
    flow.identity = "flow-expansion";
    flow.instance = instance;
    flow.lhs = flow_poly(g, opts.limits);

    const LaurentPoly color_prefactor = sign_power(m).shifted(vertices - edges);
    const LaurentPoly flow_prefactor = sign_power(m).shifted(-vertices);
    for (std::uint64_t f = 0; f < count; ++f) {
        const EdgeSubset subset = g.subset_from_mask(f);
        const LaurentPoly coefficient = base.pow(static_cast<unsigned>(subset.size()));
        const LaurentPoly chi_star = flow_poly(delete_edges(g, subset), opts.limits);
        const LaurentPoly chi = chromatic_poly(contract_edges(g, subset), opts.limits);
        const LaurentPoly color_term = color_prefactor * coefficient * chi_star;
        const LaurentPoly flow_term = flow_prefactor * coefficient * chi;
        coloring.rhs += color_term;
        flow.rhs += flow_term;
        if (opts.witness) {
            const std::string label = "mask=" + std::to_string(f);
            coloring.witness.push_back({label, coefficient, chi_star, color_term, {}});
            flow.witness.push_back({label, coefficient, chi, flow_term, {}});
        }
    }
    judge(coloring);
    judge(flow);

    VerifyOptions sub = opts;
    sub.instance = instance;
    auto from_deletions = expand_deletions_graph(g, WeightAssignment::uniform(g, kMinusOne),
                                                 WeightAssignment::uniform(g, kMinusQ), sub);
    from_deletions.identity = "coloring-expansion/deletion-expansion";
    auto from_contractions = expand_contractions_graph(g, WeightAssignment::uniform(g, kMinusQ),
                                                       WeightAssignment::uniform(g, kMinusOne), sub);
    from_contractions.identity = "flow-expansion/contraction-expansion";
    return {coloring, flow, from_deletions, from_contractions};
}

} // namespace potts
