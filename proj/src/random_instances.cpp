#include "potts/random_instances.hpp"

#include "potts/errors.hpp"

#include <algorithm>
#include <vector>

namespace potts {

Rng instance_rng(std::uint64_t seed, std::uint64_t index) {
    std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                      static_cast<std::uint32_t>(index), static_cast<std::uint32_t>(index >> 32)};
    return Rng(seq);
}

Multigraph random_multigraph(Rng& rng, const RandomGraphParams& params) {
    if (params.max_vertices == 0) throw InvalidParameter("max_vertices must be positive");
    std::uniform_int_distribution<std::size_t> vertex_count(1, params.max_vertices);
    std::uniform_int_distribution<std::size_t> edge_count(0, params.max_edges);
    std::uniform_real_distribution<double> coin(0.0, 1.0);

    const std::size_t n = vertex_count(rng);
    const std::size_t m = edge_count(rng);
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    std::vector<Edge> edges;
    edges.reserve(m);
    for (std::uint32_t id = 0; id < m; ++id) {
        Edge e{EdgeId{id}, 0, 0};
        if (coin(rng) < params.loop_probability || n == 1) {
            e.a = e.b = pick(rng);
        } else if (!edges.empty() && coin(rng) < params.parallel_probability) {
            std::uniform_int_distribution<std::size_t> earlier(0, edges.size() - 1);
            const Edge& twin = edges[earlier(rng)];
            e.a = twin.a;
            e.b = twin.b;
        } else {
            e.a = pick(rng);
            do {
                e.b = pick(rng);
            } while (e.b == e.a);
        }
        edges.push_back(e);
    }
    return Multigraph(n, std::move(edges));
}

QMonomialWeight random_nonzero_weight(Rng& rng, const RandomWeightParams& params) {
    std::uniform_int_distribution<long> numerator(1, params.max_numerator);
    std::uniform_int_distribution<long> denominator(1, params.max_denominator);
    std::bernoulli_distribution negative(0.5);
    const long num = numerator(rng);
    const long den = denominator(rng);
    return {make_rational(negative(rng) ? -num : num, den), 0};
}

WeightAssignment random_weights(Rng& rng, const Multigraph& g, const RandomWeightParams& params) {
    WeightAssignment out;
    for (const Edge& e : g.edges()) out.set(e.id.value, random_nonzero_weight(rng, params));
    return out;
}

WeightAssignment random_weights(Rng& rng, const Matroid& m, const RandomWeightParams& params) {
    WeightAssignment out;
    for (auto label : m.labels()) out.set(label, random_nonzero_weight(rng, params));
    return out;
}

Matroid random_linear_matroid(Rng& rng, std::size_t n, std::size_t dim, unsigned p) {
    if (n > 16) throw TooLarge("random linear matroids are tabulated; n <= 16");
    std::uniform_int_distribution<unsigned> entry(0, p - 1);
    std::vector<std::vector<unsigned>> columns(n, std::vector<unsigned>(dim));
    for (auto& column : columns) {
        for (auto& x : column) x = entry(rng);
    }

    auto inverse = [p](unsigned a) {
        for (unsigned b = 1; b < p; ++b) {
            if (a * b % p == 1) return b;
        }
        return 0U;
    };

    // Rank over GF(p) by Gaussian elimination on the selected columns.
    auto rank_of = [&](std::uint64_t mask) {
        std::vector<std::vector<unsigned>> rows;
        for (std::size_t i = 0; i < n; ++i) {
            if (mask >> i & 1U) rows.push_back(columns[i]);
        }
        std::size_t rank = 0;
        for (std::size_t col = 0; col < dim && rank < rows.size(); ++col) {
            auto pivot = std::find_if(rows.begin() + static_cast<long>(rank), rows.end(),
                                      [col](const auto& r) { return r[col] != 0; });
            if (pivot == rows.end()) continue;
            std::swap(*pivot, rows[rank]);
            const unsigned inv = inverse(rows[rank][col]);
            for (auto& x : rows[rank]) x = x * inv % p;
            for (std::size_t r = 0; r < rows.size(); ++r) {
                if (r == rank || rows[r][col] == 0) continue;
                const unsigned factor = rows[r][col];
                for (std::size_t c = 0; c < dim; ++c) rows[r][c] = (rows[r][c] + p * p - factor * rows[rank][c] % p) % p;
            }
            ++rank;
        }
        return static_cast<std::uint32_t>(rank);
    };

    std::vector<std::uint32_t> table(std::size_t{1} << n);
    for (std::uint64_t mask = 0; mask < table.size(); ++mask) table[mask] = rank_of(mask);
    return Matroid::from_table(n, std::move(table));
}

} // namespace potts
