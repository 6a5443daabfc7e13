#pragma once

#include "potts/laurent.hpp"
#include "potts/matroid.hpp"
#include "potts/multigraph.hpp"
#include "potts/weights.hpp"

#include <cstdint>
#include <random>

namespace potts {

using Rng = std::mt19937_64;

struct RandomGraphParams {
    std::size_t max_vertices = 6;
    std::size_t max_edges = 10;
    double loop_probability = 0.15;
    double parallel_probability = 0.15;
};

struct RandomWeightParams {
    long max_numerator = 5;
    long max_denominator = 4;
};

/// Per-instance generator: the stream depends only on (seed, index).
Rng instance_rng(std::uint64_t seed, std::uint64_t index);

/// 1..max_vertices vertices and 0..max_edges edges. Each edge is a loop with
/// loop_probability, else a copy of an earlier edge's endpoints with
/// parallel_probability, else a uniform pair of distinct vertices.
Multigraph random_multigraph(Rng& rng, const RandomGraphParams& params);

/// Nonzero rational coefficient, q-power 0.
QMonomialWeight random_nonzero_weight(Rng& rng, const RandomWeightParams& params = {});
WeightAssignment random_weights(Rng& rng, const Multigraph& g, const RandomWeightParams& params = {});
WeightAssignment random_weights(Rng& rng, const Matroid& m, const RandomWeightParams& params = {});

/// Column matroid of `n` random vectors in GF(p)^dim, tabulated.
Matroid random_linear_matroid(Rng& rng, std::size_t n, std::size_t dim, unsigned p = 3);

} // namespace potts
