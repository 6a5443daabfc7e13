#pragma once

// Partition-function engines.
//
//   z_subset    sum over all edge subsets A of q^{k(A)} v^A
//   z_delcon    memoized deletion-contraction, Z(G) = Z(G-e) + v_e Z(G/e)
//   zt_matroid  sum over all subsets A of q^{-r(A)} v^A

#include "potts/laurent.hpp"
#include "potts/matroid.hpp"
#include "potts/multigraph.hpp"
#include "potts/weights.hpp"

#include <cstddef>

namespace potts {

inline constexpr std::size_t kDefaultSubsetCap = 24;

struct EngineLimits {
    /// Largest edge / ground set the 2^n enumerations accept.
    std::size_t subset_cap = kDefaultSubsetCap;
    /// Worker threads for the subset enumeration; 0 picks hardware concurrency.
    unsigned threads = 0;

    /// Defaults overridden by POTTS_SUBSET_CAP / POTTS_THREADS when set.
    static EngineLimits from_environment();
};

LaurentPoly z_subset(const Multigraph& g, const WeightAssignment& v, const EngineLimits& limits = {});

struct DelconStats {
    std::size_t calls = 0;
    std::size_t memo_hits = 0;
};

LaurentPoly z_delcon(const Multigraph& g, const WeightAssignment& v, DelconStats* stats = nullptr);

/// Normalized partition function of a matroid; exponents are usually negative.
LaurentPoly zt_matroid(const Matroid& m, const WeightAssignment& v, const EngineLimits& limits = {});

} // namespace potts
