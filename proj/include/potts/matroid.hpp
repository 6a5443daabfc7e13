#pragma once

// Matroids given by a rank oracle, with deletion, contraction and duality.
//
// Derived matroids compose oracles over their parent and never build a rank
// table on their own; `rank_table` / `materialize` do that explicitly and
// refuse above a size threshold.

#include "potts/multigraph.hpp"

#include <bit>
#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

namespace potts {

inline constexpr std::size_t kMaxGroundSize = 63;
inline constexpr std::size_t kDefaultTableThreshold = 12;

/// Subset of {0, ..., n-1}; bit i selects element i.
struct GroundSubset {
    std::uint64_t bits = 0;

    static GroundSubset of(std::initializer_list<std::size_t> elements);
    static GroundSubset full(std::size_t n) {
        return {n == 0 ? 0 : (~std::uint64_t{0} >> (64 - n))};
    }

    std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits)); }
    bool contains(std::size_t i) const noexcept { return (bits >> i & 1U) != 0; }

    friend GroundSubset operator|(GroundSubset a, GroundSubset b) { return {a.bits | b.bits}; }
    friend GroundSubset operator&(GroundSubset a, GroundSubset b) { return {a.bits & b.bits}; }
    friend bool operator==(GroundSubset, GroundSubset) = default;
};

class Matroid {
public:
    using RankOracle = std::function<std::size_t(GroundSubset)>;

    /// Wraps an arbitrary oracle. No axiom check; see check_axioms().
    Matroid(std::size_t ground_size, RankOracle rank, std::string provenance,
            std::vector<std::uint32_t> labels = {});

    /// U(r, n). Throws InvalidParameter when r > n.
    static Matroid uniform(std::size_t r, std::size_t n);
    /// Rank table indexed by subset mask. Validates the rank axioms eagerly
    /// and throws AxiomViolation with the offending subsets.
    static Matroid from_table(std::size_t n, std::vector<std::uint32_t> ranks);
    /// Cycle matroid: element i is edge g.edges()[i], labelled by its edge id.
    static Matroid cycle(const Multigraph& g);

    std::size_t ground_size() const noexcept { return ground_size_; }
    /// Throws InvalidSubset for elements outside the ground set.
    std::size_t rank(GroundSubset a) const;
    std::size_t full_rank() const { return rank(GroundSubset::full(ground_size_)); }

    /// Stable name of each element: edge id for cycle matroids, the original
    /// index otherwise. Minors keep the labels of surviving elements.
    const std::vector<std::uint32_t>& labels() const noexcept { return labels_; }
    /// Element index carrying `label`; throws InvalidSubset if absent.
    std::size_t index_of_label(std::uint32_t label) const;

    /// cycle | uniform | table | oracle, wrapped as minor-of(...) / dual-of(...).
    const std::string& provenance() const noexcept { return provenance_; }

private:
    std::size_t ground_size_;
    std::shared_ptr<const RankOracle> rank_;
    std::string provenance_;
    std::vector<std::uint32_t> labels_;
};

/// M - F on ground set E - F, elements re-indexed densely in original order.
Matroid delete_elements(const Matroid& m, GroundSubset f);
/// M / F with rank(A) = r(A u F) - r(F).
Matroid contract_elements(const Matroid& m, GroundSubset f);
/// M* with rank(A) = |A| - r(E) + r(E - A).
Matroid dual(const Matroid& m);

/// Full rank table; throws TooLarge when ground_size > threshold.
std::vector<std::uint32_t> rank_table(const Matroid& m, std::size_t threshold = kDefaultTableThreshold);
/// Table-backed copy of m (validated), subject to the same threshold.
Matroid materialize(const Matroid& m, std::size_t threshold = kDefaultTableThreshold);

/// Rank-table equality (the artifact's notion of matroid equality).
bool same_rank_function(const Matroid& x, const Matroid& y,
                        std::size_t threshold = kDefaultTableThreshold);

struct AxiomReport {
    bool ok = true;
    /// First violation found, e.g. "r({0,2}) = 3 exceeds |A| = 2".
    std::string witness;
};

/// Exhaustive check of r(empty) = 0, unit increase and local submodularity,
/// which together are equivalent to the rank axioms.
AxiomReport check_axioms(const Matroid& m, std::size_t threshold = 20);

std::string describe_subset(GroundSubset a, std::size_t ground_size);

/// Element mask of the edges of `f` inside the cycle matroid of g.
GroundSubset ground_subset_of(const Matroid& m, const EdgeSubset& f);

} // namespace potts
