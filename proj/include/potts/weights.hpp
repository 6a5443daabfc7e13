#pragma once

#include "potts/laurent.hpp"
#include "potts/matroid.hpp"
#include "potts/multigraph.hpp"

#include <cstdint>
#include <functional>
#include <map>
#include <vector>

namespace potts {

/// Edge weights keyed by edge id, or by element label for matroids. Cycle
/// matroids label elements with edge ids, so one assignment serves both G
/// and M(G), and every minor through label lookup.
class WeightAssignment {
public:
    WeightAssignment() = default;
    explicit WeightAssignment(std::map<std::uint32_t, QMonomialWeight> weights)
        : weights_(std::move(weights)) {}

    static WeightAssignment uniform(const Multigraph& g, const QMonomialWeight& w);
    static WeightAssignment uniform(const Matroid& m, const QMonomialWeight& w);

    void set(std::uint32_t key, QMonomialWeight w) { weights_[key] = std::move(w); }
    bool contains(std::uint32_t key) const { return weights_.count(key) != 0; }
    /// Throws IncompleteAssignment when the key is missing.
    const QMonomialWeight& at(std::uint32_t key) const;
    const std::map<std::uint32_t, QMonomialWeight>& entries() const noexcept { return weights_; }

    /// Applies fn to every weight (e.g. v -> q / v).
    WeightAssignment transformed(const std::function<QMonomialWeight(const QMonomialWeight&)>& fn) const;

    /// Per-position weights for g.edges(); throws IncompleteAssignment.
    std::vector<QMonomialWeight> for_graph(const Multigraph& g) const;
    /// Per-element weights following m.labels().
    std::vector<QMonomialWeight> for_matroid(const Matroid& m) const;

    friend bool operator==(const WeightAssignment&, const WeightAssignment&) = default;

private:
    std::map<std::uint32_t, QMonomialWeight> weights_;
};

/// q / w, used by the duality transform. Throws DegenerateWeight on zero.
QMonomialWeight q_over(const QMonomialWeight& w);

} // namespace potts
