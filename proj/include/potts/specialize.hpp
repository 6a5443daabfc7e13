#pragma once

// Chromatic and flow polynomials as specializations of Z, the counting
// definitions they specialize (kept as independent oracles), and Möbius
// inversion on the Boolean lattice.

#include "potts/errors.hpp"
#include "potts/identities.hpp"
#include "potts/laurent.hpp"
#include "potts/multigraph.hpp"
#include "potts/partition.hpp"

#include <bit>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace potts {

/// chi(G; q) = Z(G; q, -1).
LaurentPoly chromatic_poly(const Multigraph& g, const EngineLimits& limits = {});

/// chi*(G; q) = (-1)^{|E|} q^{-|V|} Z(G; q, -q). The result never carries a
/// negative exponent; a violation throws std::logic_error.
LaurentPoly flow_poly(const Multigraph& g, const EngineLimits& limits = {});

/// Tail/head of every edge. Loops have tail == head.
class Orientation {
public:
    struct Arc {
        Vertex tail = 0;
        Vertex head = 0;
    };

    /// endpoint a -> endpoint b for every edge.
    static Orientation natural(const Multigraph& g);
    /// natural() with every non-loop edge whose bit is set in `flip_mask` reversed.
    static Orientation flipped(const Multigraph& g, std::uint64_t flip_mask);

    /// Throws InvalidGraph if {tail, head} is not the edge's endpoint pair.
    void set(const Multigraph& g, EdgeId id, Arc arc);
    const Arc& at(EdgeId id) const;
    const std::map<EdgeId, Arc>& arcs() const noexcept { return arcs_; }

private:
    std::map<EdgeId, Arc> arcs_;
};

/// Largest enumeration space the counting oracles accept.
inline constexpr std::uint64_t kDefaultCountGuard = 50'000'000;

/// Brute force over all q^{|V|} colorings.
std::uint64_t count_proper_colorings(const Multigraph& g, unsigned q, std::uint64_t guard = kDefaultCountGuard);

/// Brute force over all maps E -> {1..q-1} satisfying Kirchhoff's law in Z_q.
std::uint64_t count_nowhere_zero_flows(const Multigraph& g, unsigned q, const Orientation& o,
                                       std::uint64_t guard = kDefaultCountGuard);

inline constexpr std::size_t kMaxInversionSize = 20;

/// A value for every subset of {0..n-1}, indexed by bit mask.
template <class T>
struct SubsetFunction {
    std::size_t n = 0;
    std::vector<T> values;

    static SubsetFunction filled(std::size_t n, const T& value) {
        if (n > kMaxInversionSize) throw TooLarge("subset function over " + std::to_string(n) + " elements");
        return {n, std::vector<T>(std::size_t{1} << n, value)};
    }
    const T& operator[](std::uint64_t mask) const { return values[mask]; }
    T& operator[](std::uint64_t mask) { return values[mask]; }

    friend bool operator==(const SubsetFunction&, const SubsetFunction&) = default;
};

namespace detail {

template <class T>
void check_inversion_input(const SubsetFunction<T>& f) {
    if (f.n > kMaxInversionSize) {
        throw TooLarge("inversion over " + std::to_string(f.n) + " elements exceeds " +
                       std::to_string(kMaxInversionSize));
    }
    if (f.values.size() != (std::size_t{1} << f.n)) throw InvalidParameter("subset function is not total");
}

} // namespace detail

/// f(A) = sum over B containing A of g(B).
template <class T>
SubsetFunction<T> zeta_transform(SubsetFunction<T> g) {
    detail::check_inversion_input(g);
    for (std::size_t i = 0; i < g.n; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        for (std::uint64_t mask = 0; mask < g.values.size(); ++mask) {
            if ((mask & bit) == 0) g.values[mask] += g.values[mask | bit];
        }
    }
    return g;
}

/// g(A) = sum over B containing A of (-1)^{|B - A|} f(B); inverse of zeta_transform.
template <class T>
SubsetFunction<T> mobius_invert(SubsetFunction<T> f) {
    detail::check_inversion_input(f);
    for (std::size_t i = 0; i < f.n; ++i) {
        const std::uint64_t bit = std::uint64_t{1} << i;
        for (std::uint64_t mask = 0; mask < f.values.size(); ++mask) {
            if ((mask & bit) == 0) f.values[mask] -= f.values[mask | bit];
        }
    }
    return f;
}

/// Checks, at integer q, the two counting identities behind the
/// specializations:
///   q^{|V|}          = sum_F chi(G/F; q)
///   q^{|E| - r(E)}   = sum_F chi*(G-F; q)
/// and that Möbius inversion of F -> q^{k(F)} and F -> q^{|E-F| - r(E-F)}
/// returns chi(G; q) and chi*(G; q) at the empty set.
std::vector<IdentityReport> verify_specialization_proofs(const Multigraph& g, unsigned q,
                                                         const VerifyOptions& opts = {});

/// The coloring/flow expansions as exact polynomial identities,
///   chi(G)  = (-1)^{|E|} q^{|V|-|E|} sum_F (1-q)^{|F|} chi*(G-F)
///   chi*(G) = (-1)^{|E|} q^{-|V|}    sum_F (1-q)^{|F|} chi(G/F)
/// followed by the deletion expansion at v=-1, u=-q and the contraction
/// expansion at v=-q, u=-1 they are obtained from.
std::vector<IdentityReport> verify_coloring_flow_expansions(const Multigraph& g, const VerifyOptions& opts = {});

} // namespace potts
