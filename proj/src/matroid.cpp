#include "potts/matroid.hpp"

#include "potts/errors.hpp"
#include "potts/union_find.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace potts {

namespace {

std::vector<std::uint32_t> identity_labels(std::size_t n) {
    std::vector<std::uint32_t> labels(n);
    std::iota(labels.begin(), labels.end(), 0U);
    return labels;
}

// Scatters a mask over the kept positions of the parent ground set.
std::uint64_t expand(std::uint64_t mask, const std::vector<std::uint8_t>& positions) {
    std::uint64_t out = 0;
    while (mask != 0) {
        const int i = std::countr_zero(mask);
        out |= std::uint64_t{1} << positions[static_cast<std::size_t>(i)];
        mask &= mask - 1;
    }
    return out;
}

std::vector<std::uint8_t> complement_positions(std::size_t n, GroundSubset f) {
    std::vector<std::uint8_t> kept;
    for (std::size_t i = 0; i < n; ++i) {
        if (!f.contains(i)) kept.push_back(static_cast<std::uint8_t>(i));
    }
    return kept;
}

void check_subset(const Matroid& m, GroundSubset f) {
    if ((f.bits & ~GroundSubset::full(m.ground_size()).bits) != 0) {
        throw InvalidSubset("subset " + describe_subset(f, 64) + " leaves the ground set of size " +
                            std::to_string(m.ground_size()));
    }
}

// Rank values of derived oracles are differences; a non-matroid parent can
// drive them negative.
std::size_t checked_rank(long long value, const char* what) {
    if (value < 0) throw AxiomViolation(std::string("negative rank in ") + what);
    return static_cast<std::size_t>(value);
}

std::vector<std::uint32_t> minor_labels(const Matroid& m, const std::vector<std::uint8_t>& kept) {
    std::vector<std::uint32_t> labels;
    labels.reserve(kept.size());
    for (auto p : kept) labels.push_back(m.labels()[p]);
    return labels;
}

} // namespace

GroundSubset GroundSubset::of(std::initializer_list<std::size_t> elements) {
    GroundSubset s;
    for (auto e : elements) {
        if (e >= 64) throw InvalidSubset("element " + std::to_string(e) + " beyond 64-bit mask");
        s.bits |= std::uint64_t{1} << e;
    }
    return s;
}

Matroid::Matroid(std::size_t ground_size, RankOracle rank, std::string provenance,
                 std::vector<std::uint32_t> labels)
    : ground_size_(ground_size),
      rank_(std::make_shared<const RankOracle>(std::move(rank))),
      provenance_(std::move(provenance)),
      labels_(labels.empty() ? identity_labels(ground_size) : std::move(labels)) {
    if (ground_size_ > kMaxGroundSize) {
        throw TooLarge("ground set of size " + std::to_string(ground_size_) + " exceeds " +
                       std::to_string(kMaxGroundSize));
    }
    if (labels_.size() != ground_size_) throw InvalidParameter("label count differs from ground size");
}

Matroid Matroid::uniform(std::size_t r, std::size_t n) {
    if (r > n) {
        throw InvalidParameter("uniform matroid U(" + std::to_string(r) + "," + std::to_string(n) +
                               ") needs r <= n");
    }
    return Matroid(
        n, [r](GroundSubset a) { return std::min(a.size(), r); },
        "uniform(" + std::to_string(r) + "," + std::to_string(n) + ")");
}

Matroid Matroid::from_table(std::size_t n, std::vector<std::uint32_t> ranks) {
    if (n > 24) throw TooLarge("rank table over " + std::to_string(n) + " elements");
    if (ranks.size() != (std::size_t{1} << n)) {
        throw InvalidParameter("rank table needs " + std::to_string(std::size_t{1} << n) +
                               " entries, got " + std::to_string(ranks.size()));
    }
    auto table = std::make_shared<const std::vector<std::uint32_t>>(std::move(ranks));
    Matroid m(n, [table](GroundSubset a) { return std::size_t{(*table)[a.bits]}; }, "table");
    if (auto report = check_axioms(m, n); !report.ok) throw AxiomViolation(report.witness);
    return m;
}

Matroid Matroid::cycle(const Multigraph& g) {
    if (g.edge_count() > kMaxGroundSize) throw TooLarge("cycle matroid of more than 63 edges");
    std::vector<std::pair<Vertex, Vertex>> ends;
    std::vector<std::uint32_t> labels;
    for (const Edge& e : g.edges()) {
        ends.emplace_back(e.a, e.b);
        labels.push_back(e.id.value);
    }
    const std::size_t vertices = g.vertex_count();
    return Matroid(
        g.edge_count(),
        [ends = std::move(ends), vertices](GroundSubset a) {
            UnionFind uf(vertices);
            std::uint64_t bits = a.bits;
            while (bits != 0) {
                const auto& [x, y] = ends[static_cast<std::size_t>(std::countr_zero(bits))];
                uf.unite(x, y);
                bits &= bits - 1;
            }
            return vertices - uf.components();
        },
        "cycle", std::move(labels));
}

std::size_t Matroid::rank(GroundSubset a) const {
    check_subset(*this, a);
    return (*rank_)(a);
}

std::size_t Matroid::index_of_label(std::uint32_t label) const {
    auto it = std::find(labels_.begin(), labels_.end(), label);
    if (it == labels_.end()) throw InvalidSubset("no element labelled " + std::to_string(label));
    return static_cast<std::size_t>(it - labels_.begin());
}

Matroid delete_elements(const Matroid& m, GroundSubset f) {
    check_subset(m, f);
    if (f.bits == 0) return m;
    auto kept = complement_positions(m.ground_size(), f);
    auto labels = minor_labels(m, kept);
    const std::size_t n = kept.size();
    return Matroid(
        n, [parent = m, kept = std::move(kept)](GroundSubset a) { return parent.rank({expand(a.bits, kept)}); },
        "minor-of(" + m.provenance() + ")", std::move(labels));
}

Matroid contract_elements(const Matroid& m, GroundSubset f) {
    check_subset(m, f);
    if (f.bits == 0) return m;
    auto kept = complement_positions(m.ground_size(), f);
    auto labels = minor_labels(m, kept);
    const std::size_t n = kept.size();
    const std::size_t rank_f = m.rank(f);
    return Matroid(
        n,
        [parent = m, kept = std::move(kept), f, rank_f](GroundSubset a) {
            const auto r = static_cast<long long>(parent.rank({expand(a.bits, kept) | f.bits}));
            return checked_rank(r - static_cast<long long>(rank_f), "contraction");
        },
        "minor-of(" + m.provenance() + ")", std::move(labels));
}

Matroid dual(const Matroid& m) {
    const std::size_t n = m.ground_size();
    const GroundSubset all = GroundSubset::full(n);
    const std::size_t full_rank = m.full_rank();
    return Matroid(
        n,
        [parent = m, all, full_rank](GroundSubset a) {
            const auto r = static_cast<long long>(a.size() + parent.rank({all.bits & ~a.bits}));
            return checked_rank(r - static_cast<long long>(full_rank), "dual");
        },
        "dual-of(" + m.provenance() + ")", m.labels());
}

std::vector<std::uint32_t> rank_table(const Matroid& m, std::size_t threshold) {
    if (m.ground_size() > threshold) {
        throw TooLarge("refusing to tabulate " + std::to_string(m.ground_size()) +
                       " elements (threshold " + std::to_string(threshold) + ")");
    }
    const std::uint64_t count = std::uint64_t{1} << m.ground_size();
    std::vector<std::uint32_t> table(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) {
        table[mask] = static_cast<std::uint32_t>(m.rank({mask}));
    }
    return table;
}

Matroid materialize(const Matroid& m, std::size_t threshold) {
    auto shared = std::make_shared<const std::vector<std::uint32_t>>(rank_table(m, threshold));
    Matroid::from_table(m.ground_size(), *shared);
    return Matroid(
        m.ground_size(), [shared](GroundSubset a) { return std::size_t{(*shared)[a.bits]}; },
        "table", m.labels());
}

bool same_rank_function(const Matroid& x, const Matroid& y, std::size_t threshold) {
    if (x.ground_size() != y.ground_size()) return false;
    return rank_table(x, threshold) == rank_table(y, threshold);
}

AxiomReport check_axioms(const Matroid& m, std::size_t threshold) {
    const std::size_t n = m.ground_size();
    if (n > threshold) {
        throw TooLarge("axiom check over " + std::to_string(n) + " elements (threshold " +
                       std::to_string(threshold) + ")");
    }
    auto fail = [&](std::string what) { return AxiomReport{false, std::move(what)}; };
    auto show = [n](std::uint64_t bits) { return describe_subset({bits}, n); };

    const std::uint64_t count = std::uint64_t{1} << n;
    std::vector<std::size_t> r(count);
    for (std::uint64_t mask = 0; mask < count; ++mask) r[mask] = m.rank({mask});

    if (r[0] != 0) return fail("r({}) = " + std::to_string(r[0]) + ", expected 0");
    for (std::uint64_t a = 0; a < count; ++a) {
        for (std::size_t e = 0; e < n; ++e) {
            const std::uint64_t be = std::uint64_t{1} << e;
            if ((a & be) != 0) continue;
            const std::size_t ra = r[a];
            const std::size_t rae = r[a | be];
            if (rae < ra || rae > ra + 1) {
                return fail("r(" + show(a | be) + ") = " + std::to_string(rae) + " but r(" + show(a) +
                            ") = " + std::to_string(ra) + "; adding one element must raise rank by 0 or 1");
            }
            for (std::size_t f = e + 1; f < n; ++f) {
                const std::uint64_t bf = std::uint64_t{1} << f;
                if ((a & bf) != 0) continue;
                if (r[a | be | bf] + ra > rae + r[a | bf]) {
                    return fail("submodularity fails: r(" + show(a | be | bf) + ") + r(" + show(a) +
                                ") > r(" + show(a | be) + ") + r(" + show(a | bf) + ")");
                }
            }
        }
    }
    return {};
}

std::string describe_subset(GroundSubset a, std::size_t ground_size) {
    std::ostringstream out;
    out << '{';
    bool first = true;
    for (std::size_t i = 0; i < std::min<std::size_t>(ground_size, 64); ++i) {
        if (!a.contains(i)) continue;
        if (!first) out << ',';
        first = false;
        out << i;
    }
    out << '}';
    return out.str();
}

GroundSubset ground_subset_of(const Matroid& m, const EdgeSubset& f) {
    GroundSubset out;
    for (EdgeId id : f.members()) out.bits |= std::uint64_t{1} << m.index_of_label(id.value);
    return out;
}

} // namespace potts
