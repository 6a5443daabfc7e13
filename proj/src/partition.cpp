#include "potts/partition.hpp"

#include "potts/errors.hpp"
#include "potts/union_find.hpp"

#include <algorithm>
#include <bit>
#include <cstdlib>
#include <string>
#include <thread>
#include <unordered_map>

namespace potts {

// ---------------------------------------------------------------------------
// Weight assignments

WeightAssignment WeightAssignment::uniform(const Multigraph& g, const QMonomialWeight& w) {
    WeightAssignment out;
    for (const Edge& e : g.edges()) out.set(e.id.value, w);
    return out;
}

WeightAssignment WeightAssignment::uniform(const Matroid& m, const QMonomialWeight& w) {
    WeightAssignment out;
    for (auto label : m.labels()) out.set(label, w);
    return out;
}

const QMonomialWeight& WeightAssignment::at(std::uint32_t key) const {
    auto it = weights_.find(key);
    if (it == weights_.end()) throw IncompleteAssignment("no weight for edge/element " + std::to_string(key));
    return it->second;
}

WeightAssignment WeightAssignment::transformed(
    const std::function<QMonomialWeight(const QMonomialWeight&)>& fn) const {
    WeightAssignment out;
    for (const auto& [key, w] : weights_) out.set(key, fn(w));
    return out;
}

std::vector<QMonomialWeight> WeightAssignment::for_graph(const Multigraph& g) const {
    std::vector<QMonomialWeight> out;
    out.reserve(g.edge_count());
    for (const Edge& e : g.edges()) out.push_back(at(e.id.value));
    return out;
}

std::vector<QMonomialWeight> WeightAssignment::for_matroid(const Matroid& m) const {
    std::vector<QMonomialWeight> out;
    out.reserve(m.ground_size());
    for (auto label : m.labels()) out.push_back(at(label));
    return out;
}

QMonomialWeight q_over(const QMonomialWeight& w) { return QMonomialWeight(Rational(1), 1) * w.inverse(); }

EngineLimits EngineLimits::from_environment() {
    EngineLimits limits;
    auto read = [](const char* name, auto& field) {
        if (const char* value = std::getenv(name); value != nullptr && *value != '\0') {
            char* end = nullptr;
            const unsigned long parsed = std::strtoul(value, &end, 10);
            if (end != nullptr && *end == '\0') field = static_cast<std::remove_reference_t<decltype(field)>>(parsed);
        }
    };
    read("POTTS_SUBSET_CAP", limits.subset_cap);
    read("POTTS_THREADS", limits.threads);
    return limits;
}

// ---------------------------------------------------------------------------
// Subset enumeration

namespace {

struct HalfProducts {
    std::vector<Rational> coeff;
    std::vector<int> qpower;
};

// Products of every subset of weights[offset, offset + count).
HalfProducts half_products(std::span<const QMonomialWeight> weights, std::size_t offset, std::size_t count) {
    const std::size_t size = std::size_t{1} << count;
    HalfProducts out{std::vector<Rational>(size), std::vector<int>(size)};
    out.coeff[0] = 1;
    out.qpower[0] = 0;
    for (std::size_t mask = 1; mask < size; ++mask) {
        const auto low = static_cast<std::size_t>(std::countr_zero(mask));
        const std::size_t rest = mask & (mask - 1);
        const auto& w = weights[offset + low];
        out.coeff[mask] = out.coeff[rest] * w.coeff;
        out.qpower[mask] = out.qpower[rest] + w.qpower;
    }
    return out;
}

unsigned resolve_threads(unsigned requested, std::size_t work_items) {
    unsigned threads = requested != 0 ? requested : std::max(1U, std::thread::hardware_concurrency());
    // Below ~64k subsets thread start-up dominates.
    if (work_items < (std::size_t{1} << 16)) threads = 1;
    return threads;
}

// Sums q^{structural(A) + d(A)} * c(A) over all subsets A of the n weights.
// `make_structural` builds one callable per worker mapping a mask to its
// structural exponent (k(A) or -r(A)), which must lie in [lo, hi].
template <class MakeStructural>
LaurentPoly accumulate_subsets(std::span<const QMonomialWeight> weights, int lo, int hi,
                               MakeStructural&& make_structural, unsigned requested_threads) {
    const std::size_t n = weights.size();
    const std::size_t low_bits = n / 2;
    const std::size_t high_bits = n - low_bits;
    const HalfProducts low = half_products(weights, 0, low_bits);
    const HalfProducts high = half_products(weights, low_bits, high_bits);

    int dmin = 0;
    int dmax = 0;
    for (const auto& w : weights) {
        dmin += std::min(w.qpower, 0);
        dmax += std::max(w.qpower, 0);
    }
    const int base = lo + dmin;
    const std::size_t buckets = static_cast<std::size_t>((hi + dmax) - base + 1);

    const std::size_t high_count = std::size_t{1} << high_bits;
    const std::size_t low_count = std::size_t{1} << low_bits;
    const unsigned threads =
        static_cast<unsigned>(std::min<std::size_t>(resolve_threads(requested_threads, high_count * low_count), high_count));

    std::vector<std::vector<Rational>> partial(threads, std::vector<Rational>(buckets));
    auto work = [&](unsigned worker) {
        auto structural = make_structural();
        auto& sums = partial[worker];
        Rational term;
        for (std::size_t h = worker; h < high_count; h += threads) {
            if (sgn(high.coeff[h]) == 0) continue;
            for (std::size_t l = 0; l < low_count; ++l) {
                if (sgn(low.coeff[l]) == 0) continue;
                const std::uint64_t mask = (std::uint64_t{h} << low_bits) | l;
                const int exponent = structural(mask) + high.qpower[h] + low.qpower[l];
                mpq_mul(term.get_mpq_t(), high.coeff[h].get_mpq_t(), low.coeff[l].get_mpq_t());
                auto& slot = sums[static_cast<std::size_t>(exponent - base)];
                mpq_add(slot.get_mpq_t(), slot.get_mpq_t(), term.get_mpq_t());
            }
        }
    };

    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work, t);
    }

    // Exact addition: merging in worker order reproduces the sequential sum.
    LaurentPoly out;
    for (std::size_t i = 0; i < buckets; ++i) {
        Rational total(0);
        for (const auto& sums : partial) total += sums[i];
        out.add_term(base + static_cast<int>(i), total);
    }
    return out;
}

void check_cap(std::size_t n, const EngineLimits& limits, const char* what) {
    if (n > limits.subset_cap || n > 62) {
        throw TooLarge(std::string(what) + " over " + std::to_string(n) + " elements exceeds the subset cap of " +
                       std::to_string(std::min<std::size_t>(limits.subset_cap, 62)));
    }
}

} // namespace

LaurentPoly z_subset(const Multigraph& g, const WeightAssignment& v, const EngineLimits& limits) {
    check_cap(g.edge_count(), limits, "subset expansion");
    const auto weights = v.for_graph(g);
    std::vector<std::pair<Vertex, Vertex>> ends;
    ends.reserve(g.edge_count());
    for (const Edge& e : g.edges()) ends.emplace_back(e.a, e.b);
    const std::size_t vertices = g.vertex_count();

    auto make_counter = [&] {
        return [&ends, uf = UnionFind(vertices)](std::uint64_t mask) mutable {
            uf.reset();
            while (mask != 0) {
                const auto& [a, b] = ends[static_cast<std::size_t>(std::countr_zero(mask))];
                uf.unite(a, b);
                mask &= mask - 1;
            }
            return static_cast<int>(uf.components());
        };
    };
    return accumulate_subsets(weights, 0, static_cast<int>(vertices), make_counter, limits.threads);
}

LaurentPoly zt_matroid(const Matroid& m, const WeightAssignment& v, const EngineLimits& limits) {
    check_cap(m.ground_size(), limits, "matroid subset expansion");
    const auto weights = v.for_matroid(m);
    auto make_rank = [&m] { return [&m](std::uint64_t mask) { return -static_cast<int>(m.rank({mask})); }; };
    return accumulate_subsets(weights, -static_cast<int>(m.ground_size()), 0, make_rank, limits.threads);
}

// ---------------------------------------------------------------------------
// Deletion-contraction

namespace {

class DelconEngine {
public:
    DelconEngine(const WeightAssignment& v, DelconStats& stats) : v_(v), stats_(stats) {}

    LaurentPoly solve(const Multigraph& g) {
        ++stats_.calls;

        // A loop satisfies G/e = G - e, so it contributes a factor (1 + v_e).
        LaurentPoly factor(1L);
        std::vector<EdgeId> loops;
        for (const Edge& e : g.edges()) {
            if (e.is_loop()) {
                loops.push_back(e.id);
                factor *= LaurentPoly(1L) + v_.at(e.id.value).as_poly();
            }
        }
        if (!loops.empty()) return factor * solve(delete_edges(g, EdgeSubset(std::move(loops))));
        if (g.edge_count() == 0) return LaurentPoly::q(static_cast<int>(g.vertex_count()));

        auto [key, isolated] = canonical_key(g);
        if (auto it = memo_.find(key); it != memo_.end()) {
            ++stats_.memo_hits;
            return it->second.shifted(isolated);
        }

        const Edge& e = g.edges().back();
        const EdgeSubset single{e.id.value};
        LaurentPoly result = solve(delete_edges(g, single));
        result += v_.at(e.id.value).as_poly() * solve(contract_edges(g, single));
        memo_.emplace(std::move(key), result.shifted(-isolated));
        return result;
    }

private:
    // Isolated vertices only contribute a factor q each, so they are dropped
    // from the key. Remaining vertices keep their relative order.
    std::pair<std::string, int> canonical_key(const Multigraph& g) const {
        std::vector<Vertex> relabel(g.vertex_count(), 0);
        std::vector<bool> touched(g.vertex_count(), false);
        for (const Edge& e : g.edges()) touched[e.a] = touched[e.b] = true;
        Vertex next = 0;
        for (Vertex x = 0; x < g.vertex_count(); ++x) {
            if (touched[x]) relabel[x] = next++;
        }
        struct Item {
            Vertex a, b;
            const QMonomialWeight* w;
        };
        std::vector<Item> items;
        items.reserve(g.edge_count());
        for (const Edge& e : g.edges()) {
            auto [a, b] = std::minmax(relabel[e.a], relabel[e.b]);
            items.push_back({a, b, &v_.at(e.id.value)});
        }
        std::sort(items.begin(), items.end(), [](const Item& x, const Item& y) {
            if (x.a != y.a) return x.a < y.a;
            if (x.b != y.b) return x.b < y.b;
            if (x.w->qpower != y.w->qpower) return x.w->qpower < y.w->qpower;
            return x.w->coeff < y.w->coeff;
        });
        std::string key = std::to_string(next);
        for (const auto& item : items) {
            key += ';';
            key += std::to_string(item.a);
            key += ',';
            key += std::to_string(item.b);
            key += ',';
            key += item.w->coeff.get_str();
            key += ',';
            key += std::to_string(item.w->qpower);
        }
        return {std::move(key), static_cast<int>(g.vertex_count() - next)};
    }

    const WeightAssignment& v_;
    DelconStats& stats_;
    std::unordered_map<std::string, LaurentPoly> memo_;
};

} // namespace

LaurentPoly z_delcon(const Multigraph& g, const WeightAssignment& v, DelconStats* stats) {
    // Fail on a missing weight before recursing.
    v.for_graph(g);
    DelconStats local;
    DelconEngine engine(v, stats != nullptr ? *stats : local);
    return engine.solve(g);
}

} // namespace potts
