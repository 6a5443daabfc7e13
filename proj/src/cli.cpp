#include "potts/cli.hpp"

#include "potts/errors.hpp"
#include "potts/io.hpp"
#include "potts/partition.hpp"
#include "potts/random_instances.hpp"
#include "potts/specialize.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>
#include <sstream>

namespace potts::cli {

namespace {

class UsageError : public Error {
public:
    using Error::Error;
};

struct IdentityInfo {
    const char* name;
    const char* alias;
    bool graph_only;
};

// Order here is the order `all` runs them in.
constexpr IdentityInfo kIdentities[] = {
    {"engine-agreement", "", true},
    {"normalization-bridge", "", true},
    {"deletion-expansion", "eq1.1", true},
    {"contraction-expansion", "eq1.2", true},
    {"contraction-bridge", "", true},
    {"matroid-deletion-expansion", "thm3.2", false},
    {"matroid-contraction-expansion", "thm3.4", false},
    {"dual-transform", "lemma3.3", false},
    {"dual-transform-twice", "", false},
    {"dual-derivation", "derive3.4", false},
    {"coloring-expansion", "eq1.3", true},
    {"flow-expansion", "eq1.4", true},
    {"specialization-sums", "prop4.2", true},
    {"mobius-roundtrip", "mobius", false},
    {"axioms", "", false},
};

// A loaded input: a graph, a matroid, or a rank table that failed validation.
struct Instance {
    std::string name;
    std::optional<GraphDocument> graph;
    std::optional<Matroid> matroid;
    std::string axiom_failure;
};

std::string base_name(const std::string& path) { return std::filesystem::path(path).filename().string(); }

Instance load_instance(const std::string& path) {
    Instance inst;
    inst.name = base_name(path);
    Document doc = load_document(path);
    if (auto* g = std::get_if<GraphDocument>(&doc)) {
        inst.matroid = Matroid::cycle(g->graph);
        inst.graph = std::move(*g);
        return inst;
    }
    try {
        inst.matroid = std::get<MatroidDocument>(doc).matroid();
    } catch (const AxiomViolation& e) {
        inst.axiom_failure = e.what();
    }
    return inst;
}

std::vector<std::uint32_t> labels_of(const Instance& inst) {
    if (inst.graph) {
        std::vector<std::uint32_t> labels;
        for (const Edge& e : inst.graph->graph.edges()) labels.push_back(e.id.value);
        return labels;
    }
    return inst.matroid ? inst.matroid->labels() : std::vector<std::uint32_t>{};
}

// Resolves a weight source against the instance's edge ids / element labels.
WeightAssignment resolve_weights(const std::string& spec, const Instance& inst, Rng rng) {
    const auto labels = labels_of(inst);
    auto fill = [&labels](const QMonomialWeight& w) {
        WeightAssignment out;
        for (auto label : labels) out.set(label, w);
        return out;
    };
    auto random = [&] {
        WeightAssignment out;
        for (auto label : labels) out.set(label, random_nonzero_weight(rng));
        return out;
    };

    if (spec.empty()) {
        if (inst.graph && !inst.graph->weights.empty()) return inst.graph->numeric_weights();
        return random();
    }
    if (spec == "random") return random();
    if (spec == "file") {
        if (!inst.graph) throw UsageError("'file' weights need a graph input");
        return inst.graph->numeric_weights();
    }
    if (spec.rfind("uniform:", 0) == 0) {
        const std::string value = spec.substr(8);
        if (value == "-q") return fill(QMonomialWeight(Rational(-1), 1));
        if (value == "q") return fill(QMonomialWeight(Rational(1), 1));
        try {
            return fill(parse_weight(value));
        } catch (const InvalidParameter& e) {
            throw UsageError("bad weight spec '" + spec + "': " + e.what());
        }
    }
    if (spec.rfind("file:", 0) == 0) {
        std::ifstream in(spec.substr(5));
        if (!in) throw ParseError(0, "cannot open weight file '" + spec.substr(5) + "'");
        WeightAssignment out(parse_weight_lines(in));
        for (auto label : labels) out.at(label);
        return out;
    }
    throw UsageError("unknown weight spec '" + spec + "' (use uniform:<w>, uniform:-q, file:<path>, file, random)");
}

EngineLimits limits_of(const RunConfig& cfg) {
    EngineLimits limits;
    limits.subset_cap = cfg.subset_cap;
    limits.threads = cfg.threads;
    return limits;
}

IdentityReport mobius_roundtrip(std::size_t ground_size, Rng rng, const std::string& instance) {
    const std::size_t n = std::min<std::size_t>(ground_size, 10);
    auto g = SubsetFunction<Rational>::filled(n, Rational(0));
    std::uniform_int_distribution<long> numerator(-9, 9);
    std::uniform_int_distribution<long> denominator(1, 5);
    for (auto& value : g.values) value = make_rational(numerator(rng), denominator(rng));
    const auto back = mobius_invert(zeta_transform(g));

    // Subset functions are encoded as sum_A g(A) q^{mask(A)}.
    IdentityReport report;
    report.identity = "mobius-roundtrip";
    report.instance = instance + " n=" + std::to_string(n);
    for (std::size_t mask = 0; mask < g.values.size(); ++mask) {
        report.lhs.add_term(static_cast<int>(mask), g.values[mask]);
        report.rhs.add_term(static_cast<int>(mask), back.values[mask]);
    }
    judge(report);
    return report;
}

IdentityReport axiom_report(const Instance& inst, const RunConfig& cfg) {
    IdentityReport report;
    report.identity = "axioms";
    report.instance = inst.name;
    if (!inst.axiom_failure.empty()) {
        report.pass = false;
        report.counterexample = inst.axiom_failure;
        return report;
    }
    const AxiomReport axioms = check_axioms(*inst.matroid, std::max<std::size_t>(cfg.table_threshold, 8));
    report.pass = axioms.ok;
    report.counterexample = axioms.witness;
    return report;
}

struct SuiteResult {
    std::vector<IdentityReport> reports;
    std::vector<double> millis;
};

SuiteResult run_suite(const Instance& inst, const std::vector<std::string>& identities, const RunConfig& cfg,
                      std::uint64_t index) {
    SuiteResult result;
    VerifyOptions opts;
    opts.limits = limits_of(cfg);
    opts.witness = cfg.witness;
    opts.instance = inst.name;

    std::optional<WeightAssignment> v;
    std::optional<WeightAssignment> u;
    auto weights = [&]() -> std::pair<const WeightAssignment&, const WeightAssignment&> {
        if (!v) v = resolve_weights(cfg.v_spec, inst, instance_rng(cfg.seed, 3 * index + 1));
        if (!u) u = resolve_weights(cfg.u_spec.empty() ? "random" : cfg.u_spec, inst, instance_rng(cfg.seed, 3 * index + 2));
        return {*v, *u};
    };

    for (const auto& name : identities) {
        const auto start = std::chrono::steady_clock::now();
        std::vector<IdentityReport> produced;
        if (name == "axioms") {
            produced.push_back(axiom_report(inst, cfg));
        } else if (!inst.matroid) {
            continue;  // corrupt rank table: only the axiom report applies
        } else if (name == "mobius-roundtrip") {
            produced.push_back(mobius_roundtrip(inst.matroid->ground_size(), instance_rng(cfg.seed, 3 * index), inst.name));
        } else if (inst.graph) {
            const Multigraph& g = inst.graph->graph;
            if (name == "engine-agreement") {
                produced.push_back(engine_agreement(g, weights().first, opts));
            } else if (name == "normalization-bridge") {
                produced.push_back(normalization_bridge(g, weights().first, opts));
            } else if (name == "deletion-expansion") {
                produced.push_back(expand_deletions_graph(g, weights().first, weights().second, opts));
            } else if (name == "contraction-expansion") {
                produced.push_back(expand_contractions_graph(g, weights().first, weights().second, opts));
            } else if (name == "contraction-bridge") {
                produced.push_back(contraction_bridge(g, weights().first, weights().second, opts));
            } else if (name == "coloring-expansion" || name == "flow-expansion") {
                auto reports = verify_coloring_flow_expansions(g, opts);
                const std::size_t first = name == "coloring-expansion" ? 0 : 1;
                produced.push_back(reports[first]);
                produced.push_back(reports[first + 2]);
            } else if (name == "specialization-sums") {
                for (unsigned q : cfg.q_values) {
                    for (auto& r : verify_specialization_proofs(g, q, opts)) produced.push_back(std::move(r));
                }
            }
        }
        if (inst.matroid && produced.empty()) {
            const Matroid& m = *inst.matroid;
            if (name == "matroid-deletion-expansion") {
                produced.push_back(expand_deletions_matroid(m, weights().first, weights().second, opts));
            } else if (name == "matroid-contraction-expansion") {
                produced.push_back(expand_contractions_matroid(m, weights().first, weights().second, opts));
            } else if (name == "dual-transform") {
                produced.push_back(dual_transform(m, weights().first, opts));
            } else if (name == "dual-transform-twice") {
                produced.push_back(dual_transform_twice(m, weights().first, opts));
            } else if (name == "dual-derivation") {
                produced.push_back(derive_contraction_from_biggs(m, weights().first, weights().second, opts));
            }
        }
        const double ms =
            std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
        for (auto& r : produced) {
            result.reports.push_back(std::move(r));
            result.millis.push_back(ms / static_cast<double>(std::max<std::size_t>(produced.size(), 1)));
        }
    }
    return result;
}

std::vector<std::string> selected_identities(const RunConfig& cfg, const Instance& inst) {
    std::vector<std::string> out;
    const bool graph = inst.graph.has_value();
    if (cfg.identity == "all") {
        for (const auto& info : kIdentities) {
            if (graph || !info.graph_only) out.emplace_back(info.name);
        }
        return out;
    }
    const std::string name = canonical_identity(cfg.identity);
    if (name.empty()) throw UsageError("unknown identity '" + cfg.identity + "'");
    for (const auto& info : kIdentities) {
        if (name == info.name && info.graph_only && !graph) {
            throw UsageError("identity '" + name + "' needs a graph input");
        }
    }
    out.push_back(name);
    return out;
}

int exit_code_for(const std::exception& e) {
    if (dynamic_cast<const ParseError*>(&e) != nullptr || dynamic_cast<const UsageError*>(&e) != nullptr) {
        return kParseError;
    }
    return kEngineError;
}

int cmd_compute(const RunConfig& cfg, std::ostream& out) {
    if (cfg.inputs.size() != 1) throw UsageError("compute takes exactly one input file");
    const Instance inst = load_instance(cfg.inputs.front());
    if (!inst.axiom_failure.empty()) throw AxiomViolation(inst.axiom_failure);
    const EngineLimits limits = limits_of(cfg);
    const std::string& what = cfg.quantity;

    if (what == "rank-table") {
        write_matroid(out, tabulate(*inst.matroid, cfg.table_threshold));
        return kOk;
    }
    if (what == "zt") {
        const auto v = resolve_weights(cfg.v_spec.empty() ? "file" : cfg.v_spec, inst, instance_rng(cfg.seed, 1));
        out << to_string(zt_matroid(*inst.matroid, v, limits)) << '\n';
        return kOk;
    }
    if (!inst.graph) throw UsageError("'" + what + "' needs a graph input");
    const Multigraph& g = inst.graph->graph;
    if (what == "echo") {
        write_graph(out, *inst.graph);
        return kOk;
    }
    if (what == "chromatic") {
        out << to_string(chromatic_poly(g, limits)) << '\n';
        return kOk;
    }
    if (what == "flow") {
        out << to_string(flow_poly(g, limits)) << '\n';
        return kOk;
    }
    const auto v = resolve_weights(cfg.v_spec.empty() ? "file" : cfg.v_spec, inst, instance_rng(cfg.seed, 1));
    if (what == "z") {
        out << to_string(z_subset(g, v, limits)) << '\n';
    } else if (what == "z-delcon") {
        out << to_string(z_delcon(g, v)) << '\n';
    } else {
        throw UsageError("unknown quantity '" + what + "'");
    }
    return kOk;
}

const IdentityReport* first_failure(const std::vector<IdentityReport>& reports) {
    for (const auto& r : reports) {
        if (!r.pass) return &r;
    }
    return nullptr;
}

void print_failure(std::ostream& err, const IdentityReport& r) {
    err << "first counterexample: " << r.identity << " on " << r.instance << ": " << r.counterexample << '\n';
}

int cmd_verify(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.inputs.empty()) throw UsageError("verify needs at least one input file");
    std::vector<IdentityReport> all;
    for (std::size_t i = 0; i < cfg.inputs.size(); ++i) {
        const Instance inst = load_instance(cfg.inputs[i]);
        auto result = run_suite(inst, selected_identities(cfg, inst), cfg, i);
        for (auto& r : result.reports) {
            print_report(out, r, cfg.format, cfg.seed);
            all.push_back(std::move(r));
        }
    }
    if (const auto* failed = first_failure(all)) {
        print_failure(err, *failed);
        return kIdentityFailed;
    }
    return kOk;
}

int cmd_check_axioms(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    if (cfg.inputs.empty()) throw UsageError("check-axioms needs at least one input file");
    std::vector<IdentityReport> all;
    for (const auto& path : cfg.inputs) {
        const Instance inst = load_instance(path);
        all.push_back(axiom_report(inst, cfg));
        print_report(out, all.back(), cfg.format, cfg.seed);
    }
    if (const auto* failed = first_failure(all)) {
        print_failure(err, *failed);
        return kIdentityFailed;
    }
    return kOk;
}

struct CorpusOutcome {
    std::string name;
    SuiteResult suite;
    int error_code = kOk;
    std::string error;
};

int cmd_corpus(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    // Instance builders, in output order.
    std::vector<std::function<Instance()>> builders;
    for (const auto& dir : cfg.inputs) {
        std::vector<std::string> files;
        if (std::filesystem::is_directory(dir)) {
            for (const auto& entry : std::filesystem::directory_iterator(dir)) {
                if (entry.is_regular_file()) files.push_back(entry.path().string());
            }
            std::sort(files.begin(), files.end());
        } else {
            files.push_back(dir);
        }
        for (auto& f : files) builders.emplace_back([f] { return load_instance(f); });
    }
    RandomGraphParams params;
    params.max_vertices = cfg.max_vertices;
    params.max_edges = cfg.max_edges;
    params.loop_probability = cfg.loop_probability;
    params.parallel_probability = cfg.parallel_probability;
    const std::size_t first_random = builders.size();
    for (std::size_t i = 0; i < cfg.random_count; ++i) {
        const std::uint64_t index = first_random + i;
        builders.emplace_back([params, index, first_random, &cfg] {
            Rng rng = instance_rng(cfg.seed, 3 * index);
            Instance inst;
            inst.name = "random#" + std::to_string(index - first_random);
            GraphDocument doc;
            doc.graph = random_multigraph(rng, params);
            doc.orientation = Orientation::natural(doc.graph);
            inst.matroid = Matroid::cycle(doc.graph);
            inst.graph = std::move(doc);
            return inst;
        });
    }

    auto run_one = [&cfg, &builders](std::size_t index) {
        CorpusOutcome outcome;
        try {
            const Instance inst = builders[index]();
            outcome.name = inst.name;
            RunConfig local = cfg;
            local.identity = "all";
            outcome.suite = run_suite(inst, selected_identities(local, inst), local, index);
        } catch (const std::exception& e) {
            outcome.error_code = exit_code_for(e);
            outcome.error = e.what();
        }
        return outcome;
    };

    std::vector<CorpusOutcome> outcomes(builders.size());
    const unsigned jobs = std::max(1U, cfg.jobs);
    for (std::size_t begin = 0; begin < builders.size(); begin += jobs) {
        const std::size_t end = std::min(builders.size(), begin + jobs);
        std::vector<std::future<CorpusOutcome>> batch;
        for (std::size_t i = begin; i < end; ++i) batch.push_back(std::async(std::launch::async, run_one, i));
        for (std::size_t i = begin; i < end; ++i) outcomes[i] = batch[i - begin].get();
    }

    struct Tally {
        std::size_t pass = 0;
        std::size_t fail = 0;
        double millis = 0;
    };
    std::vector<std::string> order;
    std::map<std::string, Tally> tally;
    std::size_t reports = 0;
    std::size_t failures = 0;
    int worst_error = kOk;
    const IdentityReport* first_failed = nullptr;

    for (std::size_t i = 0; i < outcomes.size(); ++i) {
        const auto& o = outcomes[i];
        if (o.error_code != kOk) {
            out << "ERROR [" << i << "] " << o.error << '\n';
            if (worst_error == kOk || o.error_code == kParseError) worst_error = o.error_code;
            continue;
        }
        std::size_t passed = 0;
        for (std::size_t k = 0; k < o.suite.reports.size(); ++k) {
            const auto& r = o.suite.reports[k];
            if (tally.count(r.identity) == 0) order.push_back(r.identity);
            auto& t = tally[r.identity];
            t.millis += o.suite.millis[k];
            ++reports;
            if (r.pass) {
                ++t.pass;
                ++passed;
            } else {
                ++t.fail;
                ++failures;
                if (first_failed == nullptr) first_failed = &r;
            }
        }
        out << (passed == o.suite.reports.size() ? "PASS" : "FAIL") << " [" << i << "] " << o.name << ' '
            << passed << '/' << o.suite.reports.size() << '\n';
        for (const auto& r : o.suite.reports) {
            if (!r.pass || cfg.witness) print_report(out, r, cfg.format, cfg.seed);
        }
    }

    out << "summary: instances=" << outcomes.size() << " reports=" << reports << " pass=" << (reports - failures)
        << " fail=" << failures << " seed=" << cfg.seed << '\n';
    for (const auto& name : order) {
        const auto& t = tally[name];
        out << "  " << std::left << std::setw(40) << name << std::right << std::setw(6) << t.pass << std::setw(6)
            << t.fail;
        if (cfg.timings) out << std::setw(12) << std::fixed << std::setprecision(2) << t.millis << " ms";
        out << '\n';
    }

    if (worst_error != kOk) return worst_error;
    if (first_failed != nullptr) {
        print_failure(err, *first_failed);
        return kIdentityFailed;
    }
    return kOk;
}

std::string single_line(std::string s) {
    std::replace(s.begin(), s.end(), '\n', ' ');
    return s;
}

} // namespace

std::string canonical_identity(const std::string& name) {
    if (name == "all") return name;
    for (const auto& info : kIdentities) {
        if (name == info.name || (*info.alias != '\0' && name == info.alias)) return info.name;
    }
    return {};
}

void print_report(std::ostream& out, const IdentityReport& report, OutputFormat format, std::uint64_t seed) {
    if (format == OutputFormat::kv) {
        out << "identity=" << report.identity << '\n'
            << "instance=" << report.instance << '\n'
            << "seed=" << seed << '\n'
            << "status=" << (report.pass ? "PASS" : "FAIL") << '\n'
            << "lhs=" << to_string(report.lhs) << '\n'
            << "rhs=" << to_string(report.rhs) << '\n';
        if (!report.counterexample.empty()) out << "counterexample=" << single_line(report.counterexample) << '\n';
        for (std::size_t i = 0; i < report.witness.size(); ++i) {
            const auto& w = report.witness[i];
            const std::string key = "witness." + std::to_string(i) + '.';
            out << key << "subset=" << w.subset << '\n'
                << key << "coefficient=" << to_string(w.coefficient) << '\n'
                << key << "minor=" << to_string(w.minor_value) << '\n'
                << key << "term=" << to_string(w.term) << '\n';
            if (w.alternate) out << key << "alternate=" << to_string(*w.alternate) << '\n';
        }
        out << "end\n";
        return;
    }
    out << (report.pass ? "PASS " : "FAIL ") << report.identity << ' ' << report.instance << " seed=" << seed
        << " lhs=" << to_string(report.lhs) << " rhs=" << to_string(report.rhs) << '\n';
    if (!report.counterexample.empty()) out << "  counterexample: " << single_line(report.counterexample) << '\n';
    for (const auto& w : report.witness) {
        out << "  F=" << w.subset << " coefficient=" << to_string(w.coefficient) << " minor=" << to_string(w.minor_value)
            << " term=" << to_string(w.term);
        if (w.alternate) out << " alternate=" << to_string(*w.alternate);
        out << '\n';
    }
}

int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        if (cfg.command == "compute") return cmd_compute(cfg, out);
        if (cfg.command == "verify") return cmd_verify(cfg, out, err);
        if (cfg.command == "corpus") return cmd_corpus(cfg, out, err);
        if (cfg.command == "check-axioms") return cmd_check_axioms(cfg, out, err);
        throw UsageError("unknown command '" + cfg.command + "'");
    } catch (const std::exception& e) {
        const int code = exit_code_for(e);
        err << (code == kParseError ? "error: " : "engine error: ") << e.what() << '\n';
        return code;
    }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    if (const char* cap = std::getenv("POTTS_SUBSET_CAP")) cfg.subset_cap = std::strtoul(cap, nullptr, 10);
    if (const char* threshold = std::getenv("POTTS_TABLE_THRESHOLD")) {
        cfg.table_threshold = std::strtoul(threshold, nullptr, 10);
    }

    CLI::App app{"Exact Potts partition functions, their expansions and specializations"};
    app.require_subcommand(1);
    std::string format = "text";

    auto common = [&](CLI::App* sub) {
        sub->add_option("--subset-cap", cfg.subset_cap, "largest edge/ground set enumerated (env POTTS_SUBSET_CAP)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--table-threshold", cfg.table_threshold,
                        "largest ground set tabulated (env POTTS_TABLE_THRESHOLD)")
            ->check(CLI::PositiveNumber);
        sub->add_option("--threads", cfg.threads, "enumeration threads (0 = hardware)");
        sub->add_option("--format", format, "text | kv")->check(CLI::IsMember({"text", "kv"}));
        sub->add_option("--seed", cfg.seed, "seed for random weights and instances");
        sub->add_flag("--witness", cfg.witness, "print the per-F summands");
    };

    auto* compute = app.add_subcommand("compute", "print a polynomial of one input");
    common(compute);
    auto* group = compute->add_option_group("quantity");
    bool z = false, z_delcon = false, zt = false, chromatic = false, flow = false, table = false, echo = false;
    group->add_flag("--z", z, "partition function by subset expansion");
    group->add_flag("--z-delcon", z_delcon, "partition function by deletion-contraction");
    group->add_flag("--zt", zt, "normalized partition function (matroid or cycle matroid)");
    group->add_flag("--chromatic", chromatic, "chromatic polynomial");
    group->add_flag("--flow", flow, "flow polynomial");
    group->add_flag("--rank-table", table, "rank table in matroid format");
    group->add_flag("--echo", echo, "re-emit the graph in canonical form");
    group->require_option(0, 1);
    compute->add_option("--weights,--v", cfg.v_spec, "weight source");
    compute->add_option("input", cfg.inputs, "graph or matroid file")->required();

    auto* verify = app.add_subcommand("verify", "verify identities on inputs");
    common(verify);
    verify->add_option("--identity", cfg.identity, "identity name or 'all'");
    verify->add_option("--v", cfg.v_spec, "weight source for v");
    verify->add_option("--u", cfg.u_spec, "weight source for u");
    verify->add_option("--q", cfg.q_values, "integer points for the specialization sums")->check(CLI::PositiveNumber);
    verify->add_option("input", cfg.inputs, "graph or matroid files")->required();

    auto* corpus = app.add_subcommand("corpus", "run every identity over a corpus");
    common(corpus);
    corpus->add_option("--random", cfg.random_count, "number of random multigraphs");
    corpus->add_option("--max-edges", cfg.max_edges, "edge bound for random multigraphs");
    corpus->add_option("--max-vertices", cfg.max_vertices, "vertex bound for random multigraphs")
        ->check(CLI::PositiveNumber);
    corpus->add_option("--loop-prob", cfg.loop_probability, "probability that a random edge is a loop");
    corpus->add_option("--parallel-prob", cfg.parallel_probability, "probability of repeating an earlier edge");
    corpus->add_option("--jobs", cfg.jobs, "instances run concurrently");
    corpus->add_option("--v", cfg.v_spec, "weight source for v");
    corpus->add_option("--u", cfg.u_spec, "weight source for u");
    corpus->add_flag("--timings", cfg.timings, "add per-identity timings to the summary");
    corpus->add_option("inputs", cfg.inputs, "directories or files");

    auto* axioms = app.add_subcommand("check-axioms", "check the rank axioms of matroid inputs");
    common(axioms);
    axioms->add_option("input", cfg.inputs, "matroid or graph files")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kParseError;
    }
    cfg.format = format == "kv" ? OutputFormat::kv : OutputFormat::text;
    cfg.command = app.get_subcommands().front()->get_name();
    if (chromatic) cfg.quantity = "chromatic";
    if (flow) cfg.quantity = "flow";
    if (z_delcon) cfg.quantity = "z-delcon";
    if (zt) cfg.quantity = "zt";
    if (table) cfg.quantity = "rank-table";
    if (echo) cfg.quantity = "echo";
    if (z) cfg.quantity = "z";
    return execute(cfg, out, err);
}

} // namespace potts::cli
