#pragma once

// Command-line front end: compute, verify, corpus, check-axioms.
//
// Exit codes: 0 success / all pass, 1 some identity failed, 2 usage or parse
// error, 3 engine error (cap exceeded, zero weight in a denominator, ...).

#include "potts/identities.hpp"

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace potts::cli {

enum ExitCode : int {
    kOk = 0,
    kIdentityFailed = 1,
    kParseError = 2,
    kEngineError = 3,
};

enum class OutputFormat { text, kv };

struct RunConfig {
    std::string command;
    std::vector<std::string> inputs;

    // compute
    std::string quantity = "z";  // z | z-delcon | zt | chromatic | flow | rank-table | echo

    // Weight sources: "" (file weights, else random), uniform:<weight>,
    // uniform:-q, file:<path>, random.
    std::string v_spec;
    std::string u_spec;

    std::string identity = "all";
    std::vector<unsigned> q_values{2, 3};

    std::size_t subset_cap = 24;
    std::size_t table_threshold = 12;
    unsigned threads = 0;
    bool witness = false;
    OutputFormat format = OutputFormat::text;
    std::uint64_t seed = 1;

    // corpus
    std::size_t random_count = 0;
    std::size_t max_vertices = 6;
    std::size_t max_edges = 8;
    double loop_probability = 0.15;
    double parallel_probability = 0.15;
    unsigned jobs = 1;
    bool timings = false;
};

/// Parses argv and runs the selected command.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

/// Runs an already-parsed configuration.
int execute(const RunConfig& cfg, std::ostream& out, std::ostream& err);

void print_report(std::ostream& out, const IdentityReport& report, OutputFormat format, std::uint64_t seed);

/// Canonical identity name for a user-supplied one (short aliases accepted);
/// empty when unknown.
std::string canonical_identity(const std::string& name);

} // namespace potts::cli
