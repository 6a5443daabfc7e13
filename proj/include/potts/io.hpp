#pragma once

// Line-oriented text formats.
//
// Graph:
//   c <comment>
//   p graph <vertex_count> <edge_count>
//   e <edge_id> <u> <v>
//   w <edge_id> <rational>[*q^<int>]      optional, per edge
//   o <edge_id> <tail> <head>             optional, per edge
//
// Matroid rank table:
//   p matroid <n>
//   r <subset mask in hex> <rank>         one line per subset, 2^n lines
//
// Weight file: `w` lines only (comments allowed).

#include "potts/laurent.hpp"
#include "potts/matroid.hpp"
#include "potts/multigraph.hpp"
#include "potts/specialize.hpp"
#include "potts/weights.hpp"

#include <iosfwd>
#include <map>
#include <string>
#include <variant>
#include <vector>

namespace potts {

struct GraphDocument {
    Multigraph graph;
    /// Edges without a `w` line keep a symbolic weight and are absent here.
    std::map<std::uint32_t, QMonomialWeight> weights;
    Orientation orientation;

    /// Throws IncompleteAssignment naming the first symbolic edge.
    WeightAssignment numeric_weights() const;
};

struct MatroidDocument {
    std::size_t ground_size = 0;
    std::vector<std::uint32_t> ranks;

    /// Builds the table matroid; throws AxiomViolation for a corrupt table.
    Matroid matroid() const;
};

using Document = std::variant<GraphDocument, MatroidDocument>;

/// All parsers throw ParseError carrying the 1-based line number.
GraphDocument parse_graph(std::istream& in);
MatroidDocument parse_matroid(std::istream& in);
std::map<std::uint32_t, QMonomialWeight> parse_weight_lines(std::istream& in);
/// Dispatches on the `p graph` / `p matroid` header.
Document parse_document(std::istream& in);
Document load_document(const std::string& path);

void write_graph(std::ostream& out, const GraphDocument& doc);
void write_matroid(std::ostream& out, const MatroidDocument& doc);
/// Rank table of m in the matroid format (subject to the table threshold).
MatroidDocument tabulate(const Matroid& m, std::size_t threshold = kDefaultTableThreshold);

} // namespace potts
