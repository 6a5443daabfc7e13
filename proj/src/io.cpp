#include "potts/io.hpp"

#include "potts/errors.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

namespace potts {

namespace {

class LineReader {
public:
    explicit LineReader(std::istream& in) : in_(in) {}

    // Next non-blank, non-comment line split into whitespace tokens.
    bool next(std::vector<std::string>& tokens) {
        std::string line;
        while (std::getline(in_, line)) {
            ++number_;
            std::istringstream split(line);
            tokens.clear();
            for (std::string t; split >> t;) tokens.push_back(std::move(t));
            if (tokens.empty() || tokens.front() == "c") continue;
            return true;
        }
        return false;
    }

    std::size_t line() const noexcept { return number_; }

    [[noreturn]] void fail(const std::string& what) const { throw ParseError(number_, what); }

    std::uint64_t unsigned_field(const std::string& token, int base = 10) const {
        std::uint64_t value = 0;
        auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value, base);
        if (ec != std::errc{} || ptr != token.data() + token.size()) fail("expected a non-negative integer, got '" + token + "'");
        return value;
    }

    std::uint32_t u32_field(const std::string& token) const {
        const auto value = unsigned_field(token);
        if (value > 0xffffffffULL) fail("value out of range '" + token + "'");
        return static_cast<std::uint32_t>(value);
    }

    void expect_arity(const std::vector<std::string>& tokens, std::size_t n) const {
        if (tokens.size() != n) {
            fail("'" + tokens.front() + "' line needs " + std::to_string(n - 1) + " fields, got " +
                 std::to_string(tokens.size() - 1));
        }
    }

private:
    std::istream& in_;
    std::size_t number_ = 0;
};

QMonomialWeight weight_field(const LineReader& reader, const std::string& token) {
    try {
        return parse_weight(token);
    } catch (const InvalidParameter& e) {
        reader.fail(e.what());
    }
}

GraphDocument parse_graph_body(LineReader& reader, std::vector<std::string>& tokens) {
    reader.expect_arity(tokens, 4);
    const std::size_t vertices = reader.unsigned_field(tokens[2]);
    const std::size_t declared_edges = reader.unsigned_field(tokens[3]);

    std::vector<Edge> edges;
    std::map<std::uint32_t, std::size_t> edge_line;
    std::map<std::uint32_t, QMonomialWeight> weights;
    std::vector<std::tuple<std::uint32_t, Orientation::Arc, std::size_t>> arcs;
    while (reader.next(tokens)) {
        const std::string& kind = tokens.front();
        if (kind == "e") {
            reader.expect_arity(tokens, 4);
            Edge e{EdgeId{reader.u32_field(tokens[1])}, reader.u32_field(tokens[2]), reader.u32_field(tokens[3])};
            if (e.a >= vertices || e.b >= vertices) reader.fail("endpoint out of range");
            if (!edge_line.emplace(e.id.value, reader.line()).second) {
                reader.fail("duplicate edge id " + tokens[1]);
            }
            edges.push_back(e);
        } else if (kind == "w") {
            reader.expect_arity(tokens, 3);
            const auto id = reader.u32_field(tokens[1]);
            if (!weights.emplace(id, weight_field(reader, tokens[2])).second) reader.fail("duplicate weight for edge " + tokens[1]);
        } else if (kind == "o") {
            reader.expect_arity(tokens, 4);
            arcs.emplace_back(reader.u32_field(tokens[1]),
                              Orientation::Arc{reader.u32_field(tokens[2]), reader.u32_field(tokens[3])},
                              reader.line());
        } else {
            reader.fail("unexpected line kind '" + kind + "' in graph file");
        }
    }
    if (edges.size() != declared_edges) {
        reader.fail("header declares " + std::to_string(declared_edges) + " edges, found " +
                    std::to_string(edges.size()));
    }

    GraphDocument doc;
    doc.graph = Multigraph(vertices, std::move(edges));
    for (const auto& [id, w] : weights) {
        if (!doc.graph.has_edge(EdgeId{id})) throw ParseError(reader.line(), "weight for unknown edge " + std::to_string(id));
    }
    doc.weights = std::move(weights);
    doc.orientation = Orientation::natural(doc.graph);
    for (const auto& [id, arc, line] : arcs) {
        try {
            doc.orientation.set(doc.graph, EdgeId{id}, arc);
        } catch (const Error& e) {
            throw ParseError(line, e.what());
        }
    }
    return doc;
}

MatroidDocument parse_matroid_body(LineReader& reader, std::vector<std::string>& tokens) {
    reader.expect_arity(tokens, 3);
    const std::size_t n = reader.unsigned_field(tokens[2]);
    if (n > 24) reader.fail("rank tables are limited to 24 elements");
    const std::size_t count = std::size_t{1} << n;
    MatroidDocument doc;
    doc.ground_size = n;
    doc.ranks.assign(count, 0);
    std::vector<bool> seen(count, false);
    std::size_t filled = 0;
    while (reader.next(tokens)) {
        if (tokens.front() != "r") reader.fail("unexpected line kind '" + tokens.front() + "' in matroid file");
        reader.expect_arity(tokens, 3);
        std::string hex = tokens[1];
        if (hex.size() > 2 && hex[0] == '0' && (hex[1] == 'x' || hex[1] == 'X')) hex = hex.substr(2);
        const auto mask = reader.unsigned_field(hex, 16);
        if (mask >= count) reader.fail("subset " + tokens[1] + " outside the ground set");
        if (seen[mask]) reader.fail("duplicate rank entry for " + tokens[1]);
        seen[mask] = true;
        doc.ranks[mask] = reader.u32_field(tokens[2]);
        ++filled;
    }
    if (filled != count) {
        reader.fail("rank table has " + std::to_string(filled) + " of " + std::to_string(count) + " entries");
    }
    return doc;
}

} // namespace

WeightAssignment GraphDocument::numeric_weights() const {
    for (const Edge& e : graph.edges()) {
        if (weights.count(e.id.value) == 0) {
            throw IncompleteAssignment("edge " + std::to_string(e.id.value) +
                                       " has a symbolic weight; supply numeric weights");
        }
    }
    return WeightAssignment(weights);
}

Matroid MatroidDocument::matroid() const { return Matroid::from_table(ground_size, ranks); }

GraphDocument parse_graph(std::istream& in) {
    LineReader reader(in);
    std::vector<std::string> tokens;
    if (!reader.next(tokens) || tokens.size() < 2 || tokens[0] != "p" || tokens[1] != "graph") {
        reader.fail("expected 'p graph <vertex_count> <edge_count>' header");
    }
    return parse_graph_body(reader, tokens);
}

MatroidDocument parse_matroid(std::istream& in) {
    LineReader reader(in);
    std::vector<std::string> tokens;
    if (!reader.next(tokens) || tokens.size() < 2 || tokens[0] != "p" || tokens[1] != "matroid") {
        reader.fail("expected 'p matroid <n>' header");
    }
    return parse_matroid_body(reader, tokens);
}

std::map<std::uint32_t, QMonomialWeight> parse_weight_lines(std::istream& in) {
    LineReader reader(in);
    std::vector<std::string> tokens;
    std::map<std::uint32_t, QMonomialWeight> weights;
    while (reader.next(tokens)) {
        if (tokens.front() != "w") reader.fail("weight files contain only 'w' lines");
        reader.expect_arity(tokens, 3);
        if (!weights.emplace(reader.u32_field(tokens[1]), weight_field(reader, tokens[2])).second) {
            reader.fail("duplicate weight for edge " + tokens[1]);
        }
    }
    return weights;
}

Document parse_document(std::istream& in) {
    LineReader reader(in);
    std::vector<std::string> tokens;
    if (!reader.next(tokens) || tokens.size() < 2 || tokens[0] != "p") reader.fail("missing 'p' header line");
    if (tokens[1] == "graph") return parse_graph_body(reader, tokens);
    if (tokens[1] == "matroid") return parse_matroid_body(reader, tokens);
    reader.fail("unknown document kind '" + tokens[1] + "'");
}

Document load_document(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError(0, "cannot open '" + path + "'");
    return parse_document(in);
}

void write_graph(std::ostream& out, const GraphDocument& doc) {
    const Multigraph& g = doc.graph;
    out << "p graph " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const Edge& e : g.edges()) out << "e " << e.id.value << ' ' << e.a << ' ' << e.b << '\n';
    for (const auto& [id, w] : doc.weights) out << "w " << id << ' ' << to_string(w) << '\n';
    for (const Edge& e : g.edges()) {
        auto it = doc.orientation.arcs().find(e.id);
        if (it == doc.orientation.arcs().end()) continue;
        if (it->second.tail == e.a && it->second.head == e.b) continue;
        out << "o " << e.id.value << ' ' << it->second.tail << ' ' << it->second.head << '\n';
    }
}

void write_matroid(std::ostream& out, const MatroidDocument& doc) {
    out << "p matroid " << doc.ground_size << '\n';
    std::ostringstream hex;
    for (std::size_t mask = 0; mask < doc.ranks.size(); ++mask) {
        hex.str("");
        hex << std::hex << mask;
        out << "r " << hex.str() << ' ' << doc.ranks[mask] << '\n';
    }
}

MatroidDocument tabulate(const Matroid& m, std::size_t threshold) {
    return {m.ground_size(), rank_table(m, threshold)};
}

} // namespace potts
