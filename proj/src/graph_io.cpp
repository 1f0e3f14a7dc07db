#include "edgedel/graph_io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace edgedel {

namespace {

using Kind = ParseError::Kind;

std::vector<std::string_view> tokenize(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
        std::size_t j = i;
        while (j < line.size() && line[j] != ' ' && line[j] != '\t' && line[j] != '\r') ++j;
        if (j > i) out.push_back(line.substr(i, j - i));
        i = j;
    }
    return out;
}

bool parse_int(std::string_view tok, long long& value) {
    auto [p, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
    return ec == std::errc{} && p == tok.data() + tok.size();
}

struct Parsed {
    int n = 0;
    std::vector<Edge> edges;
    std::vector<int> weights;
};

Parsed parse(std::string_view text, bool weighted) {
    Parsed out;
    std::size_t pos = 0;
    bool header_seen = false;
    long long m_declared = 0;
    while (pos <= text.size()) {
        std::size_t nl = text.find('\n', pos);
        std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
        pos = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
        auto toks = tokenize(line);
        if (toks.empty() || toks[0][0] == '#') continue;
        if (!header_seen) {
            long long n = 0;
            if (toks.size() != 2 || !parse_int(toks[0], n) || !parse_int(toks[1], m_declared) ||
                n < 0 || m_declared < 0)
                throw ParseError(Kind::malformed_header, "header must be \"n m\"");
            out.n = static_cast<int>(n);
            header_seen = true;
            continue;
        }
        long long u = 0, v = 0, w = 1;
        bool shape_ok = false;
        if (toks.size() == 2) {
            shape_ok = parse_int(toks[0], u) && parse_int(toks[1], v);
        } else if (toks.size() == 3 && weighted) {
            shape_ok = parse_int(toks[0], u) && parse_int(toks[1], v) && parse_int(toks[2], w);
        }
        if (!shape_ok)
            throw ParseError(Kind::malformed_edge,
                             "edge line must be \"u v" + std::string(weighted ? " [w]" : "") + "\"");
        if (u == v)
            throw ParseError(Kind::self_loop, "self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= out.n || v >= out.n)
            throw ParseError(Kind::out_of_range, "edge endpoint out of range: " + std::to_string(u) +
                                                     " " + std::to_string(v));
        if (w < 1)
            throw ParseError(Kind::bad_weight, "edge weight must be >= 1");
        out.edges.push_back(make_edge(static_cast<Vertex>(u), static_cast<Vertex>(v)));
        out.weights.push_back(static_cast<int>(w));
    }
    if (!header_seen) throw ParseError(Kind::malformed_header, "missing header line");
    if (static_cast<long long>(out.edges.size()) != m_declared)
        throw ParseError(Kind::malformed_header,
                         "header declares " + std::to_string(m_declared) + " edges, found " +
                             std::to_string(out.edges.size()));
    for (std::size_t i = 0; i < out.edges.size(); ++i)
        for (std::size_t j = i + 1; j < out.edges.size(); ++j)
            if (out.edges[i] == out.edges[j])
                throw ParseError(Kind::duplicate_edge,
                                 "duplicate edge " + std::to_string(out.edges[i].u) + " " +
                                     std::to_string(out.edges[i].v));
    return out;
}

}  // namespace

Graph read_graph(std::string_view text) {
    Parsed p = parse(text, /*weighted=*/false);
    return Graph(p.n, std::move(p.edges));
}

std::string write_graph(const Graph& g) {
    std::ostringstream os;
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& e : g.edges()) os << e.u << ' ' << e.v << '\n';
    return os.str();
}

WeightedGraph read_weighted(std::string_view text) {
    Parsed p = parse(text, /*weighted=*/true);
    // Graph construction sorts edges; sort the weights the same way.
    std::vector<std::size_t> order(p.edges.size());
    for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return p.edges[a] < p.edges[b]; });
    std::vector<Edge> edges;
    std::vector<int> weights;
    edges.reserve(order.size());
    weights.reserve(order.size());
    for (std::size_t i : order) {
        edges.push_back(p.edges[i]);
        weights.push_back(p.weights[i]);
    }
    return WeightedGraph(Graph(p.n, std::move(edges)), std::move(weights));
}

std::string write_weighted(const WeightedGraph& wg) {
    std::ostringstream os;
    const auto& g = wg.graph();
    os << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (int i = 0; i < g.edge_count(); ++i) {
        const auto& e = g.edges()[i];
        os << e.u << ' ' << e.v << ' ' << wg.weight_at(i) << '\n';
    }
    return os.str();
}

}  // namespace edgedel
