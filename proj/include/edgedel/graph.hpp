#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace edgedel {

using Vertex = int;

/// Undirected edge, stored with the smaller endpoint first.
struct Edge {
    Vertex u = 0;
    Vertex v = 0;

    friend auto operator<=>(const Edge&, const Edge&) = default;
};

inline Edge make_edge(Vertex a, Vertex b) {
    return a < b ? Edge{a, b} : Edge{b, a};
}

/// Thrown when an enumeration or size guard trips. Guards protect against
/// exponential blow-up, not against malformed input.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Host annotation produced by the hitting-set generator: for each petal
/// cycle, its length and its full edge list in the original host. The
/// specialized flower containment check is only valid on graphs carrying
/// this tag (edge deletions preserve it, vertex surgery drops it).
struct FlowerHostTag {
    Vertex center = 0;
    // (petal cycle length, edges of that petal), ascending by length
    std::vector<std::pair<int, std::vector<Edge>>> petals;
};

/// Simple undirected graph on vertices 0..n-1. Immutable after construction.
class Graph {
public:
    Graph() = default;
    /// Validates: endpoints in range, no self-loops, no duplicate edges.
    Graph(int vertex_count, std::vector<Edge> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    /// Edges normalized (u < v) and sorted lexicographically.
    const std::vector<Edge>& edges() const { return edges_; }
    /// Sorted neighbor list.
    const std::vector<Vertex>& neighbors(Vertex u) const { return adj_[u]; }
    int degree(Vertex u) const { return static_cast<int>(adj_[u].size()); }
    int max_degree() const;
    bool has_edge(Vertex a, Vertex b) const;

    /// Copy with the given edges removed; throws if an edge is absent.
    /// The flower-host tag, when present, is carried over.
    Graph without_edges(const std::vector<Edge>& deleted) const;

    const std::shared_ptr<const FlowerHostTag>& flower_tag() const { return flower_tag_; }
    void set_flower_tag(std::shared_ptr<const FlowerHostTag> tag) { flower_tag_ = std::move(tag); }

    friend bool operator==(const Graph& a, const Graph& b) {
        return a.n_ == b.n_ && a.edges_ == b.edges_;
    }

private:
    int n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::vector<Vertex>> adj_;
    std::shared_ptr<const FlowerHostTag> flower_tag_;
};

/// Graph plus a positive integral weight per edge, aligned with edges().
class WeightedGraph {
public:
    WeightedGraph() = default;
    /// weights[i] belongs to graph.edges()[i]; every weight must be >= 1.
    WeightedGraph(Graph graph, std::vector<int> weights);

    const Graph& graph() const { return graph_; }
    const std::vector<int>& weights() const { return weights_; }
    int weight_at(int edge_index) const { return weights_[edge_index]; }

    /// Sum of all edge weights.
    long long total_weight() const;
    /// Sum of weights on edges incident to u.
    long long weighted_degree(Vertex u) const;
    long long max_weighted_degree() const;

private:
    Graph graph_;
    std::vector<int> weights_;
};

/// A direction per edge of a WeightedGraph: tail[i] is one endpoint of
/// edges()[i], the head is the other.
struct Orientation {
    std::vector<Vertex> tail;
};

/// Sum of weights of edges leaving u under the orientation.
long long weighted_outdegree(const WeightedGraph& wg, const Orientation& o, Vertex u);

/// Twin classes of the independent set I = V \ cover: vertices grouped by
/// identical neighborhoods (which all lie inside the cover).
struct TwinClass {
    std::vector<Vertex> signature;  // sorted subset of the cover
    std::vector<Vertex> members;    // sorted
};

struct TwinClassification {
    std::vector<Vertex> cover;       // sorted
    std::vector<TwinClass> classes;  // sorted by signature
};

/// Components as sorted vertex sets, ordered by smallest member.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Throws std::invalid_argument if cover is not a vertex cover of g.
TwinClassification twin_classes(const Graph& g, const std::vector<Vertex>& cover);

/// Checks that every edge of g has an endpoint in cover (given sorted or not).
bool is_vertex_cover(const Graph& g, const std::vector<Vertex>& cover);

/// Minimum vertex cover if its size is <= bound, otherwise nullopt.
/// Deterministic: the lexicographically smallest among all minimum covers.
std::optional<std::vector<Vertex>> min_vertex_cover(const Graph& g, int bound);

}  // namespace edgedel
