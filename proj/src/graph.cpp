#include "edgedel/graph.hpp"

#include <algorithm>
#include <queue>

namespace edgedel {

Graph::Graph(int vertex_count, std::vector<Edge> edges) : n_(vertex_count) {
    if (vertex_count < 0) throw std::invalid_argument("vertex count must be non-negative");
    for (auto& e : edges) {
        if (e.u == e.v) throw std::invalid_argument("self-loop at vertex " + std::to_string(e.u));
        if (e.u > e.v) std::swap(e.u, e.v);
        if (e.u < 0 || e.v >= n_)
            throw std::invalid_argument("edge endpoint out of range: " + std::to_string(e.u) +
                                        " " + std::to_string(e.v));
    }
    std::sort(edges.begin(), edges.end());
    if (std::adjacent_find(edges.begin(), edges.end()) != edges.end())
        throw std::invalid_argument("duplicate edge");
    edges_ = std::move(edges);
    adj_.assign(n_, {});
    for (const auto& e : edges_) {
        adj_[e.u].push_back(e.v);
        adj_[e.v].push_back(e.u);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
}

int Graph::max_degree() const {
    int best = 0;
    for (const auto& nb : adj_) best = std::max(best, static_cast<int>(nb.size()));
    return best;
}

bool Graph::has_edge(Vertex a, Vertex b) const {
    if (a < 0 || b < 0 || a >= n_ || b >= n_ || a == b) return false;
    const auto& nb = adj_[a].size() <= adj_[b].size() ? adj_[a] : adj_[b];
    Vertex other = adj_[a].size() <= adj_[b].size() ? b : a;
    return std::binary_search(nb.begin(), nb.end(), other);
}

Graph Graph::without_edges(const std::vector<Edge>& deleted) const {
    std::vector<Edge> del = deleted;
    for (auto& e : del)
        if (e.u > e.v) std::swap(e.u, e.v);
    std::sort(del.begin(), del.end());
    del.erase(std::unique(del.begin(), del.end()), del.end());
    std::vector<Edge> kept;
    kept.reserve(edges_.size());
    std::size_t di = 0;
    for (const auto& e : edges_) {
        if (di < del.size() && del[di] == e) {
            ++di;
            continue;
        }
        kept.push_back(e);
    }
    if (di != del.size()) throw std::invalid_argument("deleted edge not present in graph");
    Graph out(n_, std::move(kept));
    out.flower_tag_ = flower_tag_;
    return out;
}

WeightedGraph::WeightedGraph(Graph graph, std::vector<int> weights)
    : graph_(std::move(graph)), weights_(std::move(weights)) {
    if (weights_.size() != graph_.edges().size())
        throw std::invalid_argument("one weight per edge required");
    for (int w : weights_)
        if (w < 1) throw std::invalid_argument("edge weight must be >= 1");
}

long long WeightedGraph::total_weight() const {
    long long s = 0;
    for (int w : weights_) s += w;
    return s;
}

long long WeightedGraph::weighted_degree(Vertex u) const {
    long long s = 0;
    const auto& es = graph_.edges();
    for (std::size_t i = 0; i < es.size(); ++i)
        if (es[i].u == u || es[i].v == u) s += weights_[i];
    return s;
}

long long WeightedGraph::max_weighted_degree() const {
    long long best = 0;
    for (Vertex u = 0; u < graph_.vertex_count(); ++u)
        best = std::max(best, weighted_degree(u));
    return best;
}

long long weighted_outdegree(const WeightedGraph& wg, const Orientation& o, Vertex u) {
    long long s = 0;
    for (std::size_t i = 0; i < o.tail.size(); ++i)
        if (o.tail[i] == u) s += wg.weight_at(static_cast<int>(i));
    return s;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> comp(n, -1);
    std::vector<std::vector<Vertex>> out;
    for (Vertex s = 0; s < n; ++s) {
        if (comp[s] != -1) continue;
        int id = static_cast<int>(out.size());
        out.emplace_back();
        std::queue<Vertex> q;
        q.push(s);
        comp[s] = id;
        while (!q.empty()) {
            Vertex x = q.front();
            q.pop();
            out[id].push_back(x);
            for (Vertex y : g.neighbors(x)) {
                if (comp[y] == -1) {
                    comp[y] = id;
                    q.push(y);
                }
            }
        }
        std::sort(out[id].begin(), out[id].end());
    }
    return out;
}

bool is_vertex_cover(const Graph& g, const std::vector<Vertex>& cover) {
    std::vector<char> in(g.vertex_count(), 0);
    for (Vertex v : cover) {
        if (v < 0 || v >= g.vertex_count()) return false;
        in[v] = 1;
    }
    for (const auto& e : g.edges())
        if (!in[e.u] && !in[e.v]) return false;
    return true;
}

TwinClassification twin_classes(const Graph& g, const std::vector<Vertex>& cover) {
    if (!is_vertex_cover(g, cover))
        throw std::invalid_argument("twin_classes: given set is not a vertex cover");
    TwinClassification out;
    out.cover = cover;
    std::sort(out.cover.begin(), out.cover.end());
    out.cover.erase(std::unique(out.cover.begin(), out.cover.end()), out.cover.end());

    std::vector<char> in_cover(g.vertex_count(), 0);
    for (Vertex v : out.cover) in_cover[v] = 1;

    // I = V \ cover is independent, so every neighborhood is inside the cover.
    std::vector<std::pair<std::vector<Vertex>, Vertex>> keyed;
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (in_cover[v]) continue;
        keyed.emplace_back(g.neighbors(v), v);
    }
    std::sort(keyed.begin(), keyed.end());
    for (auto& [sig, v] : keyed) {
        if (out.classes.empty() || out.classes.back().signature != sig)
            out.classes.push_back(TwinClass{sig, {}});
        out.classes.back().members.push_back(v);
    }
    return out;
}

namespace {

// Decision: does g have a vertex cover of size <= budget that contains
// forced_in and avoids forced_out?  Branch on an uncovered edge.
bool cover_exists(const Graph& g, int budget, std::vector<char>& in, std::vector<char>& out) {
    const Edge* open = nullptr;
    for (const auto& e : g.edges()) {
        if (in[e.u] || in[e.v]) continue;
        if (out[e.u] && out[e.v]) return false;
        if (!open) open = &e;
    }
    if (!open) return true;
    if (budget == 0) return false;
    for (Vertex pick : {open->u, open->v}) {
        if (out[pick]) continue;
        in[pick] = 1;
        bool ok = cover_exists(g, budget - 1, in, out);
        in[pick] = 0;
        if (ok) return true;
    }
    return false;
}

bool cover_exists(const Graph& g, int budget) {
    std::vector<char> in(g.vertex_count(), 0), out(g.vertex_count(), 0);
    return cover_exists(g, budget, in, out);
}

}  // namespace

std::optional<std::vector<Vertex>> min_vertex_cover(const Graph& g, int bound) {
    if (bound < 0) throw std::invalid_argument("min_vertex_cover: bound must be >= 0");
    const int n = g.vertex_count();
    int size = -1;
    for (int s = 0; s <= std::min(bound, n); ++s) {
        if (cover_exists(g, s)) {
            size = s;
            break;
        }
    }
    if (size == -1) return std::nullopt;

    // Lexicographically smallest minimum cover: fix vertices in ascending
    // order, keeping each one iff a minimum cover extending the choices exists.
    std::vector<char> in(n, 0), out(n, 0);
    std::vector<Vertex> result;
    for (Vertex v = 0; v < n && static_cast<int>(result.size()) < size; ++v) {
        in[v] = 1;
        if (cover_exists(g, size - static_cast<int>(result.size()) - 1, in, out)) {
            result.push_back(v);
        } else {
            in[v] = 0;
            out[v] = 1;
        }
    }
    return result;
}

}  // namespace edgedel
