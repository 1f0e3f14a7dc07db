#include "edgedel/kernelize.hpp"

namespace edgedel {

KernelResult kernelize(const Graph& g, int k, int h) {
    if (k < 0) throw std::invalid_argument("kernelize: k must be >= 0");
    if (h < 1) throw std::invalid_argument("kernelize: h must be >= 1");

    KernelResult out;
    out.k = k;
    out.h = h;

    std::vector<char> keep(g.vertex_count(), 0);
    for (const auto& comp : connected_components(g)) {
        if (static_cast<int>(comp.size()) <= h) {
            out.removed_components.push_back(comp);
        } else {
            for (Vertex v : comp) keep[v] = 1;
        }
    }

    std::vector<Vertex> to_new(g.vertex_count(), -1);
    for (Vertex v = 0; v < g.vertex_count(); ++v) {
        if (!keep[v]) continue;
        to_new[v] = static_cast<Vertex>(out.vertex_map.size());
        out.vertex_map.push_back(v);
    }
    std::vector<Edge> edges;
    for (const auto& e : g.edges())
        if (keep[e.u] && keep[e.v]) edges.push_back({to_new[e.u], to_new[e.v]});
    out.reduced = Graph(static_cast<int>(out.vertex_map.size()), std::move(edges));

    const long long kk = k, hh = h;
    if (out.reduced.vertex_count() > 2 * kk * hh ||
        out.reduced.edge_count() > 2 * kk * hh * hh + kk)
        out.verdict = KernelResult::Verdict::no_by_bounds;
    return out;
}

}  // namespace edgedel
