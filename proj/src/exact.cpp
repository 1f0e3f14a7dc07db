#include "edgedel/exact.hpp"

#include <algorithm>
#include <numeric>

namespace edgedel {

namespace {

constexpr long long kCandidateGuard = 100'000'000;

struct UnionFind {
    std::vector<int> parent, size;

    explicit UnionFind(int n) : parent(n), size(n, 1) {
        std::iota(parent.begin(), parent.end(), 0);
    }

    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }

    void unite(int a, int b) {
        a = find(a);
        b = find(b);
        if (a == b) return;
        if (size[a] < size[b]) std::swap(a, b);
        parent[b] = a;
        size[a] += size[b];
    }
};

// Family check over a kept-edge list (sorted, no duplicates) without
// constructing a Graph when a cheaper route exists; the oracle spends almost
// all of its time here.
bool family_free_kept(int n, const std::vector<Edge>& kept, const ForbiddenFamily& fam,
                      const std::shared_ptr<const FlowerHostTag>& tag) {
    std::optional<Graph> materialized;
    auto graph = [&]() -> const Graph& {
        if (!materialized) {
            materialized = Graph(n, kept);
            if (tag) materialized->set_flower_tag(tag);
        }
        return *materialized;
    };
    for (const auto& d : fam.members()) {
        if (const auto* s = std::get_if<Star>(&d)) {
            std::vector<int> deg(n, 0);
            bool hit = false;
            for (const auto& e : kept) {
                if (++deg[e.u] >= s->d || ++deg[e.v] >= s->d) {
                    hit = true;
                    break;
                }
            }
            if (hit) return false;
        } else if (const auto* t = std::get_if<AllTrees>(&d)) {
            UnionFind uf(n);
            bool hit = n >= 1 && t->t <= 1;
            for (const auto& e : kept) {
                uf.unite(e.u, e.v);
                if (uf.size[uf.find(e.u)] >= t->t) {
                    hit = true;
                    break;
                }
            }
            if (hit) return false;
        } else if (const auto* f = std::get_if<Flower>(&d)) {
            if (!tag)
                throw std::invalid_argument(
                    "contains_flower: graph is not a generator-produced flower host");
            bool all_intact = true;
            for (int length : f->lengths) {
                auto it = std::find_if(tag->petals.begin(), tag->petals.end(),
                                       [&](const auto& p) { return p.first == length; });
                if (it == tag->petals.end()) {
                    all_intact = false;
                    break;
                }
                for (const Edge& e : it->second) {
                    if (!std::binary_search(kept.begin(), kept.end(), e)) {
                        all_intact = false;
                        break;
                    }
                }
                if (!all_intact) break;
            }
            if (all_intact) return false;
        } else if (const auto* c = std::get_if<CycleExact>(&d)) {
            if (contains_cycle_exact(graph(), c->length)) return false;
        } else {
            const auto& p = std::get<ExplicitPattern>(d);
            if (subgraph_isomorphic(p.pattern, graph())) return false;
        }
    }
    return true;
}

long long candidate_count(int m, int k_max) {
    long long total = 0;
    long long binom = 1;  // C(m, 0)
    for (int j = 0; j <= std::min(k_max, m); ++j) {
        total += binom;
        if (total > kCandidateGuard) return kCandidateGuard + 1;
        if (binom > kCandidateGuard) return kCandidateGuard + 1;
        binom = binom * (m - j) / (j + 1);
    }
    return total;
}

}  // namespace

std::optional<Solution> brute_force_min(const Graph& g, const ForbiddenFamily& fam, int k_max,
                                        OracleStats* stats) {
    if (k_max < 0) throw std::invalid_argument("brute_force_min: k_max must be >= 0");
    const int m = g.edge_count();
    if (candidate_count(m, k_max) > kCandidateGuard)
        throw GuardError("brute_force_min: candidate set count exceeds 10^8");

    const auto& edges = g.edges();
    std::vector<Edge> kept;
    kept.reserve(m);
    long long checked = 0;
    for (int size = 0; size <= std::min(k_max, m); ++size) {
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            kept.clear();
            int next = 0;
            for (int i = 0; i < m; ++i) {
                if (next < size && pick[next] == i) {
                    ++next;
                    continue;
                }
                kept.push_back(edges[i]);
            }
            ++checked;
            if (family_free_kept(g.vertex_count(), kept, fam, g.flower_tag())) {
                if (stats) stats->candidates_checked = checked;
                Solution sol;
                for (int i : pick) sol.deleted_edges.push_back(edges[i]);
                return sol;
            }
            // advance the combination in lexicographic order
            int i = size - 1;
            while (i >= 0 && pick[i] == m - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    if (stats) stats->candidates_checked = checked;
    return std::nullopt;
}

namespace {

class BranchSearch {
public:
    BranchSearch(const Graph& g, int h, BranchStats* stats)
        : g_(g), h_(h), stats_(stats), alive_(g.edge_count(), 1) {
        // adjacency annotated with edge indices, neighbor order ascending
        inc_.resize(g.vertex_count());
        const auto& es = g.edges();
        for (int i = 0; i < g.edge_count(); ++i) {
            inc_[es[i].u].push_back({es[i].v, i});
            inc_[es[i].v].push_back({es[i].u, i});
        }
        for (auto& row : inc_) std::sort(row.begin(), row.end());
    }

    bool run(int budget, std::vector<int>& deleted) {
        if (stats_) ++stats_->nodes_expanded;
        std::vector<int> tree_edges;
        if (!find_violation(tree_edges)) return true;
        if (budget == 0) return false;
        for (int ei : tree_edges) {
            alive_[ei] = 0;
            deleted.push_back(ei);
            if (run(budget - 1, deleted)) return true;
            deleted.pop_back();
            alive_[ei] = 1;
        }
        return false;
    }

private:
    // Finds the offending component containing the smallest vertex, then
    // grows a BFS tree of exactly h_+1 vertices from that vertex. Returns
    // false if every component already has <= h_ vertices.
    bool find_violation(std::vector<int>& tree_edges) {
        const int n = g_.vertex_count();
        std::vector<char> seen(n, 0);
        std::vector<Vertex> queue;
        for (Vertex s = 0; s < n; ++s) {
            if (seen[s]) continue;
            queue.clear();
            queue.push_back(s);
            seen[s] = 1;
            std::size_t head = 0;
            while (head < queue.size()) {
                Vertex x = queue[head++];
                for (auto [y, ei] : inc_[x]) {
                    if (!alive_[ei] || seen[y]) continue;
                    seen[y] = 1;
                    queue.push_back(y);
                }
            }
            if (static_cast<int>(queue.size()) <= h_) continue;
            // BFS again from s, recording tree edges until h_+1 vertices
            std::vector<char> in_tree(n, 0);
            std::vector<Vertex> bfs{s};
            in_tree[s] = 1;
            head = 0;
            int count = 1;
            while (head < bfs.size() && count <= h_) {
                Vertex x = bfs[head++];
                for (auto [y, ei] : inc_[x]) {
                    if (!alive_[ei] || in_tree[y]) continue;
                    in_tree[y] = 1;
                    bfs.push_back(y);
                    tree_edges.push_back(ei);
                    if (++count > h_) break;
                }
            }
            return true;
        }
        return false;
    }

    const Graph& g_;
    int h_;
    BranchStats* stats_;
    std::vector<char> alive_;
    std::vector<std::vector<std::pair<Vertex, int>>> inc_;
};

}  // namespace

std::optional<Solution> branch_cap(const Graph& g, int h, int k, BranchStats* stats) {
    if (h < 1) throw std::invalid_argument("branch_cap: h must be >= 1");
    if (k < 0) throw std::invalid_argument("branch_cap: k must be >= 0");
    BranchSearch search(g, h, stats);
    std::vector<int> deleted;
    if (!search.run(k, deleted)) return std::nullopt;
    Solution sol;
    for (int ei : deleted) sol.deleted_edges.push_back(g.edges()[ei]);
    std::sort(sol.deleted_edges.begin(), sol.deleted_edges.end());
    return sol;
}

bool verify(const Graph& g, const Solution& sol, const ForbiddenFamily& fam) {
    for (const auto& e : sol.deleted_edges)
        if (!g.has_edge(e.u, e.v))
            throw std::invalid_argument("verify: deleted edge not in graph");
    return family_free(g.without_edges(sol.deleted_edges), fam);
}

}  // namespace edgedel
