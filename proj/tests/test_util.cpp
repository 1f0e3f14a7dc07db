#include "test_util.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace testutil {

std::vector<std::vector<Vertex>> components_by_union_find(const Graph& g) {
    DisjointSets ds(g.vertex_count());
    for (const auto& e : g.edges()) ds.unite(e.u, e.v);
    std::map<int, std::vector<Vertex>> buckets;
    for (Vertex v = 0; v < g.vertex_count(); ++v) buckets[ds.find(v)].push_back(v);
    std::vector<std::vector<Vertex>> out;
    for (auto& [root, members] : buckets) {
        std::sort(members.begin(), members.end());
        out.push_back(std::move(members));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Edge> all_pairs(int n) {
    std::vector<Edge> out;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) out.push_back({u, v});
    return out;
}

Graph graph_from_mask(int n, std::uint32_t mask) {
    auto pairs = all_pairs(n);
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1) edges.push_back(pairs[i]);
    return Graph(n, std::move(edges));
}

void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn) {
    const int pairs = n * (n - 1) / 2;
    for (std::uint32_t mask = 0; mask < (1u << pairs); ++mask) fn(graph_from_mask(n, mask));
}

namespace {

std::uint32_t permute_mask(std::uint32_t mask, const std::vector<int>& perm,
                           const std::vector<Edge>& pairs,
                           const std::map<Edge, int>& pair_index) {
    std::uint32_t out = 0;
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        if (!((mask >> i) & 1)) continue;
        Edge img = edgedel::make_edge(perm[pairs[i].u], perm[pairs[i].v]);
        out |= 1u << pair_index.at(img);
    }
    return out;
}

bool mask_connected(int n, std::uint32_t mask, const std::vector<Edge>& pairs) {
    DisjointSets ds(n);
    for (std::size_t i = 0; i < pairs.size(); ++i)
        if ((mask >> i) & 1) ds.unite(pairs[i].u, pairs[i].v);
    for (Vertex v = 1; v < n; ++v)
        if (ds.find(v) != ds.find(0)) return false;
    return true;
}

}  // namespace

std::vector<Graph> graphs_up_to_iso(int n, bool connected_only) {
    auto pairs = all_pairs(n);
    std::map<Edge, int> pair_index;
    for (std::size_t i = 0; i < pairs.size(); ++i) pair_index[pairs[i]] = static_cast<int>(i);
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<std::vector<int>> perms;
    do perms.push_back(perm);
    while (std::next_permutation(perm.begin(), perm.end()));

    std::set<std::uint32_t> canonical;
    for (std::uint32_t mask = 0; mask < (1u << pairs.size()); ++mask) {
        if (connected_only && !mask_connected(n, mask, pairs)) continue;
        std::uint32_t best = mask;
        for (const auto& p : perms) best = std::min(best, permute_mask(mask, p, pairs, pair_index));
        canonical.insert(best);
    }
    std::vector<Graph> out;
    for (std::uint32_t mask : canonical) out.push_back(graph_from_mask(n, mask));
    return out;
}

Graph random_graph(std::mt19937& rng, int n, int m) {
    auto pairs = all_pairs(n);
    std::shuffle(pairs.begin(), pairs.end(), rng);
    pairs.resize(std::min<std::size_t>(m, pairs.size()));
    return Graph(n, std::move(pairs));
}

std::vector<Graph> all_labeled_trees(int t) {
    std::vector<Graph> out;
    if (t == 1) {
        out.push_back(Graph(1, {}));
        return out;
    }
    if (t == 2) {
        out.push_back(Graph(2, {{0, 1}}));
        return out;
    }
    // decode every Prufer sequence of length t-2
    std::vector<int> seq(t - 2, 0);
    while (true) {
        std::vector<int> degree(t, 1);
        for (int x : seq) ++degree[x];
        std::vector<Edge> edges;
        std::vector<int> deg = degree;
        std::set<int> leaves;
        for (int v = 0; v < t; ++v)
            if (deg[v] == 1) leaves.insert(v);
        for (int x : seq) {
            int leaf = *leaves.begin();
            leaves.erase(leaves.begin());
            edges.push_back(edgedel::make_edge(leaf, x));
            if (--deg[x] == 1) leaves.insert(x);
        }
        int a = *leaves.begin();
        int b = *std::next(leaves.begin());
        edges.push_back(edgedel::make_edge(a, b));
        out.push_back(Graph(t, std::move(edges)));

        int i = t - 3;
        while (i >= 0 && seq[i] == t - 1) seq[i--] = 0;
        if (i < 0) break;
        ++seq[i];
    }
    return out;
}

namespace {

long long count_partitions_of_rest(std::vector<int>& items) {
    if (items.empty()) return 1;
    // fix the first item, choose the companions of its block, recurse
    int head = items[0];
    std::vector<int> rest(items.begin() + 1, items.end());
    long long total = 0;
    const int r = static_cast<int>(rest.size());
    for (std::uint32_t pick = 0; pick < (1u << r); ++pick) {
        std::vector<int> remaining;
        for (int i = 0; i < r; ++i)
            if (!((pick >> i) & 1)) remaining.push_back(rest[i]);
        total += count_partitions_of_rest(remaining);
    }
    (void)head;
    return total;
}

}  // namespace

long long count_set_partitions(int k) {
    std::vector<int> items(k);
    std::iota(items.begin(), items.end(), 0);
    return count_partitions_of_rest(items);
}

int naive_min_deletions_cap(const Graph& g, int h) {
    const int m = g.edge_count();
    for (int size = 0; size <= m; ++size) {
        std::vector<int> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            DisjointSets ds(g.vertex_count());
            int next = 0;
            for (int i = 0; i < m; ++i) {
                if (next < size && pick[next] == i) {
                    ++next;
                    continue;
                }
                ds.unite(g.edges()[i].u, g.edges()[i].v);
            }
            std::vector<int> count(g.vertex_count(), 0);
            bool ok = true;
            for (Vertex v = 0; v < g.vertex_count() && ok; ++v)
                ok = ++count[ds.find(v)] <= h;
            if (ok) return size;

            int i = size - 1;
            while (i >= 0 && pick[i] == m - size + i) --i;
            if (i < 0) break;
            ++pick[i];
            for (int j = i + 1; j < size; ++j) pick[j] = pick[j - 1] + 1;
        }
    }
    return m;
}

}  // namespace testutil
