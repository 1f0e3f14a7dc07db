#pragma once

#include <cstdint>
#include <functional>
#include <random>
#include <vector>

#include "edgedel/graph.hpp"

// Test-side oracles and generators. Everything here is deliberately naive
// and independent of the library's implementation paths.

namespace testutil {

using edgedel::Edge;
using edgedel::Graph;
using edgedel::Vertex;

/// Plain union-find; the independent component oracle.
struct DisjointSets {
    std::vector<int> parent;

    explicit DisjointSets(int n) : parent(n) {
        for (int i = 0; i < n; ++i) parent[i] = i;
    }
    int find(int x) { return parent[x] == x ? x : parent[x] = find(parent[x]); }
    void unite(int a, int b) { parent[find(a)] = find(b); }
};

/// Component partition computed by union-find only.
std::vector<std::vector<Vertex>> components_by_union_find(const Graph& g);

/// All vertex pairs of an n-vertex graph in lexicographic order.
std::vector<Edge> all_pairs(int n);

/// Graph from an edge-subset bitmask over all_pairs(n).
Graph graph_from_mask(int n, std::uint32_t mask);

/// Calls fn for every labeled graph on exactly n vertices (2^(n choose 2)).
void for_each_labeled_graph(int n, const std::function<void(const Graph&)>& fn);

/// One representative per isomorphism class on exactly n vertices (n <= 6),
/// optionally restricted to connected graphs.
std::vector<Graph> graphs_up_to_iso(int n, bool connected_only);

/// Uniform random graph with n vertices and exactly m edges.
Graph random_graph(std::mt19937& rng, int n, int m);

/// All labeled trees on t vertices via Prufer sequences (t >= 1).
std::vector<Graph> all_labeled_trees(int t);

/// Independent set-partition count: recursive "first block chooses its
/// companions" enumeration, no restricted-growth machinery.
long long count_set_partitions(int k);

/// Minimum edge deletions so every component has <= h vertices, by
/// exhaustive subset enumeration (independent of the library oracle).
int naive_min_deletions_cap(const Graph& g, int h);

}  // namespace testutil
