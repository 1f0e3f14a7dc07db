#pragma once

#include <optional>

#include "edgedel/forbidden.hpp"
#include "edgedel/graph.hpp"

namespace edgedel {

/// An edge-deletion witness. Applying the deletion leaves the graph free of
/// the forbidden family it was produced for.
struct Solution {
    std::vector<Edge> deleted_edges;  // sorted

    int size() const { return static_cast<int>(deleted_edges.size()); }
};

struct OracleStats {
    long long candidates_checked = 0;
};

/// Exhaustive minimum search: edge subsets are enumerated by increasing
/// size 0..k_max, each size in lexicographic order over sorted edge
/// indices; the first subset whose removal is family-free is returned.
/// Guard: rejects when the candidate count exceeds 10^8.
std::optional<Solution> brute_force_min(const Graph& g, const ForbiddenFamily& fam, int k_max,
                                        OracleStats* stats = nullptr);

struct BranchStats {
    long long nodes_expanded = 0;
};

/// Bounded search tree for the component-cap problem: while a component has
/// more than h vertices, a BFS tree on h+1 of its vertices is grown from the
/// smallest vertex and each tree edge is branched on. Finds a deletion set
/// of size <= k iff one exists; tree size is at most h^k.
std::optional<Solution> branch_cap(const Graph& g, int h, int k, BranchStats* stats = nullptr);

/// True iff g minus the solution's edges is family-free. Throws
/// std::invalid_argument if a deleted edge is not an edge of g.
bool verify(const Graph& g, const Solution& sol, const ForbiddenFamily& fam);

}  // namespace edgedel
