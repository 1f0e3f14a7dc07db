#pragma once

#include <span>
#include <string>
#include <variant>
#include <vector>

#include "edgedel/graph.hpp"

namespace edgedel {

// Symbolic forbidden-subgraph descriptors. Families stay symbolic because
// the hardness constructions forbid cycles whose length grows with the
// instance; those are checked structurally, never by pattern matching.

struct Star {
    int d;  // K_{1,d}, d >= 1
};

struct CycleExact {
    int length;  // C_L, L >= 3
};

struct AllTrees {
    int t;  // every tree on t vertices, t >= 2
};

struct Flower {
    std::vector<int> lengths;  // petal cycle lengths, distinct, each >= 3
};

struct ExplicitPattern {
    Graph pattern;
};

using Descriptor = std::variant<Star, CycleExact, AllTrees, Flower, ExplicitPattern>;

class ForbiddenFamily {
public:
    ForbiddenFamily() = default;
    /// Validates every descriptor (d >= 1, L >= 3, t >= 2, flower lengths
    /// >= 3 and distinct).
    explicit ForbiddenFamily(std::vector<Descriptor> members);

    const std::vector<Descriptor>& members() const { return members_; }

    static ForbiddenFamily all_trees(int t) { return ForbiddenFamily({AllTrees{t}}); }

private:
    std::vector<Descriptor> members_;
};

/// True iff K_{1,d} is a subgraph, i.e. some vertex has degree >= d.
bool contains_star(const Graph& g, int d);

/// True iff g has a simple cycle on exactly L vertices. Backtracking from
/// branch vertices with BFS-distance pruning; components that are bare
/// cycles are recognized directly.
bool contains_cycle_exact(const Graph& g, int L);

/// True iff some tree on t vertices is a subgraph, i.e. some connected
/// component has >= t vertices.
bool contains_tree_family(const Graph& g, int t);

/// True iff every requested petal survives intact. Valid only on graphs
/// carrying a flower-host tag (see FlowerHostTag); throws
/// std::invalid_argument otherwise.
bool contains_flower(const Graph& g, const std::vector<int>& lengths);

/// True iff no family member occurs in g as a subgraph.
bool family_free(const Graph& g, const ForbiddenFamily& fam);

/// Injective map from pattern vertices to host vertices carrying every
/// pattern edge to a host edge. Guard: pattern must have <= 12 vertices.
bool subgraph_isomorphic(const Graph& pattern, const Graph& host);

namespace detail {
/// Same search without the pattern-size guard; for cross-validation at
/// test scale only.
bool subgraph_isomorphic_unchecked(const Graph& pattern, const Graph& host);
}  // namespace detail

/// JSON wire format:
/// {"members":[{"kind":"star","d":5},{"kind":"cycle","L":32},
///             {"kind":"all_trees","t":4},{"kind":"flower","lengths":[4,6]},
///             {"kind":"explicit","graph":"<text format>"}]}
ForbiddenFamily family_from_json(const std::string& text);
std::string family_to_json(const ForbiddenFamily& fam);

/// Convenience pattern builders.
Graph star_graph(int d);        // K_{1,d}: center 0, leaves 1..d
Graph cycle_graph(int length);  // C_L on vertices 0..L-1
Graph path_graph(int n);        // P_n on vertices 0..n-1

}  // namespace edgedel
