#pragma once

#include "edgedel/graph.hpp"

namespace edgedel {

/// Outcome of the component-removal reduction plus the size-bound check.
/// no_by_bounds is a one-sided shortcut: it certifies a no-instance, it
/// never claims yes.
struct KernelResult {
    enum class Verdict { open, no_by_bounds };

    Graph reduced;
    std::vector<std::vector<Vertex>> removed_components;  // original vertex ids
    int k = 0;
    int h = 0;
    Verdict verdict = Verdict::open;
    /// reduced vertex id -> original vertex id (ascending)
    std::vector<Vertex> vertex_map;
};

/// Removes every connected component with at most h vertices (such a
/// component never needs deletions and cannot interact with the rest),
/// then flags the instance as a certified no when the reduced graph
/// exceeds 2kh vertices or 2kh^2 + k edges.
KernelResult kernelize(const Graph& g, int k, int h);

}  // namespace edgedel
