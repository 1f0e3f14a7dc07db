#pragma once

#include <optional>

#include "edgedel/exact.hpp"
#include "edgedel/forbidden.hpp"
#include "edgedel/graph.hpp"

namespace edgedel {

// ---------------------------------------------------------------------------
// Orientation-hardness construction: from a weighted graph and a bound r,
// build an unweighted host whose minimum edge-deletion answer (against a
// star plus an exact-length cycle) matches the orientation question.

struct MmoInstance {
    WeightedGraph wg;
    int r = 3;  // proof requires r >= 3
};

/// Is there an orientation with every weighted outdegree <= r?
/// First hit in lexicographic edge-direction order (bit 0: tail = smaller
/// endpoint). Guard: at most 20 edges.
std::optional<Orientation> mmo_brute_force(const MmoInstance& inst);

/// One internally disjoint path materialized between two gadget vertices.
struct PathRun {
    Vertex from = 0;
    Vertex to = 0;
    Vertex first_internal = 0;
    int internal_count = 0;
};

/// Bookkeeping for one input edge (u,v): the four fan-out sets attached to
/// u and v, and the parallel path runs connecting them pairwise.
struct EdgeGadget {
    Edge input_edge;
    int weight = 0;
    std::vector<Vertex> set_uv, set_uv_prime, set_vu, set_vu_prime;  // each of size weight
    std::vector<PathRun> red_paths;   // 2*weight short runs between set_uv and set_vu
    std::vector<PathRun> blue_paths;  // 2*weight long runs between the primed sets
};

/// Full vertex bookkeeping of the construction. Numbering is canonical:
/// original vertices, then pendants, then per-edge fan-out sets in input
/// order, then red-path internals, then blue-path internals.
struct GadgetLayout {
    int input_vertex_count = 0;
    long long omega = 0;            // total input weight, also the budget k
    long long path_unit = 0;        // N = n + 3*omega + 1
    long long max_weighted_degree = 0;
    long long star_degree = 0;      // max_weighted_degree + r + 1
    long long cycle_length = 0;     // 5N + 2
    std::vector<std::pair<Vertex, int>> pendants;  // per input vertex: first id, count
    std::vector<EdgeGadget> gadgets;

    // closed-form size of the host; generation is checked against these
    long long vertex_count_closed_form() const {
        return input_vertex_count + input_vertex_count * max_weighted_degree +
               10 * omega * path_unit - 6 * omega;
    }
    long long edge_count_closed_form() const {
        return input_vertex_count * max_weighted_degree - 2 * omega + 10 * omega * path_unit;
    }
};

struct MmoReduction {
    Graph graph;
    GadgetLayout layout;
    ForbiddenFamily family;  // [Star(Delta_w + r + 1), CycleExact(5N + 2)]
    long long budget = 0;    // k = omega
};

/// Builds the host. Rejects r < 3 (the argument needs it: every non-original
/// vertex has degree at most 3, which must stay below the star threshold).
MmoReduction gen_mmo(const MmoInstance& inst);

/// Deletion set induced by an orientation: for each input edge directed
/// u -> v, the weight(u,v) edges between v and its red fan-out set for that
/// edge. Always of size omega.
Solution orientation_witness(const GadgetLayout& layout, const Orientation& o);

// ---------------------------------------------------------------------------
// Hitting-set construction: one central vertex with a petal cycle of length
// 2i+2 per universe element; each set A becomes the forbidden union of its
// petals.

struct HsInstance {
    int universe = 0;                    // elements 1..universe
    std::vector<std::vector<int>> sets;  // nonempty subsets of the universe
    int k = 0;
};

struct PetalRange {
    int element = 0;  // universe element i
    int length = 0;   // 2i + 2
    Vertex first_internal = 0;
    int internal_count = 0;  // 2i + 1
};

struct HsReduction {
    Graph graph;  // carries the flower-host tag
    ForbiddenFamily family;
    int budget = 0;  // k' = k
    Vertex center = 0;
    std::vector<PetalRange> petals;
};

/// Guards: universe <= 12 and at most 12 sets.
HsReduction gen_hs(const HsInstance& inst);

/// Minimum hitting set if its size is <= k, else nullopt; subsets are tried
/// by increasing size, each size in lexicographic order.
std::optional<std::vector<int>> hs_brute_force(const HsInstance& inst);

/// Deletes the lexicographically first edge of each petal named by the
/// hitting set. Throws std::invalid_argument if H does not hit every set.
Solution hs_witness(const HsReduction& red, const HsInstance& inst, const std::vector<int>& hitting_set);

}  // namespace edgedel
