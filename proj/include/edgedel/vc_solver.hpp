#pragma once

#include <functional>
#include <optional>
#include <string>

#include "edgedel/exact.hpp"
#include "edgedel/graph.hpp"

namespace edgedel {

/// A set partition of a vertex cover, in canonical restricted-growth form
/// over the cover in sorted order.
struct CoverPartition {
    std::vector<std::vector<Vertex>> blocks;  // disjoint, nonempty, union = cover
    std::string rgs;                          // e.g. "0010" (digits 0-9, then a-z)
};

/// Streams every set partition of the cover exactly once, in lexicographic
/// restricted-growth-string order; the count is the Bell number B_|cover|.
/// Guard: |cover| <= 12.
class PartitionEnumerator {
public:
    explicit PartitionEnumerator(std::vector<Vertex> cover);

    /// Next partition, or nullopt when exhausted.
    std::optional<CoverPartition> next();

private:
    std::vector<Vertex> cover_;
    std::vector<int> rgs_;
    bool done_ = false;
    bool first_ = true;
};

/// Convenience: all partitions materialized.
std::vector<CoverPartition> enumerate_partitions(const std::vector<Vertex>& cover);

/// The integer program induced by one partition guess: distribute each twin
/// class across the blocks (plus the singleton bucket at index l) subject to
/// the component cap, paying per vertex the edges it must drop.
struct PartitionedCoverModel {
    CoverPartition partition;
    TwinClassification twins;
    int h = 0;
    int cross_count = 0;                        // edges inside the cover across blocks
    std::vector<std::vector<int>> coefficients; // [class][block], last column = singleton bucket
    std::vector<int> capacities;                // per real block: h - |S_j|
    std::vector<int> class_sizes;
};

struct IpSolution {
    std::vector<std::vector<int>> assignment;  // [class][block], last column = singleton bucket
    long long objective = 0;
};

/// Builds the model, or nullopt when some block alone exceeds the cap.
/// Throws std::invalid_argument if cover is not a vertex cover of g or the
/// partition does not partition the cover.
std::optional<PartitionedCoverModel> build_model(const Graph& g, const std::vector<Vertex>& cover,
                                                 const CoverPartition& p, int h);

/// Exact branch-and-bound minimizer; deterministic (the lexicographically
/// smallest assignment among optima, rows scanned class by class).
std::optional<IpSolution> solve_model(const PartitionedCoverModel& m);

/// Turns an IP solution back into the edge set it stands for: all cross
/// edges, plus for each class member its edges into the cover outside its
/// assigned block (members are consumed in sorted order, blocks in order).
Solution reconstruct(const Graph& g, const PartitionedCoverModel& m, const IpSolution& sol);

struct VcSolveReport {
    Solution solution;
    long long objective = 0;
    std::string best_partition_rgs;
    long long partitions_tried = 0;
    int cover_size = 0;
};

/// The full cover-parameterized algorithm: minimum vertex cover, one IP per
/// partition of it, best reconstruction. The result size is the global
/// minimum number of deletions for the component cap h.
VcSolveReport solve_vc_report(const Graph& g, int h);
Solution solve_vc(const Graph& g, int h);

}  // namespace edgedel
