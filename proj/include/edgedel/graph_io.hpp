#pragma once

#include <string>
#include <string_view>

#include "edgedel/graph.hpp"

namespace edgedel {

/// Input problems in the plain text graph format. Each failure mode carries
/// its own kind so callers (and tests) can tell them apart.
struct ParseError : std::runtime_error {
    enum class Kind {
        malformed_header,
        malformed_edge,
        out_of_range,
        duplicate_edge,
        self_loop,
        bad_weight,
    };

    ParseError(Kind k, const std::string& msg) : std::runtime_error(msg), kind(k) {}

    Kind kind;
};

/// Format: first line "n m", then m lines "u v" (0-indexed). Lines starting
/// with '#' are comments and blank lines are skipped.
Graph read_graph(std::string_view text);
std::string write_graph(const Graph& g);

/// Same layout with "u v w" lines; a missing weight defaults to 1.
WeightedGraph read_weighted(std::string_view text);
std::string write_weighted(const WeightedGraph& wg);

}  // namespace edgedel
