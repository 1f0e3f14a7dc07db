#include "doctest.h"

#include <random>

#include "edgedel/exact.hpp"
#include "test_util.hpp"

using namespace edgedel;

TEST_CASE("brute force minimum") {
    auto p5 = brute_force_min(path_graph(5), ForbiddenFamily::all_trees(3), 4);
    REQUIRE(p5.has_value());
    CHECK(p5->size() == 2);
    CHECK(verify(path_graph(5), *p5, ForbiddenFamily::all_trees(3)));

    Graph k4 = testutil::graph_from_mask(4, 0x3f);
    auto cap = brute_force_min(k4, ForbiddenFamily::all_trees(3), 6);
    REQUIRE(cap.has_value());
    CHECK(cap->size() == 4);  // keep a perfect matching

    auto free = brute_force_min(Graph(4, {{0, 1}}), ForbiddenFamily::all_trees(3), 0);
    REQUIRE(free.has_value());
    CHECK(free->size() == 0);

    CHECK(!brute_force_min(path_graph(5), ForbiddenFamily::all_trees(2), 1).has_value());
}

TEST_CASE("brute force guard") {
    // C(60, 8) is above the 10^8 candidate guard
    std::mt19937 rng(41);
    std::vector<Edge> edges;
    for (Vertex v = 1; v <= 60; ++v) edges.push_back({0, v});
    Graph big(61, std::move(edges));
    CHECK_THROWS_AS(brute_force_min(big, ForbiddenFamily::all_trees(2), 8), GuardError);
    CHECK_NOTHROW(brute_force_min(big, ForbiddenFamily::all_trees(62), 1));
}

TEST_CASE("brute force enumerates by size then lexicographic order") {
    // both antipodal pairs of C4 cap the components at 2 vertices; the
    // lexicographically first edge-index pair is {(0,1),(2,3)}
    Graph c4 = cycle_graph(4);
    auto sol = brute_force_min(c4, ForbiddenFamily::all_trees(3), 4);
    REQUIRE(sol.has_value());
    CHECK(sol->deleted_edges == std::vector<Edge>{{0, 1}, {2, 3}});
}

TEST_CASE("branch cap examples") {
    auto two = branch_cap(cycle_graph(6), 3, 2);
    REQUIRE(two.has_value());
    CHECK(two->size() <= 2);
    CHECK(verify(cycle_graph(6), *two, ForbiddenFamily::all_trees(4)));

    CHECK(!branch_cap(cycle_graph(6), 3, 1).has_value());

    auto star = branch_cap(star_graph(4), 3, 2);
    REQUIRE(star.has_value());
    CHECK(star->size() == 2);
    CHECK(verify(star_graph(4), *star, ForbiddenFamily::all_trees(4)));
}

TEST_CASE("verify") {
    CHECK(verify(path_graph(5), Solution{{{1, 2}, {3, 4}}}, ForbiddenFamily::all_trees(3)));
    CHECK(!verify(path_graph(5), Solution{{{2, 3}}}, ForbiddenFamily::all_trees(3)));
    CHECK(verify(Graph(3, {{0, 1}}), Solution{}, ForbiddenFamily::all_trees(3)));
    CHECK_THROWS_AS(verify(path_graph(5), Solution{{{0, 2}}}, ForbiddenFamily::all_trees(3)),
                    std::invalid_argument);
}

TEST_CASE("verified solutions stay valid under supersets") {
    std::mt19937 rng(43);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = testutil::random_graph(rng, n, static_cast<int>(rng() % 10));
        int h = 1 + static_cast<int>(rng() % 3);
        auto sol = brute_force_min(g, ForbiddenFamily::all_trees(h + 1), g.edge_count());
        REQUIRE(sol.has_value());
        REQUIRE(verify(g, *sol, ForbiddenFamily::all_trees(h + 1)));
        Solution superset = *sol;
        for (const auto& e : g.edges()) {
            if (std::binary_search(sol->deleted_edges.begin(), sol->deleted_edges.end(), e))
                continue;
            superset.deleted_edges.push_back(e);
            break;
        }
        std::sort(superset.deleted_edges.begin(), superset.deleted_edges.end());
        REQUIRE(verify(g, superset, ForbiddenFamily::all_trees(h + 1)));
    }
}

TEST_CASE("branch cap agrees with the oracle") {
    auto check = [](const Graph& g) {
        const int m = g.edge_count();
        for (int h = 1; h <= 7; ++h) {
            auto best = brute_force_min(g, ForbiddenFamily::all_trees(h + 1), m);
            REQUIRE(best.has_value());
            int minimum = best->size();
            for (int k = 0; k <= std::min(6, m); ++k) {
                auto sol = branch_cap(g, h, k);
                REQUIRE(sol.has_value() == (minimum <= k));
                if (sol) {
                    REQUIRE(sol->size() <= k);
                    REQUIRE(verify(g, *sol, ForbiddenFamily::all_trees(h + 1)));
                }
            }
            // minimum recovery by deepening
            for (int k = 0; k <= m; ++k) {
                if (auto sol = branch_cap(g, h, k)) {
                    REQUIRE(k == minimum);
                    REQUIRE(sol->size() == minimum);
                    break;
                }
            }
        }
    };
    for (int n = 0; n <= 4; ++n) testutil::for_each_labeled_graph(n, check);
    std::mt19937 rng(47);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 5 + static_cast<int>(rng() % 3);
        check(testutil::random_graph(rng, n, static_cast<int>(rng() % 12)));
    }
}

TEST_CASE("branch cap is deterministic") {
    std::mt19937 rng(53);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 4 + static_cast<int>(rng() % 4);
        Graph g = testutil::random_graph(rng, n, static_cast<int>(rng() % 12));
        auto a = branch_cap(g, 2, 4);
        auto b = branch_cap(g, 2, 4);
        REQUIRE(a.has_value() == b.has_value());
        if (a) REQUIRE(a->deleted_edges == b->deleted_edges);
    }
}
