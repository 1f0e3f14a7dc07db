#include "doctest.h"

#include <climits>
#include <random>

#include "edgedel/vc_solver.hpp"
#include "test_util.hpp"

using namespace edgedel;

TEST_CASE("partition enumeration counts are Bell numbers") {
    const long long bell[] = {1, 1, 2, 5, 15, 52, 203};
    for (int k = 0; k <= 6; ++k) {
        std::vector<Vertex> cover(k);
        std::iota(cover.begin(), cover.end(), 0);
        auto parts = enumerate_partitions(cover);
        CHECK(static_cast<long long>(parts.size()) == bell[k]);
        CHECK(static_cast<long long>(parts.size()) == testutil::count_set_partitions(k));
    }
    std::vector<Vertex> big(13);
    std::iota(big.begin(), big.end(), 0);
    CHECK_THROWS_AS(enumerate_partitions(big), GuardError);
}

TEST_CASE("partition stream is canonical and exhaustive") {
    auto parts = enumerate_partitions({2, 5, 7});
    REQUIRE(parts.size() == 5);
    CHECK(parts.front().rgs == "000");
    CHECK(parts.front().blocks == std::vector<std::vector<Vertex>>{{2, 5, 7}});
    CHECK(parts.back().rgs == "012");
    CHECK(parts.back().blocks == std::vector<std::vector<Vertex>>{{2}, {5}, {7}});
    for (std::size_t i = 0; i + 1 < parts.size(); ++i) REQUIRE(parts[i].rgs < parts[i + 1].rgs);

    auto empty = enumerate_partitions({});
    REQUIRE(empty.size() == 1);
    CHECK(empty[0].blocks.empty());
}

TEST_CASE("model of the 4-leaf star") {
    Graph g = star_graph(4);
    CoverPartition p = enumerate_partitions({0})[0];  // the single block {0}
    auto m = build_model(g, {0}, p, 3);
    REQUIRE(m.has_value());
    CHECK(m->cross_count == 0);
    REQUIRE(m->coefficients.size() == 1);
    CHECK(m->coefficients[0] == std::vector<int>{0, 1});
    CHECK(m->capacities == std::vector<int>{2});
    CHECK(m->class_sizes == std::vector<int>{4});

    auto ip = solve_model(*m);
    REQUIRE(ip.has_value());
    CHECK(ip->objective == 2);
    CHECK(ip->assignment[0] == std::vector<int>{2, 2});

    Solution sol = reconstruct(g, *m, *ip);
    CHECK(sol.deleted_edges == std::vector<Edge>{{0, 3}, {0, 4}});
    CHECK(verify(g, sol, ForbiddenFamily::all_trees(4)));
}

TEST_CASE("model of the path on three vertices") {
    Graph g = path_graph(3);
    CoverPartition p = enumerate_partitions({1})[0];
    auto m = build_model(g, {1}, p, 2);
    REQUIRE(m.has_value());
    CHECK(m->coefficients[0] == std::vector<int>{0, 1});
    CHECK(m->capacities == std::vector<int>{1});

    auto ip = solve_model(*m);
    CHECK(ip->objective == 1);
    Solution sol = reconstruct(g, *m, *ip);
    CHECK(sol.size() == 1);
    CHECK(verify(g, sol, ForbiddenFamily::all_trees(3)));
}

TEST_CASE("oversized blocks are infeasible") {
    Graph g = path_graph(3);
    CoverPartition p = enumerate_partitions({0, 1})[0];  // one block of size 2
    CHECK(!build_model(g, {0, 1}, p, 1).has_value());
}

TEST_CASE("model validation") {
    Graph g = path_graph(3);
    CoverPartition p = enumerate_partitions({0})[0];
    CHECK_THROWS_AS(build_model(g, {0}, p, 2), std::invalid_argument);  // not a cover
    CoverPartition wrong = enumerate_partitions({0, 1})[0];
    CHECK_THROWS_AS(build_model(g, {1}, wrong, 2), std::invalid_argument);
}

TEST_CASE("edgeless model is trivial") {
    Graph g(3, {});
    CoverPartition p = enumerate_partitions({})[0];
    auto m = build_model(g, {}, p, 1);
    REQUIRE(m.has_value());
    auto ip = solve_model(*m);
    CHECK(ip->objective == 0);
    CHECK(reconstruct(g, *m, *ip).size() == 0);
}

TEST_CASE("solve_vc frozen examples") {
    CHECK(solve_vc(path_graph(5), 2).size() == 2);
    CHECK(solve_vc(cycle_graph(6), 3).size() == 2);
    CHECK(solve_vc(Graph(4, {{0, 1}, {2, 3}}), 2).size() == 0);
}

TEST_CASE("solve_vc equals the oracle and emits valid witnesses") {
    auto check = [](const Graph& g) {
        for (int h = 1; h <= g.vertex_count(); ++h) {
            VcSolveReport rep = solve_vc_report(g, h);
            int want = testutil::naive_min_deletions_cap(g, h);
            REQUIRE(rep.objective == want);
            REQUIRE(rep.solution.size() == want);
            REQUIRE(verify(g, rep.solution, ForbiddenFamily::all_trees(h + 1)));

            // the surviving graph respects the cap blockwise
            auto comps = connected_components(g.without_edges(rep.solution.deleted_edges));
            for (const auto& c : comps) REQUIRE(static_cast<int>(c.size()) <= h);
        }
    };
    for (int n = 1; n <= 5; ++n) testutil::for_each_labeled_graph(n, check);
    std::mt19937 rng(61);
    for (int trial = 0; trial < 150; ++trial) {
        int n = 6 + static_cast<int>(rng() % 3);
        check(testutil::random_graph(rng, n, static_cast<int>(rng() % 13)));
    }
}

TEST_CASE("solve_vc handles dense graphs") {
    // complete graphs sit outside the random pool's sparseness
    auto kn = [](int n) {
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v) edges.push_back({u, v});
        return Graph(n, std::move(edges));
    };
    for (int n : {5, 6}) {
        Graph g = kn(n);
        for (int h = 1; h <= n; ++h) {
            auto oracle = brute_force_min(g, ForbiddenFamily::all_trees(h + 1), g.edge_count());
            REQUIRE(solve_vc(g, h).size() == oracle->size());
        }
    }
    Graph k7 = kn(7);
    for (int h : {1, 2, 3, 7}) {
        auto oracle = brute_force_min(k7, ForbiddenFamily::all_trees(h + 1), k7.edge_count());
        REQUIRE(solve_vc(k7, h).size() == oracle->size());
    }
    // keeping two triangles is the densest legal split of K7 at h=3
    CHECK(solve_vc(k7, 3).size() == 15);
}

TEST_CASE("column feasibility of returned assignments") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 100; ++trial) {
        int n = 2 + static_cast<int>(rng() % 6);
        Graph g = testutil::random_graph(rng, n, static_cast<int>(rng() % 10));
        int h = 1 + static_cast<int>(rng() % n);
        auto cover = min_vertex_cover(g, n);
        PartitionEnumerator en(*cover);
        while (auto p = en.next()) {
            auto m = build_model(g, *cover, *p, h);
            if (!m) continue;
            auto ip = solve_model(*m);
            REQUIRE(ip.has_value());
            for (std::size_t i = 0; i < m->class_sizes.size(); ++i) {
                int row_sum = 0;
                for (int x : ip->assignment[i]) row_sum += x;
                REQUIRE(row_sum == m->class_sizes[i]);
            }
            for (std::size_t j = 0; j < m->partition.blocks.size(); ++j) {
                int col = static_cast<int>(m->partition.blocks[j].size());
                for (std::size_t i = 0; i < m->class_sizes.size(); ++i)
                    col += ip->assignment[i][j];
                REQUIRE(col <= h);
            }
            Solution sol = reconstruct(g, *m, *ip);
            REQUIRE(sol.size() == ip->objective);
        }
    }
}

TEST_CASE("solve_model returns the lexicographically smallest optimum") {
    // independent route: enumerate every feasible assignment outright
    auto enumerate_optima = [](const PartitionedCoverModel& m) {
        const int classes = static_cast<int>(m.class_sizes.size());
        const int cols = static_cast<int>(m.capacities.size()) + 1;
        std::vector<std::vector<int>> cur(classes, std::vector<int>(cols, 0));
        std::vector<int> cap = m.capacities;
        long long best = LLONG_MAX;
        std::vector<std::vector<int>> best_assign;
        auto rec = [&](auto&& self, int i, int j, int rem, long long cost) -> void {
            if (i == classes) {
                if (cost < best) {
                    best = cost;
                    best_assign = cur;
                }
                return;
            }
            if (j == cols - 1) {
                cur[i][j] = rem;
                long long c2 = cost + static_cast<long long>(rem) * m.coefficients[i][j];
                if (i + 1 == classes) self(self, i + 1, 0, 0, c2);
                else self(self, i + 1, 0, m.class_sizes[i + 1], c2);
                cur[i][j] = 0;
                return;
            }
            for (int v = 0; v <= std::min(rem, cap[j]); ++v) {
                cur[i][j] = v;
                cap[j] -= v;
                self(self, i, j + 1, rem - v, cost + static_cast<long long>(v) * m.coefficients[i][j]);
                cap[j] += v;
                cur[i][j] = 0;
            }
        };
        rec(rec, 0, 0, classes ? m.class_sizes[0] : 0, 0);
        return std::pair(best + m.cross_count, best_assign);
    };

    std::mt19937 rng(79);
    int compared = 0;
    for (int trial = 0; trial < 200; ++trial) {
        int n = 2 + static_cast<int>(rng() % 5);
        Graph g = testutil::random_graph(rng, n, static_cast<int>(rng() % 8));
        int h = 1 + static_cast<int>(rng() % n);
        auto cover = min_vertex_cover(g, n);
        for (const auto& p : enumerate_partitions(*cover)) {
            auto m = build_model(g, *cover, p, h);
            if (!m) continue;
            auto ip = solve_model(*m);
            auto [want_obj, want_assign] = enumerate_optima(*m);
            REQUIRE(ip->objective == want_obj);
            REQUIRE(ip->assignment == want_assign);
            ++compared;
        }
    }
    CHECK(compared > 200);
}

TEST_CASE("solve_vc propagates the partition guard") {
    // 13 disjoint edges force a minimum cover of 13 vertices
    std::vector<Edge> edges;
    for (Vertex i = 0; i < 13; ++i) edges.push_back({2 * i, 2 * i + 1});
    Graph g(26, std::move(edges));
    CHECK_THROWS_AS(solve_vc(g, 1), GuardError);
}

TEST_CASE("solve_vc is deterministic") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        Graph g = testutil::random_graph(rng, n, static_cast<int>(rng() % 10));
        VcSolveReport a = solve_vc_report(g, 2);
        VcSolveReport b = solve_vc_report(g, 2);
        REQUIRE(a.solution.deleted_edges == b.solution.deleted_edges);
        REQUIRE(a.best_partition_rgs == b.best_partition_rgs);
    }
}
