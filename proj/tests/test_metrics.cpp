#include "doctest.h"
#include "testing.hpp"

#include "regbound/errors.hpp"
#include "regbound/families.hpp"
#include "regbound/metrics.hpp"

#include <deque>
#include <random>

using namespace regbound;

namespace {

Graph path3() { return Graph(3, {{0, 1}, {1, 2}}); }
Graph two_triangles() { return Graph(6, {{0, 1}, {1, 2}, {0, 2}, {3, 4}, {4, 5}, {3, 5}}); }
Graph tree7() { return Graph(7, {{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 5}, {2, 6}}); }
Graph k4_minus_edge() { return Graph(4, {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}}); }

// Shortest cycle through each edge: remove it and measure the detour.
std::optional<int> girth_by_edge_deletion(const Graph& g) {
    std::optional<int> best;
    const int n = g.vertex_count();
    for (auto [a, b] : g.edges()) {
        std::vector<int> dist(n, -1);
        std::deque<int> queue{a};
        dist[a] = 0;
        while (!queue.empty()) {
            const int x = queue.front();
            queue.pop_front();
            for (int y : g.neighbors(x)) {
                if ((x == a && y == b) || (x == b && y == a)) continue;
                if (dist[y] < 0) {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        if (dist[b] >= 0 && (!best || dist[b] + 1 < *best)) best = dist[b] + 1;
    }
    return best;
}

// Plain enumeration of all subsets, boundary recomputed from scratch.
Rational expansion_oracle(const Graph& g) {
    const int n = g.vertex_count();
    std::optional<Rational> best;
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        const int size = std::popcount(mask);
        if (2 * size > n) continue;
        int boundary = 0;
        for (auto [a, b] : g.edges())
            if (((mask >> a) & 1) != ((mask >> b) & 1)) ++boundary;
        const Rational h(boundary, size);
        if (!best || h < *best) best = h;
    }
    return *best;
}

}  // namespace

TEST_CASE("graph construction") {
    CHECK_THROWS_AS(Graph(3, {{0, 0}}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(3, {{0, 3}}), std::invalid_argument);
    const Graph g(3, {{0, 1}, {1, 0}, {1, 2}});
    CHECK(g.edge_count() == 2);
    CHECK(g.adjacent(1, 0));
    CHECK(g.adjacent(0, 1));
    CHECK(!g.adjacent(0, 2));
    CHECK(!g.adjacent(1, 1));
}

TEST_CASE("regularity and connectivity") {
    CHECK(regularity(petersen_graph()) == 3);
    CHECK(!regularity(path3()));
    for (int k = 1; k <= 8; ++k) CHECK(regularity(complete_graph(k + 1)) == k);
    CHECK(!regularity(Graph()));

    CHECK(is_connected(cycle_graph(5)));
    CHECK(!is_connected(two_triangles()));
    CHECK(is_connected(petersen_graph()));
    CHECK(is_connected(Graph(1, {})));
}

TEST_CASE("girth examples") {
    CHECK(girth_bfs(petersen_graph()) == 5);
    CHECK(girth_bfs(complete_graph(4)) == 3);
    CHECK(!girth_bfs(tree7()));
    CHECK(girth_bfs(cycle_graph(6)) == 6);
    CHECK(girth_bfs(complete_bipartite_graph(3)) == 4);
    CHECK(girth_bfs(two_triangles()) == 3);
}

TEST_CASE("girth agrees with edge deletion on many graphs") {
    std::mt19937_64 rng(5);
    std::vector<Graph> graphs = {tree7(), two_triangles(), k4_minus_edge()};
    for (const auto& ng : testing::regular_test_graphs(60)) graphs.push_back(ng.graph);
    for (int trial = 0; trial < 60; ++trial)
        graphs.push_back(testing::random_connected_regular(8 + 2 * (trial % 8), 3 + trial % 2, rng));
    for (const Graph& g : graphs) CHECK(girth_bfs(g) == girth_by_edge_deletion(g));
}

TEST_CASE("distance matrices") {
    const Graph p = petersen_graph();
    const BoolMatrix a0 = distance_matrix(p, 0);
    const BoolMatrix a1 = distance_matrix(p, 1);
    const BoolMatrix a2 = distance_matrix(p, 2);
    for (int x = 0; x < 10; ++x) {
        int row2 = 0;
        for (int y = 0; y < 10; ++y) {
            CHECK(a0(x, y) == (x == y));
            CHECK(a1(x, y) == p.adjacent(x, y));
            row2 += a2(x, y);
        }
        CHECK(row2 == 6);
    }
    CHECK_THROWS_AS(distance_matrix(two_triangles(), 1), PreconditionError);
}

TEST_CASE("distance matrices partition the all-ones pattern") {
    for (const auto& ng : testing::regular_test_graphs(60)) {
        const Graph& g = ng.graph;
        const int n = g.vertex_count();
        const int diam = diameter(g);
        std::vector<int> cover(static_cast<std::size_t>(n) * n, 0);
        for (int i = 0; i <= diam + 1; ++i) {
            const BoolMatrix m = distance_matrix(g, i);
            for (int x = 0; x < n; ++x)
                for (int y = 0; y < n; ++y) cover[static_cast<std::size_t>(x) * n + y] += m(x, y);
        }
        CHECK(std::all_of(cover.begin(), cover.end(), [](int c) { return c == 1; }));
    }
}

TEST_CASE("diameter") {
    CHECK(diameter(petersen_graph()) == 2);
    for (int n = 2; n <= 8; ++n) CHECK(diameter(complete_graph(n)) == 1);
    CHECK(diameter(cycle_graph(6)) == 3);
    CHECK(diameter(Graph(1, {})) == 0);
    CHECK_THROWS_AS(diameter(two_triangles()), PreconditionError);
}

TEST_CASE("irreducible path counts") {
    const Graph c5 = cycle_graph(5);
    CHECK(irreducible_path_count(c5, 0, 0, 5) == 2);
    for (const auto& ng : testing::regular_test_graphs(12)) {
        const Graph& g = ng.graph;
        for (int u = 0; u < g.vertex_count(); ++u)
            for (int w = 0; w < g.vertex_count(); ++w) {
                CHECK(irreducible_path_count(g, u, w, 0) == (u == w ? 1u : 0u));
                CHECK(irreducible_path_count(g, u, w, 1) == (g.adjacent(u, w) ? 1u : 0u));
            }
    }
    // K_4: a walk of length 2 may not step back, so from u to w != u there are
    // two paths through the remaining vertices.
    CHECK(irreducible_path_count(complete_graph(4), 0, 1, 2) == 2);
    CHECK(irreducible_path_count(complete_graph(4), 0, 0, 2) == 0);
    CHECK_THROWS_AS(irreducible_path_count(c5, 0, 0, 13), SizeLimitError);
    CHECK_NOTHROW(irreducible_path_count(c5, 0, 0, 12));
}

TEST_CASE("distance-regularity") {
    const auto pet = is_distance_regular(petersen_graph());
    REQUIRE(pet);
    CHECK(pet->b == std::vector<int>{3, 2});
    CHECK(pet->c == std::vector<int>{1, 1});
    CHECK(pet->a == std::vector<int>{0, 0, 2});

    const auto c6 = is_distance_regular(cycle_graph(6));
    REQUIRE(c6);
    CHECK(c6->b == std::vector<int>{2, 1, 1});
    CHECK(c6->c == std::vector<int>{1, 1, 2});

    CHECK_THROWS_AS(is_distance_regular(k4_minus_edge()), PreconditionError);
    CHECK_THROWS_AS(is_distance_regular(two_triangles()), PreconditionError);

    // The 3-prism is vertex-transitive but not distance-regular.
    std::vector<Edge> prism;
    for (int i = 0; i < 3; ++i) {
        prism.emplace_back(i, (i + 1) % 3);
        prism.emplace_back(3 + i, 3 + (i + 1) % 3);
        prism.emplace_back(i, 3 + i);
    }
    CHECK(!is_distance_regular(Graph(6, prism)));

    const auto heawood = is_distance_regular(incidence_pg2(2));
    REQUIRE(heawood);
    CHECK(*heawood == make_intersection_array({3, 2, 2}, {1, 1, 3}));
}

TEST_CASE("intersection array validation") {
    CHECK_THROWS(make_intersection_array({3, 2}, {2, 1}));  // c_1 must be 1
    CHECK_THROWS(make_intersection_array({3, 2}, {1}));     // length mismatch
    CHECK_THROWS(make_intersection_array({3, 4}, {1, 1}));  // b_1 > k
    const auto a = make_intersection_array({3, 2}, {1, 1});
    CHECK(a.diameter() == 2);
}

TEST_CASE("edge expansion examples") {
    const auto k4 = edge_expansion(complete_graph(4));
    CHECK(k4.h == 2);
    CHECK(edge_expansion(cycle_graph(4)).h == 1);
    CHECK(edge_expansion(complete_graph(2)).h == 1);
    CHECK(edge_expansion(petersen_graph()).h == 1);
    CHECK_THROWS_AS(edge_expansion(cycle_graph(25)), SizeLimitError);
}

TEST_CASE("edge expansion matches plain enumeration and its witness") {
    std::mt19937_64 rng(17);
    std::vector<Graph> graphs;
    for (const auto& ng : testing::regular_test_graphs(14)) graphs.push_back(ng.graph);
    for (int trial = 0; trial < 20; ++trial) graphs.push_back(testing::random_connected_regular(10 + 2 * (trial % 3), 3, rng));
    graphs.push_back(tree7());
    graphs.push_back(k4_minus_edge());
    for (const Graph& g : graphs) {
        const auto r = edge_expansion(g);
        CHECK(r.h == expansion_oracle(g));
        REQUIRE(!r.witness.empty());
        CHECK(2 * r.witness.size() <= static_cast<std::size_t>(g.vertex_count()));
        CHECK(Rational(static_cast<long long>(boundary_size(g, r.witness)), static_cast<long long>(r.witness.size())) == r.h);
    }
}
