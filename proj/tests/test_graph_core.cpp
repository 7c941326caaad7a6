#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>

#include "rd/graph.hpp"
#include "rd/graph6.hpp"

using namespace rd;

namespace {

Graph random_simple_connected(std::mt19937& rng, int n) {
    while (true) {
        std::vector<std::pair<int, int>> edges;
        std::uniform_int_distribution<int> coin(0, 1);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (coin(rng)) edges.push_back({u, v});
        Graph g(n, edges);
        if (is_connected(g)) return g;
    }
}

}  // namespace

TEST_CASE("degree profile") {
    auto p = degree_profile(make_petersen());
    CHECK(p.max_degree == 3);
    CHECK(p.min_degree == 3);

    auto w = degree_profile(make_wheel(5));
    CHECK(w.degrees[4] == 4);  // hub is the last vertex
    for (int i = 0; i < 4; ++i) CHECK(w.degrees[i] == 3);

    Graph multi(2, {{0, 1}, {0, 1}, {0, 1}});
    CHECK_FALSE(multi.is_simple());
    auto m = degree_profile(multi);
    CHECK(m.max_degree == 3);
    CHECK(m.min_degree == 3);
}

TEST_CASE("generated families match closed-form degree sequences") {
    CHECK(make_petersen().vertex_count() == 10);
    CHECK(make_petersen().edge_count() == 15);
    CHECK(make_grid(2, 3).vertex_count() == 6);
    CHECK(make_grid(2, 3).edge_count() == 7);

    // complete_multipartite(1,2) is P3
    Graph k12 = make_complete_multipartite({1, 2});
    CHECK(k12.vertex_count() == 3);
    CHECK(k12.edge_count() == 2);
    CHECK(degree_profile(k12).max_degree == 2);

    Graph grid = make_grid(3, 4);
    CHECK(grid.edge_count() == 3 * 3 + 2 * 4);
    auto gp = degree_profile(grid);
    CHECK(gp.min_degree == 2);
    CHECK(gp.max_degree == 4);

    Graph kmn = make_complete_multipartite({2, 3});
    for (int v = 0; v < 2; ++v) CHECK(kmn.degree(v) == 3);
    for (int v = 2; v < 5; ++v) CHECK(kmn.degree(v) == 2);

    CHECK_THROWS_AS(make_wheel(3), std::invalid_argument);
    CHECK_THROWS_AS(make_grid(0, 3), std::invalid_argument);
    CHECK_THROWS_AS(make_family("complete_multipartite:4"), std::invalid_argument);
    CHECK_THROWS_AS(make_family("frobnicate"), std::invalid_argument);
    CHECK(make_family("wheel:6").vertex_count() == 6);
}

TEST_CASE("max degree subgraph") {
    Graph k4 = make_complete(4);
    CHECK(max_degree_subgraph(k4).graph.edge_count() == 6);

    Subgraph star = max_degree_subgraph(make_star(5));
    CHECK(star.graph.vertex_count() == 1);
    CHECK(star.graph.edge_count() == 0);
    CHECK(star.vertex_map[0] == 0);

    Subgraph wheel = max_degree_subgraph(make_wheel(5));
    CHECK(wheel.graph.vertex_count() == 1);
    CHECK(wheel.vertex_map[0] == 4);
}

TEST_CASE("blocks") {
    auto p4 = blocks(make_path(4));
    CHECK(p4.size() == 3);
    for (const auto& b : p4) CHECK(b.graph.edge_count() == 1);

    // two triangles sharing vertex 0
    Graph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    auto bb = blocks(bowtie);
    CHECK(bb.size() == 2);
    for (const auto& b : bb) {
        CHECK(b.graph.vertex_count() == 3);
        CHECK(b.graph.edge_count() == 3);
    }

    CHECK(blocks(make_petersen()).size() == 1);

    Graph disconnected(4, {{0, 1}, {2, 3}});
    CHECK_THROWS_AS(blocks(disconnected), std::invalid_argument);
}

TEST_CASE("blocks partition edges and the block-cut structure is a tree") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_simple_connected(rng, 7);
        auto bs = blocks(g);
        std::set<int> covered;
        for (const auto& b : bs)
            for (int e : b.edge_map) CHECK(covered.insert(e).second);
        CHECK(static_cast<int>(covered.size()) == g.edge_count());
        // block-cut tree acyclicity: sum over blocks of (|V(B)|-1) = n-1
        int total = 0;
        for (const auto& b : bs) total += b.graph.vertex_count() - 1;
        CHECK(total == g.vertex_count() - 1);
    }
}

TEST_CASE("line graph") {
    // K3 and K1,3 are both mapped to K3
    for (const Graph& g : {make_cycle(3), make_star(4)}) {
        Graph l = line_graph(g);
        CHECK(l.vertex_count() == 3);
        CHECK(l.edge_count() == 3);
    }
    Graph lp4 = line_graph(make_path(4));
    CHECK(lp4.vertex_count() == 3);
    CHECK(lp4.edge_count() == 2);

    CHECK_THROWS_AS(line_graph(Graph(2, {{0, 1}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("line graph edge count formula") {
    std::mt19937 rng(11);
    for (int trial = 0; trial < 20; ++trial) {
        Graph g = random_simple_connected(rng, 6);
        long long expect = 0;
        for (int v = 0; v < g.vertex_count(); ++v) {
            long long d = g.degree(v);
            expect += d * (d - 1) / 2;
        }
        CHECK(line_graph(g).edge_count() == expect);
    }
}

TEST_CASE("complement") {
    Graph c5 = make_cycle(5);
    Graph cc = complement(c5);
    CHECK(cc.edge_count() == 5);
    auto p = degree_profile(cc);
    CHECK(p.max_degree == 2);
    CHECK(complement(make_complete(4)).edge_count() == 0);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 10; ++trial) {
        Graph g = random_simple_connected(rng, 6);
        CHECK(graph6_emit(complement(complement(g))) == graph6_emit(g));
    }
}

TEST_CASE("graph6 round trip") {
    std::mt19937 rng(5);
    for (int n : {1, 2, 5, 7, 10}) {
        Graph g = n >= 3 ? random_simple_connected(rng, n) : make_path(n);
        Graph back = graph6_parse(graph6_emit(g));
        CHECK(back.vertex_count() == g.vertex_count());
        CHECK(back.edge_count() == g.edge_count());
        CHECK(graph6_emit(back) == graph6_emit(g));
    }
    // known code: "DQc" etc. -- verify a hand-checked 5-vertex code
    Graph p3 = graph6_parse(graph6_emit(make_path(3)));
    CHECK(p3.edge_count() == 2);
    CHECK(p3.adjacent(0, 1));
    CHECK(p3.adjacent(1, 2));
}

TEST_CASE("graph6 errors carry byte offsets") {
    CHECK_THROWS_AS(graph6_parse(""), Graph6Error);
    CHECK_THROWS_AS(graph6_parse("D"), Graph6Error);          // missing data bytes
    CHECK_THROWS_AS(graph6_parse("D???"), Graph6Error);       // too many data bytes
    CHECK_THROWS_AS(graph6_parse(std::string(1, '\x1f')), Graph6Error);
    try {
        graph6_parse("D");
    } catch (const Graph6Error& e) {
        CHECK(e.offset == 1);
    }
    CHECK_THROWS_AS(graph6_emit(Graph(2, {{0, 1}, {0, 1}})), std::invalid_argument);
}

TEST_CASE("dot output") {
    Graph p3 = make_path(3);
    std::string dot = dot_emit(p3);
    CHECK(dot.find("0 -- 1") != std::string::npos);
    CHECK(dot.find("1 -- 2") != std::string::npos);
}
