#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <fstream>
#include <random>
#include <sstream>

#include "rd/edge_coloring.hpp"
#include "rd/graph.hpp"
#include "rd/graph6.hpp"

using namespace rd;

namespace {

std::vector<Graph> load_fixture(const std::string& name) {
    std::ifstream in(std::string(FIXTURE_DIR) + "/" + name);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return graph6_parse_stream(ss.str());
}

// Independent oracle: smallest k admitting a proper edge coloring, by
// restricted-growth backtracking over edges in id order.
bool oracle_colorable(const Graph& g, int k, size_t e, std::vector<int>& col, int used) {
    if (e == col.size()) return true;
    auto ed = g.edge(static_cast<int>(e));
    int limit = std::min(k, used + 1);
    for (int c = 1; c <= limit; ++c) {
        bool ok = true;
        for (int v : {ed.u, ed.v}) {
            for (int f : g.incident_edges(v)) {
                if (f < static_cast<int>(e) && col[static_cast<size_t>(f)] == c) {
                    ok = false;
                    break;
                }
            }
            if (!ok) break;
        }
        if (!ok) continue;
        col[e] = c;
        if (oracle_colorable(g, k, e + 1, col, std::max(used, c))) return true;
        col[e] = 0;
    }
    return false;
}

int oracle_chromatic_index(const Graph& g) {
    if (g.edge_count() == 0) return 0;
    std::vector<int> col(static_cast<size_t>(g.edge_count()), 0);
    for (int k = 1;; ++k) {
        std::fill(col.begin(), col.end(), 0);
        if (oracle_colorable(g, k, 0, col, 0)) return k;
    }
}

Graph random_multigraph(std::mt19937& rng, int n, int m) {
    std::uniform_int_distribution<int> pick(0, n - 1);
    std::vector<std::pair<int, int>> edges;
    while (static_cast<int>(edges.size()) < m) {
        int a = pick(rng), b = pick(rng);
        if (a != b) edges.push_back({std::min(a, b), std::max(a, b)});
    }
    return Graph(n, edges);
}

}  // namespace

TEST_CASE("is_proper and colors_used") {
    Graph p3 = make_path(3);
    EdgeColoring good{2, {1, 2}};
    EdgeColoring bad{2, {1, 1}};
    CHECK(is_proper(p3, good));
    CHECK_FALSE(is_proper(p3, bad));
    CHECK(colors_used(good) == 2);
    CHECK(colors_used(EdgeColoring{5, {3, 3, 1}}) == 2);
}

TEST_CASE("vizing coloring on named graphs") {
    for (const Graph& g : {make_petersen(), make_complete(5), make_complete(6),
                           make_wheel(7), make_grid(3, 4), make_star(8)}) {
        EdgeColoring c = vizing_proper_coloring(g);
        CHECK(is_proper(g, c));
        CHECK(colors_used(c) <= degree_profile(g).max_degree + 1);
    }
}

TEST_CASE("vizing coloring is proper and within Delta+1 on the full small corpus") {
    for (int n = 2; n <= 7; ++n) {
        for (const Graph& g : load_fixture("connected_n" + std::to_string(n) + ".g6")) {
            EdgeColoring c = vizing_proper_coloring(g);
            CHECK(is_proper(g, c));
            CHECK(colors_used(c) <= degree_profile(g).max_degree + 1);
        }
    }
}

TEST_CASE("shannon coloring of multigraphs") {
    // Shannon's bound is tight on the triple-edge triangle ("fat triangle")
    Graph fat(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}});
    EdgeColoring c = shannon_proper_coloring(fat);
    CHECK(is_proper(fat, c));
    CHECK(colors_used(c) == 6);

    std::mt19937 rng(19);
    for (int trial = 0; trial < 40; ++trial) {
        Graph g = random_multigraph(rng, 5, 9);
        EdgeColoring sc = shannon_proper_coloring(g);
        CHECK(is_proper(g, sc));
        CHECK(colors_used(sc) <= 3 * degree_profile(g).max_degree / 2);
    }
}

TEST_CASE("exact chromatic index against the oracle") {
    std::mt19937 rng(29);
    for (int trial = 0; trial < 30; ++trial) {
        Graph g = random_multigraph(rng, 6, 10);
        auto r = chromatic_index_exact(g);
        REQUIRE(r.value.has_value());
        CHECK(*r.value == oracle_chromatic_index(g));
        REQUIRE(r.witness.has_value());
        CHECK(is_proper(g, *r.witness));
        CHECK(colors_used(*r.witness) == *r.value);
        CHECK(r.bracket.first <= *r.value);
        CHECK(*r.value <= r.bracket.second);
    }
}

TEST_CASE("exact chromatic index on known values") {
    CHECK(*chromatic_index_exact(make_petersen()).value == 4);   // class 2
    CHECK(*chromatic_index_exact(make_complete(4)).value == 3);
    CHECK(*chromatic_index_exact(make_complete(5)).value == 5);
    CHECK(*chromatic_index_exact(make_cycle(5)).value == 3);
    CHECK(*chromatic_index_exact(make_cycle(6)).value == 2);
    Graph fat(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}});
    CHECK(*chromatic_index_exact(fat).value == 6);
}

TEST_CASE("exact chromatic index respects the edge budget") {
    Graph k8 = make_complete(8);  // 28 edges > default budget 25
    auto r = chromatic_index_exact(k8);
    CHECK_FALSE(r.value.has_value());
    CHECK_FALSE(r.witness.has_value());
    CHECK(r.bracket.first == 7);
    CHECK(r.bracket.second == 8);  // simple graph: Delta+1

    auto r2 = chromatic_index_exact(k8, 28);
    REQUIRE(r2.value.has_value());
    CHECK(*r2.value == 7);  // K_n class 1 for even n
}

TEST_CASE("class one sufficient condition") {
    CHECK(class_one_sufficient(make_path(5)));        // max-degree subgraph: isolated middles
    CHECK_FALSE(class_one_sufficient(make_cycle(5))); // max-degree subgraph is the cycle itself
    CHECK_FALSE(class_one_sufficient(make_petersen()));
    CHECK(class_one_sufficient(make_star(5)));
    // soundness across the corpus: sufficient condition implies chi' == Delta
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : load_fixture("connected_n" + std::to_string(n) + ".g6")) {
            if (class_one_sufficient(g))
                CHECK(*chromatic_index_exact(g).value == degree_profile(g).max_degree);
        }
    }
}

TEST_CASE("overfull test") {
    CHECK(is_overfull(make_complete(5)));     // 10 > 2*4
    CHECK_FALSE(is_overfull(make_complete(4)));
    CHECK_FALSE(is_overfull(make_petersen()));
    Graph fat(3, {{0, 1}, {0, 1}, {1, 2}, {1, 2}, {0, 2}, {0, 2}});
    CHECK_THROWS_AS(is_overfull(fat), std::invalid_argument);  // simple graphs only
    // overfull implies class 2 on the corpus
    for (int n = 3; n <= 7; ++n) {
        for (const Graph& g : load_fixture("connected_n" + std::to_string(n) + ".g6")) {
            if (is_overfull(g))
                CHECK(*chromatic_index_exact(g).value == degree_profile(g).max_degree + 1);
        }
    }
}
