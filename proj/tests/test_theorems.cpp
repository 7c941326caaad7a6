#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "rd/theorems.hpp"
#include "test_support.hpp"

using namespace rd;
using namespace testsupport;

TEST_CASE("rd=1 and rd=2 characterizations on named graphs") {
    CHECK(characterize_rd_1(make_path(5)));
    CHECK_FALSE(characterize_rd_1(make_cycle(4)));

    Graph bowtie(5, {{0, 1}, {1, 2}, {2, 0}, {0, 3}, {3, 4}, {4, 0}});
    CHECK(characterize_rd_2(bowtie));
    CHECK_FALSE(characterize_rd_2(make_complete(4)));
    CHECK_FALSE(characterize_rd_1(make_complete(4)));
    CHECK_FALSE(characterize_rd_2(make_path(5)));  // no cycle block
    CHECK(characterize_rd_2(make_cycle(6)));
}

TEST_CASE("rd=n-1 characterization") {
    for (int n = 3; n <= 6; ++n) CHECK(characterize_rd_n_minus_1(make_complete(n)));
    CHECK_FALSE(characterize_rd_n_minus_1(make_wheel(5)));
    CHECK_FALSE(characterize_rd_n_minus_1(make_wheel(6)));

    // K5 minus one edge: three vertices of degree 4 remain
    std::vector<std::pair<int, int>> e;
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j)
            if (!(i == 0 && j == 1)) e.push_back({i, j});
    Graph k5e(5, e);
    CHECK(characterize_rd_n_minus_1(k5e));
    CHECK(*rd_exact(k5e).value == 4);
}

TEST_CASE("rd=n-2 characterization on named graphs") {
    auto w5 = characterize_rd_n_minus_2(make_wheel(5));
    CHECK(w5.holds);
    CHECK(w5.condition == 1);
    CHECK(*rd_exact(make_wheel(5)).value == 3);

    auto c4 = characterize_rd_n_minus_2(make_cycle(4));
    CHECK(c4.holds);
    CHECK(c4.condition == 2);
    CHECK(*rd_exact(make_cycle(4)).value == 2);

    CHECK_FALSE(characterize_rd_n_minus_2(make_cycle(6)).holds);
}

TEST_CASE("characterizations are exact biconditionals on n <= 6") {
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : load_fixture("connected_n" + std::to_string(n) + ".g6")) {
            int rd = *rd_exact(g).value;
            CHECK(characterize_rd_1(g) == (rd == 1));
            CHECK(characterize_rd_2(g) == (rd == 2));
            CHECK(characterize_rd_n_minus_1(g) == (rd == n - 1));
            if (n >= 4) CHECK(characterize_rd_n_minus_2(g).holds == (rd == n - 2));
        }
    }
}

TEST_CASE("nordhaus gaddum on named graphs") {
    auto p4 = nordhaus_gaddum_check(make_path(4));
    CHECK(p4.rd_g == 1);
    CHECK(p4.rd_complement == 1);
    CHECK(p4.lower_holds);  // 2 >= n-2
    CHECK(p4.upper_holds);

    auto c5 = nordhaus_gaddum_check(make_cycle(5));
    CHECK(c5.rd_g == 2);
    CHECK(c5.rd_complement == 2);
    CHECK(c5.lower_holds);
    CHECK(c5.upper_holds);

    CHECK_THROWS_AS(nordhaus_gaddum_check(make_complete(4)), std::invalid_argument);
}

TEST_CASE("nordhaus gaddum bounds and extremal characterization, n <= 6") {
    for (int n = 4; n <= 6; ++n) {
        for (const Graph& g : load_fixture("connected_n" + std::to_string(n) + ".g6")) {
            if (!is_connected(complement(g))) continue;
            auto rec = nordhaus_gaddum_check(g);
            CHECK(rec.lower_holds);
            CHECK(rec.upper_holds);
            CHECK(rec.sum_extremal == rec.characterized);
        }
    }
}

TEST_CASE("conjecture scan exhaustive n <= 5") {
    std::vector<std::string> codes;
    for (int n = 2; n <= 5; ++n)
        for (const Graph& g : load_fixture("connected_n" + std::to_string(n) + ".g6"))
            codes.push_back(graph6_emit(g));
    auto rep = conjecture_scan(codes);
    CHECK(rep.violation_count == 0);
    CHECK(rep.unresolved_count == 0);
    CHECK(rep.records.size() == codes.size());
    for (size_t i = 0; i < rep.records.size(); ++i) {
        CHECK(rep.records[i].graph6 == codes[i]);
        CHECK(rep.records[i].rd.has_value());
        CHECK(rep.records[i].within_plus_one);
    }
}

TEST_CASE("conjecture scan is deterministic across worker counts") {
    std::vector<std::string> codes;
    for (const Graph& g : load_fixture("connected_n5.g6")) codes.push_back(graph6_emit(g));
    ScanOptions one;
    ScanOptions four;
    four.workers = 4;
    auto a = conjecture_scan(codes, one);
    auto b = conjecture_scan(codes, four);
    REQUIRE(a.records.size() == b.records.size());
    for (size_t i = 0; i < a.records.size(); ++i) {
        CHECK(a.records[i].graph6 == b.records[i].graph6);
        CHECK(a.records[i].rd == b.records[i].rd);
        CHECK(a.records[i].lambda_plus == b.records[i].lambda_plus);
    }
}

TEST_CASE("witness-only scan mode") {
    std::vector<std::string> codes{graph6_emit(make_petersen()), graph6_emit(make_wheel(7))};
    ScanOptions opts;
    opts.witness_only = true;
    auto rep = conjecture_scan(codes, opts);
    CHECK(rep.violation_count == 0);
    for (const auto& r : rep.records) {
        CHECK(r.within_plus_one);
        CHECK_FALSE(r.rd.has_value());
    }
}

TEST_CASE("scan matches the multipartite formula") {
    // rd(K_{n1..nk}) = n - n2 if n1 = 1, else n - n1 (parts ascending)
    struct Case {
        std::vector<int> parts;
        int expect;
    };
    for (const Case& c : {Case{{1, 2}, 1}, Case{{1, 1, 1}, 2}, Case{{2, 3}, 3},
                          Case{{3, 3}, 3}, Case{{1, 2, 2}, 3}, Case{{2, 2, 2}, 4},
                          Case{{1, 1, 2}, 3}}) {
        Graph g = make_complete_multipartite(c.parts);
        CHECK(*rd_exact(g).value == c.expect);
    }
}

TEST_CASE("petersen is conjecture tight") {
    auto rep = conjecture_scan({graph6_emit(make_petersen())});
    REQUIRE(rep.records.size() == 1);
    CHECK(rep.records[0].lambda_plus == 3);
    CHECK(*rep.records[0].rd == 4);
    CHECK(rep.records[0].within_plus_one);
    CHECK(rep.violation_count == 0);
}

TEST_CASE("odd regular equivalence") {
    auto k4 = odd_regular_equivalence(make_complete(4));
    CHECK(k4.preconditions_met);
    CHECK(*k4.chromatic_index == 3);
    CHECK(*k4.rd == 3);
    CHECK(k4.equivalence_holds);
    CHECK(k4.regular_bracket_holds);

    auto pet = odd_regular_equivalence(make_petersen());
    CHECK(pet.preconditions_met);
    CHECK(*pet.chromatic_index == 4);
    CHECK(*pet.rd == 4);
    CHECK(pet.equivalence_holds);
    CHECK(pet.regular_bracket_holds);

    auto k33 = odd_regular_equivalence(make_complete_multipartite({3, 3}));
    CHECK(k33.preconditions_met);
    CHECK(*k33.chromatic_index == 3);
    CHECK(*k33.rd == 3);
    CHECK(k33.equivalence_holds);

    // preconditions: wrong parity / irregular graphs are reported, not asserted
    CHECK_FALSE(odd_regular_equivalence(make_cycle(5)).preconditions_met);
    CHECK_FALSE(odd_regular_equivalence(make_wheel(6)).preconditions_met);
}
