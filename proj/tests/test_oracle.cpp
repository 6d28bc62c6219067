#include <doctest.h>

#include <stdexcept>

#include "exactchroma/chordal.hpp"
#include "exactchroma/exact_coloring.hpp"
#include "exactchroma/generators.hpp"
#include "exactchroma/oracle.hpp"
#include "test_util.hpp"

using namespace exactchroma;

TEST_CASE("verify_proper finds the first monochromatic edge") {
    Graph k3 = testing::complete(3);
    CHECK(verify_proper(k3, {0, 1, 2}).proper);
    auto bad = verify_proper(k3, {0, 0, 1});
    CHECK_FALSE(bad.proper);
    CHECK(bad.first == 0);
    CHECK(bad.second == 1);
    CHECK(verify_proper(from_edge_list(3, {}), {0, 0, 0}).proper);
    CHECK_THROWS_AS(verify_proper(k3, {0, 1}), std::invalid_argument);
}

TEST_CASE("brute chromatic number on standard graphs") {
    CHECK(brute_chromatic_number(cycle_graph(5)) == 3);
    CHECK(brute_chromatic_number(cycle_graph(6)) == 2);
    CHECK(brute_chromatic_number(testing::complete(4)) == 4);
    CHECK(brute_chromatic_number(exact_distance_graph(star_graph(7), 2)) == 6);
    CHECK(brute_chromatic_number(from_edge_list(0, {})) == 0);
    CHECK(brute_chromatic_number(from_edge_list(5, {})) == 1);
    CHECK_THROWS_AS(brute_chromatic_number(testing::random_graph(17, 0.5, 1)),
                    std::invalid_argument);
}

TEST_CASE("brute chromatic number matches the clique number on chordal graphs") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Graph g = seed % 2 ? random_ktree(11, static_cast<int>(seed % 4) + 1, seed)
                           : random_interval_graph(10, seed);
        CHECK(brute_chromatic_number(g) == clique_number_chordal(g, mcs_order(g)));
    }
}

TEST_CASE("brute chordality by induced-cycle enumeration") {
    CHECK_FALSE(brute_is_chordal(cycle_graph(4)));
    Graph k4_minus = from_edge_list(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(brute_is_chordal(k4_minus));
    Graph c6_chord = from_edge_list(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}, {0, 3}});
    CHECK_FALSE(brute_is_chordal(c6_chord));
    CHECK(brute_is_chordal(path_graph(12)));
    CHECK_THROWS_AS(brute_is_chordal(testing::random_graph(13, 0.5, 1)), std::invalid_argument);
}

TEST_CASE("brute all-pairs agrees with bfs") {
    Graph p5 = path_graph(5);
    auto m = brute_all_pairs(p5);
    for (Vertex u = 0; u < 5; ++u) CHECK(m[u] == bfs_distances(p5, u));

    Graph two_edges = from_edge_list(4, {{0, 1}, {2, 3}});
    CHECK(brute_all_pairs(two_edges)[0][3] == kUnreachable);

    auto k5 = brute_all_pairs(testing::complete(5));
    for (Vertex u = 0; u < 5; ++u)
        for (Vertex v = 0; v < 5; ++v) CHECK(k5[u][v] == (u == v ? 0 : 1));
}

TEST_CASE("graph enumeration visits every labelled graph once") {
    int count = 0;
    int chordal = 0;
    enumerate_all_graphs(4, [&](const Graph& g) {
        ++count;
        if (brute_is_chordal(g)) ++chordal;
    });
    CHECK(count == 64);
    CHECK(chordal == 61);  // only the three labelled C4s fail
}

TEST_CASE("small-case soundness of the odd bound against exact chromatic numbers") {
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        Graph g = random_ktree(10, static_cast<int>(seed % 3) + 1, seed * 19);
        int t = clique_number_chordal(g, mcs_order(g));
        for (int p = 1; p <= 5; p += 2)
            CHECK(brute_chromatic_number(exact_distance_graph(g, p)) <=
                  bound_main1(std::max(t, 2), p, 1));
    }
}
