#include <doctest.h>

#include <stdexcept>

#include "exactchroma/chordal.hpp"
#include "exactchroma/generators.hpp"
#include "exactchroma/oracle.hpp"
#include "test_util.hpp"

using namespace exactchroma;

TEST_CASE("mcs order on P4 visits 0,1,2,3") {
    Graph p4 = path_graph(4);
    EliminationOrder l = mcs_order(p4);
    CHECK(l.order == std::vector<Vertex>{0, 1, 2, 3});
    CHECK(is_perfect_elimination(p4, l));
}

TEST_CASE("mcs order is deterministic") {
    Graph g = random_ktree(25, 3, 17);
    CHECK(mcs_order(g).order == mcs_order(g).order);
}

TEST_CASE("complete graphs always give perfect elimination orders") {
    Graph k3 = testing::complete(3);
    CHECK(is_perfect_elimination(k3, mcs_order(k3)));
    Graph k4 = testing::complete(4);
    EliminationOrder reversed = EliminationOrder::from_order({3, 2, 1, 0});
    CHECK(is_perfect_elimination(k4, reversed));
}

TEST_CASE("C4 has no perfect elimination order") {
    Graph c4 = cycle_graph(4);
    CHECK_FALSE(is_perfect_elimination(c4, mcs_order(c4)));
    CHECK_FALSE(is_chordal(c4));
}

TEST_CASE("elimination order must be a permutation") {
    CHECK_THROWS_AS(EliminationOrder::from_order({0, 0, 1}), std::invalid_argument);
    CHECK_THROWS_AS(EliminationOrder::from_order({0, 3}), std::invalid_argument);
}

TEST_CASE("chordality of standard families") {
    CHECK(is_chordal(path_graph(8)));
    CHECK(is_chordal(star_graph(9)));
    CHECK(is_chordal(complete_dary_tree(3, 3)));
    CHECK(is_chordal(random_ktree(20, 3, 5)));
    CHECK(is_chordal(triangle_strip(9)));
    CHECK_FALSE(is_chordal(cycle_graph(5)));
}

TEST_CASE("clique number from the elimination order") {
    Graph k4 = testing::complete(4);
    CHECK(clique_number_chordal(k4, mcs_order(k4)) == 4);
    Graph p5 = path_graph(5);
    CHECK(clique_number_chordal(p5, mcs_order(p5)) == 2);
    Graph kt = random_ktree(30, 3, 11);
    CHECK(clique_number_chordal(kt, mcs_order(kt)) == 4);
    Graph empty = from_edge_list(0, {});
    CHECK(clique_number_chordal(empty, mcs_order(empty)) == 0);
    Graph edgeless = from_edge_list(4, {});
    CHECK(clique_number_chordal(edgeless, mcs_order(edgeless)) == 1);

    Graph c4 = cycle_graph(4);
    CHECK_THROWS_AS(clique_number_chordal(c4, mcs_order(c4)), std::invalid_argument);
}

TEST_CASE("greedy colouring uses exactly the clique number") {
    Graph k4 = testing::complete(4);
    CHECK(greedy_proper_coloring(k4, mcs_order(k4)).palette == 4);
    Graph p5 = path_graph(5);
    CHECK(greedy_proper_coloring(p5, mcs_order(p5)).palette == 2);

    Graph tt = testing::two_triangles_edge();
    Coloring c = greedy_proper_coloring(tt, mcs_order(tt));
    CHECK(c.palette == 3);
    CHECK(c.color == std::vector<int>{0, 1, 2, 0});

    Graph c4 = cycle_graph(4);
    CHECK_THROWS_AS(greedy_proper_coloring(c4, mcs_order(c4)), std::invalid_argument);
}

TEST_CASE("greedy colouring is proper and optimal on chordal samples") {
    for (std::uint64_t seed = 1; seed <= 8; ++seed) {
        Graph g = seed % 2 ? random_ktree(18, static_cast<int>(seed % 4) + 1, seed)
                           : random_interval_graph(14, seed);
        EliminationOrder l = mcs_order(g);
        REQUIRE(is_perfect_elimination(g, l));
        Coloring c = greedy_proper_coloring(g, l);
        CHECK(verify_proper(g, c.color).proper);
        CHECK(c.palette == clique_number_chordal(g, l));
    }
}

TEST_CASE("is_chordal agrees with the induced-cycle oracle") {
    int chordal_seen = 0, non_chordal_seen = 0;
    for (std::uint64_t seed = 1; seed <= 60; ++seed) {
        Graph g = testing::random_graph(4 + static_cast<int>(seed % 7), 0.35, seed * 31);
        bool fast = is_chordal(g);
        CHECK(fast == brute_is_chordal(g));
        (fast ? chordal_seen : non_chordal_seen)++;
    }
    CHECK(chordal_seen > 0);
    CHECK(non_chordal_seen > 0);
}

TEST_CASE("find_hole returns an induced cycle of length at least 4") {
    CHECK_FALSE(find_hole(random_ktree(12, 2, 3)).has_value());

    auto check_hole = [](const Graph& g) {
        auto hole = find_hole(g);
        REQUIRE(hole.has_value());
        const auto& cycle = *hole;
        REQUIRE(cycle.size() >= 4);
        for (std::size_t i = 0; i < cycle.size(); ++i) {
            for (std::size_t j = i + 1; j < cycle.size(); ++j) {
                bool consecutive = j - i == 1 || (i == 0 && j == cycle.size() - 1);
                CHECK(g.has_edge(cycle[i], cycle[j]) == consecutive);
            }
        }
    };
    check_hole(cycle_graph(4));
    check_hole(cycle_graph(7));
    for (std::uint64_t seed = 1; seed <= 30; ++seed) {
        Graph g = testing::random_graph(9, 0.3, seed * 57 + 1);
        if (!is_chordal(g)) check_hole(g);
    }
}
