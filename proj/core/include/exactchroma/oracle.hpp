#ifndef EXACTCHROMA_ORACLE_HPP
#define EXACTCHROMA_ORACLE_HPP

#include <functional>
#include <vector>

#include "exactchroma/graph.hpp"

// Brute-force ground truth. Everything here is deliberately independent of
// the algorithms it cross-checks: chordality by induced-cycle enumeration,
// distances by repeated neighbourhood expansion, chromatic numbers by
// branch and bound.

namespace exactchroma {

struct ProperCheck {
    bool proper = true;
    Vertex first = -1;   // endpoints of the first monochromatic edge
    Vertex second = -1;
};

ProperCheck verify_proper(const Graph& h, const std::vector<int>& colors);

/// Exact chromatic number. Branch and bound over a descending-degree order
/// with a greedy clique lower bound; refuses graphs above max_n.
int brute_chromatic_number(const Graph& h, int max_n = 16);

/// Chordality by enumerating vertex subsets and looking for an induced cycle
/// of length >= 4. Refuses n > 12.
bool brute_is_chordal(const Graph& g);

/// All-pairs distances via iterated neighbourhood expansion over bitset rows
/// (no per-source queue BFS). Refuses n > 512.
std::vector<std::vector<Dist>> brute_all_pairs(const Graph& g);

/// Calls fn on every labelled graph with exactly n vertices (2^C(n,2) of
/// them), in edge-mask order. Intended for exhaustive small-case checks.
void enumerate_all_graphs(int n, const std::function<void(const Graph&)>& fn);

}  // namespace exactchroma

#endif
