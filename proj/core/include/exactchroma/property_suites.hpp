#ifndef EXACTCHROMA_PROPERTY_SUITES_HPP
#define EXACTCHROMA_PROPERTY_SUITES_HPP

#include <string>
#include <vector>

#include "exactchroma/adjacent_cliques.hpp"
#include "exactchroma/graph.hpp"

// Executable forms of the structural facts the colouring construction rests
// on. Each suite scans a graph exhaustively (every root, every vertex pair,
// every family clique) and reports the first counterexample it finds.

namespace exactchroma {

struct SuiteResult {
    std::string name;
    bool pass = true;
    std::string witness;  // empty on pass
};

/// Every root: the l-shadow of every component above l induces a clique;
/// for chordal inputs additionally every level subgraph is chordal with
/// clique number below the graph's.
SuiteResult shadow_suite(const Graph& g);

/// Every root, vertex, and lower level: the ancestor set induces a clique.
SuiteResult ancestor_suite(const Graph& g);

/// Every root and same-level pair at distance p >= 2: the ancestor cliques
/// at level l - floor(p/2) are adjacent (odd p: also disjoint) or intersect
/// (even p only).
SuiteResult path_suite(const Graph& g);

/// Over the singleton+edge+triangle clique family: clique colours properly
/// colour the adjacent-cliques graph within C(t+1,2) colours.
SuiteResult adjacent_cliques_suite(const Graph& g);

/// Over the same family: intersecting cliques with equal colour share their
/// order-minimum vertex.
SuiteResult intersecting_cliques_suite(const Graph& g);

std::vector<SuiteResult> run_all_suites(const Graph& g);

/// Every nonempty clique of size <= 3: singletons, edges, triangles.
std::vector<Clique> small_clique_family(const Graph& g);

}  // namespace exactchroma

#endif
