#ifndef EXACTCHROMA_ADJACENT_CLIQUES_HPP
#define EXACTCHROMA_ADJACENT_CLIQUES_HPP

#include <vector>

#include "exactchroma/chordal.hpp"
#include "exactchroma/graph.hpp"

namespace exactchroma {

/// A set of pairwise-adjacent vertices. Operations taking a Clique verify
/// pairwise adjacency and reject anything else.
using Clique = std::vector<Vertex>;

bool is_clique(const Graph& g, const Clique& k);

/// Colouring of a chordal graph in which a(v) differs from a(u) whenever u
/// is an earlier neighbour of v, or an earlier neighbour of one. At most
/// C(t+1,2) colours for clique number t.
struct PredecessorColoring {
    std::vector<int> color;
    EliminationOrder order;
    int palette = 0;
};

/// Greedy smallest-available run along l. Throws if l is not a perfect
/// elimination ordering of g.
PredecessorColoring predecessor_coloring(const Graph& g, const EliminationOrder& l);

/// The l-minimum vertex of a nonempty clique.
Vertex mu_of_clique(const Clique& k, const EliminationOrder& l);

/// Colour of a clique: a(mu(K)). Adjacent cliques receive different colours.
int clique_color(const Graph& g, const PredecessorColoring& a, const Clique& k);

/// Disjoint with at least one edge between them.
bool cliques_adjacent(const Graph& g, const Clique& k1, const Clique& k2);

/// Adjacent-cliques graph restricted to an explicit clique family: one vertex
/// per family member, edges per cliques_adjacent.
Graph ac_graph(const Graph& g, const std::vector<Clique>& family);

}  // namespace exactchroma

#endif
