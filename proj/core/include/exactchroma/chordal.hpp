#ifndef EXACTCHROMA_CHORDAL_HPP
#define EXACTCHROMA_CHORDAL_HPP

#include <optional>
#include <vector>

#include "exactchroma/coloring.hpp"
#include "exactchroma/graph.hpp"

namespace exactchroma {

/// Linear order on the vertices together with its inverse (position) map.
/// The convention throughout is that of perfect elimination orderings in
/// which the earlier neighbours of every vertex form a clique.
struct EliminationOrder {
    std::vector<Vertex> order;  // visit sequence
    std::vector<int> pos;       // pos[order[i]] == i

    static EliminationOrder from_order(std::vector<Vertex> order);
};

/// Maximum cardinality search. Ties are broken by smallest vertex id, so the
/// result is deterministic. If the graph is chordal, the visit order is a
/// perfect elimination ordering; validity is checked separately.
EliminationOrder mcs_order(const Graph& g);

/// True iff every vertex's earlier neighbours form a clique under L.
bool is_perfect_elimination(const Graph& g, const EliminationOrder& l);

bool is_chordal(const Graph& g);

/// Clique number of a chordal graph: 0 on the empty vertex set, otherwise
/// 1 + max number of earlier neighbours. Throws if L is not a perfect
/// elimination ordering of g.
int clique_number_chordal(const Graph& g, const EliminationOrder& l);

/// Greedy smallest-available colouring along L. For chordal graphs this uses
/// exactly clique_number_chordal colours.
Coloring greedy_proper_coloring(const Graph& g, const EliminationOrder& l);

/// An induced cycle of length >= 4, or nullopt when g is chordal. The cycle
/// is returned in traversal order.
std::optional<std::vector<Vertex>> find_hole(const Graph& g);

}  // namespace exactchroma

#endif
