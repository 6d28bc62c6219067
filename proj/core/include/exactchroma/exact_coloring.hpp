#ifndef EXACTCHROMA_EXACT_COLORING_HPP
#define EXACTCHROMA_EXACT_COLORING_HPP

#include <string>
#include <utility>
#include <vector>

#include "exactchroma/graph.hpp"
#include "exactchroma/leveling.hpp"

// Colourings of exact distance-p graphs of chordal graphs.
//
// The pipeline: partition each component into BFS levels around its
// smallest-id vertex, colour each level against the predecessor colouring of
// the level floor(p/2) below it (odd p needs only the ancestor-clique colour,
// even p additionally records a port at the clique's minimum vertex), then
// stack one such component per requested distance on top of the level index
// mod p+1. Distinct distances-p_i pairs land on distinct tuples.

namespace exactchroma {

struct BoundReport {
    int t = 0;                 // clique number of the input
    int delta = 0;             // maximum degree
    int p = 0;                 // distance cap
    std::vector<int> members;  // the requested distance set S
    int even_members = 0;      // q
    long long bound = 0;
    int colors_used = 0;
    bool proper = false;
};

/// Per-vertex colour tuples (f, g_1, ..., g_s) plus the canonical dense
/// renumbering: dense[u] == dense[v] iff the tuples are equal, numbered by
/// first appearance in vertex order.
struct TupleColoring {
    std::vector<std::vector<int>> tuples;
    std::vector<int> dense;
    int colors_used = 0;
    BoundReport report;
};

long long binomial(int n, int k);

/// C(t,2)*(p+1) for odd p; C(t,2)*delta*(p+1) for even p (odd ignores delta).
long long bound_main1(int t, int p, int delta);

/// C(t,2)^s * delta^q * (p+1), or t * C(t,2)^(s-1) * delta^q * (p+1) when
/// 1 is a member. q = number of even members.
long long bound_main2(int t, int p, const std::vector<int>& members, int delta);

/// Comparison bound for graphs of tree-width t: t*C(p+t-1,t)+1 for odd p,
/// (t*C(p+t,t)+1)*delta for even p.
long long bound_tw(int t, int p, int delta);

/// Exponent of delta in the general power-graph bound: floor(p/2).
int bound_largepow_exponent(int p);

/// Level colouring for odd p >= 3: colours of layer `level` (parallel to
/// p.layers[level]) such that same-level pairs at distance exactly p differ.
/// Uses at most C(t,2) colours; levels below floor(p/2) take the fixed 0.
std::vector<int> level_coloring_odd(const Graph& g, const LevelPartition& p, int level,
                                    int distance);

/// Level colouring for even p >= 2: pairs (ancestor-clique colour, port of
/// sigma(y) at mu). At most C(t,2)*delta values; below-k levels take (0,0).
std::vector<std::pair<int, int>> level_coloring_even(const Graph& g, const LevelPartition& p,
                                                     int level, int distance);

/// Smallest-id vertex at distance k-1 from y adjacent to mu (y itself when
/// k == 1). Nonexistence signals an upstream bug and throws.
Vertex sigma_vertex(const Graph& g, const LevelPartition& p, Vertex y, Vertex mu, int k);

/// Neighbours of w ranked 1..deg(w) by ascending id.
std::vector<std::pair<Vertex, int>> injective_port_label(const Graph& g, Vertex w);
int port_label(const Graph& g, Vertex w, Vertex u);

/// Tuple colouring proper on the union of the exact distance-p_i graphs for
/// every member p_i of S. members must be a subset of {1..p}; the graph must
/// be chordal. Components are coloured independently from their smallest-id
/// vertices with a shared palette.
TupleColoring combined_coloring(const Graph& g, const std::vector<int>& members, int p);

/// combined_coloring with S = {p}, reported against bound_main1.
TupleColoring exact_color(const Graph& g, int p);

/// Fixed-schema report: {n, p, S, t, delta, bound, colors_used, proper,
/// colors}. Byte-deterministic for identical inputs.
std::string coloring_report_json(const TupleColoring& tc);

}  // namespace exactchroma

#endif
