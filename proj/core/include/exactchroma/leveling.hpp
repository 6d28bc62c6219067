#ifndef EXACTCHROMA_LEVELING_HPP
#define EXACTCHROMA_LEVELING_HPP

#include <vector>

#include "exactchroma/graph.hpp"

namespace exactchroma {

/// Level set before BFS reaches a vertex / for vertices outside the root's
/// component.
inline constexpr int kOutsideLevel = -1;

/// BFS levels around a root: layers[l] lists the vertices at distance exactly
/// l, ascending. Vertices in other components carry kOutsideLevel and appear
/// in no layer.
struct LevelPartition {
    Vertex root = -1;
    std::vector<int> level;
    std::vector<std::vector<Vertex>> layers;

    int max_level() const { return static_cast<int>(layers.size()) - 1; }
};

LevelPartition level_partition(const Graph& g, Vertex root);

/// Subgraph induced by the l-th layer, with local/global id mappings.
InducedSubgraph level_subgraph(const Graph& g, const LevelPartition& p, int level);

/// Connected components of the subgraph induced by all layers above l.
std::vector<std::vector<Vertex>> upper_components(const Graph& g, const LevelPartition& p,
                                                  int level);

/// Vertices of layer l with at least one neighbour inside the given set.
std::vector<Vertex> shadow(const Graph& g, const LevelPartition& p,
                           const std::vector<Vertex>& component, int level);

/// Result of the shadow-completeness scan; on failure carries the first
/// violating level, component, and non-adjacent shadow pair.
struct ShadowCompleteness {
    bool complete = true;
    int level = -1;
    std::vector<Vertex> component;
    Vertex first = -1;
    Vertex second = -1;
};

/// True iff for every level l, the l-shadow of every component of the
/// above-l subgraph induces a complete graph.
ShadowCompleteness check_shadow_complete(const Graph& g, const LevelPartition& p);

/// All vertices of layer target_level joined to y by a path descending one
/// level per step. For chordal graphs this set induces a clique.
std::vector<Vertex> ancestor_clique(const Graph& g, const LevelPartition& p, Vertex y,
                                    int target_level);

}  // namespace exactchroma

#endif
