#ifndef EXACTCHROMA_GENERATORS_HPP
#define EXACTCHROMA_GENERATORS_HPP

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "exactchroma/graph.hpp"

// Seeded graph families for tests, benchmarks, and the CLI. All randomness
// comes from mt19937_64 plus rejection sampling, so a (model, parameters,
// seed) triple produces the same graph on every platform.

namespace exactchroma {

struct GenSpec {
    std::string model;  // ktree | interval | dary | path | cycle | star | strip
    int n = 0;
    int k = 0;
    int delta = 0;
    int radius = 0;
    std::uint64_t seed = 0;
};

/// k-tree: K_{k+1} plus n-k-1 vertices each attached to a uniformly chosen
/// existing k-clique. Chordal with clique number k+1.
Graph random_ktree(int n, int k, std::uint64_t seed);

/// Intersection graph of explicit intervals (adjacent iff they overlap).
Graph interval_graph_from(const std::vector<std::pair<std::int64_t, std::int64_t>>& intervals);

/// Intersection graph of n intervals with uniformly drawn endpoints.
Graph random_interval_graph(int n, std::uint64_t seed);

/// Rooted tree: root of degree delta, every other internal vertex with
/// delta-1 children, leaves at the given depth.
Graph complete_dary_tree(int delta, int radius);

Graph path_graph(int n);
Graph cycle_graph(int n);

/// Star on n vertices: centre 0 joined to 1..n-1.
Graph star_graph(int n);

/// Path 0..n-1 plus all edges (i, i+2). Outerplanar and chordal, clique
/// number 3 for n >= 3.
Graph triangle_strip(int n);

Graph generate(const GenSpec& spec);

}  // namespace exactchroma

#endif
