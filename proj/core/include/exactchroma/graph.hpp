#ifndef EXACTCHROMA_GRAPH_HPP
#define EXACTCHROMA_GRAPH_HPP

#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace exactchroma {

using Vertex = std::int32_t;
using Edge = std::pair<Vertex, Vertex>;
using Dist = std::int32_t;

/// Distance value for unreachable pairs. Never a finite distance, so
/// comparisons against a concrete p cannot match across components.
inline constexpr Dist kUnreachable = -1;

inline constexpr bool is_reachable(Dist d) { return d >= 0; }

/// Immutable simple undirected graph on vertices 0..n-1.
/// Neighbor lists are sorted ascending, symmetric, loop- and duplicate-free.
class Graph {
public:
    Graph() = default;

    int vertex_count() const { return n_; }
    std::int64_t edge_count() const { return m_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    int degree(Vertex v) const { return static_cast<int>(adj_[v].size()); }
    bool has_edge(Vertex u, Vertex v) const;

    /// Canonical edge list: pairs with u < v, sorted lexicographically.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

    friend Graph from_edge_list(int n, std::span<const Edge> edges);

private:
    int n_ = 0;
    std::int64_t m_ = 0;
    std::vector<std::vector<Vertex>> adj_;
};

/// Builds a Graph from an arbitrary edge list. Duplicates and reversed
/// copies of the same pair collapse to one edge. Throws std::invalid_argument
/// on loops or out-of-range endpoints.
Graph from_edge_list(int n, std::span<const Edge> edges);
Graph from_edge_list(int n, std::initializer_list<Edge> edges);

/// Single-source BFS. row[v] = d(source, v), kUnreachable outside the
/// source's component.
std::vector<Dist> bfs_distances(const Graph& g, Vertex source);

/// All-pairs distance access. Rows are materialized eagerly (in parallel)
/// when n <= materialize_threshold; above that each query recomputes its row.
class DistanceOracle {
public:
    explicit DistanceOracle(Graph g, int materialize_threshold = 4096);

    Dist distance(Vertex u, Vertex v) const;
    std::vector<Dist> row(Vertex u) const;
    bool materialized() const { return materialized_; }
    const Graph& graph() const { return graph_; }

private:
    Graph graph_;
    bool materialized_ = false;
    std::vector<std::vector<Dist>> rows_;
};

/// Edge set {uv : d(u,v) = p}, p >= 1.
Graph exact_distance_graph(const Graph& g, int p);

/// Edge set {uv : 1 <= d(u,v) <= p}, p >= 1.
Graph power_graph(const Graph& g, int p);

/// Edge-set union of graphs on one common vertex set.
Graph union_graphs(std::span<const Graph> graphs);

int max_degree(const Graph& g);

/// Components ordered by smallest member, members ascending.
std::vector<std::vector<Vertex>> connected_components(const Graph& g);

/// Induced subgraph with local ids 0..k-1 assigned in ascending global order.
struct InducedSubgraph {
    Graph graph;
    std::vector<Vertex> to_global;  // local -> global
    std::vector<int> to_local;      // global -> local, -1 when absent
};

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices);

// Edge-list text format: "n m" header, one "u v" line per edge, '#' starts a
// comment. write_edge_list emits the canonical form (edges sorted, u < v),
// which parse_edge_list round-trips byte for byte.
Graph parse_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
std::string write_edge_list(const Graph& g);
void write_edge_list_file(const Graph& g, const std::string& path);

}  // namespace exactchroma

#endif
