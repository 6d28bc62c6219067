#include "exactchroma/graph.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <istream>
#include <sstream>
#include <stdexcept>

#include "detail/parallel.hpp"

namespace exactchroma {

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_) return false;
    const auto& nu = adj_[u];
    const auto& nv = adj_[v];
    const auto& shorter = nu.size() <= nv.size() ? nu : nv;
    Vertex target = nu.size() <= nv.size() ? v : u;
    return std::binary_search(shorter.begin(), shorter.end(), target);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(static_cast<std::size_t>(m_));
    for (Vertex u = 0; u < n_; ++u)
        for (Vertex v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

Graph from_edge_list(int n, std::span<const Edge> edges) {
    if (n < 0) throw std::invalid_argument("vertex count must be non-negative");
    Graph g;
    g.n_ = n;
    g.adj_.assign(n, {});
    for (const auto& [u, v] : edges) {
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw std::invalid_argument("edge endpoint out of range: (" + std::to_string(u) +
                                        "," + std::to_string(v) + ") with n=" + std::to_string(n));
        if (u == v)
            throw std::invalid_argument("loop edge (" + std::to_string(u) + "," +
                                        std::to_string(v) + ") is not allowed");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    g.m_ = 0;
    for (auto& nbrs : g.adj_) {
        std::sort(nbrs.begin(), nbrs.end());
        nbrs.erase(std::unique(nbrs.begin(), nbrs.end()), nbrs.end());
        g.m_ += static_cast<std::int64_t>(nbrs.size());
    }
    g.m_ /= 2;
    return g;
}

Graph from_edge_list(int n, std::initializer_list<Edge> edges) {
    return from_edge_list(n, std::span<const Edge>(edges.begin(), edges.size()));
}

std::vector<Dist> bfs_distances(const Graph& g, Vertex source) {
    const int n = g.vertex_count();
    if (source < 0 || source >= n) throw std::invalid_argument("bfs source out of range");
    std::vector<Dist> dist(n, kUnreachable);
    std::deque<Vertex> queue;
    dist[source] = 0;
    queue.push_back(source);
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        for (Vertex v : g.neighbors(u)) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

DistanceOracle::DistanceOracle(Graph g, int materialize_threshold) : graph_(std::move(g)) {
    const int n = graph_.vertex_count();
    if (n <= materialize_threshold) {
        rows_.resize(n);
        detail::parallel_for(0, n, [this](int u) { rows_[u] = bfs_distances(graph_, u); });
        materialized_ = true;
    }
}

Dist DistanceOracle::distance(Vertex u, Vertex v) const {
    if (materialized_) return rows_[u][v];
    return bfs_distances(graph_, u)[v];
}

std::vector<Dist> DistanceOracle::row(Vertex u) const {
    if (materialized_) return rows_[u];
    return bfs_distances(graph_, u);
}

namespace {

template <typename Keep>
Graph derived_graph(const Graph& g, const Keep& keep) {
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        auto row = bfs_distances(g, u);
        for (Vertex v = u + 1; v < n; ++v)
            if (is_reachable(row[v]) && keep(row[v])) edges.emplace_back(u, v);
    }
    return from_edge_list(n, edges);
}

}  // namespace

Graph exact_distance_graph(const Graph& g, int p) {
    if (p < 1) throw std::invalid_argument("exact distance graph requires p >= 1");
    return derived_graph(g, [p](Dist d) { return d == p; });
}

Graph power_graph(const Graph& g, int p) {
    if (p < 1) throw std::invalid_argument("power graph requires p >= 1");
    return derived_graph(g, [p](Dist d) { return d >= 1 && d <= p; });
}

Graph union_graphs(std::span<const Graph> graphs) {
    if (graphs.empty()) throw std::invalid_argument("union of zero graphs is undefined");
    const int n = graphs.front().vertex_count();
    std::vector<Edge> edges;
    for (const Graph& g : graphs) {
        if (g.vertex_count() != n)
            throw std::invalid_argument("union requires identical vertex sets");
        auto part = g.edges();
        edges.insert(edges.end(), part.begin(), part.end());
    }
    return from_edge_list(n, edges);
}

int max_degree(const Graph& g) {
    int best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v) best = std::max(best, g.degree(v));
    return best;
}

std::vector<std::vector<Vertex>> connected_components(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<std::vector<Vertex>> components;
    std::vector<bool> seen(n, false);
    for (Vertex s = 0; s < n; ++s) {
        if (seen[s]) continue;
        std::vector<Vertex> comp;
        std::deque<Vertex> queue{s};
        seen[s] = true;
        while (!queue.empty()) {
            Vertex u = queue.front();
            queue.pop_front();
            comp.push_back(u);
            for (Vertex v : g.neighbors(u)) {
                if (!seen[v]) {
                    seen[v] = true;
                    queue.push_back(v);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        components.push_back(std::move(comp));
    }
    return components;
}

InducedSubgraph induced_subgraph(const Graph& g, std::span<const Vertex> vertices) {
    InducedSubgraph sub;
    sub.to_global.assign(vertices.begin(), vertices.end());
    std::sort(sub.to_global.begin(), sub.to_global.end());
    sub.to_local.assign(g.vertex_count(), -1);
    for (std::size_t i = 0; i < sub.to_global.size(); ++i) {
        Vertex v = sub.to_global[i];
        if (v < 0 || v >= g.vertex_count())
            throw std::invalid_argument("induced subgraph vertex out of range");
        if (sub.to_local[v] != -1)
            throw std::invalid_argument("induced subgraph vertex repeated");
        sub.to_local[v] = static_cast<int>(i);
    }
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < sub.to_global.size(); ++i)
        for (Vertex w : g.neighbors(sub.to_global[i])) {
            int j = sub.to_local[w];
            if (j > static_cast<int>(i)) edges.emplace_back(static_cast<Vertex>(i), j);
        }
    sub.graph = from_edge_list(static_cast<int>(sub.to_global.size()), edges);
    return sub;
}

Graph parse_edge_list(std::istream& in) {
    std::vector<long long> numbers;
    std::string line;
    while (std::getline(in, line)) {
        if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
        std::istringstream tokens(line);
        long long value;
        while (tokens >> value) numbers.push_back(value);
        if (!tokens.eof()) throw std::runtime_error("edge list: non-numeric token in \"" + line + "\"");
    }
    if (numbers.size() < 2) throw std::runtime_error("edge list: missing 'n m' header");
    const long long n = numbers[0];
    const long long m = numbers[1];
    if (n < 0 || m < 0) throw std::runtime_error("edge list: negative header values");
    if (static_cast<long long>(numbers.size()) != 2 + 2 * m)
        throw std::runtime_error("edge list: expected " + std::to_string(2 * m) +
                                 " endpoint values, found " + std::to_string(numbers.size() - 2));
    std::vector<Edge> edges;
    edges.reserve(static_cast<std::size_t>(m));
    for (long long i = 0; i < m; ++i)
        edges.emplace_back(static_cast<Vertex>(numbers[2 + 2 * i]),
                           static_cast<Vertex>(numbers[3 + 2 * i]));
    return from_edge_list(static_cast<int>(n), edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    return parse_edge_list(in);
}

std::string write_edge_list(const Graph& g) {
    std::ostringstream out;
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) out << u << ' ' << v << '\n';
    return out.str();
}

void write_edge_list_file(const Graph& g, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open " + path + " for writing");
    out << write_edge_list(g);
}

}  // namespace exactchroma
