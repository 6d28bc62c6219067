#include "exactchroma/generators.hpp"

#include <limits>
#include <random>
#include <stdexcept>

namespace exactchroma {

namespace {

// uniform value in [0, bound) by rejection; avoids the implementation-defined
// std::uniform_int_distribution so seeds replay identically everywhere
std::uint64_t uniform_below(std::mt19937_64& rng, std::uint64_t bound) {
    const std::uint64_t max = std::numeric_limits<std::uint64_t>::max();
    const std::uint64_t cutoff = max - max % bound;
    std::uint64_t x;
    do {
        x = rng();
    } while (x >= cutoff);
    return x % bound;
}

}  // namespace

Graph random_ktree(int n, int k, std::uint64_t seed) {
    if (k < 1) throw std::invalid_argument("ktree requires k >= 1");
    if (n <= k) throw std::invalid_argument("ktree requires n >= k+1");
    std::mt19937_64 rng(seed);
    std::vector<Edge> edges;
    for (Vertex u = 0; u <= k; ++u)
        for (Vertex v = u + 1; v <= k; ++v) edges.emplace_back(u, v);

    std::vector<std::vector<Vertex>> cliques;  // all attachable k-cliques
    for (Vertex skip = 0; skip <= k; ++skip) {
        std::vector<Vertex> q;
        for (Vertex v = 0; v <= k; ++v)
            if (v != skip) q.push_back(v);
        cliques.push_back(std::move(q));
    }
    for (Vertex v = k + 1; v < n; ++v) {
        const std::vector<Vertex> host = cliques[uniform_below(rng, cliques.size())];
        for (Vertex u : host) edges.emplace_back(u, v);
        for (std::size_t drop = 0; drop < host.size(); ++drop) {
            std::vector<Vertex> q;
            for (std::size_t i = 0; i < host.size(); ++i)
                if (i != drop) q.push_back(host[i]);
            q.push_back(v);
            cliques.push_back(std::move(q));
        }
    }
    return from_edge_list(n, edges);
}

Graph interval_graph_from(const std::vector<std::pair<std::int64_t, std::int64_t>>& intervals) {
    const int n = static_cast<int>(intervals.size());
    std::vector<Edge> edges;
    for (int i = 0; i < n; ++i) {
        auto [lo1, hi1] = intervals[i];
        if (lo1 > hi1) throw std::invalid_argument("interval with lo > hi");
        for (int j = i + 1; j < n; ++j) {
            auto [lo2, hi2] = intervals[j];
            if (lo1 <= hi2 && lo2 <= hi1) edges.emplace_back(i, j);
        }
    }
    return from_edge_list(n, edges);
}

Graph random_interval_graph(int n, std::uint64_t seed) {
    if (n < 1) throw std::invalid_argument("interval graph requires n >= 1");
    std::mt19937_64 rng(seed);
    std::vector<std::pair<std::int64_t, std::int64_t>> intervals;
    intervals.reserve(n);
    for (int i = 0; i < n; ++i) {
        auto a = static_cast<std::int64_t>(uniform_below(rng, 1'000'000));
        auto b = static_cast<std::int64_t>(uniform_below(rng, 1'000'000));
        intervals.emplace_back(std::min(a, b), std::max(a, b));
    }
    return interval_graph_from(intervals);
}

Graph complete_dary_tree(int delta, int radius) {
    if (delta < 1 || radius < 0) throw std::invalid_argument("dary tree requires delta >= 1, radius >= 0");
    std::vector<Edge> edges;
    std::vector<Vertex> frontier{0};
    Vertex next = 1;
    for (int depth = 1; depth <= radius; ++depth) {
        const int children = depth == 1 ? delta : delta - 1;
        std::vector<Vertex> grown;
        for (Vertex parent : frontier) {
            for (int c = 0; c < children; ++c) {
                edges.emplace_back(parent, next);
                grown.push_back(next);
                ++next;
            }
        }
        frontier = std::move(grown);
        if (frontier.empty()) break;
    }
    return from_edge_list(next, edges);
}

Graph path_graph(int n) {
    if (n < 1) throw std::invalid_argument("path requires n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    return from_edge_list(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw std::invalid_argument("cycle requires n >= 3");
    std::vector<Edge> edges;
    for (Vertex v = 0; v < n; ++v) edges.emplace_back(v, (v + 1) % n);
    return from_edge_list(n, edges);
}

Graph star_graph(int n) {
    if (n < 1) throw std::invalid_argument("star requires n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(0, v);
    return from_edge_list(n, edges);
}

Graph triangle_strip(int n) {
    if (n < 1) throw std::invalid_argument("triangle strip requires n >= 1");
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
    for (Vertex v = 0; v + 2 < n; ++v) edges.emplace_back(v, v + 2);
    return from_edge_list(n, edges);
}

Graph generate(const GenSpec& spec) {
    if (spec.model == "ktree") return random_ktree(spec.n, spec.k, spec.seed);
    if (spec.model == "interval") return random_interval_graph(spec.n, spec.seed);
    if (spec.model == "dary") return complete_dary_tree(spec.delta, spec.radius);
    if (spec.model == "path") return path_graph(spec.n);
    if (spec.model == "cycle") return cycle_graph(spec.n);
    if (spec.model == "star") return star_graph(spec.n);
    if (spec.model == "strip") return triangle_strip(spec.n);
    throw std::invalid_argument("unknown generator model: " + spec.model);
}

}  // namespace exactchroma
