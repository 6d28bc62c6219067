#include "exactchroma/leveling.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace exactchroma {

LevelPartition level_partition(const Graph& g, Vertex root) {
    const int n = g.vertex_count();
    if (root < 0 || root >= n) throw std::invalid_argument("level partition root out of range");
    LevelPartition p;
    p.root = root;
    p.level.assign(n, kOutsideLevel);
    auto dist = bfs_distances(g, root);
    int depth = 0;
    for (Vertex v = 0; v < n; ++v)
        if (is_reachable(dist[v])) depth = std::max(depth, dist[v]);
    p.layers.assign(depth + 1, {});
    for (Vertex v = 0; v < n; ++v) {
        if (!is_reachable(dist[v])) continue;
        p.level[v] = dist[v];
        p.layers[dist[v]].push_back(v);
    }
    return p;
}

InducedSubgraph level_subgraph(const Graph& g, const LevelPartition& p, int level) {
    if (level < 0 || level > p.max_level())
        throw std::invalid_argument("level index out of range");
    return induced_subgraph(g, p.layers[level]);
}

std::vector<std::vector<Vertex>> upper_components(const Graph& g, const LevelPartition& p,
                                                  int level) {
    const int n = g.vertex_count();
    std::vector<char> inside(n, 0);
    for (int l = level + 1; l <= p.max_level(); ++l)
        for (Vertex v : p.layers[l]) inside[v] = 1;
    std::vector<std::vector<Vertex>> components;
    std::vector<char> seen(n, 0);
    for (int l = level + 1; l <= p.max_level(); ++l) {
        for (Vertex s : p.layers[l]) {
            if (seen[s]) continue;
            std::vector<Vertex> comp;
            std::deque<Vertex> queue{s};
            seen[s] = 1;
            while (!queue.empty()) {
                Vertex u = queue.front();
                queue.pop_front();
                comp.push_back(u);
                for (Vertex v : g.neighbors(u)) {
                    if (inside[v] && !seen[v]) {
                        seen[v] = 1;
                        queue.push_back(v);
                    }
                }
            }
            std::sort(comp.begin(), comp.end());
            components.push_back(std::move(comp));
        }
    }
    std::sort(components.begin(), components.end(),
              [](const auto& a, const auto& b) { return a.front() < b.front(); });
    return components;
}

std::vector<Vertex> shadow(const Graph& g, const LevelPartition& p,
                           const std::vector<Vertex>& component, int level) {
    std::vector<Vertex> result;
    for (Vertex v : component)
        for (Vertex u : g.neighbors(v))
            if (p.level[u] == level) result.push_back(u);
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
}

ShadowCompleteness check_shadow_complete(const Graph& g, const LevelPartition& p) {
    ShadowCompleteness r;
    for (int level = 0; level < p.max_level(); ++level) {
        for (const auto& comp : upper_components(g, p, level)) {
            auto sh = shadow(g, p, comp, level);
            for (std::size_t i = 0; i < sh.size(); ++i) {
                for (std::size_t j = i + 1; j < sh.size(); ++j) {
                    if (!g.has_edge(sh[i], sh[j])) {
                        r.complete = false;
                        r.level = level;
                        r.component = comp;
                        r.first = sh[i];
                        r.second = sh[j];
                        return r;
                    }
                }
            }
        }
    }
    return r;
}

std::vector<Vertex> ancestor_clique(const Graph& g, const LevelPartition& p, Vertex y,
                                    int target_level) {
    if (y < 0 || y >= g.vertex_count() || p.level[y] == kOutsideLevel)
        throw std::invalid_argument("vertex lies outside the root's component");
    if (target_level < 0 || target_level > p.level[y])
        throw std::invalid_argument("ancestor level must be between 0 and level(y)");
    std::vector<Vertex> current{y};
    for (int l = p.level[y]; l > target_level; --l) {
        std::vector<Vertex> next;
        for (Vertex v : current)
            for (Vertex u : g.neighbors(v))
                if (p.level[u] == l - 1) next.push_back(u);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        current = std::move(next);
    }
    return current;
}

}  // namespace exactchroma
