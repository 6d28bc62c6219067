#include "exactchroma/chordal.hpp"

#include <algorithm>
#include <deque>
#include <set>
#include <stdexcept>

namespace exactchroma {

EliminationOrder EliminationOrder::from_order(std::vector<Vertex> order) {
    EliminationOrder l;
    l.pos.assign(order.size(), -1);
    for (std::size_t i = 0; i < order.size(); ++i) {
        Vertex v = order[i];
        if (v < 0 || v >= static_cast<Vertex>(order.size()) || l.pos[v] != -1)
            throw std::invalid_argument("elimination order is not a permutation");
        l.pos[v] = static_cast<int>(i);
    }
    l.order = std::move(order);
    return l;
}

EliminationOrder mcs_order(const Graph& g) {
    const int n = g.vertex_count();
    std::vector<int> weight(n, 0);
    std::vector<bool> visited(n, false);
    // buckets[w] holds unvisited vertices of weight w; sets give the
    // smallest-id tie break for free.
    std::vector<std::set<Vertex>> buckets(n == 0 ? 1 : n + 1);
    for (Vertex v = 0; v < n; ++v) buckets[0].insert(v);
    int top = 0;

    std::vector<Vertex> order;
    order.reserve(n);
    for (int step = 0; step < n; ++step) {
        while (buckets[top].empty()) --top;
        Vertex v = *buckets[top].begin();
        buckets[top].erase(buckets[top].begin());
        visited[v] = true;
        order.push_back(v);
        for (Vertex u : g.neighbors(v)) {
            if (visited[u]) continue;
            buckets[weight[u]].erase(u);
            ++weight[u];
            buckets[weight[u]].insert(u);
            top = std::max(top, weight[u]);
        }
    }
    return EliminationOrder::from_order(std::move(order));
}

namespace {

std::vector<Vertex> earlier_neighbors(const Graph& g, const EliminationOrder& l, Vertex v) {
    std::vector<Vertex> madj;
    for (Vertex u : g.neighbors(v))
        if (l.pos[u] < l.pos[v]) madj.push_back(u);
    return madj;
}

}  // namespace

bool is_perfect_elimination(const Graph& g, const EliminationOrder& l) {
    const int n = g.vertex_count();
    if (static_cast<int>(l.order.size()) != n)
        throw std::invalid_argument("elimination order size does not match graph");
    // Classic substitution test: checking every earlier neighbour against the
    // latest one is equivalent to the full pairwise clique condition.
    for (Vertex v = 0; v < n; ++v) {
        auto madj = earlier_neighbors(g, l, v);
        if (madj.size() < 2) continue;
        Vertex latest = madj.front();
        for (Vertex u : madj)
            if (l.pos[u] > l.pos[latest]) latest = u;
        for (Vertex u : madj)
            if (u != latest && !g.has_edge(u, latest)) return false;
    }
    return true;
}

bool is_chordal(const Graph& g) { return is_perfect_elimination(g, mcs_order(g)); }

int clique_number_chordal(const Graph& g, const EliminationOrder& l) {
    if (!is_perfect_elimination(g, l))
        throw std::invalid_argument("order is not a perfect elimination ordering");
    int best = 0;
    for (Vertex v = 0; v < g.vertex_count(); ++v)
        best = std::max(best, 1 + static_cast<int>(earlier_neighbors(g, l, v).size()));
    return best;
}

Coloring greedy_proper_coloring(const Graph& g, const EliminationOrder& l) {
    if (!is_perfect_elimination(g, l))
        throw std::invalid_argument("order is not a perfect elimination ordering");
    const int n = g.vertex_count();
    Coloring result;
    result.color.assign(n, -1);
    std::vector<char> taken;
    for (Vertex v : l.order) {
        taken.assign(n + 1, 0);
        for (Vertex u : g.neighbors(v))
            if (result.color[u] >= 0) taken[result.color[u]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        result.color[v] = c;
        result.palette = std::max(result.palette, c + 1);
    }
    return result;
}

std::optional<std::vector<Vertex>> find_hole(const Graph& g) {
    if (is_chordal(g)) return std::nullopt;
    const int n = g.vertex_count();
    // A hole c1..cr yields a non-adjacent pair (c1,c3) in N(c2) joined by a
    // path avoiding N[c2]; scanning all such triples is therefore complete.
    std::vector<char> blocked(n, 0);
    for (Vertex v = 0; v < n; ++v) {
        auto nbrs = g.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i) {
            for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
                Vertex a = nbrs[i], b = nbrs[j];
                if (g.has_edge(a, b)) continue;
                std::fill(blocked.begin(), blocked.end(), 0);
                blocked[v] = 1;
                for (Vertex w : nbrs) blocked[w] = 1;
                blocked[a] = blocked[b] = 0;
                // shortest a-b path in G minus N[v]\{a,b}; shortest => induced
                std::vector<Vertex> parent(n, -1);
                std::deque<Vertex> queue{a};
                parent[a] = a;
                while (!queue.empty() && parent[b] == -1) {
                    Vertex u = queue.front();
                    queue.pop_front();
                    for (Vertex w : g.neighbors(u)) {
                        if (blocked[w] || parent[w] != -1) continue;
                        parent[w] = u;
                        queue.push_back(w);
                    }
                }
                if (parent[b] == -1) continue;
                std::vector<Vertex> cycle{v};
                for (Vertex u = b; u != a; u = parent[u]) cycle.push_back(u);
                cycle.push_back(a);
                std::reverse(cycle.begin() + 1, cycle.end());
                return cycle;
            }
        }
    }
    throw std::logic_error("non-chordal graph without a recoverable hole");
}

}  // namespace exactchroma
