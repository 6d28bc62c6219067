#include "exactchroma/adjacent_cliques.hpp"

#include <algorithm>
#include <stdexcept>

namespace exactchroma {

bool is_clique(const Graph& g, const Clique& k) {
    for (std::size_t i = 0; i < k.size(); ++i) {
        Vertex v = k[i];
        if (v < 0 || v >= g.vertex_count()) return false;
        for (std::size_t j = i + 1; j < k.size(); ++j)
            if (k[j] == v || !g.has_edge(v, k[j])) return false;
    }
    return true;
}

PredecessorColoring predecessor_coloring(const Graph& g, const EliminationOrder& l) {
    if (!is_perfect_elimination(g, l))
        throw std::invalid_argument("order is not a perfect elimination ordering");
    const int n = g.vertex_count();
    PredecessorColoring result;
    result.order = l;
    result.color.assign(n, -1);
    std::vector<char> taken;
    auto forbid = [&](Vertex u) {
        if (result.color[u] >= 0) taken[result.color[u]] = 1;
    };
    for (Vertex v : l.order) {
        taken.assign(n + 1, 0);
        for (Vertex u : g.neighbors(v)) {
            if (l.pos[u] >= l.pos[v]) continue;
            forbid(u);
            for (Vertex w : g.neighbors(u))
                if (l.pos[w] < l.pos[u]) forbid(w);
        }
        int c = 0;
        while (taken[c]) ++c;
        result.color[v] = c;
        result.palette = std::max(result.palette, c + 1);
    }
    return result;
}

Vertex mu_of_clique(const Clique& k, const EliminationOrder& l) {
    if (k.empty()) throw std::invalid_argument("mu of an empty clique is undefined");
    Vertex best = k.front();
    for (Vertex v : k)
        if (l.pos[v] < l.pos[best]) best = v;
    return best;
}

int clique_color(const Graph& g, const PredecessorColoring& a, const Clique& k) {
    if (!is_clique(g, k)) throw std::invalid_argument("clique_color: input is not a clique");
    return a.color[mu_of_clique(k, a.order)];
}

bool cliques_adjacent(const Graph& g, const Clique& k1, const Clique& k2) {
    if (!is_clique(g, k1) || !is_clique(g, k2))
        throw std::invalid_argument("cliques_adjacent: input is not a clique");
    for (Vertex u : k1)
        for (Vertex v : k2)
            if (u == v) return false;
    for (Vertex u : k1)
        for (Vertex v : k2)
            if (g.has_edge(u, v)) return true;
    return false;
}

Graph ac_graph(const Graph& g, const std::vector<Clique>& family) {
    for (const Clique& k : family)
        if (!is_clique(g, k)) throw std::invalid_argument("ac_graph: family member is not a clique");
    std::vector<Edge> edges;
    for (std::size_t i = 0; i < family.size(); ++i)
        for (std::size_t j = i + 1; j < family.size(); ++j)
            if (cliques_adjacent(g, family[i], family[j]))
                edges.emplace_back(static_cast<Vertex>(i), static_cast<Vertex>(j));
    return from_edge_list(static_cast<int>(family.size()), edges);
}

}  // namespace exactchroma
