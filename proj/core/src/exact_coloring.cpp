#include "exactchroma/exact_coloring.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <memory>
#include <sstream>
#include <stdexcept>

#include "exactchroma/adjacent_cliques.hpp"
#include "exactchroma/chordal.hpp"
#include "exactchroma/coloring.hpp"
#include "exactchroma/oracle.hpp"

namespace exactchroma {

long long binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    k = std::min(k, n - k);
    long long result = 1;
    for (int i = 1; i <= k; ++i) result = result * (n - k + i) / i;
    return result;
}

namespace {

void require_bound_args(int t, int p) {
    if (t < 2) throw std::invalid_argument("bound formulas require clique number t >= 2");
    if (p < 1) throw std::invalid_argument("bound formulas require p >= 1");
}

long long ipow(long long base, int exp) {
    long long r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

}  // namespace

long long bound_main1(int t, int p, int delta) {
    require_bound_args(t, p);
    long long b = binomial(t, 2) * (p + 1);
    if (p % 2 == 0) b *= delta;
    return b;
}

long long bound_main2(int t, int p, const std::vector<int>& members, int delta) {
    require_bound_args(t, p);
    if (members.empty()) throw std::invalid_argument("member set S must be nonempty");
    const int s = static_cast<int>(members.size());
    int q = 0;
    bool has_one = false;
    for (int pi : members) {
        if (pi < 1 || pi > p) throw std::invalid_argument("member set S must lie within {1..p}");
        if (pi % 2 == 0) ++q;
        if (pi == 1) has_one = true;
    }
    long long b = has_one ? t * ipow(binomial(t, 2), s - 1) : ipow(binomial(t, 2), s);
    return b * ipow(delta, q) * (p + 1);
}

long long bound_tw(int t, int p, int delta) {
    require_bound_args(t, p);
    if (p % 2 == 1) return t * binomial(p + t - 1, t) + 1;
    return (t * binomial(p + t, t) + 1) * delta;
}

int bound_largepow_exponent(int p) {
    if (p < 1) throw std::invalid_argument("exponent requires p >= 1");
    return p / 2;
}

std::vector<std::pair<Vertex, int>> injective_port_label(const Graph& g, Vertex w) {
    std::vector<std::pair<Vertex, int>> labels;
    int rank = 1;
    for (Vertex u : g.neighbors(w)) labels.emplace_back(u, rank++);
    return labels;
}

int port_label(const Graph& g, Vertex w, Vertex u) {
    auto nbrs = g.neighbors(w);
    auto it = std::lower_bound(nbrs.begin(), nbrs.end(), u);
    if (it == nbrs.end() || *it != u)
        throw std::invalid_argument("port_label: vertex is not a neighbour");
    return static_cast<int>(it - nbrs.begin()) + 1;
}

namespace {

std::vector<Dist> bfs_limited(const Graph& g, Vertex source, int cap) {
    std::vector<Dist> dist(g.vertex_count(), kUnreachable);
    std::deque<Vertex> queue{source};
    dist[source] = 0;
    while (!queue.empty()) {
        Vertex u = queue.front();
        queue.pop_front();
        if (dist[u] == cap) continue;
        for (Vertex v : g.neighbors(u)) {
            if (dist[v] == kUnreachable) {
                dist[v] = dist[u] + 1;
                queue.push_back(v);
            }
        }
    }
    return dist;
}

// Cached colouring base for one layer: the induced subgraph, its elimination
// order, and its predecessor colouring.
struct BaseLevel {
    InducedSubgraph sub;
    EliminationOrder order;
    PredecessorColoring colors;
};

BaseLevel make_base(const Graph& g, const LevelPartition& p, int level) {
    BaseLevel base;
    base.sub = level_subgraph(g, p, level);
    base.order = mcs_order(base.sub.graph);
    base.colors = predecessor_coloring(base.sub.graph, base.order);
    return base;
}

// Ancestor clique of y mapped into the base layer's local ids.
Clique local_ancestor_clique(const Graph& g, const LevelPartition& p, const BaseLevel& base,
                             Vertex y, int target_level) {
    Clique local;
    for (Vertex v : ancestor_clique(g, p, y, target_level))
        local.push_back(base.sub.to_local[v]);
    if (!is_clique(base.sub.graph, local))
        throw std::logic_error("ancestor set is not a clique; input cannot be chordal");
    return local;
}

}  // namespace

Vertex sigma_vertex(const Graph& g, const LevelPartition& p, Vertex y, Vertex mu, int k) {
    if (k < 1) throw std::invalid_argument("sigma_vertex requires k >= 1");
    if (p.level[y] == kOutsideLevel)
        throw std::invalid_argument("sigma_vertex: y outside the root's component");
    if (k == 1) {
        if (!g.has_edge(y, mu)) throw std::logic_error("sigma_vertex: y not adjacent to mu");
        return y;
    }
    auto dist = bfs_limited(g, y, k - 1);
    for (Vertex w : g.neighbors(mu))
        if (dist[w] == k - 1) return w;
    throw std::logic_error("sigma_vertex: no vertex at distance k-1 from y adjacent to mu");
}

std::vector<int> level_coloring_odd(const Graph& g, const LevelPartition& p, int level,
                                    int distance) {
    if (distance < 3 || distance % 2 == 0)
        throw std::invalid_argument("level_coloring_odd requires odd p >= 3");
    if (level < 0 || level > p.max_level())
        throw std::invalid_argument("level index out of range");
    const int k = distance / 2;
    std::vector<int> colors(p.layers[level].size(), 0);
    if (level < k) return colors;
    BaseLevel base = make_base(g, p, level - k);
    for (std::size_t i = 0; i < p.layers[level].size(); ++i) {
        Clique key = local_ancestor_clique(g, p, base, p.layers[level][i], level - k);
        colors[i] = base.colors.color[mu_of_clique(key, base.order)];
    }
    return colors;
}

std::vector<std::pair<int, int>> level_coloring_even(const Graph& g, const LevelPartition& p,
                                                     int level, int distance) {
    if (distance < 2 || distance % 2 == 1)
        throw std::invalid_argument("level_coloring_even requires even p >= 2");
    if (level < 0 || level > p.max_level())
        throw std::invalid_argument("level index out of range");
    const int k = distance / 2;
    std::vector<std::pair<int, int>> colors(p.layers[level].size(), {0, 0});
    if (level < k) return colors;
    BaseLevel base = make_base(g, p, level - k);
    for (std::size_t i = 0; i < p.layers[level].size(); ++i) {
        Vertex y = p.layers[level][i];
        Clique key = local_ancestor_clique(g, p, base, y, level - k);
        Vertex mu_local = mu_of_clique(key, base.order);
        Vertex mu = base.sub.to_global[mu_local];
        Vertex sigma = sigma_vertex(g, p, y, mu, k);
        colors[i] = {base.colors.color[mu_local], port_label(g, mu, sigma)};
    }
    return colors;
}

namespace {

Graph union_of_exact_distance_graphs(const Graph& g, const std::vector<int>& members) {
    const int n = g.vertex_count();
    std::vector<Edge> edges;
    for (Vertex u = 0; u < n; ++u) {
        auto row = bfs_distances(g, u);
        for (Vertex v = u + 1; v < n; ++v)
            if (std::find(members.begin(), members.end(), row[v]) != members.end())
                edges.emplace_back(u, v);
    }
    return from_edge_list(n, edges);
}

}  // namespace

TupleColoring combined_coloring(const Graph& g, const std::vector<int>& members, int p) {
    if (members.empty()) throw std::invalid_argument("member set S must be nonempty");
    std::vector<int> s_sorted = members;
    std::sort(s_sorted.begin(), s_sorted.end());
    s_sorted.erase(std::unique(s_sorted.begin(), s_sorted.end()), s_sorted.end());
    for (int pi : s_sorted)
        if (pi < 1 || pi > p)
            throw std::invalid_argument("member set S must lie within {1..p}");

    EliminationOrder l = mcs_order(g);
    if (!is_perfect_elimination(g, l)) {
        std::ostringstream msg;
        msg << "graph is not chordal; induced cycle:";
        if (auto hole = find_hole(g))
            for (Vertex v : *hole) msg << ' ' << v;
        throw std::invalid_argument(msg.str());
    }

    const int n = g.vertex_count();
    const int s = static_cast<int>(s_sorted.size());
    const int t = clique_number_chordal(g, l);
    const int delta = max_degree(g);
    const int stride = std::max(delta, 1);

    TupleColoring tc;
    tc.tuples.assign(n, std::vector<int>(1 + s, 0));

    for (const auto& comp : connected_components(g)) {
        LevelPartition levels = level_partition(g, comp.front());
        for (Vertex u : comp) tc.tuples[u][0] = levels.level[u] % (p + 1);

        std::vector<std::unique_ptr<BaseLevel>> bases(levels.max_level() + 1);
        auto base_at = [&](int level) -> const BaseLevel& {
            if (!bases[level]) bases[level] = std::make_unique<BaseLevel>(make_base(g, levels, level));
            return *bases[level];
        };

        for (int i = 0; i < s; ++i) {
            const int pi = s_sorted[i];
            const int k = pi / 2;
            for (int level = 0; level <= levels.max_level(); ++level) {
                const auto& layer = levels.layers[level];
                if (pi == 1) {
                    // distance-1 pairs inside a level are just its edges
                    const BaseLevel& base = base_at(level);
                    Coloring greedy = greedy_proper_coloring(base.sub.graph, base.order);
                    for (std::size_t idx = 0; idx < layer.size(); ++idx)
                        tc.tuples[layer[idx]][1 + i] = greedy.color[idx];
                    continue;
                }
                if (level < k) continue;  // no same-level pair at distance pi here
                const BaseLevel& base = base_at(level - k);
                for (Vertex y : layer) {
                    Clique key = local_ancestor_clique(g, levels, base, y, level - k);
                    Vertex mu_local = mu_of_clique(key, base.order);
                    int c = base.colors.color[mu_local];
                    if (pi % 2 == 1) {
                        tc.tuples[y][1 + i] = c;
                    } else {
                        Vertex mu = base.sub.to_global[mu_local];
                        Vertex sigma = sigma_vertex(g, levels, y, mu, k);
                        tc.tuples[y][1 + i] = c * stride + (port_label(g, mu, sigma) - 1);
                    }
                }
            }
        }
    }

    std::map<std::vector<int>, int> ids;
    tc.dense.assign(n, 0);
    for (Vertex u = 0; u < n; ++u) {
        auto [it, inserted] = ids.try_emplace(tc.tuples[u], static_cast<int>(ids.size()));
        tc.dense[u] = it->second;
    }
    tc.colors_used = static_cast<int>(ids.size());

    tc.report.t = t;
    tc.report.delta = delta;
    tc.report.p = p;
    tc.report.members = s_sorted;
    tc.report.even_members =
        static_cast<int>(std::count_if(s_sorted.begin(), s_sorted.end(),
                                       [](int pi) { return pi % 2 == 0; }));
    // bound formulas assume t >= 2 and an edge somewhere; degenerate inputs
    // are reported against the smallest valid parameters
    tc.report.bound = bound_main2(std::max(t, 2), p, s_sorted, std::max(delta, 1));
    tc.report.colors_used = tc.colors_used;
    tc.report.proper = verify_proper(union_of_exact_distance_graphs(g, s_sorted), tc.dense).proper;
    return tc;
}

TupleColoring exact_color(const Graph& g, int p) {
    if (p < 1) throw std::invalid_argument("exact_color requires p >= 1");
    TupleColoring tc = combined_coloring(g, {p}, p);
    tc.report.bound = bound_main1(std::max(tc.report.t, 2), p, std::max(tc.report.delta, 1));
    return tc;
}

}  // namespace exactchroma
