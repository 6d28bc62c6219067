#include "exactchroma/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace exactchroma {

ProperCheck verify_proper(const Graph& h, const std::vector<int>& colors) {
    if (static_cast<int>(colors.size()) != h.vertex_count())
        throw std::invalid_argument("colour vector size does not match graph");
    ProperCheck r;
    for (Vertex u = 0; u < h.vertex_count(); ++u) {
        for (Vertex v : h.neighbors(u)) {
            if (u < v && colors[u] == colors[v]) {
                r.proper = false;
                r.first = u;
                r.second = v;
                return r;
            }
        }
    }
    return r;
}

namespace {

// Backtracking k-colourability along a fixed order. Colours are introduced
// in canonical order (vertex i may use at most one colour beyond the current
// maximum), which prunes colour permutations.
bool colorable_with(const Graph& h, const std::vector<Vertex>& order, int k) {
    const int n = static_cast<int>(order.size());
    std::vector<int> color(h.vertex_count(), -1);
    std::vector<int> max_used(n + 1, -1);

    int i = 0;
    std::vector<int> next_try(n, 0);
    while (i >= 0 && i < n) {
        Vertex v = order[i];
        int limit = std::min(k - 1, max_used[i] + 1);
        int c = next_try[i];
        bool placed = false;
        for (; c <= limit; ++c) {
            bool ok = true;
            for (Vertex u : h.neighbors(v)) {
                if (color[u] == c) {
                    ok = false;
                    break;
                }
            }
            if (ok) {
                color[v] = c;
                max_used[i + 1] = std::max(max_used[i], c);
                next_try[i] = c + 1;
                placed = true;
                break;
            }
        }
        if (placed) {
            ++i;
            if (i < n) next_try[i] = 0;
        } else {
            next_try[i] = 0;
            --i;
            if (i >= 0) color[order[i]] = -1;
        }
    }
    return i == n;
}

}  // namespace

int brute_chromatic_number(const Graph& h, int max_n) {
    const int n = h.vertex_count();
    if (n > max_n)
        throw std::invalid_argument("brute_chromatic_number limited to n <= " +
                                    std::to_string(max_n));
    if (n == 0) return 0;

    std::vector<Vertex> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](Vertex a, Vertex b) {
        if (h.degree(a) != h.degree(b)) return h.degree(a) > h.degree(b);
        return a < b;
    });

    // greedy clique along the order: lower bound
    std::vector<Vertex> clique;
    for (Vertex v : order) {
        bool fits = std::all_of(clique.begin(), clique.end(),
                                [&](Vertex u) { return h.has_edge(u, v); });
        if (fits) clique.push_back(v);
    }
    int lower = static_cast<int>(clique.size());

    // greedy colouring along the order: upper bound
    std::vector<int> greedy(n, -1);
    int upper = 0;
    for (Vertex v : order) {
        std::vector<char> taken(n + 1, 0);
        for (Vertex u : h.neighbors(v))
            if (greedy[u] >= 0) taken[greedy[u]] = 1;
        int c = 0;
        while (taken[c]) ++c;
        greedy[v] = c;
        upper = std::max(upper, c + 1);
    }

    for (int k = lower; k < upper; ++k)
        if (colorable_with(h, order, k)) return k;
    return upper;
}

namespace {

bool subset_is_induced_long_cycle(const Graph& g, const std::vector<Vertex>& subset) {
    if (subset.size() < 4) return false;
    // every member has exactly two neighbours inside the subset
    std::size_t inside_edges = 0;
    for (Vertex v : subset) {
        int deg = 0;
        for (Vertex u : subset)
            if (u != v && g.has_edge(u, v)) ++deg;
        if (deg != 2) return false;
        inside_edges += deg;
    }
    if (inside_edges != 2 * subset.size()) return false;
    // connected => a single cycle rather than several short ones
    std::vector<Vertex> stack{subset[0]};
    std::vector<char> seen(g.vertex_count(), 0);
    seen[subset[0]] = 1;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex v = stack.back();
        stack.pop_back();
        for (Vertex u : subset) {
            if (!seen[u] && g.has_edge(u, v)) {
                seen[u] = 1;
                ++reached;
                stack.push_back(u);
            }
        }
    }
    return reached == subset.size();
}

}  // namespace

bool brute_is_chordal(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 12) throw std::invalid_argument("brute_is_chordal limited to n <= 12");
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
        if (__builtin_popcount(mask) < 4) continue;
        std::vector<Vertex> subset;
        for (int v = 0; v < n; ++v)
            if (mask & (1u << v)) subset.push_back(v);
        if (subset_is_induced_long_cycle(g, subset)) return false;
    }
    return true;
}

std::vector<std::vector<Dist>> brute_all_pairs(const Graph& g) {
    const int n = g.vertex_count();
    if (n > 512) throw std::invalid_argument("brute_all_pairs limited to n <= 512");
    const int words = (n + 63) / 64;
    std::vector<std::vector<std::uint64_t>> nbr(n, std::vector<std::uint64_t>(words, 0));
    for (Vertex v = 0; v < n; ++v)
        for (Vertex u : g.neighbors(v)) nbr[v][u / 64] |= 1ull << (u % 64);

    std::vector<std::vector<Dist>> dist(n, std::vector<Dist>(n, kUnreachable));
    std::vector<std::uint64_t> reach(words), grown(words);
    for (Vertex s = 0; s < n; ++s) {
        std::fill(reach.begin(), reach.end(), 0);
        reach[s / 64] |= 1ull << (s % 64);
        dist[s][s] = 0;
        for (int d = 1; d <= n; ++d) {
            // expand: everything adjacent to the current reach set
            grown = reach;
            for (Vertex v = 0; v < n; ++v) {
                if (reach[v / 64] & (1ull << (v % 64)))
                    for (int w = 0; w < words; ++w) grown[w] |= nbr[v][w];
            }
            bool changed = false;
            for (Vertex v = 0; v < n; ++v) {
                bool before = reach[v / 64] & (1ull << (v % 64));
                bool after = grown[v / 64] & (1ull << (v % 64));
                if (!before && after) {
                    dist[s][v] = d;
                    changed = true;
                }
            }
            reach = grown;
            if (!changed) break;
        }
    }
    return dist;
}

void enumerate_all_graphs(int n, const std::function<void(const Graph&)>& fn) {
    if (n < 0 || n > 7) throw std::invalid_argument("enumerate_all_graphs limited to n <= 7");
    std::vector<Edge> all_pairs;
    for (Vertex u = 0; u < n; ++u)
        for (Vertex v = u + 1; v < n; ++v) all_pairs.emplace_back(u, v);
    const std::size_t count = all_pairs.size();
    for (std::uint64_t mask = 0; mask < (1ull << count); ++mask) {
        std::vector<Edge> edges;
        for (std::size_t i = 0; i < count; ++i)
            if (mask & (1ull << i)) edges.push_back(all_pairs[i]);
        fn(from_edge_list(n, edges));
    }
}

}  // namespace exactchroma
