#include "exactchroma/face_fill.hpp"

#include <algorithm>
#include <stdexcept>

namespace exactchroma {

FaceFillGadget face_fill_gadget(int k) {
    if (k < 4) throw std::invalid_argument("face fill gadget requires k >= 4");
    FaceFillGadget gadget;
    gadget.k = k;
    const int inner_count = k - 1;
    auto outer_id = [](int i) { return static_cast<Vertex>(i); };
    auto inner_id = [k](int i) { return static_cast<Vertex>(k + i); };
    for (int i = 0; i < k; ++i) gadget.outer.push_back(outer_id(i));
    for (int i = 0; i < inner_count; ++i) gadget.inner.push_back(inner_id(i));

    std::vector<Edge> edges;
    for (int i = 0; i < k; ++i) edges.emplace_back(outer_id(i), outer_id((i + 1) % k));
    // inner edge e_i = {w_{i-1}, w_{i mod (k-1)}} for i = 1..k-1
    for (int i = 1; i <= inner_count; ++i)
        edges.emplace_back(inner_id(i - 1), inner_id(i % inner_count));
    for (int i = 1; i <= inner_count; ++i) {
        edges.emplace_back(outer_id(i), inner_id(i - 1));
        edges.emplace_back(outer_id(i), inner_id(i % inner_count));
    }
    // w_0 is the common endvertex of e_1 and e_{k-1}
    edges.emplace_back(outer_id(0), inner_id(0));
    gadget.graph = from_edge_list(2 * k - 1, edges);
    return gadget;
}

bool verify_distance_preservation(const FaceFillGadget& gadget) {
    const int k = gadget.k;
    for (int i = 0; i < k; ++i) {
        auto dist = bfs_distances(gadget.graph, gadget.outer[i]);
        for (int j = 0; j < k; ++j) {
            int around = std::abs(i - j);
            int on_cycle = std::min(around, k - around);
            if (dist[gadget.outer[j]] != on_cycle) return false;
        }
    }
    return true;
}

Graph patch_cut_vertex(const Graph& g, Vertex y, const std::vector<Vertex>& cyclic_order) {
    if (y < 0 || y >= g.vertex_count()) throw std::invalid_argument("patch: vertex out of range");
    auto nbrs = g.neighbors(y);
    if (nbrs.size() < 2) throw std::invalid_argument("patch requires degree >= 2");
    std::vector<Vertex> sorted_order = cyclic_order;
    std::sort(sorted_order.begin(), sorted_order.end());
    if (!std::equal(sorted_order.begin(), sorted_order.end(), nbrs.begin(), nbrs.end()))
        throw std::invalid_argument("cyclic order must be a permutation of N(y)");

    const int deg = static_cast<int>(cyclic_order.size());
    std::vector<Edge> edges = g.edges();
    Vertex next = g.vertex_count();
    // with two neighbours the wrap-around pair repeats the first one
    const int pairs = deg == 2 ? 1 : deg;
    for (int i = 0; i < pairs; ++i) {
        Vertex a = cyclic_order[i];
        Vertex b = cyclic_order[(i + 1) % deg];
        if (g.has_edge(a, b)) continue;
        edges.emplace_back(a, next);
        edges.emplace_back(next, b);
        ++next;
    }
    return from_edge_list(next, edges);
}

}  // namespace exactchroma
