#include "exactchroma/property_suites.hpp"

#include <algorithm>
#include <sstream>

#include "exactchroma/chordal.hpp"
#include "exactchroma/exact_coloring.hpp"
#include "exactchroma/leveling.hpp"

namespace exactchroma {

namespace {

std::string join(const std::vector<Vertex>& vs) {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
    out << '}';
    return out.str();
}

std::string not_chordal_witness(const Graph& g) {
    std::ostringstream out;
    out << "input is not chordal";
    if (auto hole = find_hole(g)) out << "; induced cycle " << join(*hole);
    return out.str();
}

}  // namespace

SuiteResult shadow_suite(const Graph& g) {
    SuiteResult r;
    r.name = "shadow";
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        LevelPartition p = level_partition(g, root);
        auto check = check_shadow_complete(g, p);
        if (!check.complete) {
            std::ostringstream out;
            out << "root " << root << ", level " << check.level << ", component "
                << join(check.component) << ": shadow vertices " << check.first << " and "
                << check.second << " are not adjacent";
            r.pass = false;
            r.witness = out.str();
            return r;
        }
    }
    if (!is_chordal(g)) return r;
    const int t = clique_number_chordal(g, mcs_order(g));
    if (t < 2) return r;
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        LevelPartition p = level_partition(g, root);
        for (int level = 0; level <= p.max_level(); ++level) {
            auto sub = level_subgraph(g, p, level);
            EliminationOrder l = mcs_order(sub.graph);
            if (!is_perfect_elimination(sub.graph, l)) {
                r.pass = false;
                r.witness = "root " + std::to_string(root) + ": level " + std::to_string(level) +
                            " subgraph is not chordal";
                return r;
            }
            int sub_t = clique_number_chordal(sub.graph, l);
            if (sub_t >= t) {
                r.pass = false;
                r.witness = "root " + std::to_string(root) + ": level " + std::to_string(level) +
                            " subgraph has clique number " + std::to_string(sub_t) +
                            " >= " + std::to_string(t);
                return r;
            }
        }
    }
    return r;
}

SuiteResult ancestor_suite(const Graph& g) {
    SuiteResult r;
    r.name = "ancestors";
    if (!is_chordal(g)) {
        r.pass = false;
        r.witness = not_chordal_witness(g);
        return r;
    }
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        LevelPartition p = level_partition(g, root);
        for (Vertex y = 0; y < g.vertex_count(); ++y) {
            if (p.level[y] == kOutsideLevel) continue;
            for (int target = 0; target < p.level[y]; ++target) {
                auto ancestors = ancestor_clique(g, p, y, target);
                if (!is_clique(g, ancestors)) {
                    std::ostringstream out;
                    out << "root " << root << ", vertex " << y << ", level " << target
                        << ": ancestor set " << join(ancestors) << " is not a clique";
                    r.pass = false;
                    r.witness = out.str();
                    return r;
                }
            }
        }
    }
    return r;
}

SuiteResult path_suite(const Graph& g) {
    SuiteResult r;
    r.name = "path";
    if (!is_chordal(g)) {
        r.pass = false;
        r.witness = not_chordal_witness(g);
        return r;
    }
    DistanceOracle oracle(g);
    for (Vertex root = 0; root < g.vertex_count(); ++root) {
        LevelPartition p = level_partition(g, root);
        for (Vertex u = 0; u < g.vertex_count(); ++u) {
            if (p.level[u] == kOutsideLevel) continue;
            for (Vertex v = u + 1; v < g.vertex_count(); ++v) {
                if (p.level[v] != p.level[u]) continue;
                Dist d = oracle.distance(u, v);
                if (d < 2) continue;
                const int k = d / 2;
                auto ku = ancestor_clique(g, p, u, p.level[u] - k);
                auto kv = ancestor_clique(g, p, v, p.level[v] - k);
                std::vector<Vertex> common;
                std::set_intersection(ku.begin(), ku.end(), kv.begin(), kv.end(),
                                      std::back_inserter(common));
                bool intersect = !common.empty();
                bool adjacent = !intersect && cliques_adjacent(g, ku, kv);
                bool ok = d % 2 == 1 ? adjacent : (adjacent || intersect);
                if (!ok) {
                    std::ostringstream out;
                    out << "root " << root << ", pair (" << u << "," << v << ") at distance "
                        << d << ": ancestor cliques " << join(ku) << " and " << join(kv)
                        << (d % 2 == 1 ? " are not disjoint-adjacent" : " neither adjacent nor intersecting");
                    r.pass = false;
                    r.witness = out.str();
                    return r;
                }
            }
        }
    }
    return r;
}

std::vector<Clique> small_clique_family(const Graph& g) {
    std::vector<Clique> family;
    for (Vertex v = 0; v < g.vertex_count(); ++v) family.push_back({v});
    for (const auto& [u, v] : g.edges()) family.push_back({u, v});
    for (Vertex u = 0; u < g.vertex_count(); ++u)
        for (Vertex v : g.neighbors(u)) {
            if (v <= u) continue;
            for (Vertex w : g.neighbors(v))
                if (w > v && g.has_edge(u, w)) family.push_back({u, v, w});
        }
    return family;
}

SuiteResult adjacent_cliques_suite(const Graph& g) {
    SuiteResult r;
    r.name = "cliques";
    EliminationOrder l = mcs_order(g);
    if (!is_perfect_elimination(g, l)) {
        r.pass = false;
        r.witness = not_chordal_witness(g);
        return r;
    }
    const int t = clique_number_chordal(g, l);
    PredecessorColoring a = predecessor_coloring(g, l);
    if (a.palette > binomial(t + 1, 2)) {
        r.pass = false;
        r.witness = "predecessor colouring uses " + std::to_string(a.palette) +
                    " colours, above C(t+1,2) = " + std::to_string(binomial(t + 1, 2));
        return r;
    }
    auto family = small_clique_family(g);
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            if (!cliques_adjacent(g, family[i], family[j])) continue;
            if (clique_color(g, a, family[i]) == clique_color(g, a, family[j])) {
                std::ostringstream out;
                out << "adjacent cliques " << join(family[i]) << " and " << join(family[j])
                    << " share colour " << clique_color(g, a, family[i]);
                r.pass = false;
                r.witness = out.str();
                return r;
            }
        }
    }
    return r;
}

SuiteResult intersecting_cliques_suite(const Graph& g) {
    SuiteResult r;
    r.name = "intersect";
    EliminationOrder l = mcs_order(g);
    if (!is_perfect_elimination(g, l)) {
        r.pass = false;
        r.witness = not_chordal_witness(g);
        return r;
    }
    PredecessorColoring a = predecessor_coloring(g, l);
    auto family = small_clique_family(g);
    for (std::size_t i = 0; i < family.size(); ++i) {
        for (std::size_t j = i + 1; j < family.size(); ++j) {
            std::vector<Vertex> common;
            std::set_intersection(family[i].begin(), family[i].end(), family[j].begin(),
                                  family[j].end(), std::back_inserter(common));
            if (common.empty()) continue;
            if (clique_color(g, a, family[i]) != clique_color(g, a, family[j])) continue;
            if (mu_of_clique(family[i], l) != mu_of_clique(family[j], l)) {
                std::ostringstream out;
                out << "intersecting cliques " << join(family[i]) << " and " << join(family[j])
                    << " share a colour but have different minima";
                r.pass = false;
                r.witness = out.str();
                return r;
            }
        }
    }
    return r;
}

std::vector<SuiteResult> run_all_suites(const Graph& g) {
    return {shadow_suite(g), ancestor_suite(g), path_suite(g), adjacent_cliques_suite(g), intersecting_cliques_suite(g)};
}

}  // namespace exactchroma
