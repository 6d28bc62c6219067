// Acceptance suite: every release-gating property in one binary, one
// PASS/FAIL line per criterion. Exit code 0 iff everything passes.
//
// Usage: acceptance_tests [path-to-exactchroma-cli]
// The CLI path (argv[1] or EXACTCHROMA_CLI) is needed only for the
// byte-determinism criterion.

#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "exactchroma/chordal.hpp"
#include "exactchroma/exact_coloring.hpp"
#include "exactchroma/face_fill.hpp"
#include "exactchroma/generators.hpp"
#include "exactchroma/graph.hpp"
#include "exactchroma/property_suites.hpp"
#include "exactchroma/oracle.hpp"

using namespace exactchroma;

namespace {

struct Criterion {
    std::string label;
    std::function<bool(std::string&)> run;
};

// --- corpora ---------------------------------------------------------------

std::vector<Graph> ktree_corpus_200() {
    std::vector<Graph> corpus;
    for (int i = 0; i < 200; ++i) {
        int k = i % 4 + 1;
        int n = 5 + (i * 11) % 56;  // 5..60
        corpus.push_back(random_ktree(n, k, 1000ull * i + k));
    }
    return corpus;
}

std::vector<Graph> small_chordal_corpus() {
    std::vector<Graph> corpus;
    for (int k = 1; k <= 3; ++k)
        for (int n = 5; n <= 12; ++n) corpus.push_back(random_ktree(n, k, 100ull * n + k));
    for (int n = 6; n <= 12; n += 2)
        for (std::uint64_t seed = 1; seed <= 2; ++seed)
            corpus.push_back(random_interval_graph(n, 7000 + 10 * n + seed));
    for (int n = 4; n <= 12; n += 2) corpus.push_back(triangle_strip(n));
    corpus.push_back(path_graph(5));
    corpus.push_back(path_graph(12));
    corpus.push_back(star_graph(7));
    corpus.push_back(star_graph(12));
    corpus.push_back(complete_dary_tree(2, 2));
    corpus.push_back(complete_dary_tree(3, 2));
    return corpus;
}

// --- criteria ---------------------------------------------------------------

bool check_bounds(const std::vector<Graph>& corpus, const std::vector<int>& distances,
                  bool degree_bearing, std::string& detail) {
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        const Graph& g = corpus[i];
        int t = clique_number_chordal(g, mcs_order(g));
        for (int p : distances) {
            TupleColoring tc = exact_color(g, p);
            long long bound = binomial(t, 2) * (p + 1);
            if (degree_bearing) bound *= max_degree(g);
            bool proper = verify_proper(exact_distance_graph(g, p), tc.dense).proper;
            if (!tc.report.proper || !proper || tc.report.colors_used > bound) {
                std::ostringstream out;
                out << "graph " << i << " (n=" << g.vertex_count() << ", t=" << t << "), p=" << p
                    << ": colors_used=" << tc.report.colors_used << ", bound=" << bound
                    << ", proper=" << proper;
                detail = out.str();
                return false;
            }
        }
    }
    return true;
}

bool criterion_odd_bound(std::string& detail) {
    return check_bounds(ktree_corpus_200(), {3, 5, 7}, false, detail);
}

bool criterion_even_bound(std::string& detail) {
    return check_bounds(ktree_corpus_200(), {2, 4, 6}, true, detail);
}

bool criterion_tightness(std::string& detail) {
    for (const Graph& g : small_chordal_corpus()) {
        if (g.vertex_count() > 12) continue;
        for (int p = 1; p <= 5; ++p) {
            TupleColoring tc = exact_color(g, p);
            int chi = brute_chromatic_number(exact_distance_graph(g, p));
            if (!(chi <= tc.report.colors_used && tc.report.colors_used <= tc.report.bound)) {
                std::ostringstream out;
                out << "n=" << g.vertex_count() << ", p=" << p << ": chi=" << chi
                    << ", colors_used=" << tc.report.colors_used << ", bound=" << tc.report.bound;
                detail = out.str();
                return false;
            }
        }
    }
    return true;
}

bool criterion_combined(std::string& detail) {
    std::vector<std::vector<int>> subsets;
    for (int mask = 1; mask < (1 << 7); ++mask) {
        if (__builtin_popcount(mask) > 3) continue;
        std::vector<int> members;
        for (int bit = 0; bit < 7; ++bit)
            if (mask & (1 << bit)) members.push_back(bit + 1);
        subsets.push_back(members);
    }
    for (const Graph& g : small_chordal_corpus()) {
        int t = clique_number_chordal(g, mcs_order(g));
        for (const auto& members : subsets) {
            int p = members.back();
            TupleColoring tc = combined_coloring(g, members, p);
            long long bound = bound_main2(std::max(t, 2), p, members, std::max(max_degree(g), 1));
            std::vector<Graph> layers;
            for (int pi : members) layers.push_back(exact_distance_graph(g, pi));
            bool proper = verify_proper(union_graphs(layers), tc.dense).proper;
            if (!proper || !tc.report.proper || tc.report.colors_used > bound) {
                std::ostringstream out;
                out << "n=" << g.vertex_count() << ", S={";
                for (int pi : members) out << pi << ' ';
                out << "}: colors_used=" << tc.report.colors_used << ", bound=" << bound
                    << ", proper=" << proper;
                detail = out.str();
                return false;
            }
        }
    }
    return true;
}

bool criterion_lemmas(std::string& detail) {
    std::vector<Graph> corpus = small_chordal_corpus();
    corpus.push_back(random_ktree(40, 3, 404));
    corpus.push_back(random_ktree(36, 4, 505));
    corpus.push_back(random_interval_graph(30, 606));
    for (std::size_t i = 0; i < corpus.size(); ++i) {
        for (const SuiteResult& r : run_all_suites(corpus[i])) {
            if (!r.pass) {
                detail = "graph " + std::to_string(i) + ", suite " + r.name + ": " + r.witness;
                return false;
            }
        }
    }
    SuiteResult c4 = shadow_suite(cycle_graph(4));
    if (c4.pass || c4.witness.empty()) {
        detail = "C4 should fail the shadow suite with a witness";
        return false;
    }
    return true;
}

bool criterion_chordality_crosscheck(std::string& detail) {
    bool ok = true;
    std::string local;
    for (int n = 1; n <= 6 && ok; ++n) {
        enumerate_all_graphs(n, [&](const Graph& g) {
            if (is_chordal(g) != brute_is_chordal(g)) {
                ok = false;
                local = "disagreement on an n=" + std::to_string(n) + " graph";
            }
        });
    }
    if (!ok) {
        detail = local;
        return false;
    }
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
        int n = 7 + static_cast<int>(seed % 4);
        std::mt19937_64 rng(seed * 2654435761ull + 17);
        std::vector<Edge> edges;
        for (Vertex u = 0; u < n; ++u)
            for (Vertex v = u + 1; v < n; ++v)
                if (rng() % 100 < 35) edges.emplace_back(u, v);
        Graph g = from_edge_list(n, edges);
        if (is_chordal(g) != brute_is_chordal(g)) {
            detail = "disagreement on random graph seed " + std::to_string(seed);
            return false;
        }
    }
    return true;
}

bool criterion_face_fill(std::string& detail) {
    for (int k = 4; k <= 32; ++k) {
        if (!verify_distance_preservation(face_fill_gadget(k))) {
            detail = "distances not preserved for k=" + std::to_string(k);
            return false;
        }
    }
    FaceFillGadget g7 = face_fill_gadget(7);
    auto induces_cycle = [&](const std::vector<Vertex>& vs) {
        const int len = static_cast<int>(vs.size());
        for (int i = 0; i < len; ++i)
            for (int j = i + 1; j < len; ++j) {
                bool consecutive = j - i == 1 || (i == 0 && j == len - 1);
                if (g7.graph.has_edge(vs[i], vs[j]) != consecutive) return false;
            }
        return true;
    };
    if (g7.graph.vertex_count() != 13 || g7.graph.edge_count() != 26 ||
        !induces_cycle(g7.outer) || !induces_cycle(g7.inner) || g7.outer.size() != 7 ||
        g7.inner.size() != 6) {
        detail = "k=7 gadget does not match the reference configuration";
        return false;
    }
    return true;
}

// --- determinism over the CLI ------------------------------------------------

std::string g_cli_path;

std::string slurp(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

bool run_twice_identical(const std::string& args, std::string& detail) {
    const std::string base = "/tmp/exactchroma_accept_" + std::to_string(::getpid());
    const std::string out1 = base + "_1.out";
    const std::string out2 = base + "_2.out";
    for (const std::string& out : {out1, out2}) {
        std::string cmd = g_cli_path + " " + args + " > " + out + " 2>/dev/null";
        if (std::system(cmd.c_str()) < 0) {
            detail = "failed to run: " + cmd;
            return false;
        }
    }
    std::string a = slurp(out1), b = slurp(out2);
    std::remove(out1.c_str());
    std::remove(out2.c_str());
    if (a.empty()) {
        detail = "no output from: " + args;
        return false;
    }
    if (a != b) {
        detail = "outputs differ for: " + args;
        return false;
    }
    return true;
}

bool criterion_determinism(std::string& detail) {
    if (g_cli_path.empty()) {
        detail = "CLI path not given (argv[1] or EXACTCHROMA_CLI)";
        return false;
    }
    const std::string base = "/tmp/exactchroma_accept_" + std::to_string(::getpid());
    const std::string ktree_file = base + "_ktree.el";
    const std::string strip_file = base + "_strip.el";
    write_edge_list_file(random_ktree(20, 3, 99), ktree_file);
    write_edge_list_file(triangle_strip(9), strip_file);

    bool ok = run_twice_identical("gen --model ktree --n 30 --k 3 --seed 7", detail) &&
              run_twice_identical("gen --model interval --n 25 --seed 11", detail) &&
              run_twice_identical("color --p 3 " + strip_file, detail) &&
              run_twice_identical("color --p 5 --set 3,5 " + ktree_file, detail) &&
              run_twice_identical("color --p 4 " + ktree_file, detail) &&
              run_twice_identical("chi --p 2 " + strip_file, detail) &&
              run_twice_identical("props --suite all " + ktree_file, detail) &&
              run_twice_identical("facefill --k 7 --check", detail);
    std::remove(ktree_file.c_str());
    std::remove(strip_file.c_str());
    return ok;
}

}  // namespace

int main(int argc, char** argv) {
    if (argc > 1) {
        g_cli_path = argv[1];
    } else if (const char* env = std::getenv("EXACTCHROMA_CLI")) {
        g_cli_path = env;
    }

    std::vector<Criterion> criteria{
        {"1. odd-p bound soundness on 200 k-trees (p in {3,5,7})", criterion_odd_bound},
        {"2. even-p bound soundness on 200 k-trees (p in {2,4,6})", criterion_even_bound},
        {"3. exact chromatic numbers below construction sizes (n<=12, p<=5)",
         criterion_tightness},
        {"4. combined colourings for every S in {1..7}, |S|<=3", criterion_combined},
        {"5. shadow/ancestor/path/adjacent-cliques suite on the corpus", criterion_lemmas},
        {"6. chordality cross-check (n<=6 exhaustive, 1000 random n<=10)",
         criterion_chordality_crosscheck},
        {"7. face-fill gadget distances for k in 4..32", criterion_face_fill},
        {"8. byte-identical CLI output on repeated runs", criterion_determinism},
    };

    bool all_pass = true;
    for (const Criterion& c : criteria) {
        std::string detail;
        auto start = std::chrono::steady_clock::now();
        bool pass = c.run(detail);
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - start)
                      .count();
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << c.label << " (" << ms << " ms)";
        if (!pass && !detail.empty()) std::cout << " -- " << detail;
        std::cout << "\n";
        all_pass = all_pass && pass;
    }
    return all_pass ? 0 : 1;
}
