// exactchroma CLI: generate chordal test graphs, colour their exact
// distance-p graphs, compare against exact chromatic numbers, and run the
// structural property suites.
//
// Exit codes: 0 pass, 1 property or bound violation, 2 usage/input error.
// Machine-readable output (JSON or edge lists) goes to stdout, diagnostics
// and timing to stderr.

#include <chrono>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "exactchroma/chordal.hpp"
#include "exactchroma/exact_coloring.hpp"
#include "exactchroma/face_fill.hpp"
#include "exactchroma/generators.hpp"
#include "exactchroma/graph.hpp"
#include "exactchroma/property_suites.hpp"
#include "exactchroma/oracle.hpp"

namespace {

using nlohmann::ordered_json;

constexpr int kExitPass = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

std::string fnv1a_digest(const std::string& bytes) {
    std::uint64_t hash = 1469598103934665603ull;
    for (unsigned char c : bytes) {
        hash ^= c;
        hash *= 1099511628211ull;
    }
    std::ostringstream out;
    out << std::hex << hash;
    return out.str();
}

struct LoadedGraph {
    exactchroma::Graph graph;
    std::string digest;
};

LoadedGraph load_graph(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    std::string bytes = buffer.str();
    std::istringstream stream(bytes);
    return {exactchroma::parse_edge_list(stream), fnv1a_digest(bytes)};
}

class Stopwatch {
public:
    explicit Stopwatch(std::string label) : label_(std::move(label)) {}
    ~Stopwatch() {
        auto elapsed = std::chrono::steady_clock::now() - start_;
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(elapsed).count();
        std::cerr << "exactchroma: " << label_ << " finished in " << ms << " ms\n";
    }

private:
    std::string label_;
    std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

int run_gen(const exactchroma::GenSpec& spec, const std::string& out_path) {
    Stopwatch timer("gen");
    exactchroma::Graph g = exactchroma::generate(spec);
    if (out_path.empty()) {
        std::cout << exactchroma::write_edge_list(g);
        return kExitPass;
    }
    exactchroma::write_edge_list_file(g, out_path);
    ordered_json j;
    j["command"] = "gen";
    j["model"] = spec.model;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["seed"] = spec.seed;
    j["out"] = out_path;
    std::cout << j.dump() << "\n";
    return kExitPass;
}

int run_color(const std::string& path, int p, std::vector<int> members) {
    Stopwatch timer("color");
    LoadedGraph input = load_graph(path);
    if (members.empty()) members = {p};
    for (int pi : members)
        if (pi < 1 || pi > p)
            throw std::invalid_argument("--set members must lie within {1..p}");
    exactchroma::TupleColoring tc = exactchroma::combined_coloring(input.graph, members, p);
    if (members == std::vector<int>{p})
        tc.report.bound = exactchroma::bound_main1(std::max(tc.report.t, 2), p,
                                                   std::max(tc.report.delta, 1));
    std::cout << exactchroma::coloring_report_json(tc);
    bool ok = tc.report.proper && tc.report.colors_used <= tc.report.bound;
    return ok ? kExitPass : kExitViolation;
}

int run_chi(const std::string& path, int p, int max_n) {
    Stopwatch timer("chi");
    LoadedGraph input = load_graph(path);
    const exactchroma::Graph& g = input.graph;
    if (g.vertex_count() > max_n)
        throw std::invalid_argument("graph has " + std::to_string(g.vertex_count()) +
                                    " vertices, above --max-n " + std::to_string(max_n));
    exactchroma::Graph h = exactchroma::exact_distance_graph(g, p);
    int chi = exactchroma::brute_chromatic_number(h, max_n);

    ordered_json j;
    j["command"] = "chi";
    j["input"] = input.digest;
    j["n"] = g.vertex_count();
    j["p"] = p;
    j["chi"] = chi;
    bool chordal = exactchroma::is_chordal(g);
    j["chordal"] = chordal;
    bool ok = true;
    if (chordal) {
        int t = exactchroma::clique_number_chordal(g, exactchroma::mcs_order(g));
        long long bound =
            exactchroma::bound_main1(std::max(t, 2), p,
                                     std::max(exactchroma::max_degree(g), 1));
        ok = chi <= bound;
        j["t"] = t;
        j["bound"] = bound;
        j["ok"] = ok;
    }
    std::cout << j.dump() << "\n";
    return ok ? kExitPass : kExitViolation;
}

int run_props(const std::string& path, const std::string& suite) {
    Stopwatch timer("props");
    LoadedGraph input = load_graph(path);
    std::vector<exactchroma::SuiteResult> results;
    if (suite == "all") {
        results = exactchroma::run_all_suites(input.graph);
    } else if (suite == "shadow") {
        results = {exactchroma::shadow_suite(input.graph)};
    } else if (suite == "ancestors") {
        results = {exactchroma::ancestor_suite(input.graph)};
    } else if (suite == "path") {
        results = {exactchroma::path_suite(input.graph)};
    } else if (suite == "cliques") {
        results = {exactchroma::adjacent_cliques_suite(input.graph)};
    } else if (suite == "intersect") {
        results = {exactchroma::intersecting_cliques_suite(input.graph)};
    } else {
        throw std::invalid_argument("unknown suite: " + suite);
    }

    ordered_json j;
    j["command"] = "props";
    j["input"] = input.digest;
    j["suite"] = suite;
    bool pass = true;
    ordered_json detail = ordered_json::array();
    for (const auto& r : results) {
        ordered_json entry;
        entry["name"] = r.name;
        entry["pass"] = r.pass;
        if (!r.pass) entry["witness"] = r.witness;
        detail.push_back(entry);
        pass = pass && r.pass;
    }
    j["results"] = detail;
    j["pass"] = pass;
    std::cout << j.dump() << "\n";
    return pass ? kExitPass : kExitViolation;
}

int run_facefill(int k, bool check) {
    Stopwatch timer("facefill");
    exactchroma::FaceFillGadget gadget = exactchroma::face_fill_gadget(k);
    if (!check) {
        std::cout << exactchroma::write_edge_list(gadget.graph);
        return kExitPass;
    }
    bool preserved = exactchroma::verify_distance_preservation(gadget);
    ordered_json j;
    j["command"] = "facefill";
    j["k"] = k;
    j["n"] = gadget.graph.vertex_count();
    j["m"] = gadget.graph.edge_count();
    j["distance_preserving"] = preserved;
    j["pass"] = preserved;
    std::cout << j.dump() << "\n";
    return preserved ? kExitPass : kExitViolation;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"colourings and verification for exact distance graphs of chordal graphs"};
    app.require_subcommand(1);

    exactchroma::GenSpec spec;
    std::string gen_out;
    CLI::App* gen = app.add_subcommand("gen", "generate a graph in edge-list format");
    gen->add_option("--model", spec.model, "ktree | interval | dary | path | cycle | star | strip")
        ->required();
    gen->add_option("--n", spec.n, "vertex count");
    gen->add_option("--k", spec.k, "clique parameter for ktree");
    gen->add_option("--delta", spec.delta, "branching for dary");
    gen->add_option("--radius", spec.radius, "depth for dary");
    gen->add_option("--seed", spec.seed, "64-bit seed");
    gen->add_option("--out", gen_out, "output file (stdout when omitted)");

    std::string color_file;
    int color_p = 0;
    std::vector<int> color_set;
    CLI::App* color = app.add_subcommand("color", "colour the exact distance graphs of a chordal graph");
    color->add_option("--p", color_p, "distance cap")->required();
    color->add_option("--set", color_set, "distance set S (default {p})")->delimiter(',');
    color->add_option("file", color_file, "edge-list input")->required();

    std::string chi_file;
    int chi_p = 0;
    int chi_max_n = 16;
    CLI::App* chi = app.add_subcommand("chi", "exact chromatic number of the exact distance graph");
    chi->add_option("--p", chi_p, "distance")->required();
    chi->add_option("--max-n", chi_max_n, "size limit for the exact search");
    chi->add_option("file", chi_file, "edge-list input")->required();

    std::string props_file;
    std::string props_suite;
    CLI::App* props = app.add_subcommand("props", "run a structural property suite");
    props->add_option("--suite", props_suite, "shadow | ancestors | path | cliques | intersect | all")->required();
    props->add_option("file", props_file, "edge-list input")->required();

    int facefill_k = 0;
    bool facefill_check = false;
    CLI::App* facefill = app.add_subcommand("facefill", "cycle-in-face gadget");
    facefill->add_option("--k", facefill_k, "outer cycle length")->required();
    facefill->add_flag("--check", facefill_check, "verify distance preservation");

    try {
        app.parse(argc, argv);
        if (gen->parsed()) return run_gen(spec, gen_out);
        if (color->parsed()) return run_color(color_file, color_p, color_set);
        if (chi->parsed()) return run_chi(chi_file, chi_p, chi_max_n);
        if (props->parsed()) return run_props(props_file, props_suite);
        if (facefill->parsed()) return run_facefill(facefill_k, facefill_check);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? kExitPass : kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "exactchroma: error: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}
