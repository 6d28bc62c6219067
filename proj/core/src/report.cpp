#include <nlohmann/json.hpp>

#include "exactchroma/exact_coloring.hpp"

namespace exactchroma {

std::string coloring_report_json(const TupleColoring& tc) {
    nlohmann::ordered_json j;
    j["n"] = tc.dense.size();
    j["p"] = tc.report.p;
    j["S"] = tc.report.members;
    j["t"] = tc.report.t;
    j["delta"] = tc.report.delta;
    j["bound"] = tc.report.bound;
    j["colors_used"] = tc.report.colors_used;
    j["proper"] = tc.report.proper;
    j["colors"] = tc.dense;
    return j.dump() + "\n";
}

}  // namespace exactchroma
