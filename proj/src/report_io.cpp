#include "hsi/report_io.hpp"

#include <json.hpp>

namespace hsi {

namespace {

using ordered_json = nlohmann::ordered_json;

ordered_json solve_json(const SolveReport& report, bool quasi) {
    ordered_json out;
    out["k"] = report.k;
    out["count"] = report.count;
    out["unique"] = report.unique;
    out["subsets_examined"] = report.subsets_examined;
    out["elapsed_seconds"] = report.elapsed_seconds;
    ordered_json witnesses = ordered_json::array();
    for (std::size_t j = 0; j < report.witnesses.size(); ++j) {
        if (quasi) {
            ordered_json entry;
            entry["set"] = report.witnesses[j].members();
            entry["undominated"] = report.missed[j];
            witnesses.push_back(std::move(entry));
        } else {
            witnesses.push_back(report.witnesses[j].members());
        }
    }
    out["witnesses"] = std::move(witnesses);
    return out;
}

ordered_json record_json(const SwapRecord& record) {
    ordered_json out;
    out["direction"] = record.direction == SwapDirection::forward ? "forward" : "backward";
    out["removed"] = {record.removed[0], record.removed[1]};
    out["added"] = {record.added[0], record.added[1]};
    ordered_json roles;
    roles["u"] = record.roles.u;
    roles["v"] = record.roles.v;
    roles["u_prime"] = record.roles.u_prime;
    roles["v_prime"] = record.roles.v_prime;
    roles["z"] = record.roles.z;
    roles["w"] = record.roles.w;
    out["roles"] = std::move(roles);
    ordered_json region;
    region["vertices"] = record.region.vertices.members();
    region["exponent_c"] = record.region.exponent_c ? ordered_json(*record.region.exponent_c) : ordered_json(nullptr);
    out["protected"] = std::move(region);
    return out;
}

}  // namespace

std::string to_json(const SolveReport& report, bool quasi) { return solve_json(report, quasi).dump(2); }

std::string to_json(const SwapRecord& record) { return record_json(record).dump(2); }

std::string to_json(const SelfRefPair& pair) {
    ordered_json out;
    out["instance_seed"] = pair.instance_seed;
    out["attempts"] = pair.attempts;
    out["solution"] = pair.solution.members();
    out["flipped"] = pair.flipped;
    out["swap"] = record_json(pair.record);
    out["yes"] = solve_json(pair.yes_report, false);
    out["no"] = solve_json(pair.no_report, false);
    return out.dump(2);
}

}  // namespace hsi
