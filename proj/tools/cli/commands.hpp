#pragma once

#include "smartmine/analytic.hpp"
#include "smartmine/model.hpp"
#include "smartmine/security.hpp"

#include <json.hpp>

#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smartmine::cli {

using ordered_json = nlohmann::ordered_json;

enum ExitCode : int { kOk = 0, kConfigError = 2, kModelError = 3, kIoError = 4 };

/// trace.csv: k,H,t,rph then {id}_mhat,{id}_R,{id}_C,{id}_P per miner.
std::string trace_csv(const SimulationTrace& trace, const Scenario& scenario);
ordered_json summary_json(const SimulationTrace& trace, const Scenario& scenario);

ordered_json analyze_report(const Scenario& scenario, std::string_view miner_id);
ordered_json optimize_report(const Scenario& scenario, std::string_view miner_id);
ordered_json security_json(const Scenario& scenario, const std::optional<MinerParams>& entrant);

/// x,y,roi rows, y-major ascending then x ascending.
std::string sweep_csv(const SweepResult& result);

/// Parse "power=10[,fc=..][,vc=..][,id=..]". Missing costs default to fc = 0
/// and vc equal to the scenario's mean cost per hash.
MinerParams parse_entrant(std::string_view spec, const Scenario& scenario);

/// Entry point shared by the executable and the tests. `args` excludes argv[0].
int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace smartmine::cli
