#include "cli/commands.hpp"

#include "cli/config.hpp"
#include "cli/format.hpp"
#include "smartmine/engine.hpp"
#include "smartmine/optimizer.hpp"

#include <CLI11.hpp>

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

namespace smartmine::cli {

namespace {

constexpr const char* kToolName = "smartmine";

ordered_json violations_json(const std::vector<Violation>& violations) {
  ordered_json list = ordered_json::array();
  for (const auto& v : violations) list.push_back({{"code", v.code}, {"message", v.message}});
  return ordered_json{{"errors", list}};
}

const MinerParams& require_miner(const Scenario& scenario, std::string_view id) {
  const auto* miner = scenario.find_miner(id);
  if (miner == nullptr) throw ConfigError("unknown_miner", "unknown miner '" + std::string(id) + "'");
  return *miner;
}

void write_file(const std::filesystem::path& path, const std::string& contents) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot write '" + path.string() + "'");
  out << contents;
  out.flush();
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

void write_or_print(const std::string& out_path, const std::string& contents, std::ostream& out) {
  if (out_path.empty()) {
    out << contents;
  } else {
    write_file(out_path, contents);
  }
}

ordered_json epoch_table_json(const SmartEpochTable& t) {
  return {{"t_LRE", t.t_lre},     {"t_HRE", t.t_hre},     {"H_LRE", t.H_lre},
          {"H_HRE", t.H_hre},     {"RpH_LRE", t.rph_lre}, {"RpH_HRE", t.rph_hre},
          {"P_LRE", t.p_lre},     {"P_HRE", t.p_hre}};
}

}  // namespace

std::string trace_csv(const SimulationTrace& trace, const Scenario& scenario) {
  std::ostringstream out;
  out << "k,H,t,rph";
  for (const auto& m : scenario.miners)
    out << ',' << m.id << "_mhat," << m.id << "_R," << m.id << "_C," << m.id << "_P";
  out << '\n';
  for (const auto& rec : trace.records) {
    out << rec.k << ',' << format_double(rec.H) << ',' << format_double(rec.t) << ','
        << format_double(rec.rph);
    for (const auto& me : rec.per_miner) {
      out << ',' << format_double(me.active_power) << ',' << format_double(me.revenue_rate) << ','
          << format_double(me.cost_rate) << ',' << format_double(me.profit_rate);
    }
    out << '\n';
  }
  return out.str();
}

ordered_json summary_json(const SimulationTrace& trace, const Scenario& scenario) {
  ordered_json utilities = ordered_json::object();
  for (const auto& u : trace.utilities) utilities[u.miner_id] = u.utility;
  ordered_json scenario_echo = scenario_to_json(scenario);
  return {{"tool", kToolName},
          {"version", SMARTMINE_VERSION},
          {"horizon", trace.horizon},
          {"utilities", utilities},
          {"scenario", scenario_echo}};
}

ordered_json analyze_report(const Scenario& scenario, std::string_view miner_id) {
  const auto& miner = require_miner(scenario, miner_id);
  const auto ctx = make_context(scenario);
  const double x = power_share(ctx, miner);
  const double y = fixed_cost_share(miner);
  const double u = smart_utility(ctx, miner);

  ordered_json report = {{"miner", miner.id},
                         {"x", x},
                         {"y", y},
                         {"dominance", dominance(x, y)},
                         {"smart_utility", u},
                         {"smart_roi", roi(u, miner)},
                         {"epoch_table", epoch_table_json(epoch_table_smart(ctx, miner))}};
  try {
    report["min_power_for_profit"] = min_power_for_profit(y);
  } catch (const DomainError&) {
    report["min_power_for_profit"] = nullptr;
    report["min_power_for_profit_reason"] = "no power share suffices";
  }
  return report;
}

ordered_json optimize_report(const Scenario& scenario, std::string_view miner_id) {
  const auto& miner = require_miner(scenario, miner_id);
  const auto point = optimal_idle(make_context(scenario), miner);
  const auto schedule = smarter_schedule(miner, point.delta);
  return {{"miner", miner.id},
          {"delta", point.delta},
          {"delta_fraction", point.delta / miner.m},
          {"utility", point.utility},
          {"roi", point.roi},
          {"schedule",
           {{"miner_id", schedule.miner_id}, {"powers", schedule.powers}, {"offset", schedule.offset}}}};
}

ordered_json security_json(const Scenario& scenario, const std::optional<MinerParams>& entrant) {
  const auto report = security_report(scenario);
  ordered_json gains = ordered_json::array();
  for (const auto& g : report.per_miner_gain)
    gains.push_back({{"miner_id", g.miner_id}, {"utility", g.utility}, {"gain", g.gain}});
  ordered_json out = {{"lre_active_power", report.lre_active_power},
                      {"idle_fraction", report.idle_fraction},
                      {"attack_threshold", report.attack_threshold},
                      {"per_miner_gain", gains}};
  if (entrant) {
    const auto e = entry_effect(scenario, *entrant);
    out["entry_effect"] = {{"entrant", entrant->id},
                           {"power", entrant->m},
                           {"rph_lre_before", e.rph_lre_before},
                           {"rph_lre_after", e.rph_lre_after},
                           {"rph_lre_ratio", e.rph_lre_after / e.rph_lre_before},
                           {"rph_hre_before", e.rph_hre_before},
                           {"rph_hre_after", e.rph_hre_after},
                           {"H_lre_before", e.H_lre_before},
                           {"H_lre_after", e.H_lre_after},
                           {"lre_active_before", e.lre_active_before},
                           {"lre_active_after", e.lre_active_after}};
  }
  return out;
}

std::string sweep_csv(const SweepResult& result) {
  std::ostringstream out;
  out << "x,y,roi\n";
  const auto nx = result.grid.xs.size();
  for (std::size_t iy = 0; iy < result.grid.ys.size(); ++iy) {
    for (std::size_t ix = 0; ix < nx; ++ix) {
      out << format_double(result.grid.xs[ix]) << ',' << format_double(result.grid.ys[iy]) << ','
          << format_double(result.at(ix, iy)) << '\n';
    }
  }
  return out.str();
}

MinerParams parse_entrant(std::string_view spec, const Scenario& scenario) {
  MinerParams entrant;
  entrant.id = "entrant";
  bool have_power = false;
  bool have_vc = false;
  std::string text(spec);
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto eq = item.find('=');
    if (eq == std::string::npos)
      throw ConfigError("invalid_entrant", "entrant field '" + item + "' is not key=value");
    const std::string key = item.substr(0, eq);
    const std::string value = item.substr(eq + 1);
    if (key == "id") {
      entrant.id = value;
      continue;
    }
    double parsed = 0.0;
    const auto [ptr, ec] = std::from_chars(value.data(), value.data() + value.size(), parsed);
    if (ec != std::errc{} || ptr != value.data() + value.size())
      throw ConfigError("invalid_entrant", "entrant field '" + key + "' is not a number");
    if (key == "power" || key == "m") {
      entrant.m = parsed;
      have_power = true;
    } else if (key == "fc") {
      entrant.fc = parsed;
    } else if (key == "vc") {
      entrant.vc = parsed;
      have_vc = true;
    } else {
      throw ConfigError("invalid_entrant", "unknown entrant field '" + key + "'");
    }
  }
  if (!have_power) throw ConfigError("invalid_entrant", "entrant needs power=<hash power>");
  if (entrant.m < 0.0) throw ConfigError("invalid_entrant", "entrant power must be non-negative");
  if (!have_vc) {
    double cost = 0.0;
    for (const auto& m : scenario.miners) cost += m.cost_rate();
    entrant.vc = cost / scenario.total_power();
  }
  return entrant;
}

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Deterministic mining economics under difficulty adjustment", kToolName};
  app.set_version_flag("--version", std::string(SMARTMINE_VERSION));
  app.require_subcommand(1);

  std::string config;
  std::string out_path;
  std::string miner_id;
  std::size_t epochs = 0;

  auto* simulate = app.add_subcommand("simulate", "Run the epoch recursion and write trace.csv + summary.json");
  simulate->add_option("config", config, "Scenario config (JSON)")->required();
  simulate->add_option("--epochs,-K", epochs, "Number of epochs")->required();
  simulate->add_option("--out,-o", out_path, "Output directory")->required();

  auto* analyze = app.add_subcommand("analyze", "Closed-form smart-mining report for one miner");
  analyze->add_option("config", config, "Scenario config (JSON)")->required();
  analyze->add_option("--miner", miner_id, "Miner id")->required();
  analyze->add_option("--out,-o", out_path, "Write JSON here instead of stdout");

  auto* optimize = app.add_subcommand("optimize", "Optimal idle power for smarter mining");
  optimize->add_option("config", config, "Scenario config (JSON)")->required();
  optimize->add_option("--miner", miner_id, "Miner id")->required();
  optimize->add_option("--out,-o", out_path, "Write JSON here instead of stdout");

  std::string mode = "smart";
  std::size_t nx = 0;
  std::size_t ny = 0;
  auto* sweep_cmd = app.add_subcommand("sweep", "ROI heatmap over power share x and fixed-cost share y");
  sweep_cmd->add_option("--mode", mode, "smart or smarter")->check(CLI::IsMember({"smart", "smarter"}));
  sweep_cmd->add_option("--nx", nx, "Grid points along x")->required();
  sweep_cmd->add_option("--ny", ny, "Grid points along y")->required();
  sweep_cmd->add_option("--out,-o", out_path, "Output CSV")->required();

  std::string entrant_spec;
  auto* security = app.add_subcommand("security", "Attack threshold and bystander gains");
  security->add_option("config", config, "Scenario config (JSON)")->required();
  security->add_option("--entrant", entrant_spec, "New HRE-only miner, e.g. power=10[,fc=..,vc=..,id=..]");
  security->add_option("--out,-o", out_path, "Write JSON here instead of stdout");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForVersion&) {
    out << SMARTMINE_VERSION << '\n';
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << violations_json({{"usage", e.what()}}).dump() << '\n';
    return kConfigError;
  }

  try {
    if (*simulate) {
      if (epochs < 1) throw ConfigError("invalid_horizon", "--epochs must be at least 1");
      const auto scenario = load_config(config);
      const auto trace = run(scenario, epochs);
      std::filesystem::path dir(out_path);
      std::error_code ec;
      std::filesystem::create_directories(dir, ec);
      if (ec) throw IoError("cannot create output directory '" + out_path + "'");
      write_file(dir / "trace.csv", trace_csv(trace, scenario));
      write_file(dir / "summary.json", summary_json(trace, scenario).dump(2) + "\n");
    } else if (*analyze) {
      const auto scenario = load_config(config);
      write_or_print(out_path, analyze_report(scenario, miner_id).dump(2) + "\n", out);
    } else if (*optimize) {
      const auto scenario = load_config(config);
      write_or_print(out_path, optimize_report(scenario, miner_id).dump(2) + "\n", out);
    } else if (*sweep_cmd) {
      const auto grid = centered_grid(nx, ny);
      const auto result = sweep(grid, mode == "smart" ? SweepMode::smart : SweepMode::smarter_optimal);
      write_file(out_path, sweep_csv(result));
    } else if (*security) {
      const auto scenario = load_config(config);
      std::optional<MinerParams> entrant;
      if (!entrant_spec.empty()) entrant = parse_entrant(entrant_spec, scenario);
      write_or_print(out_path, security_json(scenario, entrant).dump(2) + "\n", out);
    }
  } catch (const ConfigError& e) {
    err << violations_json(e.violations()).dump() << '\n';
    return kConfigError;
  } catch (const DomainError& e) {
    err << violations_json({{"domain_error", e.what()}}).dump() << '\n';
    return kConfigError;
  } catch (const StalledEpochError& e) {
    err << ordered_json{{"error", "stalled_epoch"}, {"epoch", e.epoch()}, {"message", e.what()}}.dump()
        << '\n';
    return kModelError;
  } catch (const IoError& e) {
    err << ordered_json{{"error", "io_error"}, {"message", e.what()}}.dump() << '\n';
    return kIoError;
  }
  return kOk;
}

}  // namespace smartmine::cli
