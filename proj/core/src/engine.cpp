#include "smartmine/engine.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace smartmine {

namespace {

bool close_relative(double a, double b, double tol) {
  return std::abs(a - b) <= tol * std::max(std::abs(a), std::abs(b));
}

}  // namespace

StepResult step_epoch(std::size_t k, double H, std::span<const double> active,
                      const CoinParams& coin, std::span<const MinerParams> miners) {
  double total = 0.0;
  for (double p : active) total += p;
  if (!(total > 0.0)) throw StalledEpochError(k);

  StepResult out;
  EpochRecord& rec = out.record;
  rec.k = k;
  rec.H = H;
  rec.t = H / total;
  rec.rph = coin.w / H;
  rec.active_power = total;
  rec.per_miner.reserve(miners.size());
  for (std::size_t i = 0; i < miners.size(); ++i) {
    MinerEpoch me;
    me.miner_id = miners[i].id;
    me.active_power = active[i];
    me.revenue_rate = rec.rph * active[i];
    me.cost_rate = miners[i].cost_at(active[i]);
    me.profit_rate = me.revenue_rate - me.cost_rate;
    rec.per_miner.push_back(std::move(me));
  }

  double next = total * coin.tau;
  if (coin.clamp) next = std::clamp(next, H / *coin.clamp, H * *coin.clamp);
  out.next_H = next;
  return out;
}

std::vector<MinerUtility> average_utilities(std::span<const EpochRecord> records,
                                            std::span<const MinerParams> miners) {
  std::vector<MinerUtility> out;
  out.reserve(miners.size());
  double total_time = 0.0;
  for (const auto& rec : records) total_time += rec.t;
  for (std::size_t i = 0; i < miners.size(); ++i) {
    double weighted = 0.0;
    for (const auto& rec : records) weighted += rec.per_miner[i].profit_rate * rec.t;
    out.push_back({miners[i].id, weighted / total_time});
  }
  return out;
}

namespace {

std::vector<EpochRecord> simulate(const Scenario& scenario, std::size_t K) {
  const auto schedules = scenario.resolved_schedules();
  std::vector<EpochRecord> records;
  records.reserve(K);
  std::vector<double> active(scenario.miners.size());
  double H = scenario.total_power() * scenario.coin.tau;
  for (std::size_t k = 1; k <= K; ++k) {
    for (std::size_t i = 0; i < schedules.size(); ++i) active[i] = schedules[i].power_at(k);
    auto step = step_epoch(k, H, active, scenario.coin, scenario.miners);
    records.push_back(std::move(step.record));
    H = step.next_H;
  }
  return records;
}

}  // namespace

SimulationTrace run(const Scenario& scenario, std::size_t K) {
  if (K == 0) throw ConfigError("invalid_horizon", "horizon K must be at least 1");
  require_valid(scenario);
  SimulationTrace trace;
  trace.records = simulate(scenario, K);
  trace.utilities = average_utilities(trace.records, scenario.miners);
  trace.horizon = K;
  return trace;
}

std::size_t common_period(const Scenario& scenario) {
  std::size_t p = 1;
  for (const auto& s : scenario.schedules) p = std::lcm(p, std::max<std::size_t>(s.period(), 1));
  return p;
}

std::vector<EpochRecord> steady_period(const Scenario& scenario) {
  require_valid(scenario);
  if (scenario.coin.clamp)
    throw ConfigError("clamped_periodic",
                      "periodic utility is undefined for clamped scenarios; use a long finite run");
  const std::size_t p = common_period(scenario);
  auto records = simulate(scenario, 3 * p);
  for (std::size_t j = 0; j < p; ++j) {
    const auto& a = records[p + j];
    const auto& b = records[2 * p + j];
    if (!close_relative(a.H, b.H, 1e-12) || !close_relative(a.t, b.t, 1e-12))
      throw ConfigError("not_periodic", "scenario did not settle into a periodic orbit");
  }
  return {std::make_move_iterator(records.begin() + 2 * p), std::make_move_iterator(records.end())};
}

std::vector<MinerUtility> periodic_utility(const Scenario& scenario) {
  const auto period = steady_period(scenario);
  return average_utilities(period, scenario.miners);
}

}  // namespace smartmine
