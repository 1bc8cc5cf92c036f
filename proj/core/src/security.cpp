#include "smartmine/security.hpp"

#include "smartmine/engine.hpp"

#include <algorithm>
#include <numeric>

namespace smartmine {

double attack_threshold(double M, double idle_total) {
  if (!(M > 0.0)) throw DomainError("total power M must be positive");
  if (!(idle_total >= 0.0 && idle_total < M))
    throw DomainError("idle power must lie in [0, M)");
  return (1.0 - idle_total / M) / 2.0;
}

bool is_honest(const Scenario& scenario, const MinerParams& miner) {
  const auto* s = scenario.find_schedule(miner.id);
  if (s == nullptr) return true;
  return std::all_of(s->powers.begin(), s->powers.end(), [&](double p) { return p == miner.m; });
}

BystanderGain bystander_gain(const Scenario& scenario, std::string_view honest_id) {
  const auto* miner = scenario.find_miner(honest_id);
  if (miner == nullptr) throw ConfigError("unknown_miner", "unknown miner '" + std::string(honest_id) + "'");
  if (!is_honest(scenario, *miner))
    throw DomainError("miner '" + miner->id + "' does not mine at full power in every epoch");
  const auto utilities = periodic_utility(scenario);
  const auto it = std::find_if(utilities.begin(), utilities.end(),
                               [&](const auto& u) { return u.miner_id == honest_id; });
  return BystanderGain{miner->id, it->utility, it->utility - scenario.coin.epsilon};
}

namespace {

std::size_t lre_index(const std::vector<EpochRecord>& period) {
  auto it = std::min_element(period.begin(), period.end(),
                             [](const auto& a, const auto& b) { return a.rph < b.rph; });
  return static_cast<std::size_t>(it - period.begin());
}

std::size_t hre_index(const std::vector<EpochRecord>& period) {
  auto it = std::max_element(period.begin(), period.end(),
                             [](const auto& a, const auto& b) { return a.rph < b.rph; });
  return static_cast<std::size_t>(it - period.begin());
}

}  // namespace

Scenario with_entrant(const Scenario& scenario, const MinerParams& entrant) {
  const auto period = steady_period(scenario);
  const double floor = period[lre_index(period)].rph;

  StrategySchedule schedule{entrant.id, std::vector<double>(period.size(), 0.0), 0};
  for (const auto& rec : period) {
    // Epoch k runs schedule entry k % p, matching the offset-0 convention.
    if (rec.rph > floor) schedule.powers[rec.k % period.size()] = entrant.m;
  }
  Scenario out = scenario;
  out.miners.push_back(entrant);
  out.schedules.push_back(std::move(schedule));
  return out;
}

EntryEffect entry_effect(const Scenario& scenario, const MinerParams& entrant) {
  const auto before = steady_period(scenario);
  const std::size_t lre = lre_index(before);
  const std::size_t hre = hre_index(before);

  EntryEffect e;
  e.rph_lre_before = before[lre].rph;
  e.rph_hre_before = before[hre].rph;
  e.H_lre_before = before[lre].H;
  e.lre_active_before = before[lre].active_power;

  if (entrant.m == 0.0) {
    e.rph_lre_after = e.rph_lre_before;
    e.rph_hre_after = e.rph_hre_before;
    e.H_lre_after = e.H_lre_before;
    e.lre_active_after = e.lre_active_before;
    return e;
  }

  const auto joined = with_entrant(scenario, entrant);
  const auto after = steady_period(joined);
  // The entrant's schedule has the same period, so indices line up.
  e.rph_lre_after = after[lre].rph;
  e.rph_hre_after = after[hre].rph;
  e.H_lre_after = after[lre].H;
  e.lre_active_after = after[lre].active_power;
  return e;
}

AttackReport security_report(const Scenario& scenario) {
  const auto period = steady_period(scenario);
  const double M = scenario.total_power();
  AttackReport r;
  r.lre_active_power = period[0].active_power;
  for (const auto& rec : period) r.lre_active_power = std::min(r.lre_active_power, rec.active_power);
  const double idle = std::max(0.0, M - r.lre_active_power);
  r.idle_fraction = idle / M;
  r.attack_threshold = attack_threshold(M, idle);

  const auto utilities = average_utilities(period, scenario.miners);
  for (std::size_t i = 0; i < scenario.miners.size(); ++i) {
    const auto& miner = scenario.miners[i];
    if (!is_honest(scenario, miner)) continue;
    r.per_miner_gain.push_back(
        {miner.id, utilities[i].utility, utilities[i].utility - scenario.coin.epsilon});
  }
  return r;
}

}  // namespace smartmine
