#pragma once

#include "smartmine/model.hpp"

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace smartmine {

/// Share of total power an attacker must strictly exceed to out-mine the
/// power still active while `idle_total` sits idle: (1 - idle_total/M) / 2.
double attack_threshold(double M, double idle_total);

struct BystanderGain {
  std::string miner_id;
  double utility = 0.0;
  double gain = 0.0;  // utility - epsilon
};

/// Long-run utility of honest miner `honest_id` in a scenario whose other
/// miners may deviate. Throws DomainError if that miner does not mine at
/// full power in every epoch.
BystanderGain bystander_gain(const Scenario& scenario, std::string_view honest_id);

/// Low- and high-revenue epoch state before and after a new miner joins.
struct EntryEffect {
  double rph_lre_before = 0.0;
  double rph_lre_after = 0.0;
  double rph_hre_before = 0.0;
  double rph_hre_after = 0.0;
  double H_lre_before = 0.0;
  double H_lre_after = 0.0;
  double lre_active_before = 0.0;
  double lre_active_after = 0.0;
};

/// The entrant mines at full power in every high-revenue epoch of the steady
/// cycle (those with revenue per hash above the cycle minimum) and idles
/// otherwise. The reward is not recalibrated. An entrant with zero power
/// leaves the scenario unchanged.
EntryEffect entry_effect(const Scenario& scenario, const MinerParams& entrant);

/// The scenario extended with `entrant` on its high-revenue schedule.
Scenario with_entrant(const Scenario& scenario, const MinerParams& entrant);

struct AttackReport {
  double lre_active_power = 0.0;  // least total active power in the cycle
  double idle_fraction = 0.0;
  double attack_threshold = 0.5;
  std::vector<BystanderGain> per_miner_gain;  // honest miners only
};

/// Attack exposure of a periodic scenario. Idle power is measured in the
/// epoch of the steady cycle with the least total active power.
AttackReport security_report(const Scenario& scenario);

/// True iff `miner` mines at full power in every epoch under `scenario`.
bool is_honest(const Scenario& scenario, const MinerParams& miner);

}  // namespace smartmine
