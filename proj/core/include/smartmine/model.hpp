#pragma once

#include "smartmine/errors.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace smartmine {

/// Hash power and cost structure of a single miner.
///
/// `m` is measured in hashes per time unit, `fc` in money per time unit and
/// `vc` in money per hash. All quantities are continuous.
struct MinerParams {
  std::string id;
  double m = 0.0;
  double fc = 0.0;
  double vc = 0.0;

  /// Money spent per time unit when mining at `power`.
  double cost_at(double power) const noexcept { return fc + vc * power; }
  /// Money spent per time unit at full power.
  double cost_rate() const noexcept { return cost_at(m); }
};

/// Coin-level constants.
struct CoinParams {
  double tau = 1.0;      // desired epoch duration
  double epsilon = 0.0;  // equilibrium profit margin per miner
  double w = 1.0;        // total reward paid per epoch
  // Maximum factor by which the required work may change between epochs.
  std::optional<double> clamp;
};

/// Periodic sequence of active hash power for one miner.
///
/// Epoch k (1-based) uses `powers[(offset + k) % period()]`.
struct StrategySchedule {
  std::string miner_id;
  std::vector<double> powers;
  std::size_t offset = 0;

  std::size_t period() const noexcept { return powers.size(); }
  double power_at(std::size_t epoch) const { return powers[(offset + epoch) % powers.size()]; }
};

/// Always-full-power schedule for `miner`.
StrategySchedule honest_schedule(const MinerParams& miner);

/// Period-2 schedule idling `delta` hash power every other epoch.
///
/// With offset 0 the miner is at full power in odd epochs and at `m - delta`
/// in even ones, so the first low-revenue epoch is epoch 2.
StrategySchedule smarter_schedule(const MinerParams& miner, double delta);

struct Scenario {
  CoinParams coin;
  std::vector<MinerParams> miners;
  std::vector<StrategySchedule> schedules;  // omitted miners are honest

  double total_power() const noexcept;
  const MinerParams* find_miner(std::string_view id) const noexcept;
  const StrategySchedule* find_schedule(std::string_view id) const noexcept;

  /// One schedule per miner, in miner order, honest where none was given.
  /// Assumes the scenario is valid.
  std::vector<StrategySchedule> resolved_schedules() const;
};

struct MinerEpoch {
  std::string miner_id;
  double active_power = 0.0;  // m-hat
  double revenue_rate = 0.0;  // R
  double cost_rate = 0.0;     // C
  double profit_rate = 0.0;   // P
};

/// Realized state of one epoch.
struct EpochRecord {
  std::size_t k = 0;
  double H = 0.0;    // required hashes
  double t = 0.0;    // realized duration
  double rph = 0.0;  // revenue per hash, w / H
  double active_power = 0.0;
  std::vector<MinerEpoch> per_miner;
};

struct MinerUtility {
  std::string miner_id;
  double utility = 0.0;
};

struct SimulationTrace {
  std::vector<EpochRecord> records;
  std::vector<MinerUtility> utilities;  // miner order
  std::size_t horizon = 0;

  /// Throws std::out_of_range for an unknown id.
  double utility_of(std::string_view miner_id) const;
};

/// Reward per epoch that leaves every full-power miner with margin epsilon:
/// tau * sum(fc + vc*m + epsilon).
double calibrate_reward(std::span<const MinerParams> miners, double tau, double epsilon);

std::vector<Violation> validate_miner(const MinerParams& miner);
std::vector<Violation> validate_coin(const CoinParams& coin);

/// Every invariant violation of the scenario; empty means valid.
std::vector<Violation> validate_scenario(const CoinParams& coin,
                                         std::span<const MinerParams> miners,
                                         std::span<const StrategySchedule> schedules);
std::vector<Violation> validate_scenario(const Scenario& scenario);

/// Throws ConfigError if validate_scenario reports anything.
void require_valid(const Scenario& scenario);

}  // namespace smartmine
