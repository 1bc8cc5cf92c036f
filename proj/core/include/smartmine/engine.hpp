#pragma once

#include "smartmine/model.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace smartmine {

struct StepResult {
  EpochRecord record;
  double next_H = 0.0;
};

/// Advance the difficulty-adjustment recursion by one epoch.
///
/// `active` holds each miner's power for this epoch, aligned with `miners`.
/// The epoch lasts H / A time units, where A is the total active power; the
/// next epoch requires A * tau hashes, limited to [H / clamp, H * clamp]
/// when the coin sets a clamp. Throws StalledEpochError when A == 0.
StepResult step_epoch(std::size_t k, double H, std::span<const double> active,
                      const CoinParams& coin, std::span<const MinerParams> miners);

/// Simulate K epochs from H_1 = M * tau.
///
/// Utilities are the time-weighted mean profit rates over the horizon.
SimulationTrace run(const Scenario& scenario, std::size_t K);

/// Least common multiple of all schedule periods.
std::size_t common_period(const Scenario& scenario);

/// One steady-state period of a periodic, unclamped scenario.
///
/// Three periods are simulated; the last two must agree to 1e-12 relative on
/// (H, t) and the records of the last one are returned.
std::vector<EpochRecord> steady_period(const Scenario& scenario);

/// Exact long-run utility of every miner, in miner order.
///
/// Rejects clamped scenarios with ConfigError since those need not settle
/// into a periodic orbit; use run() with a large horizon instead.
std::vector<MinerUtility> periodic_utility(const Scenario& scenario);

/// Time-weighted mean profit rate per miner over `records`.
std::vector<MinerUtility> average_utilities(std::span<const EpochRecord> records,
                                            std::span<const MinerParams> miners);

}  // namespace smartmine
