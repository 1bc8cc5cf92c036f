#pragma once

#include "smartmine/model.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

namespace smartmine::testing {

inline bool rel_close(double a, double b, double tol, double floor = 0.0) {
  return std::abs(a - b) <= tol * std::max({std::abs(a), std::abs(b), floor});
}

/// Miner whose cost per hash is `cost_per_hash` and whose fixed share is `y`.
inline MinerParams share_miner(std::string id, double m, double cost_per_hash, double y) {
  const double cost = m * cost_per_hash;
  return MinerParams{std::move(id), m, y * cost, (1.0 - y) * cost / m};
}

/// Coin of total power 1 where `subject` (share x, fixed share y, cost rate
/// 1) faces one honest miner "rest" with the same cost per hash, so the
/// calibrated reward is the market reward for `subject`.
inline Scenario two_miner_scenario(double x, double y, double epsilon = 0.0) {
  Scenario sc;
  sc.coin.tau = 1.0;
  sc.coin.epsilon = epsilon;
  sc.miners.push_back(share_miner("subject", x, 1.0 / x, y));
  sc.miners.push_back(share_miner("rest", 1.0 - x, 1.0 / x, y));
  sc.coin.w = calibrate_reward(sc.miners, sc.coin.tau, epsilon);
  return sc;
}

/// Closed-form smarter-mining utility with epsilon = 0 under the market
/// condition, written from the cost-only expression (independent of the
/// library's baseline-revenue form).
inline double cost_only_smarter_utility(double M, double m, double fc, double cost, double delta) {
  const double numerator = (delta / M) * cost - (delta / m) * (M / (M - delta)) * fc;
  const double denominator = (M - delta) / M + M / (M - delta);
  return numerator / denominator;
}

inline double cost_only_smart_utility(double M, double m, double fc, double cost) {
  const double numerator = (m / M) * cost - (M / (M - m)) * fc;
  const double denominator = (M - m) / M + M / (M - m);
  return numerator / denominator;
}

/// Reference security scenario: M = 100, an attacker
/// with 20, a bystander with 10 and 70 more honest, all at cost 0.01 per hash
/// with a 15% fixed share.
inline Scenario hundred_scenario(double attacker_idle, double tau = 600.0) {
  Scenario sc;
  sc.coin.tau = tau;
  sc.miners.push_back(share_miner("attacker", 20, 0.01, 0.15));
  sc.miners.push_back(share_miner("bystander", 10, 0.01, 0.15));
  sc.miners.push_back(share_miner("others", 70, 0.01, 0.15));
  sc.coin.w = calibrate_reward(sc.miners, tau, 0.0);
  sc.schedules.push_back(smarter_schedule(sc.miners[0], attacker_idle));
  return sc;
}

}  // namespace smartmine::testing
