#pragma once

#include "smartmine/model.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace smartmine {

/// Total hash power of the coin together with its constants.
struct AggregateContext {
  double M = 1.0;
  CoinParams coin;

  /// Revenue per hash in an epoch where everyone mines: w / (M * tau).
  double baseline_rph() const noexcept { return coin.w / (M * coin.tau); }
};

AggregateContext make_context(const Scenario& scenario);

/// Context whose reward satisfies the market condition for `miner`:
/// w/(M*tau) * m = fc + vc*m + epsilon.
AggregateContext market_context(double M, const MinerParams& miner, double tau, double epsilon);

struct SmarterPoint {
  double delta = 0.0;  // idle power in low-revenue epochs
  double utility = 0.0;
  double roi = 0.0;
};

// The closed forms below are written in terms of the baseline revenue per
// hash, so they agree with the engine for any reward w. Under the market
// condition they reduce to the familiar cost-only expressions.

/// Long-run utility when `miner` alternates fully idle and full-power epochs
/// while everyone else mines honestly. Requires 0 < m < M.
double smart_utility(const AggregateContext& ctx, const MinerParams& miner);

/// Long-run utility when `miner` idles `delta` of its power every other epoch.
/// Requires 0 <= delta <= m and delta < M.
double smarter_utility(const AggregateContext& ctx, const MinerParams& miner, double delta);

/// True iff x(1-x) > y. Requires x in (0,1) and y in [0,1).
bool dominance(double x, double y);

/// Infimum power share x with x(1-x) > y. Throws DomainError for y >= 1/4.
double min_power_for_profit(double y);

/// Utility as a fraction of the full-power cost rate.
double roi(double utility, const MinerParams& miner);

/// Power share m / M of `miner`.
double power_share(const AggregateContext& ctx, const MinerParams& miner);
/// Fixed share fc / (fc + vc*m) of the miner's cost rate.
double fixed_cost_share(const MinerParams& miner);

/// Steady two-epoch cycle under smart mining: LRE is the epoch `miner` sits
/// out, HRE the one after it.
struct SmartEpochTable {
  double t_lre = 0.0;
  double t_hre = 0.0;
  double H_lre = 0.0;
  double H_hre = 0.0;
  double rph_lre = 0.0;
  double rph_hre = 0.0;
  double p_lre = 0.0;
  double p_hre = 0.0;
};

SmartEpochTable epoch_table_smart(const AggregateContext& ctx, const MinerParams& miner);

enum class SweepMode { smart, smarter_optimal };

struct SweepGrid {
  std::vector<double> xs;  // power shares, each in (0,1)
  std::vector<double> ys;  // fixed-cost shares, each in [0,1)
};

/// Cell-centred grid: x_i = (i + 1/2) / nx, y_j = (j + 1/2) / ny.
SweepGrid centered_grid(std::size_t nx, std::size_t ny);

struct SweepResult {
  SweepGrid grid;
  std::vector<double> roi;  // row-major, y outer

  double at(std::size_t ix, std::size_t iy) const { return roi[iy * grid.xs.size() + ix]; }
};

/// Miner with share x and fixed-cost share y on a coin of total power 1,
/// unit cost rate, tau = 1 and epsilon = 0, at the market reward.
struct CanonicalCase {
  AggregateContext ctx;
  MinerParams miner;
};
CanonicalCase canonical_case(double x, double y);

SweepResult sweep(const SweepGrid& grid, SweepMode mode);

namespace detail {
/// smarter_utility without argument checks, for inner search loops.
double smarter_utility_kernel(const AggregateContext& ctx, const MinerParams& miner, double delta) noexcept;
}  // namespace detail

}  // namespace smartmine
