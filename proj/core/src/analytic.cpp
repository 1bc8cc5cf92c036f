#include "smartmine/analytic.hpp"

#include "smartmine/optimizer.hpp"

#include <cmath>
#include <string>

namespace smartmine {

namespace {

void require_context(const AggregateContext& ctx) {
  if (!(ctx.M > 0.0) || !std::isfinite(ctx.M)) throw DomainError("total power M must be positive");
  if (auto v = validate_coin(ctx.coin); !v.empty()) throw ConfigError(std::move(v));
}

void require_miner(const AggregateContext& ctx, const MinerParams& miner) {
  require_context(ctx);
  if (auto v = validate_miner(miner); !v.empty()) throw ConfigError(std::move(v));
  if (miner.m > ctx.M) throw DomainError("miner power exceeds total power M");
}

void require_minority(const AggregateContext& ctx, const MinerParams& miner) {
  require_miner(ctx, miner);
  if (!(miner.m < ctx.M))
    throw DomainError("smart mining needs m < M; a fully idle epoch would stall the coin");
}

}  // namespace

AggregateContext make_context(const Scenario& scenario) {
  return AggregateContext{scenario.total_power(), scenario.coin};
}

AggregateContext market_context(double M, const MinerParams& miner, double tau, double epsilon) {
  AggregateContext ctx;
  ctx.M = M;
  ctx.coin.tau = tau;
  ctx.coin.epsilon = epsilon;
  ctx.coin.w = tau * M * (miner.cost_rate() + epsilon) / miner.m;
  return ctx;
}

double smart_utility(const AggregateContext& ctx, const MinerParams& miner) {
  require_minority(ctx, miner);
  const double M = ctx.M;
  const double m = miner.m;
  const double rest = (M - m) / M;
  const double stretch = M / (M - m);
  const double numerator = m * ctx.baseline_rph() - miner.cost_rate() * rest - stretch * miner.fc;
  return numerator / (rest + stretch);
}

double smarter_utility(const AggregateContext& ctx, const MinerParams& miner, double delta) {
  require_miner(ctx, miner);
  if (!(delta >= 0.0 && delta <= miner.m))
    throw DomainError("idle power must lie in [0, m], got " + std::to_string(delta));
  if (!(delta < ctx.M)) throw DomainError("idle power must be below total power M");
  return detail::smarter_utility_kernel(ctx, miner, delta);
}

double detail::smarter_utility_kernel(const AggregateContext& ctx, const MinerParams& miner,
                                      double delta) noexcept {
  const double M = ctx.M;
  const double r = ctx.baseline_rph();
  const double reduced = miner.m - delta;
  const double rest = (M - delta) / M;
  const double stretch = M / (M - delta);
  // HRE contributes (r*m - C*rest)*tau, the LRE stretch*P_lre*tau.
  const double lre_profit = r * reduced - miner.cost_at(reduced);
  const double numerator = r * miner.m - miner.cost_rate() * rest + stretch * lre_profit;
  return numerator / (rest + stretch);
}

bool dominance(double x, double y) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("power share x must lie in (0, 1)");
  if (!(y >= 0.0 && y < 1.0)) throw DomainError("fixed-cost share y must lie in [0, 1)");
  return x * (1.0 - x) > y;
}

double min_power_for_profit(double y) {
  if (!(y >= 0.0)) throw DomainError("fixed-cost share y must be non-negative");
  if (!(y < 0.25)) throw DomainError("no power share suffices: x(1-x) never exceeds 1/4");
  // Smaller root of x^2 - x + y, in the cancellation-free form.
  return 2.0 * y / (1.0 + std::sqrt(1.0 - 4.0 * y));
}

double roi(double utility, const MinerParams& miner) { return utility / miner.cost_rate(); }

double power_share(const AggregateContext& ctx, const MinerParams& miner) { return miner.m / ctx.M; }

double fixed_cost_share(const MinerParams& miner) { return miner.fc / miner.cost_rate(); }

SmartEpochTable epoch_table_smart(const AggregateContext& ctx, const MinerParams& miner) {
  require_minority(ctx, miner);
  const double M = ctx.M;
  const double m = miner.m;
  const double tau = ctx.coin.tau;
  SmartEpochTable t;
  t.H_lre = M * tau;
  t.t_lre = t.H_lre / (M - m);
  t.rph_lre = ctx.coin.w / t.H_lre;
  t.p_lre = -miner.fc;
  t.H_hre = (M - m) * tau;
  t.t_hre = t.H_hre / M;
  t.rph_hre = ctx.coin.w / t.H_hre;
  t.p_hre = m * t.rph_hre - miner.cost_rate();
  return t;
}

SweepGrid centered_grid(std::size_t nx, std::size_t ny) {
  if (nx < 2 || ny < 2) throw DomainError("sweep grid needs at least 2 points per axis");
  SweepGrid g;
  g.xs.reserve(nx);
  g.ys.reserve(ny);
  for (std::size_t i = 0; i < nx; ++i) g.xs.push_back((static_cast<double>(i) + 0.5) / static_cast<double>(nx));
  for (std::size_t j = 0; j < ny; ++j) g.ys.push_back((static_cast<double>(j) + 0.5) / static_cast<double>(ny));
  return g;
}

CanonicalCase canonical_case(double x, double y) {
  if (!(x > 0.0 && x < 1.0)) throw DomainError("power share x must lie in (0, 1)");
  if (!(y >= 0.0 && y < 1.0)) throw DomainError("fixed-cost share y must lie in [0, 1)");
  CanonicalCase c;
  c.miner = MinerParams{"canonical", x, y, (1.0 - y) / x};
  c.ctx = market_context(1.0, c.miner, 1.0, 0.0);
  return c;
}

SweepResult sweep(const SweepGrid& grid, SweepMode mode) {
  if (grid.xs.empty() || grid.ys.empty()) throw DomainError("sweep grid must not be empty");
  SweepResult out;
  out.grid = grid;
  out.roi.reserve(grid.xs.size() * grid.ys.size());
  for (double y : grid.ys) {
    for (double x : grid.xs) {
      const auto c = canonical_case(x, y);
      double u = 0.0;
      if (mode == SweepMode::smart) {
        u = smart_utility(c.ctx, c.miner);
      } else {
        u = optimal_idle(c.ctx, c.miner).utility;
      }
      out.roi.push_back(roi(u, c.miner));
    }
  }
  return out;
}

}  // namespace smartmine
