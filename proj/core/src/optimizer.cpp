#include "smartmine/optimizer.hpp"

#include <algorithm>
#include <cmath>

namespace smartmine {

namespace {

SmarterPoint make_point(const MinerParams& miner, double delta, double utility) {
  return SmarterPoint{delta, utility, roi(utility, miner)};
}

// Idle power expressed as j steps of m / steps, exact at both endpoints.
double grid_delta(const MinerParams& miner, std::size_t j, std::size_t steps) {
  if (j == steps) return miner.m;
  return miner.m * (static_cast<double>(j) / static_cast<double>(steps));
}

}  // namespace

SmarterPoint optimal_idle(const AggregateContext& ctx, const MinerParams& miner) {
  if (!(miner.m < ctx.M)) throw DomainError("optimal idle power needs m < M");
  smarter_utility(ctx, miner, miner.m);  // argument checks
  const auto u = [&](double delta) { return detail::smarter_utility_kernel(ctx, miner, delta); };

  constexpr std::size_t steps = kCoarseGridPoints - 1;
  std::size_t best_j = 0;
  double best_u = u(0.0);
  for (std::size_t j = 1; j <= steps; ++j) {
    const double v = u(grid_delta(miner, j, steps));
    if (v > best_u) {
      best_u = v;
      best_j = j;
    }
  }
  double best_delta = grid_delta(miner, best_j, steps);

  // Golden-section refinement inside the neighbouring grid cells.
  double lo = grid_delta(miner, best_j == 0 ? 0 : best_j - 1, steps);
  double hi = grid_delta(miner, std::min(best_j + 1, steps), steps);
  const double tol = 1e-9 * miner.m;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double a = hi - inv_phi * (hi - lo);
  double b = lo + inv_phi * (hi - lo);
  double ua = u(a);
  double ub = u(b);
  while (hi - lo > tol) {
    if (ua >= ub) {
      hi = b;
      b = a;
      ub = ua;
      a = hi - inv_phi * (hi - lo);
      ua = u(a);
    } else {
      lo = a;
      a = b;
      ua = ub;
      b = lo + inv_phi * (hi - lo);
      ub = u(b);
    }
  }
  const double refined = std::clamp(0.5 * (lo + hi), 0.0, miner.m);
  const double refined_u = u(refined);
  if (refined_u > best_u) {
    best_u = refined_u;
    best_delta = refined;
  }
  return make_point(miner, best_delta, best_u);
}

SmarterPoint brute_force_idle(const AggregateContext& ctx, const MinerParams& miner,
                              std::size_t resolution) {
  if (resolution < 2) throw DomainError("brute-force resolution must be at least 2");
  double best_delta = 0.0;
  double best_u = smarter_utility(ctx, miner, 0.0);
  for (std::size_t j = 1; j <= resolution; ++j) {
    const double delta = grid_delta(miner, j, resolution);
    const double v = detail::smarter_utility_kernel(ctx, miner, delta);
    if (v > best_u) {
      best_u = v;
      best_delta = delta;
    }
  }
  return make_point(miner, best_delta, best_u);
}

}  // namespace smartmine
