#pragma once

#include "smartmine/analytic.hpp"

#include <cstddef>

namespace smartmine {

/// Number of uniformly spaced points in the coarse scan of optimal_idle.
inline constexpr std::size_t kCoarseGridPoints = 1025;

/// Idle power maximizing smarter_utility over [0, m].
///
/// Scans a uniform 1025-point grid, then refines the best bracket with a
/// golden-section search. No unimodality is assumed. Ties go to the smaller
/// idle power. Requires 0 < m < M.
SmarterPoint optimal_idle(const AggregateContext& ctx, const MinerParams& miner);

/// Exhaustive search over delta = j*m/resolution, j = 0..resolution.
/// Ties go to the smaller idle power. Requires resolution >= 2.
SmarterPoint brute_force_idle(const AggregateContext& ctx, const MinerParams& miner,
                              std::size_t resolution);

}  // namespace smartmine
