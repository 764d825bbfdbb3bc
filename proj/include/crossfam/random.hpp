#pragma once

#include <random>
#include <utility>

#include "crossfam/family.hpp"

namespace crossfam {

using Rng = std::mt19937_64;

/// Each subset of [n] joins independently with probability `density`.
/// Requires n <= kMaxEnumerationGround.
SetFamily random_family(Rng& rng, int n, double density);

/// A random family, then a random part of its best partner in 2^[n], so the
/// pair is cross-intersecting by construction.
std::pair<SetFamily, SetFamily> random_cross_intersecting_pair(Rng& rng, int n);

/// A random cross-intersecting pair, sparse or dense with equal odds, pushed
/// to a compressed fixed point.
std::pair<SetFamily, SetFamily> random_compressed_pair(Rng& rng, int n);

}  // namespace crossfam
