#pragma once

// Reproducible random inputs for property checks.

#include "cayleysum/cayley.hpp"
#include "cayleysum/det_asymptotics.hpp"

#include <cstdint>
#include <random>

namespace cayleysum {

using Rng = std::mt19937_64;

/// `count` points with integer coordinates in [-range, range].
PointSet random_point_set(Rng& rng, std::size_t dim, std::size_t count, long range = 3);

/// r parts of 1..max_part_size points each.
PartitionedPointSet random_partitioned(Rng& rng, std::size_t dim, std::size_t r,
                                       std::size_t max_part_size, long range = 3);

/// `count` strictly increasing positive rationals with small numerators and
/// denominators.
std::vector<Rational> random_increasing(Rng& rng, std::size_t count);

/// Blocks n in [min_blocks, max_blocks], kappa_i in [2, max_kappa],
/// K <= max_K, beta strictly decreasing with beta_n in {0, 1}.
DeltaSpec random_delta_spec(Rng& rng, std::size_t min_blocks, std::size_t max_blocks,
                            std::size_t max_kappa, std::size_t max_K);

}  // namespace cayleysum
