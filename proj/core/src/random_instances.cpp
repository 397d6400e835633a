#include "cayleysum/random_instances.hpp"

#include <algorithm>
#include <set>

namespace cayleysum {

namespace {

std::size_t uniform(Rng& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

}  // namespace

PointSet random_point_set(Rng& rng, std::size_t dim, std::size_t count, long range) {
  std::uniform_int_distribution<long> coord(-range, range);
  std::vector<Point> pts(count, Point(dim));
  for (auto& p : pts) {
    for (auto& c : p) c = coord(rng);
  }
  return PointSet(dim, std::move(pts));
}

PartitionedPointSet random_partitioned(Rng& rng, std::size_t dim, std::size_t r,
                                       std::size_t max_part_size, long range) {
  std::vector<PointSet> parts;
  for (std::size_t i = 0; i < r; ++i) {
    parts.push_back(random_point_set(rng, dim, uniform(rng, 1, max_part_size), range));
  }
  return PartitionedPointSet(std::move(parts));
}

std::vector<Rational> random_increasing(Rng& rng, std::size_t count) {
  std::set<Rational> values;
  while (values.size() < count) {
    Rational q(static_cast<unsigned long>(uniform(rng, 1, 12)),
               static_cast<unsigned long>(uniform(rng, 1, 4)));
    q.canonicalize();
    values.insert(q);
  }
  return {values.begin(), values.end()};
}

DeltaSpec random_delta_spec(Rng& rng, std::size_t min_blocks, std::size_t max_blocks,
                            std::size_t max_kappa, std::size_t max_K) {
  DeltaSpec spec;
  const std::size_t n = uniform(rng, min_blocks, max_blocks);
  std::size_t K = 2 * n;
  for (std::size_t i = 0; i < n; ++i) spec.kappa.push_back(2);
  // Grow random blocks while the budget allows.
  for (std::size_t attempt = 0; attempt < 4 * n; ++attempt) {
    const std::size_t i = uniform(rng, 0, n - 1);
    if (spec.kappa[i] < max_kappa && K < max_K && uniform(rng, 0, 1) == 1) {
      ++spec.kappa[i];
      ++K;
    }
  }
  unsigned long b = static_cast<unsigned long>(uniform(rng, 0, 1));
  spec.beta.assign(n, 0);
  for (std::size_t i = n; i-- > 0;) {
    spec.beta[i] = b;
    b += static_cast<unsigned long>(uniform(rng, 1, 2));
  }
  for (auto k : spec.kappa) spec.x.push_back(random_increasing(rng, k));
  return spec;
}

}  // namespace cayleysum
