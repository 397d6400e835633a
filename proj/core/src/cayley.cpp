#include "cayleysum/cayley.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cayleysum {

PartitionedPointSet::PartitionedPointSet(std::vector<PointSet> parts) : parts_(std::move(parts)) {
  if (parts_.size() < 2) throw std::invalid_argument("a partition needs at least two parts");
  const std::size_t d = parts_.front().ambient_dim;
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    const auto& p = parts_[i];
    p.validate();
    if (p.empty()) throw std::invalid_argument("part " + std::to_string(i) + " is empty");
    if (p.ambient_dim != d) throw DimensionError("parts live in different ambient dimensions");
    offsets_.push_back(part_of_.size());
    part_of_.insert(part_of_.end(), p.size(), i);
  }
}

std::vector<std::size_t> PartitionedPointSet::sizes() const {
  std::vector<std::size_t> out;
  out.reserve(parts_.size());
  for (const auto& p : parts_) out.push_back(p.size());
  return out;
}

bool PartitionedPointSet::is_spanning(const std::vector<std::size_t>& global_indices) const {
  std::vector<bool> hit(parts_.size(), false);
  std::size_t count = 0;
  for (auto g : global_indices) {
    const auto p = part_of(g);
    if (!hit[p]) {
      hit[p] = true;
      ++count;
    }
  }
  return count == parts_.size();
}

CayleyConfig CayleyConfig::averaging(std::size_t r) {
  if (r < 2) throw std::invalid_argument("Cayley embedding needs r >= 2");
  return {r, std::vector<Rational>(r, Rational(1, static_cast<unsigned long>(r)))};
}

void CayleyConfig::validate() const {
  if (r < 2) throw std::invalid_argument("Cayley embedding needs r >= 2");
  if (weights.size() != r) throw std::invalid_argument("need one weight per part");
  Rational total = 0;
  for (const auto& w : weights) {
    if (w <= 0) throw std::invalid_argument("weights must be strictly positive");
    total += w;
  }
  if (total != 1) throw std::invalid_argument("weights must sum to 1");
}

Point cayley_lift(std::size_t part, std::span<const Rational> x, std::size_t r) {
  if (part >= r) throw std::out_of_range("part index outside 0..r-1");
  Point out(r - 1 + x.size());
  if (part > 0) out[part - 1] = 1;
  std::copy(x.begin(), x.end(), out.begin() + static_cast<std::ptrdiff_t>(r - 1));
  return out;
}

PointSet cayley_embed(const PartitionedPointSet& pps, const CayleyConfig& cfg) {
  cfg.validate();
  if (cfg.r != pps.r()) {
    throw std::invalid_argument("Cayley config is for " + std::to_string(cfg.r) +
                                " parts, point set has " + std::to_string(pps.r()));
  }
  const std::size_t r = pps.r();
  std::vector<Point> points;
  std::vector<std::string> labels;
  points.reserve(pps.total_size());
  labels.reserve(pps.total_size());
  for (std::size_t i = 0; i < r; ++i) {
    const auto& part = pps.part(i);
    for (std::size_t j = 0; j < part.size(); ++j) {
      points.push_back(cayley_lift(i, part.points[j], r));
      labels.push_back(std::to_string(i) + ":" +
                       (part.labels.empty() ? std::to_string(j) : part.labels[j]));
    }
  }
  return PointSet(r - 1 + pps.ambient_dim(), std::move(points), std::move(labels));
}

std::vector<std::size_t> spanning_face_counts(const FaceLattice& cayley_lattice,
                                              const PartitionedPointSet& pps) {
  if (cayley_lattice.num_points() != pps.total_size()) {
    throw std::invalid_argument("lattice has " + std::to_string(cayley_lattice.num_points()) +
                                " points, partition has " + std::to_string(pps.total_size()));
  }
  const std::size_t r = pps.r();
  const std::size_t d = pps.ambient_dim();
  std::vector<std::size_t> g(d, 0);
  for (const auto& face : cayley_lattice.faces()) {
    if (face.dim == cayley_lattice.polytope_dim()) continue;
    if (face.dim + 1 < r || face.dim + 1 > d + r - 1) continue;
    if (pps.is_spanning(face.vertices)) ++g[face.dim + 1 - r];
  }
  return g;
}

std::vector<std::size_t> minksum_from_cayley(const FaceLattice& cayley_lattice,
                                             const PartitionedPointSet& pps) {
  const std::size_t r = pps.r();
  if (cayley_lattice.polytope_dim() + 1 < r) {
    throw std::logic_error("Cayley polytope is too small to span every part");
  }
  const std::size_t sum_dim = cayley_lattice.polytope_dim() - (r - 1);
  auto g = spanning_face_counts(cayley_lattice, pps);
  g.resize(sum_dim);
  return g;
}

std::vector<std::size_t> minksum_via_cayley(const PartitionedPointSet& pps,
                                            const CayleyConfig& cfg) {
  return minksum_from_cayley(convex_hull(cayley_embed(pps, cfg)), pps);
}

PointSet minkowski_points(const PartitionedPointSet& pps) {
  const std::size_t d = pps.ambient_dim();
  std::vector<Point> sums{Point(d)};
  for (const auto& part : pps.parts()) {
    std::vector<Point> next;
    next.reserve(sums.size() * part.size());
    for (const auto& s : sums) {
      for (const auto& p : part.points) {
        Point q = s;
        for (std::size_t c = 0; c < d; ++c) q[c] += p[c];
        next.push_back(std::move(q));
      }
    }
    sums = std::move(next);
  }
  return PointSet(d, std::move(sums));
}

std::vector<std::size_t> minksum_direct(const PartitionedPointSet& pps) {
  return convex_hull(minkowski_points(pps)).f_vector();
}

}  // namespace cayleysum
