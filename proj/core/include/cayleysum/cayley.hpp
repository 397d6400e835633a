#pragma once

// The Cayley trick: face counts of a Minkowski sum from the spanning faces
// of the Cayley polytope, plus a direct vertex-sum oracle.

#include "cayleysum/hull.hpp"

#include <cstddef>
#include <vector>

namespace cayleysum {

/// r >= 2 nonempty point sets in a common R^d. Global point indices run
/// through part 0 first, then part 1, and so on.
class PartitionedPointSet {
 public:
  explicit PartitionedPointSet(std::vector<PointSet> parts);

  [[nodiscard]] std::size_t r() const noexcept { return parts_.size(); }
  [[nodiscard]] std::size_t ambient_dim() const noexcept { return parts_.front().ambient_dim; }
  [[nodiscard]] std::size_t total_size() const noexcept { return part_of_.size(); }
  [[nodiscard]] const std::vector<PointSet>& parts() const noexcept { return parts_; }
  [[nodiscard]] const PointSet& part(std::size_t i) const { return parts_.at(i); }

  [[nodiscard]] std::size_t part_of(std::size_t global_index) const {
    return part_of_.at(global_index);
  }
  [[nodiscard]] std::size_t offset(std::size_t part) const { return offsets_.at(part); }
  [[nodiscard]] std::vector<std::size_t> sizes() const;

  /// True iff the global indices meet every part.
  [[nodiscard]] bool is_spanning(const std::vector<std::size_t>& global_indices) const;

 private:
  std::vector<PointSet> parts_;
  std::vector<std::size_t> part_of_;
  std::vector<std::size_t> offsets_;
};

/// Affine basis e_0 = 0, e_1..e_{r-1} of R^{r-1} and positive weights
/// summing to 1. The weights only locate the section flat; face counts
/// never depend on them.
struct CayleyConfig {
  std::size_t r = 2;
  std::vector<Rational> weights;

  /// Equal weights 1/r.
  static CayleyConfig averaging(std::size_t r);
  void validate() const;
};

/// (e_part, x) in R^{r-1} x R^d.
Point cayley_lift(std::size_t part, std::span<const Rational> x, std::size_t r);

/// Every point of part i lifted to (e_i, v). Labels become "i:label" (or
/// "i:j" for unlabeled parts). Throws std::invalid_argument if cfg.r != r.
PointSet cayley_embed(const PartitionedPointSet& pps, const CayleyConfig& cfg);

/// g_{k-1} for k = r..d+r-1: proper (k-1)-faces of the Cayley polytope whose
/// vertex set meets every part. Throws std::invalid_argument if the lattice
/// was not built on a point set of the same size.
std::vector<std::size_t> spanning_face_counts(const FaceLattice& cayley_lattice,
                                              const PartitionedPointSet& pps);

/// f-vector of the Minkowski sum read off a Cayley lattice; its length is the
/// dimension of the sum.
std::vector<std::size_t> minksum_from_cayley(const FaceLattice& cayley_lattice,
                                             const PartitionedPointSet& pps);

std::vector<std::size_t> minksum_via_cayley(const PartitionedPointSet& pps,
                                            const CayleyConfig& cfg);

/// All prod n_i vertex sums, in lexicographic order of the part indices.
PointSet minkowski_points(const PartitionedPointSet& pps);

/// f-vector of the hull of all vertex sums.
std::vector<std::size_t> minksum_direct(const PartitionedPointSet& pps);

}  // namespace cayleysum
