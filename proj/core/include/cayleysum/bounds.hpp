#pragma once

// Face-count bounds for Minkowski sums.

#include "cayleysum/exact.hpp"

#include <cstddef>
#include <span>
#include <vector>

namespace cayleysum {

/// Vertex counts n_1..n_r of r summands living in R^d.
struct VertexProfile {
  std::size_t d = 0;
  std::vector<std::size_t> n;

  [[nodiscard]] std::size_t r() const noexcept { return n.size(); }
  /// Throws std::invalid_argument unless r >= 1, d >= 1 and every n_i >= 1.
  void validate() const;
};

/// Sum over compositions (s_1..s_r) of ell with 1 <= s_i <= n_i of
/// prod C(n_i, s_i). Throws std::invalid_argument for ell < r or n_i = 0.
Integer phi(std::size_t ell, std::span<const std::size_t> n);

/// phi(k + r): the number of spanning (k+r)-subsets.
/// Requires k <= d - 1.
Integer trivial_upper_bound(std::size_t k, const VertexProfile& profile);

struct ThreePolytopeBounds {
  Integer f0;
  Integer f1;
  Integer f2;
};

/// Upper bounds on f_0, f_1, f_2 of the sum of two 3-polytopes with m1 and m2
/// facets. Throws std::invalid_argument if either m < 4.
ThreePolytopeBounds three_polytope_bounds(long m1, long m2);

/// f-vector f_0..f_{dim-1} of the cyclic polytope C_dim(n), from an exact hull
/// of the points (t, t^2, ..., t^dim) for t = 1..n. Requires n >= dim + 1.
std::vector<Integer> cyclic_f_vector(std::size_t dim, std::size_t n);

/// Same f-vector from the h-vector of a neighborly simplicial polytope.
std::vector<Integer> cyclic_f_vector_closed_form(std::size_t dim, std::size_t n);

enum class CyclicSource { kHull, kClosedForm };

/// Upper bound on f_{k-1}(P1 + P2) for d-polytopes with n1, n2 vertices,
/// 1 <= k <= d, d >= 3, n_i >= d + 1.
Integer two_polytope_bound(std::size_t k, std::size_t d, std::size_t n1, std::size_t n2,
                           CyclicSource source = CyclicSource::kHull);

/// Maximum number of l-faces of a d-zonotope with n pairwise non-parallel
/// generators. Requires l <= d - 1 and n >= 1.
Integer zonotope_bound(std::size_t l, std::size_t n, std::size_t d);

struct ManySummandBounds {
  /// floor((1 - 1/(d+1)^d) * prod n_i)
  Integer sanyal;
  /// Exact maximum of f_0 for r >= d summands.
  Integer weibel;
};

/// Requires r >= d >= 3.
ManySummandBounds many_summand_f0_bounds(const VertexProfile& profile);

}  // namespace cayleysum
