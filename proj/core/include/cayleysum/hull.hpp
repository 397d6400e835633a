#pragma once

// Exact convex hulls and face lattices of V-polytopes.

#include "cayleysum/exact.hpp"

#include <compare>
#include <cstddef>
#include <set>
#include <span>
#include <string>
#include <vector>

namespace cayleysum {

/// Points in Q^D, optionally labeled.
struct PointSet {
  std::size_t ambient_dim = 0;
  std::vector<Point> points;
  /// Either empty or one unique label per point.
  std::vector<std::string> labels;

  PointSet() = default;
  PointSet(std::size_t dim, std::vector<Point> pts, std::vector<std::string> point_labels = {});

  [[nodiscard]] std::size_t size() const noexcept { return points.size(); }
  [[nodiscard]] bool empty() const noexcept { return points.empty(); }

  /// Throws DimensionError / std::invalid_argument when an invariant is broken.
  void validate() const;
};

/// A face, identified by the (sorted) indices of its vertices in the
/// generating point set.
struct Face {
  std::size_t dim = 0;
  std::vector<std::size_t> vertices;

  friend auto operator<=>(const Face&, const Face&) = default;
};

/// All nonempty faces of a polytope, including the polytope itself.
/// The empty face is not stored.
class FaceLattice {
 public:
  /// Validates index ranges, per-dimension sorting and the Euler relation;
  /// throws std::logic_error if the face data is inconsistent.
  FaceLattice(std::size_t ambient_dim, std::size_t polytope_dim, std::size_t num_points,
              std::vector<Face> faces);

  [[nodiscard]] std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  [[nodiscard]] std::size_t polytope_dim() const noexcept { return polytope_dim_; }
  /// Size of the generating point set (vertex indices are below this).
  [[nodiscard]] std::size_t num_points() const noexcept { return num_points_; }

  /// Faces ordered by (dim, vertices).
  [[nodiscard]] const std::vector<Face>& faces() const noexcept { return faces_; }
  /// f_0 .. f_{polytope_dim - 1}.
  [[nodiscard]] const std::vector<std::size_t>& f_vector() const noexcept { return f_vector_; }
  /// Indices of the points that are vertices, sorted.
  [[nodiscard]] const std::vector<std::size_t>& vertices() const noexcept { return vertices_; }

  [[nodiscard]] std::vector<Face> faces_of_dim(std::size_t dim) const;
  [[nodiscard]] std::vector<Face> facets() const;

  /// Exact lookup of a sorted, duplicate-free vertex index set.
  [[nodiscard]] bool contains(const std::vector<std::size_t>& sorted_vertices) const;

 private:
  std::size_t ambient_dim_;
  std::size_t polytope_dim_;
  std::size_t num_points_;
  std::vector<Face> faces_;
  std::vector<std::size_t> f_vector_;
  std::vector<std::size_t> vertices_;
  std::set<std::vector<std::size_t>> index_;
};

enum class HullMethod {
  /// Double description on the homogenized point cone.
  kDoubleDescription,
  /// Every affinely independent subset spans a candidate hyperplane.
  /// O(C(n, d)) candidates; only practical for small inputs.
  kExhaustive,
};

/// Complete face lattice of conv(points). Works in the affine hull when the
/// points are not full-dimensional. Duplicate points are represented by their
/// first occurrence; points that are not vertices never appear in a face.
/// Throws std::invalid_argument on empty input.
FaceLattice convex_hull(const PointSet& points,
                        HullMethod method = HullMethod::kDoubleDescription);

/// True iff the index set (sorted and deduplicated first) is the vertex set
/// of a face. Throws std::out_of_range for an index outside the point set.
bool is_face(const FaceLattice& lattice, std::span<const std::size_t> vertex_indices);

/// Largest k such that every vertex subset of size <= k is a proper face,
/// capped at f_0 - 1.
std::size_t neighborliness(const FaceLattice& lattice);

/// neighborliness >= floor(polytope_dim / 2).
bool is_neighborly(const FaceLattice& lattice);

/// Affine hyperplane {x : offset + normal . x = 0} with the polytope on the
/// side where the expression is >= 0.
struct Hyperplane {
  Rational offset;
  std::vector<Rational> normal;

  [[nodiscard]] Rational evaluate(std::span<const Rational> x) const;
};

/// Supporting hyperplane of a facet, recomputed from the facet's vertices
/// and oriented towards the rest of the point set. Requires a full-dimensional
/// polytope.
Hyperplane facet_hyperplane(const PointSet& points, const FaceLattice& lattice,
                            const Face& facet);

}  // namespace cayleysum
