#include "cayleysum/hull.hpp"

#include <boost/dynamic_bitset.hpp>

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>
#include <stdexcept>
#include <unordered_set>

namespace cayleysum {

PointSet::PointSet(std::size_t dim, std::vector<Point> pts, std::vector<std::string> point_labels)
    : ambient_dim(dim), points(std::move(pts)), labels(std::move(point_labels)) {
  validate();
}

void PointSet::validate() const {
  for (const auto& p : points) {
    if (p.size() != ambient_dim) {
      throw DimensionError("point has " + std::to_string(p.size()) + " coordinates, expected " +
                           std::to_string(ambient_dim));
    }
  }
  if (!labels.empty()) {
    if (labels.size() != points.size()) {
      throw std::invalid_argument("label count does not match point count");
    }
    std::unordered_set<std::string> seen(labels.begin(), labels.end());
    if (seen.size() != labels.size()) throw std::invalid_argument("point labels are not unique");
  }
}

FaceLattice::FaceLattice(std::size_t ambient_dim, std::size_t polytope_dim,
                         std::size_t num_points, std::vector<Face> faces)
    : ambient_dim_(ambient_dim),
      polytope_dim_(polytope_dim),
      num_points_(num_points),
      faces_(std::move(faces)),
      f_vector_(polytope_dim, 0) {
  std::sort(faces_.begin(), faces_.end());
  for (const auto& f : faces_) {
    if (f.vertices.empty()) throw std::logic_error("empty face stored in lattice");
    if (!std::is_sorted(f.vertices.begin(), f.vertices.end()) ||
        std::adjacent_find(f.vertices.begin(), f.vertices.end()) != f.vertices.end()) {
      throw std::logic_error("face vertex list not sorted and unique");
    }
    if (f.vertices.back() >= num_points_) throw std::logic_error("face vertex index out of range");
    if (f.dim > polytope_dim_) throw std::logic_error("face dimension exceeds polytope dimension");
    if (f.dim < polytope_dim_) ++f_vector_[f.dim];
    if (f.dim == 0) vertices_.push_back(f.vertices.front());
    if (!index_.insert(f.vertices).second) throw std::logic_error("duplicate face in lattice");
  }
  if (polytope_dim_ == 0) {
    for (const auto& f : faces_) vertices_.push_back(f.vertices.front());
  }
  std::sort(vertices_.begin(), vertices_.end());

  // Euler: sum (-1)^k f_k = 1 - (-1)^d.
  long euler = 0;
  for (std::size_t k = 0; k < f_vector_.size(); ++k) {
    euler += (k % 2 == 0 ? 1L : -1L) * static_cast<long>(f_vector_[k]);
  }
  const long expected = polytope_dim_ == 0 ? 0 : (polytope_dim_ % 2 == 0 ? 0 : 2);
  if (euler != expected) {
    throw std::logic_error("face lattice violates the Euler relation");
  }
}

std::vector<Face> FaceLattice::faces_of_dim(std::size_t dim) const {
  std::vector<Face> out;
  for (const auto& f : faces_) {
    if (f.dim == dim) out.push_back(f);
  }
  return out;
}

std::vector<Face> FaceLattice::facets() const {
  if (polytope_dim_ == 0) return {};
  return faces_of_dim(polytope_dim_ - 1);
}

bool FaceLattice::contains(const std::vector<std::size_t>& sorted_vertices) const {
  return index_.contains(sorted_vertices);
}

namespace {

using Bits = boost::dynamic_bitset<>;

Integer dot(const std::vector<Integer>& a, const std::vector<Integer>& b) {
  Integer s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

int sign_of(const Integer& x) { return sgn(x); }

// Extreme rays of {h : a_j . h >= 0 for all j}; returns, per ray, the set of
// rows a_j with a_j . h = 0. Rows must have full column rank.
std::vector<Bits> facets_double_description(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  const std::size_t m = a.front().size();

  std::vector<std::size_t> basis;
  {
    std::vector<std::vector<Integer>> chosen;
    for (std::size_t i = 0; i < n && basis.size() < m; ++i) {
      chosen.push_back(a[i]);
      if (rank(chosen) == chosen.size()) {
        basis.push_back(i);
      } else {
        chosen.pop_back();
      }
    }
  }
  if (basis.size() != m) throw std::logic_error("double description needs full column rank");

  // Rays of the initial simplicial cone: columns of sign(det B) * adj(B).
  std::vector<Integer> b_entries;
  b_entries.reserve(m * m);
  for (auto i : basis) b_entries.insert(b_entries.end(), a[i].begin(), a[i].end());
  const int det_sign = sign_of(determinant(b_entries, m));

  std::vector<std::vector<Integer>> rays(m, std::vector<Integer>(m));
  std::vector<Integer> minor;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      minor.clear();
      for (std::size_t r = 0; r < m; ++r) {
        if (r == i) continue;
        for (std::size_t c = 0; c < m; ++c) {
          if (c != k) minor.push_back(b_entries[r * m + c]);
        }
      }
      Integer cof = determinant(minor, m - 1);
      if ((i + k) % 2 == 1) cof = -cof;
      rays[i][k] = det_sign > 0 ? cof : Integer(-cof);
    }
    normalize_by_gcd(rays[i]);
  }
  std::vector<Bits> zeros(m, Bits(n));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (j != i) zeros[i].set(basis[j]);
    }
  }

  std::vector<bool> in_basis(n, false);
  for (auto i : basis) in_basis[i] = true;

  std::vector<Integer> values;
  for (std::size_t row = 0; row < n; ++row) {
    if (in_basis[row]) continue;
    values.resize(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t r = 0; r < rays.size(); ++r) {
      values[r] = dot(a[row], rays[r]);
      const int s = sign_of(values[r]);
      if (s > 0) {
        pos.push_back(r);
      } else if (s < 0) {
        neg.push_back(r);
      } else {
        zeros[r].set(row);
      }
    }
    if (neg.empty()) continue;

    std::vector<std::vector<Integer>> next_rays;
    std::vector<Bits> next_zeros;
    for (auto p : pos) {
      for (auto q : neg) {
        Bits common = zeros[p] & zeros[q];
        if (common.count() + 2 < m) continue;
        bool adjacent = true;
        for (std::size_t s = 0; s < zeros.size() && adjacent; ++s) {
          if (s != p && s != q && common.is_subset_of(zeros[s])) adjacent = false;
        }
        if (!adjacent) continue;
        // values[p] > 0 > values[q], so this is a positive combination on the new hyperplane.
        std::vector<Integer> ray(m);
        for (std::size_t c = 0; c < m; ++c) ray[c] = values[p] * rays[q][c] - values[q] * rays[p][c];
        normalize_by_gcd(ray);
        next_rays.push_back(std::move(ray));
        common.set(row);
        next_zeros.push_back(std::move(common));
      }
    }
    for (std::size_t r = rays.size(); r-- > 0;) {
      if (sign_of(values[r]) < 0) {
        rays.erase(rays.begin() + static_cast<std::ptrdiff_t>(r));
        zeros.erase(zeros.begin() + static_cast<std::ptrdiff_t>(r));
      }
    }
    for (std::size_t i = 0; i < next_rays.size(); ++i) {
      rays.push_back(std::move(next_rays[i]));
      zeros.push_back(std::move(next_zeros[i]));
    }
  }
  return zeros;
}

// Facets by scanning every (m-1)-subset of rows for a supporting hyperplane.
std::vector<Bits> facets_exhaustive(const std::vector<std::vector<Integer>>& a) {
  const std::size_t n = a.size();
  const std::size_t m = a.front().size();
  const std::size_t k = m - 1;
  std::vector<Bits> facets;
  std::set<std::vector<Integer>> seen;
  if (n < k) return facets;

  std::vector<std::size_t> subset(k);
  std::iota(subset.begin(), subset.end(), std::size_t{0});
  std::vector<Integer> minor;
  std::vector<Integer> normal(m);
  while (true) {
    // normal_c = (-1)^c det(rows of subset without column c): orthogonal to every row in it.
    for (std::size_t c = 0; c < m; ++c) {
      minor.clear();
      for (auto r : subset) {
        for (std::size_t j = 0; j < m; ++j) {
          if (j != c) minor.push_back(a[r][j]);
        }
      }
      normal[c] = determinant(minor, k);
      if (c % 2 == 1) normal[c] = -normal[c];
    }
    if (std::any_of(normal.begin(), normal.end(), [](const Integer& x) { return x != 0; })) {
      bool has_pos = false;
      bool has_neg = false;
      Bits incident(n);
      for (std::size_t j = 0; j < n && !(has_pos && has_neg); ++j) {
        const int s = sign_of(dot(a[j], normal));
        if (s > 0) has_pos = true;
        if (s < 0) has_neg = true;
        if (s == 0) incident.set(j);
      }
      if (!(has_pos && has_neg)) {
        if (has_neg) {
          for (auto& x : normal) x = -x;
        }
        auto key = normal;
        normalize_by_gcd(key);
        if (seen.insert(std::move(key)).second) facets.push_back(std::move(incident));
      }
    }
    // Next k-combination in lexicographic order.
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + i - 1) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return facets;
}

std::vector<std::size_t> to_indices(const Bits& b, const std::vector<std::size_t>& original) {
  std::vector<std::size_t> out;
  out.reserve(b.count());
  for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) out.push_back(original[i]);
  return out;
}

}  // namespace

FaceLattice convex_hull(const PointSet& points, HullMethod method) {
  points.validate();
  if (points.empty()) throw std::invalid_argument("convex hull of an empty point set");

  // Duplicates collapse onto their first occurrence.
  std::map<Point, std::size_t> first_index;
  std::vector<Point> unique;
  std::vector<std::size_t> original;
  for (std::size_t i = 0; i < points.size(); ++i) {
    if (first_index.emplace(points.points[i], i).second) {
      unique.push_back(points.points[i]);
      original.push_back(i);
    }
  }
  const std::size_t n = unique.size();

  const auto pivots = affine_pivot_coordinates(unique);
  const std::size_t dim = pivots.size();
  if (dim == 0) {
    return FaceLattice(points.ambient_dim, 0, points.size(), {Face{0, {original.front()}}});
  }

  // Homogenized, integer-scaled coordinates in the affine hull.
  std::vector<std::vector<Integer>> rows;
  rows.reserve(n);
  for (const auto& p : unique) {
    std::vector<Rational> h;
    h.reserve(dim + 1);
    h.emplace_back(1);
    for (auto c : pivots) h.push_back(p[c]);
    rows.push_back(to_integer_vector(h));
  }

  std::vector<Bits> facets = method == HullMethod::kExhaustive ? facets_exhaustive(rows)
                                                               : facets_double_description(rows);

  // A point is a vertex iff the facets through it meet in that point alone.
  Bits vertex_mask(n);
  for (std::size_t j = 0; j < n; ++j) {
    Bits meet(n);
    meet.set();
    for (const auto& f : facets) {
      if (f.test(j)) meet &= f;
    }
    if (meet.count() == 1) vertex_mask.set(j);
  }
  for (auto& f : facets) f &= vertex_mask;

  std::set<Bits> proper;
  std::deque<Bits> queue;
  for (const auto& f : facets) {
    if (proper.insert(f).second) queue.push_back(f);
  }
  while (!queue.empty()) {
    const Bits face = std::move(queue.front());
    queue.pop_front();
    for (const auto& f : facets) {
      Bits meet = face & f;
      if (meet.none() || meet == face) continue;
      if (proper.insert(meet).second) queue.push_back(std::move(meet));
    }
  }

  auto face_dim = [&](const Bits& b) {
    std::vector<std::vector<Integer>> sub;
    for (auto i = b.find_first(); i != Bits::npos; i = b.find_next(i)) sub.push_back(rows[i]);
    return rank(std::move(sub)) - 1;
  };

  std::vector<Face> faces;
  faces.reserve(proper.size() + 1);
  for (const auto& b : proper) {
    const std::size_t d = face_dim(b);
    if (d >= dim) throw std::logic_error("proper face is not lower-dimensional");
    faces.push_back(Face{d, to_indices(b, original)});
  }
  for (const auto& f : facets) {
    if (face_dim(f) + 1 != dim) throw std::logic_error("facet has the wrong dimension");
  }
  faces.push_back(Face{dim, to_indices(vertex_mask, original)});
  return FaceLattice(points.ambient_dim, dim, points.size(), std::move(faces));
}

bool is_face(const FaceLattice& lattice, std::span<const std::size_t> vertex_indices) {
  std::vector<std::size_t> key(vertex_indices.begin(), vertex_indices.end());
  for (auto i : key) {
    if (i >= lattice.num_points()) {
      throw std::out_of_range("vertex index " + std::to_string(i) + " outside point set of size " +
                              std::to_string(lattice.num_points()));
    }
  }
  std::sort(key.begin(), key.end());
  key.erase(std::unique(key.begin(), key.end()), key.end());
  return lattice.contains(key);
}

std::size_t neighborliness(const FaceLattice& lattice) {
  const auto& verts = lattice.vertices();
  const std::size_t f0 = verts.size();
  if (f0 <= 1) return 0;
  const auto& full = lattice.faces().back().vertices;

  std::size_t level = 0;
  for (std::size_t k = 1; k < f0; ++k) {
    std::vector<std::size_t> pick(k);
    std::iota(pick.begin(), pick.end(), std::size_t{0});
    std::vector<std::size_t> subset(k);
    bool all_faces = true;
    while (all_faces) {
      for (std::size_t i = 0; i < k; ++i) subset[i] = verts[pick[i]];
      if (subset == full || !lattice.contains(subset)) all_faces = false;
      std::size_t i = k;
      while (i > 0 && pick[i - 1] == f0 - k + i - 1) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < k; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!all_faces) break;
    level = k;
  }
  return level;
}

bool is_neighborly(const FaceLattice& lattice) {
  return neighborliness(lattice) >= lattice.polytope_dim() / 2;
}

Rational Hyperplane::evaluate(std::span<const Rational> x) const {
  if (x.size() != normal.size()) throw DimensionError("hyperplane/point dimension mismatch");
  Rational s = offset;
  for (std::size_t i = 0; i < x.size(); ++i) s += normal[i] * x[i];
  return s;
}

Hyperplane facet_hyperplane(const PointSet& points, const FaceLattice& lattice,
                            const Face& facet) {
  const std::size_t d = points.ambient_dim;
  if (lattice.polytope_dim() != d || facet.dim + 1 != d) {
    throw std::invalid_argument("facet_hyperplane needs a facet of a full-dimensional polytope");
  }
  // Pick d affinely independent vertices of the facet.
  std::vector<Point> basis;
  for (auto v : facet.vertices) {
    basis.push_back(points.points[v]);
    if (affine_rank(basis) + 1 != basis.size()) basis.pop_back();
    if (basis.size() == d) break;
  }
  // Coefficients of the (d+1)-vector (offset, normal) orthogonal to every (1, p).
  Hyperplane h;
  h.normal.resize(d);
  for (std::size_t c = 0; c <= d; ++c) {
    Matrix m(d, d);
    for (std::size_t r = 0; r < d; ++r) {
      std::size_t col = 0;
      for (std::size_t j = 0; j <= d; ++j) {
        if (j == c) continue;
        m(r, col++) = j == 0 ? Rational(1) : basis[r][j - 1];
      }
    }
    Rational v = determinant(m);
    if (c % 2 == 1) v = -v;
    if (c == 0) {
      h.offset = v;
    } else {
      h.normal[c - 1] = v;
    }
  }
  for (const auto& p : points.points) {
    if (h.evaluate(p) < 0) {
      h.offset = -h.offset;
      for (auto& x : h.normal) x = -x;
      break;
    }
  }
  return h;
}

}  // namespace cayleysum
