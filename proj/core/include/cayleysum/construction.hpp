#pragma once

// Lower-bound family: r perturbed moment curves whose Minkowski sum attains
// the trivial upper bound, with exact determinant certificates.

#include "cayleysum/cayley.hpp"
#include "cayleysum/check.hpp"

#include <cstddef>
#include <vector>

namespace cayleysum {

/// Parts are 0-based in code: part i here is curve i+1 of the construction.
struct ConstructionParams {
  std::size_t d = 3;
  std::size_t r = 2;
  std::vector<std::size_t> n;
  /// alpha[i][j], strictly increasing and positive within each part.
  std::vector<std::vector<Rational>> alpha;
  /// Strictly decreasing, last entry 0.
  std::vector<unsigned long> nu;
  Rational epsilon;
  Rational M;
  Rational tau = 1;
  Rational zeta = 0;

  /// alpha_{i,j} = j, nu_i = r - i, epsilon = 1/4, M = n_r + 1, tau = 1, zeta = 0.
  static ConstructionParams defaults(std::size_t d, std::size_t r, std::vector<std::size_t> n);

  /// Throws std::invalid_argument naming the first violated constraint.
  void validate() const;

  [[nodiscard]] std::size_t total_points() const;
  /// floor((d + r - 1) / 2), the largest witness subset size.
  [[nodiscard]] std::size_t max_witness_size() const { return (d + r - 1) / 2; }
};

enum class CurveVariant { kUnperturbed, kPerturbed };

/// Point on curve `part` at parameter t. The perturbed variant fills the r-1
/// vanishing slots with zeta t^{d-r+2}, ..., zeta t^d from left to right.
/// Throws std::invalid_argument for t <= 0.
Point moment_curve_point(std::size_t part, const Rational& t, const ConstructionParams& params,
                         CurveVariant variant);

/// Part i holds the curve points at alpha_{i,j} tau^{nu_i}.
PartitionedPointSet generate_family(const ConstructionParams& params, CurveVariant variant);

/// A spanning subset given by sorted 0-based indices per part.
struct WitnessSubset {
  std::vector<std::vector<std::size_t>> members;

  [[nodiscard]] std::size_t size() const;
  /// Global indices into the family (part-major order).
  [[nodiscard]] std::vector<std::size_t> global_indices(const std::vector<std::size_t>& n) const;
  /// Throws std::invalid_argument unless the subset is spanning, sorted,
  /// within range and of size r..max_witness_size.
  void validate(const ConstructionParams& params) const;
};

/// All spanning subsets of size k, in lexicographic order of global indices.
std::vector<WitnessSubset> spanning_subsets(const std::vector<std::size_t>& n, std::size_t k);

/// The (d+r) x (d+r) witness determinant at x in R^{d+r-1}. kUnperturbed gives
/// H_U, kPerturbed gives F_V at params.zeta.
Rational witness_determinant(const WitnessSubset& subset, std::span<const Rational> x,
                             const ConstructionParams& params, CurveVariant variant);

inline Rational witness_H(const WitnessSubset& subset, std::span<const Rational> x,
                          const ConstructionParams& params) {
  return witness_determinant(subset, x, params, CurveVariant::kUnperturbed);
}

inline Rational witness_F(const WitnessSubset& subset, std::span<const Rational> x,
                          const ConstructionParams& params) {
  return witness_determinant(subset, x, params, CurveVariant::kPerturbed);
}

/// The witness determinant is affine in x; this is it as offset + normal . x.
Hyperplane witness_hyperplane(const WitnessSubset& subset, const ConstructionParams& params,
                              CurveVariant variant);

struct SearchCertificate {
  bool found = false;
  /// The certified tau (or zeta); the last value tried if not found.
  Rational value;
  std::size_t halvings = 0;
  /// Witness determinants evaluated at the certified value.
  std::size_t checks = 0;
};

/// Number of witness checks per parameter value:
/// sum over k = r..floor((d+r-1)/2) of (sum n - k) * phi_k(n).
Integer witness_check_count(const ConstructionParams& params);

/// True iff every witness determinant of `variant` is positive at the
/// parameters as given; `checks` counts evaluations (stops at the first
/// failure).
bool witnesses_positive(const ConstructionParams& params, CurveVariant variant,
                        std::size_t& checks);

/// First tau in 1, 1/2, 1/4, ... with every H_U(u) > 0.
SearchCertificate find_tau_star(const ConstructionParams& params, unsigned max_halvings = 64);

/// First zeta in 1, 1/2, ... with every F_V(v; zeta) > 0, at params.tau.
SearchCertificate find_zeta_diamond(const ConstructionParams& params,
                                    unsigned max_halvings = 64);

struct NeighborlyResult {
  std::size_t polytope_dim = 0;
  std::size_t neighborliness = 0;
  /// polytope_dim == d and neighborliness >= floor(d/2).
  bool ok = false;
};

/// Hull of every perturbed part. Throws std::invalid_argument if zeta <= 0.
std::vector<NeighborlyResult> verify_neighborly(const ConstructionParams& params);

struct TightnessReport {
  ConstructionParams params;
  SearchCertificate tau;
  SearchCertificate zeta;
  std::vector<std::size_t> cayley_f_vector;
  std::vector<std::size_t> direct_f_vector;
  /// phi_{k+r}(n) for k = 0..floor((d+r-1)/2) - r.
  std::vector<Integer> phi;
  std::vector<NeighborlyResult> neighborly;
  std::vector<Check> checks;

  [[nodiscard]] bool passed() const { return all_pass(checks); }
};

/// Defaults, tau*, zeta, perturbed family, both Minkowski oracles, and the
/// hull-side face checks for every witness subset.
TightnessReport verify_tightness(std::size_t d, std::size_t r, const std::vector<std::size_t>& n,
                                 unsigned max_halvings = 64);

}  // namespace cayleysum
