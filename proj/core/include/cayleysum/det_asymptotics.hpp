#pragma once

// Block determinants in a small parameter tau: Laplace expansion, Vandermonde
// determinants, and the lowest-order term of the structured family Delta(tau).

#include "cayleysum/exact.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace cayleysum {

/// prod_{i<j} (x_j - x_i); 1 for fewer than two values.
Rational vandermonde(std::span<const Rational> x);

/// det [x_j^{mu_i}]. Throws std::invalid_argument on a length mismatch or
/// exponents that are not strictly increasing.
Rational gvd(std::span<const Rational> x, std::span<const unsigned long> mu);

struct LaplaceTerm {
  /// 0-based rows paired with the column block.
  std::vector<std::size_t> rows;
  std::vector<std::size_t> cols;
  /// (-1)^{|rows| + |cols|} with 1-based positions.
  int sign = 1;
  Rational minor;
  Rational complement;

  [[nodiscard]] Rational value() const { return sign * minor * complement; }
};

/// Expansion of det(m) along the given columns (sorted, 0-based, nonempty):
/// one term per row subset of the same size.
std::vector<LaplaceTerm> laplace_expand(const Matrix& m, const std::vector<std::size_t>& cols);

/// Blocks i = 1..n of sizes kappa_i >= 2, each with strictly increasing
/// positive x_{i,1..kappa_i}, and strictly decreasing beta_i >= 0.
struct DeltaSpec {
  std::vector<std::size_t> kappa;
  std::vector<unsigned long> beta;
  std::vector<std::vector<Rational>> x;

  [[nodiscard]] std::size_t n() const noexcept { return kappa.size(); }
  [[nodiscard]] std::size_t K() const;
  /// n(n-1)/2
  [[nodiscard]] std::size_t N() const noexcept { return n() * (n() - 1) / 2; }
  /// Highest power row, K - 2n + 1.
  [[nodiscard]] std::size_t m() const { return K() - 2 * n() + 1; }
  /// Power of x carried by a 0-based row: 0 for indicator rows, 1 for linear
  /// rows, p for the p-th power row.
  [[nodiscard]] unsigned long row_power(std::size_t row) const;

  void validate() const;
};

/// K x K matrix: n indicator rows, n linear rows x tau^beta, then power rows
/// p = 2..m across all columns.
Matrix build_delta(const DeltaSpec& spec, const Rational& tau);

/// (-1)^N det(build_delta(spec, tau)).
Rational delta_value(const DeltaSpec& spec, const Rational& tau);

struct LeadingTerm {
  /// 1-based rows per block.
  std::vector<std::vector<std::size_t>> rho;
  std::vector<std::vector<std::size_t>> alpha;
  unsigned long theta = 0;
  Rational coefficient;
};

/// Predicted lowest-order term of Delta(tau).
LeadingTerm leading_term(const DeltaSpec& spec);

/// One term of the block-by-block Laplace expansion of Delta.
struct DeltaBlockTerm {
  /// 0-based rows chosen for each column block.
  std::vector<std::vector<std::size_t>> rows;
  /// tau exponent of the term.
  unsigned long exponent = 0;
  /// Signed contribution at tau = 1, including (-1)^N.
  Rational value;
};

/// Every term of the iterated expansion (prod C(K - K_{i-1}, kappa_i) of
/// them). Throws std::invalid_argument when K exceeds max_K.
std::vector<DeltaBlockTerm> delta_block_terms(const DeltaSpec& spec, std::size_t max_K = 8);

/// Delta(tau) as {exponent: coefficient}, zero coefficients dropped.
std::map<unsigned long, Rational> delta_polynomial(const DeltaSpec& spec, std::size_t max_K = 8);

struct RatioSample {
  Rational tau;
  /// |Delta(tau) / (coefficient tau^theta) - 1|
  Rational deviation;
};

struct Lemma2Report {
  bool found = false;
  Rational tau0;
  std::size_t halvings = 0;
  Rational delta_at_tau0;
  Rational delta_at_half;
  LeadingTerm leading;
  std::vector<RatioSample> samples;
  /// Deviations never increase along the samples.
  bool ratio_converging = false;

  [[nodiscard]] bool passed() const { return found && ratio_converging; }
};

/// Halving search for tau0 with Delta(tau0) > 0 and Delta(tau0/2) > 0, then
/// the ratio check at each tau in `sample_taus`.
Lemma2Report verify_lemma2(const DeltaSpec& spec, unsigned max_halvings = 64,
                           const std::vector<Rational>& sample_taus = {Rational(1, 1024),
                                                                       Rational(1, 1048576)});

}  // namespace cayleysum
