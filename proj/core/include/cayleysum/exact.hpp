#pragma once

// Exact rational arithmetic, dense matrices over Q, determinants and ranks.
//
// Everything geometric in cayleysum is built on these types; nothing here
// touches floating point.

#include <gmpxx.h>

#include <cstddef>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace cayleysum {

using Integer = mpz_class;
/// Arbitrary-precision rational, always kept in canonical form
/// (positive denominator, coprime numerator/denominator).
using Rational = mpq_class;

/// A point in Q^D.
using Point = std::vector<Rational>;

/// Raised when matrix or point dimensions do not fit together.
class DimensionError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Parses "p", "-p" or "p/q". Throws std::invalid_argument on malformed
/// input or a zero denominator.
Rational parse_rational(std::string_view text);

/// Formats as "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& value);
std::string to_string(const Integer& value);

/// Dense row-major matrix of rationals.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries);

  static Matrix identity(std::size_t n);
  /// Builds a matrix from nested initializer data, mostly for tests.
  static Matrix from_rows(const std::vector<std::vector<Rational>>& rows);

  [[nodiscard]] std::size_t rows() const noexcept { return rows_; }
  [[nodiscard]] std::size_t cols() const noexcept { return cols_; }
  [[nodiscard]] bool is_square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const {
    return entries_[r * cols_ + c];
  }

  [[nodiscard]] std::span<const Rational> row(std::size_t r) const {
    return {entries_.data() + r * cols_, cols_};
  }
  [[nodiscard]] const std::vector<Rational>& entries() const noexcept { return entries_; }

  /// Submatrix keeping the given rows and columns (in the given order).
  [[nodiscard]] Matrix submatrix(std::span<const std::size_t> rows,
                                 std::span<const std::size_t> cols) const;

  void swap_rows(std::size_t a, std::size_t b);

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> entries_;
};

/// Exact determinant. Each row is scaled to integers and reduced with
/// fraction-free (Bareiss) elimination.
/// Throws DimensionError for non-square input. det of the 0x0 matrix is 1.
Rational determinant(const Matrix& m);

/// Exact determinant by cofactor expansion along the first row.
/// Exponential cost; kept as an independent cross-check for small matrices.
Rational determinant_cofactor(const Matrix& m);

/// Determinant of a square integer matrix given row-major, Bareiss.
Integer determinant(std::vector<Integer> entries, std::size_t n);

/// Rank of a matrix over Q.
std::size_t rank(const Matrix& m);

/// Rank of an integer matrix given as rows of equal length.
std::size_t rank(std::vector<std::vector<Integer>> rows);

/// Dimension of the affine hull of a nonempty point set.
std::size_t affine_rank(std::span<const Point> points);

/// Column indices of a maximal independent set of columns of the
/// difference vectors p_i - p_0 (pivot columns of the row echelon form).
/// Projecting onto these coordinates is injective on the affine hull.
std::vector<std::size_t> affine_pivot_coordinates(std::span<const Point> points);

/// Least common multiple of the denominators of `values` (1 for empty input).
Integer common_denominator(std::span<const Rational> values);

/// Scales a rational vector by a positive integer so that it becomes an
/// integer vector.
std::vector<Integer> to_integer_vector(std::span<const Rational> values);

/// Divides an integer vector by the gcd of its entries (no-op for zero).
void normalize_by_gcd(std::vector<Integer>& v);

/// Binomial coefficient as a polynomial in the upper index:
/// n(n-1)...(n-k+1)/k! for k >= 0, and 0 for k < 0. For n >= 0 this is the
/// usual count (0 when k > n); for negative n it extends it, e.g. C(-1, 0) = 1.
Integer binomial(long n, long k);

/// Integer power base^exp for rationals.
Rational pow(const Rational& base, unsigned long exp);

}  // namespace cayleysum
