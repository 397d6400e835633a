#include "cayleysum/exact.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <utility>

namespace cayleysum {

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() &&
         std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isdigit(c); });
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);

  const auto slash = text.find('/');
  const auto num = text.substr(0, slash);
  const auto den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' ||
      den.front() == '+') {
    throw std::invalid_argument("malformed rational literal: '" + std::string(text) + "'");
  }
  std::string num_str(num.front() == '+' ? num.substr(1) : num);
  Integer n(num_str, 10);
  Integer d{std::string(den), 10};
  if (d == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
  Rational q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& value) {
  if (value.get_den() == 1) return value.get_num().get_str();
  return value.get_num().get_str() + "/" + value.get_den().get_str();
}

std::string to_string(const Integer& value) { return value.get_str(); }

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), entries_(rows * cols) {}

Matrix::Matrix(std::size_t rows, std::size_t cols, std::vector<Rational> entries)
    : rows_(rows), cols_(cols), entries_(std::move(entries)) {
  if (entries_.size() != rows * cols) {
    throw DimensionError("matrix entry count does not match rows x cols");
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<std::vector<Rational>>& rows) {
  const std::size_t cols = rows.empty() ? 0 : rows.front().size();
  std::vector<Rational> entries;
  entries.reserve(rows.size() * cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw DimensionError("ragged rows in Matrix::from_rows");
    entries.insert(entries.end(), r.begin(), r.end());
  }
  return Matrix(rows.size(), cols, std::move(entries));
}

Matrix Matrix::submatrix(std::span<const std::size_t> rows,
                         std::span<const std::size_t> cols) const {
  Matrix out(rows.size(), cols.size());
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = 0; j < cols.size(); ++j) out(i, j) = (*this)(rows[i], cols[j]);
  }
  return out;
}

void Matrix::swap_rows(std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t c = 0; c < cols_; ++c) std::swap((*this)(a, c), (*this)(b, c));
}

Integer determinant(std::vector<Integer> a, std::size_t n) {
  if (a.size() != n * n) throw DimensionError("integer determinant needs n*n entries");
  if (n == 0) return 1;
  auto at = [&](std::size_t r, std::size_t c) -> Integer& { return a[r * n + c]; };
  Integer previous = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (at(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && at(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t c = k; c < n; ++c) std::swap(at(k, c), at(p, c));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer v = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        mpz_divexact(v.get_mpz_t(), v.get_mpz_t(), previous.get_mpz_t());
        at(i, j) = std::move(v);
      }
      at(i, k) = 0;
    }
    previous = at(k, k);
  }
  Integer det = at(n - 1, n - 1);
  return sign > 0 ? det : Integer(-det);
}

Rational determinant(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  std::vector<Integer> scaled;
  scaled.reserve(n * n);
  Integer scale = 1;
  for (std::size_t r = 0; r < n; ++r) {
    const auto row = m.row(r);
    const Integer den = common_denominator(row);
    scale *= den;
    for (const auto& v : row) {
      Integer x = v.get_num() * (den / v.get_den());
      scaled.push_back(std::move(x));
    }
  }
  Rational det(determinant(std::move(scaled), n), scale);
  det.canonicalize();
  return det;
}

Rational determinant_cofactor(const Matrix& m) {
  if (!m.is_square()) throw DimensionError("determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  if (n == 1) return m(0, 0);
  Rational total = 0;
  std::vector<std::size_t> rows(n - 1);
  std::iota(rows.begin(), rows.end(), std::size_t{1});
  std::vector<std::size_t> cols;
  cols.reserve(n - 1);
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c) == 0) continue;
    cols.clear();
    for (std::size_t j = 0; j < n; ++j) {
      if (j != c) cols.push_back(j);
    }
    const Rational minor = determinant_cofactor(m.submatrix(rows, cols));
    if (c % 2 == 0) {
      total += m(0, c) * minor;
    } else {
      total -= m(0, c) * minor;
    }
  }
  return total;
}

namespace {

// Fraction-free row reduction; returns the pivot columns.
std::vector<std::size_t> echelon_pivots(std::vector<std::vector<Integer>> rows) {
  std::vector<std::size_t> pivots;
  if (rows.empty()) return pivots;
  const std::size_t cols = rows.front().size();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[r], rows[p]);
    for (std::size_t i = r + 1; i < rows.size(); ++i) {
      if (rows[i][c] == 0) continue;
      const Integer a = rows[r][c];
      const Integer b = rows[i][c];
      for (std::size_t j = c; j < cols; ++j) rows[i][j] = rows[i][j] * a - rows[r][j] * b;
      normalize_by_gcd(rows[i]);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

std::vector<std::vector<Integer>> difference_rows(std::span<const Point> points) {
  std::vector<std::vector<Integer>> rows;
  rows.reserve(points.size());
  for (std::size_t i = 1; i < points.size(); ++i) {
    if (points[i].size() != points[0].size()) {
      throw DimensionError("points of differing dimension");
    }
    std::vector<Rational> diff(points[0].size());
    for (std::size_t j = 0; j < diff.size(); ++j) diff[j] = points[i][j] - points[0][j];
    rows.push_back(to_integer_vector(diff));
  }
  return rows;
}

}  // namespace

std::size_t rank(std::vector<std::vector<Integer>> rows) {
  return echelon_pivots(std::move(rows)).size();
}

std::size_t rank(const Matrix& m) {
  std::vector<std::vector<Integer>> rows;
  rows.reserve(m.rows());
  for (std::size_t r = 0; r < m.rows(); ++r) rows.push_back(to_integer_vector(m.row(r)));
  return rank(std::move(rows));
}

std::size_t affine_rank(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("affine_rank of an empty point set");
  return rank(difference_rows(points));
}

std::vector<std::size_t> affine_pivot_coordinates(std::span<const Point> points) {
  if (points.empty()) throw std::invalid_argument("affine hull of an empty point set");
  return echelon_pivots(difference_rows(points));
}

Integer common_denominator(std::span<const Rational> values) {
  Integer l = 1;
  for (const auto& v : values) {
    if (v.get_den() != 1) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
  }
  return l;
}

std::vector<Integer> to_integer_vector(std::span<const Rational> values) {
  const Integer den = common_denominator(values);
  std::vector<Integer> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(v.get_num() * (den / v.get_den()));
  return out;
}

void normalize_by_gcd(std::vector<Integer>& v) {
  Integer g = 0;
  for (const auto& x : v) {
    if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g == 0) return;
  for (auto& x : v) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

Integer binomial(long n, long k) {
  if (k < 0) return 0;
  if (n >= 0) {
    if (k > n) return 0;
    Integer out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return out;
  }
  Integer out;
  mpz_bin_ui(out.get_mpz_t(), Integer(n).get_mpz_t(), static_cast<unsigned long>(k));
  return out;
}

Rational pow(const Rational& base, unsigned long exp) {
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), exp);
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), exp);
  Rational out(num, den);
  out.canonicalize();
  return out;
}

}  // namespace cayleysum
