#include "cayleysum/bounds.hpp"

#include "cayleysum/hull.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace cayleysum {

void VertexProfile::validate() const {
  if (n.empty()) throw std::invalid_argument("profile needs at least one summand");
  if (d == 0) throw std::invalid_argument("profile dimension must be positive");
  if (std::find(n.begin(), n.end(), std::size_t{0}) != n.end()) {
    throw std::invalid_argument("every summand needs at least one vertex");
  }
}

Integer phi(std::size_t ell, std::span<const std::size_t> n) {
  if (n.empty()) throw std::invalid_argument("phi needs at least one summand");
  if (ell < n.size()) {
    throw std::invalid_argument("phi_" + std::to_string(ell) + " undefined for r = " +
                                std::to_string(n.size()));
  }
  // Coefficients of prod_i ((1 + x)^{n_i} - 1), truncated at degree ell.
  std::vector<Integer> poly(ell + 1);
  poly[0] = 1;
  for (auto ni : n) {
    if (ni == 0) throw std::invalid_argument("phi needs n_i >= 1");
    std::vector<Integer> next(ell + 1);
    for (std::size_t a = 0; a <= ell; ++a) {
      if (poly[a] == 0) continue;
      for (std::size_t s = 1; s <= ni && a + s <= ell; ++s) {
        next[a + s] += poly[a] * binomial(static_cast<long>(ni), static_cast<long>(s));
      }
    }
    poly = std::move(next);
  }
  return poly[ell];
}

Integer trivial_upper_bound(std::size_t k, const VertexProfile& profile) {
  profile.validate();
  if (k >= profile.d) {
    throw std::invalid_argument("face dimension k must be at most d - 1");
  }
  return phi(k + profile.r(), profile.n);
}

ThreePolytopeBounds three_polytope_bounds(long m1, long m2) {
  if (m1 < 4 || m2 < 4) throw std::invalid_argument("a 3-polytope has at least 4 facets");
  const Integer a = m1;
  const Integer b = m2;
  return {4 * a * b - 8 * a - 8 * b + 16, 8 * a * b - 17 * a - 17 * b + 40,
          4 * a * b - 9 * a - 9 * b + 26};
}

std::vector<Integer> cyclic_f_vector(std::size_t dim, std::size_t n) {
  if (dim == 0 || n < dim + 1) {
    throw std::invalid_argument("cyclic polytope C_d(n) needs d >= 1 and n >= d + 1");
  }
  std::vector<Point> pts;
  pts.reserve(n);
  for (std::size_t t = 1; t <= n; ++t) {
    Point p(dim);
    Rational v = 1;
    for (std::size_t c = 0; c < dim; ++c) {
      v *= static_cast<unsigned long>(t);
      p[c] = v;
    }
    pts.push_back(std::move(p));
  }
  const auto lattice = convex_hull(PointSet(dim, std::move(pts)));
  std::vector<Integer> out;
  for (auto f : lattice.f_vector()) out.emplace_back(static_cast<unsigned long>(f));
  return out;
}

std::vector<Integer> cyclic_f_vector_closed_form(std::size_t dim, std::size_t n) {
  if (dim == 0 || n < dim + 1) {
    throw std::invalid_argument("cyclic polytope C_d(n) needs d >= 1 and n >= d + 1");
  }
  const long d = static_cast<long>(dim);
  const long nn = static_cast<long>(n);
  std::vector<Integer> h(dim + 1);
  for (long i = 0; i <= d; ++i) {
    const long j = std::min(i, d - i);
    h[static_cast<std::size_t>(i)] = binomial(nn - d - 1 + j, j);
  }
  std::vector<Integer> f(dim);
  for (long j = 1; j <= d; ++j) {
    Integer s = 0;
    for (long i = 0; i <= j; ++i) s += binomial(d - i, j - i) * h[static_cast<std::size_t>(i)];
    f[static_cast<std::size_t>(j - 1)] = s;
  }
  return f;
}

Integer two_polytope_bound(std::size_t k, std::size_t d, std::size_t n1, std::size_t n2,
                           CyclicSource source) {
  if (d < 3) throw std::invalid_argument("two-polytope bound is stated for d >= 3");
  if (k < 1 || k > d) throw std::invalid_argument("k must lie in 1..d");
  if (n1 <= d || n2 <= d) throw std::invalid_argument("each summand needs n_i >= d + 1");

  const auto cyclic = source == CyclicSource::kHull ? cyclic_f_vector(d + 1, n1 + n2)
                                                    : cyclic_f_vector_closed_form(d + 1, n1 + n2);
  Integer value = cyclic[k];
  const long D = static_cast<long>(d);
  const long K = static_cast<long>(k);
  const long a = static_cast<long>(n1);
  const long b = static_cast<long>(n2);
  for (long i = 0; i <= (D + 1) / 2; ++i) {
    value -= binomial(D + 1 - i, K + 1 - i) *
             (binomial(a - D - 2 + i, i) + binomial(b - D - 2 + i, i));
  }
  return value;
}

Integer zonotope_bound(std::size_t l, std::size_t n, std::size_t d) {
  if (l >= d) throw std::invalid_argument("face dimension l must be at most d - 1");
  if (n == 0) throw std::invalid_argument("a zonotope needs at least one generator");
  const long L = static_cast<long>(l);
  const long N = static_cast<long>(n);
  Integer sum = 0;
  for (long j = 0; j <= static_cast<long>(d) - 1 - L; ++j) sum += binomial(N - L - 1, j);
  return 2 * binomial(N, L) * sum;
}

ManySummandBounds many_summand_f0_bounds(const VertexProfile& profile) {
  profile.validate();
  const std::size_t d = profile.d;
  const std::size_t r = profile.r();
  if (d < 3) throw std::invalid_argument("many-summand bounds need d >= 3");
  if (r < d) throw std::invalid_argument("many-summand bounds need r >= d");

  Integer product = 1;
  for (auto ni : profile.n) product *= static_cast<unsigned long>(ni);

  Integer denom;
  mpz_ui_pow_ui(denom.get_mpz_t(), d + 1, d);
  Rational sanyal_exact = Rational(product) * (Rational(1) - Rational(1, denom));
  Integer sanyal;
  mpz_fdiv_q(sanyal.get_mpz_t(), sanyal_exact.get_num_mpz_t(), sanyal_exact.get_den_mpz_t());

  const Integer alpha = 2 * static_cast<long>(d - 2 * (d / 2));
  Integer weibel = alpha;
  // e_j = sum over j-subsets S of prod_{i in S} n_i, by the usual recurrence.
  std::vector<Integer> e(d, 0);
  e[0] = 1;
  for (auto ni : profile.n) {
    for (std::size_t j = d - 1; j >= 1; --j) e[j] += e[j - 1] * static_cast<unsigned long>(ni);
  }
  for (std::size_t j = 1; j + 1 <= d; ++j) {
    const Integer subsets = binomial(static_cast<long>(r), static_cast<long>(j));
    Integer term = binomial(static_cast<long>(r - 1 - j), static_cast<long>(d - 1 - j)) *
                   (e[j] - subsets * alpha);
    if ((d - 1 - j) % 2 == 1) term = -term;
    weibel += term;
  }
  return {sanyal, weibel};
}

}  // namespace cayleysum
