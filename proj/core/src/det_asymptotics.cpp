#include "cayleysum/det_asymptotics.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cayleysum {

Rational vandermonde(std::span<const Rational> x) {
  Rational v = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = i + 1; j < x.size(); ++j) v *= x[j] - x[i];
  }
  return v;
}

Rational gvd(std::span<const Rational> x, std::span<const unsigned long> mu) {
  if (x.size() != mu.size()) throw std::invalid_argument("gvd needs |x| = |mu|");
  for (std::size_t i = 0; i + 1 < mu.size(); ++i) {
    if (mu[i] >= mu[i + 1]) throw std::invalid_argument("gvd exponents must strictly increase");
  }
  Matrix m(x.size(), x.size());
  for (std::size_t i = 0; i < mu.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) m(i, j) = pow(x[j], mu[i]);
  }
  return determinant(m);
}

namespace {

// Calls f on every increasing k-subset of 0..n-1.
template <class F>
void for_each_combination(std::size_t n, std::size_t k, F&& f) {
  if (k > n) return;
  std::vector<std::size_t> idx(k);
  std::iota(idx.begin(), idx.end(), std::size_t{0});
  while (true) {
    f(idx);
    std::size_t i = k;
    while (i > 0 && idx[i - 1] == n - k + i - 1) --i;
    if (i == 0) return;
    ++idx[i - 1];
    for (std::size_t j = i; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

std::vector<std::size_t> complement_of(const std::vector<std::size_t>& chosen, std::size_t n) {
  std::vector<std::size_t> out;
  out.reserve(n - chosen.size());
  for (std::size_t i = 0, c = 0; i < n; ++i) {
    if (c < chosen.size() && chosen[c] == i) {
      ++c;
    } else {
      out.push_back(i);
    }
  }
  return out;
}

std::size_t one_based_sum(const std::vector<std::size_t>& idx) {
  return std::accumulate(idx.begin(), idx.end(), idx.size());
}

}  // namespace

std::vector<LaplaceTerm> laplace_expand(const Matrix& m, const std::vector<std::size_t>& cols) {
  if (!m.is_square()) throw DimensionError("Laplace expansion of a non-square matrix");
  const std::size_t n = m.rows();
  if (cols.empty() || !std::is_sorted(cols.begin(), cols.end()) ||
      std::adjacent_find(cols.begin(), cols.end()) != cols.end() || cols.back() >= n) {
    throw std::invalid_argument("column block must be sorted, distinct and in range");
  }
  const auto other_cols = complement_of(cols, n);
  std::vector<LaplaceTerm> terms;
  for_each_combination(n, cols.size(), [&](const std::vector<std::size_t>& rows) {
    LaplaceTerm t;
    t.rows = rows;
    t.cols = cols;
    t.sign = (one_based_sum(rows) + one_based_sum(cols)) % 2 == 0 ? 1 : -1;
    t.minor = determinant(m.submatrix(rows, cols));
    t.complement = determinant(m.submatrix(complement_of(rows, n), other_cols));
    terms.push_back(std::move(t));
  });
  return terms;
}

std::size_t DeltaSpec::K() const { return std::accumulate(kappa.begin(), kappa.end(), std::size_t{0}); }

unsigned long DeltaSpec::row_power(std::size_t row) const {
  if (row < n()) return 0;
  if (row < 2 * n()) return 1;
  return static_cast<unsigned long>(row - 2 * n() + 2);
}

void DeltaSpec::validate() const {
  if (n() < 2) throw std::invalid_argument("delta needs at least two blocks");
  if (beta.size() != n() || x.size() != n()) {
    throw std::invalid_argument("delta needs one beta and one x block per kappa");
  }
  for (std::size_t i = 0; i < n(); ++i) {
    if (kappa[i] < 2) throw std::invalid_argument("every kappa must be at least 2");
    if (x[i].size() != kappa[i]) {
      throw std::invalid_argument("x block " + std::to_string(i + 1) + " has the wrong length");
    }
    if (x[i].front() <= 0) throw std::invalid_argument("x values must be positive");
    for (std::size_t j = 0; j + 1 < kappa[i]; ++j) {
      if (x[i][j] >= x[i][j + 1]) throw std::invalid_argument("x blocks must strictly increase");
    }
    if (i + 1 < n() && beta[i] <= beta[i + 1]) {
      throw std::invalid_argument("beta must strictly decrease");
    }
  }
}

Matrix build_delta(const DeltaSpec& spec, const Rational& tau) {
  spec.validate();
  if (tau <= 0) throw std::invalid_argument("tau must be positive");
  const std::size_t n = spec.n();
  const std::size_t K = spec.K();
  Matrix a(K, K);
  std::size_t col = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const Rational scale = pow(tau, spec.beta[i]);
    for (std::size_t j = 0; j < spec.kappa[i]; ++j, ++col) {
      const Rational y = spec.x[i][j] * scale;
      a(i, col) = 1;
      a(n + i, col) = y;
      Rational power = y;
      for (std::size_t row = 2 * n; row < K; ++row) {
        power *= y;
        a(row, col) = power;
      }
    }
  }
  return a;
}

Rational delta_value(const DeltaSpec& spec, const Rational& tau) {
  Rational det = determinant(build_delta(spec, tau));
  return spec.N() % 2 == 0 ? det : Rational(-det);
}

LeadingTerm leading_term(const DeltaSpec& spec) {
  spec.validate();
  const std::size_t n = spec.n();
  LeadingTerm lt;
  lt.coefficient = 1;
  std::size_t K_prev = 0;
  for (std::size_t i = 1; i <= n; ++i) {
    const std::size_t K_i = K_prev + spec.kappa[i - 1];
    std::vector<std::size_t> rho{i, n + i};
    for (std::size_t v = 2 * (n - i) + K_prev + 3; v <= 2 * (n - i) + K_i; ++v) rho.push_back(v);
    std::vector<std::size_t> alpha{i, n + i - 1};
    alpha.resize(spec.kappa[i - 1], 2 * n - 1);

    std::vector<unsigned long> mu;
    unsigned long mu_sum = 0;
    for (std::size_t j = 0; j < rho.size(); ++j) {
      mu.push_back(static_cast<unsigned long>(rho[j] - alpha[j]));
      mu_sum += mu.back();
    }
    lt.theta += spec.beta[i - 1] * mu_sum;
    lt.coefficient *= gvd(spec.x[i - 1], mu);
    lt.rho.push_back(std::move(rho));
    lt.alpha.push_back(std::move(alpha));
    K_prev = K_i;
  }
  return lt;
}

std::vector<DeltaBlockTerm> delta_block_terms(const DeltaSpec& spec, std::size_t max_K) {
  spec.validate();
  const std::size_t n = spec.n();
  const std::size_t K = spec.K();
  if (K > max_K) {
    throw std::invalid_argument("brute-force expansion limited to K <= " + std::to_string(max_K));
  }
  const Matrix a = build_delta(spec, Rational(1));
  std::vector<DeltaBlockTerm> terms;

  DeltaBlockTerm current;
  current.rows.resize(n);
  // Expand block i along its columns among the rows still unused; positions
  // are 1-based within the remaining submatrix, whose first kappa_i columns
  // are exactly block i.
  auto expand = [&](auto& self, std::size_t block, std::size_t first_col,
                    const std::vector<std::size_t>& remaining, std::size_t sign_exp,
                    const Rational& value, unsigned long exponent) -> void {
    if (block == n) {
      current.exponent = exponent;
      current.value = (sign_exp + spec.N()) % 2 == 0 ? value : Rational(-value);
      terms.push_back(current);
      return;
    }
    const std::size_t k = spec.kappa[block];
    std::vector<std::size_t> cols(k);
    std::iota(cols.begin(), cols.end(), first_col);
    for_each_combination(remaining.size(), k, [&](const std::vector<std::size_t>& pos) {
      std::vector<std::size_t> rows;
      unsigned long power = 0;
      std::size_t step = 0;
      for (auto p : pos) {
        rows.push_back(remaining[p]);
        power += spec.row_power(remaining[p]);
        step += p + 1;
      }
      step += k * (k + 1) / 2;
      std::vector<std::size_t> rest;
      for (std::size_t i = 0, c = 0; i < remaining.size(); ++i) {
        if (c < pos.size() && pos[c] == i) {
          ++c;
        } else {
          rest.push_back(remaining[i]);
        }
      }
      const Rational minor = determinant(a.submatrix(rows, cols));
      current.rows[block] = rows;
      self(self, block + 1, first_col + k, rest, sign_exp + step, value * minor,
           exponent + spec.beta[block] * power);
    });
  };
  std::vector<std::size_t> all(K);
  std::iota(all.begin(), all.end(), std::size_t{0});
  expand(expand, 0, 0, all, 0, Rational(1), 0);
  return terms;
}

std::map<unsigned long, Rational> delta_polynomial(const DeltaSpec& spec, std::size_t max_K) {
  std::map<unsigned long, Rational> poly;
  for (const auto& t : delta_block_terms(spec, max_K)) {
    if (t.value != 0) poly[t.exponent] += t.value;
  }
  std::erase_if(poly, [](const auto& kv) { return kv.second == 0; });
  return poly;
}

Lemma2Report verify_lemma2(const DeltaSpec& spec, unsigned max_halvings,
                           const std::vector<Rational>& sample_taus) {
  spec.validate();
  Lemma2Report report;
  report.leading = leading_term(spec);

  Rational tau = 1;
  Rational current = delta_value(spec, tau);
  for (unsigned h = 0; h <= max_halvings; ++h) {
    const Rational half = tau / 2;
    const Rational next = delta_value(spec, half);
    if (current > 0 && next > 0) {
      report.found = true;
      report.tau0 = tau;
      report.halvings = h;
      report.delta_at_tau0 = current;
      report.delta_at_half = next;
      break;
    }
    tau = half;
    current = next;
  }
  if (!report.found) report.tau0 = tau;

  for (const auto& t : sample_taus) {
    const Rational predicted = report.leading.coefficient * pow(t, report.leading.theta);
    Rational dev = delta_value(spec, t) / predicted - 1;
    if (dev < 0) dev = -dev;
    report.samples.push_back({t, dev});
  }
  report.ratio_converging = true;
  for (std::size_t i = 1; i < report.samples.size(); ++i) {
    if (report.samples[i].deviation > report.samples[i - 1].deviation) {
      report.ratio_converging = false;
    }
  }
  return report;
}

}  // namespace cayleysum
