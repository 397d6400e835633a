#include "cayleysum/det_asymptotics.hpp"

#include "cayleysum/random_instances.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>

using namespace cayleysum;

namespace {

Matrix random_matrix(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<long> num(-5, 5);
  std::uniform_int_distribution<long> den(1, 3);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      m(r, c) = Rational(num(rng), den(rng));
      m(r, c).canonicalize();
    }
  }
  return m;
}

DeltaSpec two_by_two(Rational a1, Rational a2, Rational b1, Rational b2) {
  return DeltaSpec{{2, 2}, {1, 0}, {{a1, a2}, {b1, b2}}};
}

Rational evaluate(const std::map<unsigned long, Rational>& poly, const Rational& tau) {
  Rational total = 0;
  for (const auto& [e, c] : poly) total += c * pow(tau, e);
  return total;
}

}  // namespace

TEST(Vandermonde, Examples) {
  const std::vector<Rational> x3{1, 2, 3};
  const std::vector<Rational> x2{1, 2};
  EXPECT_EQ(vandermonde(x3), 2);
  EXPECT_EQ(vandermonde(x2), 1);
  EXPECT_EQ(vandermonde(std::vector<Rational>{5}), 1);
}

TEST(Gvd, Examples) {
  const std::vector<Rational> x3{1, 2, 3};
  const std::vector<unsigned long> mu3{0, 1, 2};
  EXPECT_EQ(gvd(x3, mu3), 2);
  const std::vector<Rational> x2{1, 2};
  const std::vector<unsigned long> mu2{1, 3};
  EXPECT_EQ(gvd(x2, mu2), 6);
  EXPECT_THROW(gvd(x3, mu2), std::invalid_argument);
  const std::vector<unsigned long> flat{1, 1};
  EXPECT_THROW(gvd(x2, flat), std::invalid_argument);
}

TEST(Gvd, PositiveMatchesExplicitMatrixAndReducesToVandermonde) {
  Rng rng(100);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 5;
    const auto x = random_increasing(rng, n);
    std::vector<unsigned long> mu;
    unsigned long e = rng() % 2;
    for (std::size_t i = 0; i < n; ++i) {
      mu.push_back(e);
      e += 1 + rng() % 3;
    }
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) m(i, j) = pow(x[j], mu[i]);
    }
    const Rational value = gvd(x, mu);
    EXPECT_GT(value, 0);
    EXPECT_EQ(value, determinant(m));

    std::vector<unsigned long> plain(n);
    std::iota(plain.begin(), plain.end(), 0ul);
    EXPECT_EQ(gvd(x, plain), vandermonde(x));
    EXPECT_GT(vandermonde(x), 0);
  }
}

TEST(Laplace, FourByFourTwoColumnBlock) {
  Rng rng(1);
  const auto m = random_matrix(rng, 4);
  const auto terms = laplace_expand(m, {1, 3});
  EXPECT_EQ(terms.size(), 6u);
  Rational sum = 0;
  for (const auto& t : terms) sum += t.value();
  EXPECT_EQ(sum, determinant(m));
}

TEST(Laplace, SingleColumnIsCofactorExpansion) {
  const auto m = Matrix::from_rows({{2, 0, 1}, {1, 3, 2}, {1, 1, 1}});
  const auto terms = laplace_expand(m, {0});
  ASSERT_EQ(terms.size(), 3u);
  for (std::size_t i = 0; i < 3; ++i) {
    EXPECT_EQ(terms[i].rows, std::vector<std::size_t>{i});
    EXPECT_EQ(terms[i].minor, m(i, 0));
    EXPECT_EQ(terms[i].sign, i % 2 == 0 ? 1 : -1);
  }
  EXPECT_EQ(terms[0].complement, 1);
}

TEST(Laplace, AllColumnsGiveOneTerm) {
  Rng rng(2);
  const auto m = random_matrix(rng, 3);
  const auto terms = laplace_expand(m, {0, 1, 2});
  ASSERT_EQ(terms.size(), 1u);
  EXPECT_EQ(terms[0].value(), determinant(m));
  EXPECT_EQ(terms[0].complement, 1);
}

TEST(Laplace, MatchesDeterminantOnRandomMatrices) {
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 6;
    const auto m = random_matrix(rng, n);
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c) {
      if (rng() % 2 == 0) cols.push_back(c);
    }
    if (cols.empty()) cols.push_back(rng() % n);
    Rational sum = 0;
    for (const auto& t : laplace_expand(m, cols)) sum += t.value();
    EXPECT_EQ(sum, determinant(m));
  }
}

TEST(Delta, TwoBlocksOfTwoClosedForm) {
  const auto spec = two_by_two(1, 3, 2, 7);
  const auto m = build_delta(spec, 1);
  EXPECT_EQ(m.rows(), 4u);
  EXPECT_EQ(m.cols(), 4u);
  for (long num = 1; num <= 8; ++num) {
    const Rational tau(num, 5);
    EXPECT_EQ(delta_value(spec, tau), tau * (3 - 1) * (7 - 2));
    EXPECT_EQ(delta_value(spec, tau), determinant(build_delta(spec, tau)) * -1);
  }
  const auto poly = delta_polynomial(spec);
  ASSERT_EQ(poly.size(), 1u);
  EXPECT_EQ(poly.begin()->first, 1u);
  EXPECT_EQ(poly.begin()->second, 10);
}

TEST(Delta, MatrixLayout) {
  const DeltaSpec spec{{2, 3}, {2, 0}, {{1, 2}, {1, 3, 4}}};
  EXPECT_EQ(spec.K(), 5u);
  EXPECT_EQ(spec.N(), 1u);
  EXPECT_EQ(spec.m(), 2u);
  const Rational tau(1, 2);
  const auto m = build_delta(spec, tau);
  ASSERT_EQ(m.rows(), 5u);
  // Indicator rows.
  EXPECT_EQ(std::vector<Rational>(m.row(0).begin(), m.row(0).end()), (std::vector<Rational>{1, 1, 0, 0, 0}));
  EXPECT_EQ(std::vector<Rational>(m.row(1).begin(), m.row(1).end()), (std::vector<Rational>{0, 0, 1, 1, 1}));
  // Linear rows carry tau^beta.
  EXPECT_EQ(m(2, 1), Rational(1, 2));
  EXPECT_EQ(m(2, 2), 0);
  EXPECT_EQ(m(3, 4), 4);
  // Power row p = 2 spans every column.
  EXPECT_EQ(m(4, 1), Rational(1, 4));
  EXPECT_EQ(m(4, 3), 9);
  EXPECT_EQ(spec.row_power(0), 0u);
  EXPECT_EQ(spec.row_power(3), 1u);
  EXPECT_EQ(spec.row_power(4), 2u);
}

TEST(Delta, SpecValidation) {
  EXPECT_THROW((DeltaSpec{{2}, {0}, {{1, 2}}}.validate()), std::invalid_argument);
  EXPECT_THROW((DeltaSpec{{1, 2}, {1, 0}, {{1}, {1, 2}}}.validate()), std::invalid_argument);
  EXPECT_THROW((DeltaSpec{{2, 2}, {0, 0}, {{1, 2}, {1, 2}}}.validate()), std::invalid_argument);
  EXPECT_THROW((DeltaSpec{{2, 2}, {1, 0}, {{2, 1}, {1, 2}}}.validate()), std::invalid_argument);
  EXPECT_THROW((DeltaSpec{{2, 2}, {1, 0}, {{0, 1}, {1, 2}}}.validate()), std::invalid_argument);
  EXPECT_THROW((DeltaSpec{{2, 2}, {1, 0}, {{1, 2, 3}, {1, 2}}}.validate()), std::invalid_argument);
}

TEST(LeadingTerm, TwoBlocksOfTwo) {
  const auto spec = two_by_two(1, 3, 2, 7);
  const auto lead = leading_term(spec);
  EXPECT_EQ(lead.rho, (std::vector<std::vector<std::size_t>>{{1, 3}, {2, 4}}));
  EXPECT_EQ(lead.alpha, (std::vector<std::vector<std::size_t>>{{1, 2}, {2, 3}}));
  EXPECT_EQ(lead.theta, 1u);
  EXPECT_EQ(lead.coefficient, 10);
}

TEST(LeadingTerm, LastBlockContributesNothingToTheExponent) {
  DeltaSpec spec{{3, 2}, {0, 0}, {{1, 2, 3}, {1, 2}}};
  spec.beta = {1, 0};
  const auto base = leading_term(spec).theta;
  spec.beta = {2, 0};
  // Doubling beta_1 doubles the exponent; beta_n = 0 adds nothing.
  EXPECT_EQ(leading_term(spec).theta, 2 * base);
}

TEST(LeadingTerm, RhoBlocksPartitionTheRows) {
  Rng rng(40);
  for (int trial = 0; trial < 50; ++trial) {
    const auto spec = random_delta_spec(rng, 2, 4, 4, 14);
    const auto lead = leading_term(spec);
    std::vector<std::size_t> all;
    for (std::size_t i = 0; i < spec.n(); ++i) {
      const auto& rho = lead.rho[i];
      EXPECT_EQ(rho.size(), spec.kappa[i]);
      EXPECT_TRUE(std::is_sorted(rho.begin(), rho.end()));
      all.insert(all.end(), rho.begin(), rho.end());
    }
    std::sort(all.begin(), all.end());
    std::vector<std::size_t> expected(spec.K());
    std::iota(expected.begin(), expected.end(), std::size_t{1});
    EXPECT_EQ(all, expected);
    EXPECT_GT(lead.coefficient, 0);
  }
}

TEST(DeltaBlockTerms, NonvanishingExactlyWhenBlocksHoldTheirIndicatorAndLinearRows) {
  Rng rng(41);
  for (int trial = 0; trial < 30; ++trial) {
    const auto spec = random_delta_spec(rng, 2, 3, 4, 8);
    const std::size_t n = spec.n();
    for (const auto& term : delta_block_terms(spec)) {
      bool holds = true;
      for (std::size_t i = 0; i < n; ++i) {
        const auto& rows = term.rows[i];
        holds = holds && std::binary_search(rows.begin(), rows.end(), i) &&
                std::binary_search(rows.begin(), rows.end(), n + i);
      }
      EXPECT_EQ(term.value != 0, holds);
    }
  }
}

TEST(DeltaBlockTerms, TermCountAndSumMatchTheDeterminant) {
  Rng rng(42);
  for (int trial = 0; trial < 20; ++trial) {
    const auto spec = random_delta_spec(rng, 2, 3, 3, 8);
    const auto terms = delta_block_terms(spec);
    Integer expected_count = 1;
    std::size_t remaining = spec.K();
    for (auto kappa : spec.kappa) {
      expected_count *= binomial(static_cast<long>(remaining), static_cast<long>(kappa));
      remaining -= kappa;
    }
    EXPECT_EQ(Integer(terms.size()), expected_count);

    const Rational tau(1, 3);
    Rational sum = 0;
    for (const auto& t : terms) sum += t.value * pow(tau, t.exponent);
    EXPECT_EQ(sum, delta_value(spec, tau));
    EXPECT_EQ(evaluate(delta_polynomial(spec), tau), delta_value(spec, tau));
  }
  EXPECT_THROW(delta_block_terms(DeltaSpec{{3, 3, 3}, {2, 1, 0}, {{1, 2, 3}, {1, 2, 3}, {1, 2, 3}}}),
               std::invalid_argument);
}

TEST(DeltaPolynomial, LowestTermIsThePredictedLeadingTerm) {
  Rng rng(43);
  for (int trial = 0; trial < 40; ++trial) {
    const auto spec = random_delta_spec(rng, 2, 3, 4, 8);
    const auto poly = delta_polynomial(spec);
    ASSERT_FALSE(poly.empty());
    const auto lead = leading_term(spec);
    EXPECT_EQ(poly.begin()->first, lead.theta);
    EXPECT_EQ(poly.begin()->second, lead.coefficient);

    Rational product = 1;
    for (std::size_t i = 0; i < spec.n(); ++i) {
      std::vector<unsigned long> mu;
      for (std::size_t j = 0; j < spec.kappa[i]; ++j) mu.push_back(lead.rho[i][j] - lead.alpha[i][j]);
      product *= gvd(spec.x[i], mu);
    }
    EXPECT_EQ(lead.coefficient, product);
  }
}

TEST(PositivityThreshold, TwoBlocksOfTwoIsPositiveFromTheStart) {
  const auto report = verify_lemma2(two_by_two(1, 2, 1, 3));
  EXPECT_TRUE(report.passed());
  EXPECT_EQ(report.tau0, 1);
  EXPECT_EQ(report.halvings, 0u);
  EXPECT_EQ(report.delta_at_tau0, 2);
  EXPECT_EQ(report.delta_at_half, 1);
  for (const auto& s : report.samples) EXPECT_EQ(s.deviation, 0);
}

TEST(PositivityThreshold, RandomSpecsAreCertifiedAndRatiosConverge) {
  Rng rng(44);
  const Rational tolerance(1, 1024);
  for (int trial = 0; trial < 25; ++trial) {
    const auto spec = random_delta_spec(rng, 2, 3, 4, 10);
    const auto report = verify_lemma2(spec);
    EXPECT_TRUE(report.found);
    EXPECT_GT(report.delta_at_tau0, 0);
    EXPECT_GT(report.delta_at_half, 0);
    EXPECT_EQ(delta_value(spec, report.tau0), report.delta_at_tau0);
    EXPECT_TRUE(report.ratio_converging);
    ASSERT_EQ(report.samples.size(), 2u);
    EXPECT_LT(report.samples.back().deviation, tolerance);
  }
}
