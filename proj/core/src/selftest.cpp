#include "cayleysum/selftest.hpp"

#include "cayleysum/bounds.hpp"
#include "cayleysum/cayley.hpp"
#include "cayleysum/det_asymptotics.hpp"
#include "cayleysum/random_instances.hpp"

#include <string>

namespace cayleysum {

namespace {

Check count_check(std::string name, std::size_t total, std::size_t good) {
  return check_equal(std::move(name), std::to_string(total), std::to_string(good));
}

bool euler_holds(const FaceLattice& l) {
  long sum = 0;
  for (std::size_t k = 0; k < l.f_vector().size(); ++k) {
    sum += (k % 2 == 0 ? 1 : -1) * static_cast<long>(l.f_vector()[k]);
  }
  const std::size_t d = l.polytope_dim();
  return sum == (d % 2 == 1 ? 2 : 0);
}

std::vector<Face> face_list(const FaceLattice& l) { return l.faces(); }

Matrix random_matrix(Rng& rng, std::size_t n) {
  std::uniform_int_distribution<long> entry(-5, 5);
  Matrix m(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) m(r, c) = entry(rng);
  }
  return m;
}

}  // namespace

RunReport run_selftest(std::uint64_t seed) {
  RunReport report;
  report.command = "selftest";
  report.inputs["seed"] = seed;
  Rng rng(seed);
  std::uniform_int_distribution<std::size_t> dim_pick(2, 4);

  {
    std::size_t total = 0;
    std::size_t euler = 0;
    std::size_t invariant = 0;
    std::size_t methods = 0;
    std::uniform_int_distribution<long> shift(-7, 7);
    std::uniform_int_distribution<unsigned long> scale_num(1, 9);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t d = dim_pick(rng);
      const auto pts = random_point_set(rng, d, d + 1 + trial % 6);
      const auto lattice = convex_hull(pts);
      ++total;
      if (euler_holds(lattice)) ++euler;

      const Rational s(scale_num(rng), scale_num(rng));
      Point t(d);
      for (auto& c : t) c = shift(rng);
      auto moved = pts;
      for (auto& p : moved.points) {
        for (std::size_t c = 0; c < d; ++c) p[c] = p[c] * s + t[c];
      }
      if (face_list(convex_hull(moved)) == face_list(lattice)) ++invariant;
      if (face_list(convex_hull(pts, HullMethod::kExhaustive)) == face_list(lattice)) ++methods;
    }
    report.checks.push_back(count_check("euler_relation", total, euler));
    report.checks.push_back(count_check("hull_scaling_translation_invariance", total, invariant));
    report.checks.push_back(count_check("hull_methods_agree", total, methods));
  }

  {
    std::size_t agree = 0;
    for (int trial = 0; trial < 40; ++trial) {
      const auto m = random_matrix(rng, 1 + trial % 5);
      if (determinant(m) == determinant_cofactor(m)) ++agree;
    }
    report.checks.push_back(count_check("bareiss_matches_cofactor", 40, agree));
  }

  {
    std::size_t agree = 0;
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 2 + trial % 5;
      const auto m = random_matrix(rng, n);
      std::vector<std::size_t> cols;
      for (std::size_t c = 0; c < n; ++c) {
        if (c == 0 || rng() % 2 == 0) cols.push_back(c);
      }
      Rational sum = 0;
      for (const auto& t : laplace_expand(m, cols)) sum += t.value();
      if (sum == determinant(m)) ++agree;
    }
    report.checks.push_back(count_check("laplace_matches_determinant", 40, agree));
  }

  {
    std::size_t positive = 0;
    std::size_t reduces = 0;
    std::uniform_int_distribution<std::size_t> len(2, 5);
    std::uniform_int_distribution<unsigned long> gap(1, 3);
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = random_increasing(rng, len(rng));
      std::vector<unsigned long> mu;
      unsigned long e = gap(rng) - 1;
      for (std::size_t i = 0; i < x.size(); ++i, e += gap(rng)) mu.push_back(e);
      if (gvd(x, mu) > 0) ++positive;
      std::vector<unsigned long> plain(x.size());
      for (std::size_t i = 0; i < plain.size(); ++i) plain[i] = i;
      if (gvd(x, plain) == vandermonde(x)) ++reduces;
    }
    report.checks.push_back(count_check("gvd_positive", 100, positive));
    report.checks.push_back(count_check("gvd_reduces_to_vandermonde", 100, reduces));
  }

  {
    // For every profile with 2 or 3 parts and at most 12 points, each phi_l
    // equals the number of spanning l-subsets, counted one subset at a time.
    std::size_t profiles = 0;
    std::size_t good = 0;
    auto test_profile = [&](const std::vector<std::size_t>& n) {
      std::size_t total = 0;
      std::vector<std::size_t> part_of;
      for (std::size_t i = 0; i < n.size(); ++i) {
        total += n[i];
        part_of.insert(part_of.end(), n[i], i);
      }
      std::vector<Integer> counts(total + 1);
      for (unsigned long mask = 1; mask < (1UL << total); ++mask) {
        unsigned hit = 0;
        for (std::size_t b = 0; b < total; ++b) {
          if (mask >> b & 1UL) hit |= 1U << part_of[b];
        }
        if (hit == (1U << n.size()) - 1) ++counts[static_cast<std::size_t>(__builtin_popcountl(mask))];
      }
      Integer product = 1;
      Integer sum = 0;
      for (auto ni : n) product *= (Integer(1) << static_cast<unsigned>(ni)) - 1;
      bool ok = true;
      for (std::size_t l = n.size(); l <= total; ++l) {
        const Integer p = phi(l, n);
        sum += p;
        ok = ok && p == counts[l];
      }
      ++profiles;
      if (ok && sum == product) ++good;
    };
    for (std::size_t a = 1; a <= 11; ++a) {
      for (std::size_t b = 1; a + b <= 12; ++b) {
        test_profile({a, b});
        for (std::size_t c = 1; a + b + c <= 12; ++c) test_profile({a, b, c});
      }
    }
    report.checks.push_back(count_check("phi_subset_identity", profiles, good));
  }

  {
    std::size_t agree = 0;
    for (int trial = 0; trial < 10; ++trial) {
      const std::size_t d = 2 + trial % 2;
      const auto pps = random_partitioned(rng, d, 2 + trial % 2, 4);
      if (minksum_via_cayley(pps, CayleyConfig::averaging(pps.r())) == minksum_direct(pps)) {
        ++agree;
      }
    }
    report.checks.push_back(count_check("cayley_matches_direct", 10, agree));
  }

  report.outputs["suites"] = report.checks.size();
  return report;
}

}  // namespace cayleysum
