#include "cayleysum/bounds.hpp"
#include "cayleysum/construction.hpp"
#include "cayleysum/det_asymptotics.hpp"
#include "cayleysum/random_instances.hpp"
#include "cayleysum/selftest.hpp"

#include <chrono>
#include <cstdlib>
#include <iostream>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

using namespace cayleysum;

namespace {

using Sizes = std::vector<std::size_t>;
using Clock = std::chrono::steady_clock;

struct Outcome {
  bool pass = true;
  std::string detail;

  void require(bool condition, const std::string& what) {
    if (condition) return;
    pass = false;
    if (!detail.empty()) detail += "; ";
    detail += what;
  }
};

struct Instance {
  std::size_t d;
  std::size_t r;
  Sizes n;
};

const std::vector<Instance> kTightInstances{{3, 2, {4, 4}}, {5, 2, {5, 5}}, {4, 3, {4, 4, 4}}};

std::map<std::size_t, TightnessReport> tightness_cache;

const TightnessReport& tightness(std::size_t index) {
  auto it = tightness_cache.find(index);
  if (it == tightness_cache.end()) {
    const auto& inst = kTightInstances[index];
    it = tightness_cache.emplace(index, verify_tightness(inst.d, inst.r, inst.n)).first;
  }
  return it->second;
}

std::string tuple(const std::vector<std::size_t>& v) { return format_tuple(v); }

Outcome tight_instance(std::size_t index, const std::vector<Integer>& expected_f) {
  Outcome o;
  const auto& inst = kTightInstances[index];
  const auto& rep = tightness(index);
  for (const auto& c : rep.checks) o.require(c.pass, c.name + " expected " + c.expected + " got " + c.actual);
  o.require(rep.cayley_f_vector == rep.direct_f_vector,
            "cayley " + tuple(rep.cayley_f_vector) + " != direct " + tuple(rep.direct_f_vector));
  for (std::size_t k = 0; k < expected_f.size(); ++k) {
    const Integer bound = phi(k + inst.r, inst.n);
    o.require(bound == expected_f[k], "phi_" + std::to_string(k + inst.r) + " = " + to_string(bound));
    o.require(k < rep.direct_f_vector.size() && Integer(rep.direct_f_vector[k]) == expected_f[k],
              "f" + std::to_string(k) + " mismatch");
  }
  std::ostringstream detail;
  detail << "tau*=" << to_string(rep.tau.value) << " zeta=" << to_string(rep.zeta.value)
         << " f=" << tuple(rep.direct_f_vector);
  if (o.pass) o.detail = detail.str();
  return o;
}

Outcome criterion1() { return tight_instance(0, {16}); }

Outcome criterion2() {
  auto o = tight_instance(1, {25, 100});
  const auto& rep = tightness(1);
  const auto family = generate_family(rep.params, CurveVariant::kPerturbed);
  const auto cayley = cayley_embed(family, CayleyConfig::averaging(2));
  o.require(cayley.ambient_dim == 6 && cayley.size() == 10,
            "Cayley point set is " + std::to_string(cayley.size()) + " points in R^" +
                std::to_string(cayley.ambient_dim));
  return o;
}

Outcome criterion3() { return tight_instance(2, {64}); }

Outcome criterion4() {
  Outcome o;
  std::ostringstream summary;
  for (std::size_t i = 0; i < kTightInstances.size(); ++i) {
    const auto& inst = kTightInstances[i];
    const auto& rep = tightness(i);
    if (!rep.zeta.found) {
      o.require(false, "no certified zeta for d=" + std::to_string(inst.d));
      continue;
    }
    summary << " d=" << inst.d << " n=" << tuple(inst.n) << ":";
    for (std::size_t p = 0; p < rep.neighborly.size(); ++p) {
      const auto& res = rep.neighborly[p];
      summary << " P" << p + 1 << "(dim " << res.polytope_dim << ", " << res.neighborliness
              << "-neighborly)";
      o.require(res.polytope_dim == inst.d,
                "d=" + std::to_string(inst.d) + " P" + std::to_string(p + 1) + " has dimension " +
                    std::to_string(res.polytope_dim) + " with " + std::to_string(inst.n[p]) +
                    " vertices");
      o.require(res.neighborliness >= inst.d / 2,
                "d=" + std::to_string(inst.d) + " P" + std::to_string(p + 1) + " is only " +
                    std::to_string(res.neighborliness) + "-neighborly");
    }
  }
  o.detail = o.pass ? summary.str().substr(1) : o.detail + " |" + summary.str();
  return o;
}

Outcome criterion5() {
  Outcome o;
  Rng rng(5);
  const std::size_t dims[] = {2, 3, 4};
  for (std::size_t trial = 0; trial < 20; ++trial) {
    const std::size_t d = dims[trial % 3];
    const std::size_t r = 2 + (trial / 3) % 2;
    const auto pps = random_partitioned(rng, d, r, 5);
    const auto direct = minksum_direct(pps);
    const auto cayley = minksum_via_cayley(pps, CayleyConfig::averaging(r));
    o.require(direct == cayley, "instance " + std::to_string(trial) + ": cayley " + tuple(cayley) +
                                    " != direct " + tuple(direct));
    const VertexProfile profile{d, pps.sizes()};
    for (std::size_t k = 0; k < direct.size(); ++k) {
      o.require(Integer(direct[k]) <= trivial_upper_bound(k, profile),
                "instance " + std::to_string(trial) + " exceeds the trivial bound at k=" +
                    std::to_string(k));
    }
  }
  if (o.pass) o.detail = "20 instances agree";
  return o;
}

Outcome criterion6() {
  Outcome o;
  Rng rng(6);
  std::size_t brute = 0;
  Rational worst = 0;
  for (std::size_t trial = 0; trial < 50; ++trial) {
    const auto spec = random_delta_spec(rng, 2, 3, 4, 10);
    const auto rep = verify_lemma2(spec);
    const std::string tag = "spec " + std::to_string(trial);
    o.require(rep.found && rep.delta_at_tau0 > 0 && rep.delta_at_half > 0, tag + ": no tau0");
    o.require(rep.ratio_converging, tag + ": ratio not converging");
    if (!rep.samples.empty()) {
      const auto& last = rep.samples.back().deviation;
      if (last > worst) worst = last;
      o.require(last < Rational(1, 1024), tag + ": deviation " + to_string(last));
    }
    if (spec.K() > 8) continue;
    ++brute;
    const auto poly = delta_polynomial(spec);
    const auto lead = leading_term(spec);
    Rational coefficient = 1;
    for (std::size_t i = 0; i < spec.n(); ++i) {
      std::vector<unsigned long> mu;
      for (std::size_t j = 0; j < spec.kappa[i]; ++j) mu.push_back(lead.rho[i][j] - lead.alpha[i][j]);
      coefficient *= gvd(spec.x[i], mu);
    }
    o.require(!poly.empty() && poly.begin()->first == lead.theta &&
                  poly.begin()->second == coefficient,
              tag + ": lowest term differs from the predicted one");
  }
  if (o.pass) {
    o.detail = "50 specs certified, " + std::to_string(brute) +
               " expanded by brute force, max deviation at 2^-20 = " +
               std::to_string(worst.get_d());
  }
  return o;
}

Outcome criterion7() {
  Outcome o;
  Rng rng(7);
  std::uniform_int_distribution<long> entry(-9, 9);
  for (std::size_t trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + trial % 6;
    Matrix m(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c) = Rational(entry(rng), 1 + rng() % 4);
    }
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m(r, c).canonicalize();
    }
    std::vector<std::size_t> cols;
    for (std::size_t c = 0; c < n; ++c) {
      if (rng() % 2 == 0) cols.push_back(c);
    }
    if (cols.empty()) cols.push_back(rng() % n);
    Rational sum = 0;
    for (const auto& t : laplace_expand(m, cols)) sum += t.value();
    o.require(sum == determinant(m), "matrix " + std::to_string(trial) + " disagrees");
  }
  if (o.pass) o.detail = "100 matrices up to 6x6";
  return o;
}

Outcome criterion8() {
  Outcome o;
  o.require(two_polytope_bound(1, 3, 4, 4) == 16, "two-polytope bound at k=1 is not 16");
  const Integer top = two_polytope_bound(3, 3, 4, 4);
  o.require(top == 18 && top == three_polytope_bounds(4, 4).f2,
            "two-polytope bound at k=3 is " + to_string(top));
  const auto cyclic = cyclic_f_vector(4, 6);
  o.require(cyclic == std::vector<Integer>{6, 15, 18, 9}, "f(C_4(6)) = " + format_tuple(cyclic));
  Integer euler = 0;
  for (std::size_t k = 0; k < cyclic.size(); ++k) euler += k % 2 == 0 ? cyclic[k] : Integer(-cyclic[k]);
  o.require(euler == 0, "Euler sum of C_4(6) is " + to_string(euler));
  for (std::size_t d = 1; d <= 4; ++d) {
    std::vector<Point> cube;
    for (unsigned long mask = 0; mask < (1ul << d); ++mask) {
      Point p(d);
      for (std::size_t c = 0; c < d; ++c) p[c] = (mask >> c) & 1;
      cube.push_back(p);
    }
    const auto f = convex_hull(PointSet(d, cube)).f_vector();
    const Integer expected = Integer(1) << d;
    o.require(zonotope_bound(0, d, d) == expected && Integer(f.front()) == expected,
              "zonotope/cube mismatch at d=" + std::to_string(d));
  }
  if (o.pass) o.detail = "16, 18, (6,15,18,9), 2^d for d<=4";
  return o;
}

Outcome criterion9() {
  Outcome o;
  const auto rep = run_selftest();
  for (const auto& c : rep.checks) o.require(c.pass, c.name + ": " + c.actual);
  if (o.pass) o.detail = std::to_string(rep.checks.size()) + " suites";
  return o;
}

struct Criterion {
  const char* title;
  double time_limit_seconds;
  Outcome (*run)();
};

const Criterion kCriteria[] = {
    {"d=3 r=2 n=(4,4) attains f0 = 16", 30, criterion1},
    {"d=5 r=2 n=(5,5) attains f0 = 25, f1 = 100", 300, criterion2},
    {"d=4 r=3 n=(4,4,4) attains f0 = 64", 300, criterion3},
    {"constructed summands are neighborly d-polytopes", 300, criterion4},
    {"Cayley and direct Minkowski f-vectors agree on 20 random instances", 300, criterion5},
    {"block determinants have the predicted leading term on 50 random specs", 600, criterion6},
    {"Laplace expansion equals the determinant on 100 random matrices", 300, criterion7},
    {"bound cross-checks", 300, criterion8},
    {"selftest invariant suites", 300, criterion9},
};

bool run_one(std::size_t number) {
  const auto& c = kCriteria[number - 1];
  const auto start = Clock::now();
  Outcome o;
  try {
    o = c.run();
  } catch (const std::exception& e) {
    o.require(false, std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(Clock::now() - start).count();
  o.require(seconds < c.time_limit_seconds, "took " + std::to_string(seconds) + " s");
  std::ostringstream time;
  time.precision(3);
  time << std::fixed << seconds;
  std::cout << (o.pass ? "[PASS]" : "[FAIL]") << " criterion " << number << ": " << c.title
            << " (" << time.str() << " s) " << o.detail << std::endl;
  return o.pass;
}

}  // namespace

int main(int argc, char** argv) {
  constexpr std::size_t count = std::size(kCriteria);
  std::optional<std::size_t> only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      const long n = std::strtol(argv[++i], nullptr, 10);
      if (n < 1 || n > static_cast<long>(count)) {
        std::cerr << "criterion must be 1.." << count << '\n';
        return 2;
      }
      only = static_cast<std::size_t>(n);
    } else {
      std::cerr << "usage: cayleysum_acceptance [--criterion N]\n";
      return 2;
    }
  }
  bool all = true;
  for (std::size_t n = 1; n <= count; ++n) {
    if (!only || *only == n) all = run_one(n) && all;
  }
  return all ? 0 : 1;
}
