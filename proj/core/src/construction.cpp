#include "cayleysum/construction.hpp"

#include "cayleysum/bounds.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cayleysum {

namespace {

Rational power_of_two_inverse(unsigned halvings) {
  Integer den = 1;
  den <<= halvings;
  return Rational(1, den);
}

Rational tau_power(const ConstructionParams& params, std::size_t part) {
  return pow(params.tau, params.nu[part]);
}

}  // namespace

ConstructionParams ConstructionParams::defaults(std::size_t d, std::size_t r,
                                                std::vector<std::size_t> n) {
  ConstructionParams p;
  p.d = d;
  p.r = r;
  p.n = std::move(n);
  p.alpha.resize(p.n.size());
  for (std::size_t i = 0; i < p.n.size(); ++i) {
    for (std::size_t j = 1; j <= p.n[i]; ++j) p.alpha[i].emplace_back(static_cast<unsigned long>(j));
  }
  for (std::size_t i = 0; i < r; ++i) p.nu.push_back(r - 1 - i);
  p.epsilon = Rational(1, 4);
  p.M = p.n.empty() ? Rational(2) : Rational(static_cast<unsigned long>(p.n.back() + 1));
  return p;
}

void ConstructionParams::validate() const {
  if (d < 3) throw std::invalid_argument("construction needs d >= 3");
  if (r < 2 || r > d - 1) throw std::invalid_argument("construction needs 2 <= r <= d - 1");
  if (n.size() != r) throw std::invalid_argument("need one vertex count per part");
  if (alpha.size() != r) throw std::invalid_argument("need one alpha list per part");
  if (nu.size() != r) throw std::invalid_argument("need one nu per part");
  if (epsilon <= 0) throw std::invalid_argument("epsilon must be positive");
  if (tau <= 0) throw std::invalid_argument("tau must be positive");
  if (zeta < 0) throw std::invalid_argument("zeta must be nonnegative");
  for (std::size_t i = 0; i < r; ++i) {
    if (n[i] == 0) throw std::invalid_argument("every part needs at least one point");
    if (alpha[i].size() != n[i]) {
      throw std::invalid_argument("alpha list " + std::to_string(i) + " has the wrong length");
    }
    if (alpha[i].front() <= 0) throw std::invalid_argument("alpha values must be positive");
    for (std::size_t j = 0; j + 1 < n[i]; ++j) {
      if (alpha[i][j] + epsilon >= alpha[i][j + 1]) {
        throw std::invalid_argument("alpha + epsilon must stay below the next alpha");
      }
    }
    if (i + 1 < r && nu[i] <= nu[i + 1]) throw std::invalid_argument("nu must be decreasing");
  }
  if (nu.back() != 0) throw std::invalid_argument("the last nu must be 0");
  if (M <= alpha.back().back() + epsilon) {
    throw std::invalid_argument("M must exceed the last alpha + epsilon");
  }
}

std::size_t ConstructionParams::total_points() const {
  return std::accumulate(n.begin(), n.end(), std::size_t{0});
}

Point moment_curve_point(std::size_t part, const Rational& t, const ConstructionParams& params,
                         CurveVariant variant) {
  const std::size_t d = params.d;
  const std::size_t r = params.r;
  if (part >= r) throw std::out_of_range("curve index outside 0..r-1");
  if (t <= 0) throw std::invalid_argument("curve parameter must be positive");
  Point x(d);
  x[part] = t;
  Rational power = t;
  for (std::size_t c = r; c < d; ++c) {
    power *= t;
    x[c] = power;
  }
  if (variant == CurveVariant::kPerturbed && params.zeta != 0) {
    // power is now t^{d-r+1}; the vanishing slots continue the sequence.
    for (std::size_t c = 0; c < r; ++c) {
      if (c == part) continue;
      power *= t;
      x[c] = params.zeta * power;
    }
  }
  return x;
}

PartitionedPointSet generate_family(const ConstructionParams& params, CurveVariant variant) {
  params.validate();
  std::vector<PointSet> parts;
  for (std::size_t i = 0; i < params.r; ++i) {
    const Rational scale = tau_power(params, i);
    std::vector<Point> pts;
    for (const auto& a : params.alpha[i]) {
      pts.push_back(moment_curve_point(i, a * scale, params, variant));
    }
    parts.emplace_back(params.d, std::move(pts));
  }
  return PartitionedPointSet(std::move(parts));
}

std::size_t WitnessSubset::size() const {
  std::size_t k = 0;
  for (const auto& m : members) k += m.size();
  return k;
}

std::vector<std::size_t> WitnessSubset::global_indices(const std::vector<std::size_t>& n) const {
  std::vector<std::size_t> out;
  std::size_t offset = 0;
  for (std::size_t i = 0; i < members.size(); ++i) {
    for (auto j : members[i]) out.push_back(offset + j);
    offset += n.at(i);
  }
  return out;
}

void WitnessSubset::validate(const ConstructionParams& params) const {
  if (members.size() != params.r) throw std::invalid_argument("witness subset needs r parts");
  for (std::size_t i = 0; i < params.r; ++i) {
    const auto& m = members[i];
    if (m.empty()) throw std::invalid_argument("witness subset must meet every part");
    if (!std::is_sorted(m.begin(), m.end()) ||
        std::adjacent_find(m.begin(), m.end()) != m.end()) {
      throw std::invalid_argument("witness subset indices must be strictly increasing");
    }
    if (m.back() >= params.n[i]) throw std::invalid_argument("witness index out of range");
  }
  const std::size_t k = size();
  if (k < params.r || k > params.max_witness_size()) {
    throw std::invalid_argument("witness subset size " + std::to_string(k) + " outside " +
                                std::to_string(params.r) + ".." +
                                std::to_string(params.max_witness_size()));
  }
}

std::vector<WitnessSubset> spanning_subsets(const std::vector<std::size_t>& n, std::size_t k) {
  const std::size_t r = n.size();
  std::vector<WitnessSubset> out;
  WitnessSubset current;
  current.members.resize(r);

  // Part by part: choose a nonempty subset of part i, leaving room for the rest.
  auto recurse = [&](auto& self, std::size_t part, std::size_t remaining) -> void {
    if (part == r) {
      if (remaining == 0) out.push_back(current);
      return;
    }
    const std::size_t later = r - part - 1;
    if (remaining < later + 1) return;
    const std::size_t take_max = std::min(n[part], remaining - later);
    auto& chosen = current.members[part];
    auto pick = [&](auto& pick_self, std::size_t start, std::size_t take) -> void {
      if (take == 0) {
        self(self, part + 1, remaining - chosen.size());
        return;
      }
      for (std::size_t j = start; j + take <= n[part]; ++j) {
        chosen.push_back(j);
        pick_self(pick_self, j + 1, take - 1);
        chosen.pop_back();
      }
    };
    for (std::size_t take = 1; take <= take_max; ++take) pick(pick, 0, take);
  };
  recurse(recurse, 0, k);

  std::sort(out.begin(), out.end(), [&](const WitnessSubset& a, const WitnessSubset& b) {
    return a.global_indices(n) < b.global_indices(n);
  });
  return out;
}

namespace {

// Columns 1..d+r-1 of the witness matrix, as points of R^{d+r-1}.
std::vector<Point> witness_columns(const WitnessSubset& subset, const ConstructionParams& params,
                                   CurveVariant variant) {
  subset.validate(params);
  const std::size_t r = params.r;
  std::vector<Point> cols;
  for (std::size_t i = 0; i < r; ++i) {
    const Rational scale = tau_power(params, i);
    for (auto j : subset.members[i]) {
      const Rational t = params.alpha[i][j] * scale;
      const Rational t_eps = (params.alpha[i][j] + params.epsilon) * scale;
      cols.push_back(cayley_lift(i, moment_curve_point(i, t, params, variant), r));
      cols.push_back(cayley_lift(i, moment_curve_point(i, t_eps, params, variant), r));
    }
  }
  const std::size_t trailing = params.d + r - 1 - 2 * subset.size();
  for (std::size_t lambda = 1; lambda <= trailing; ++lambda) {
    const Rational t = params.M * static_cast<unsigned long>(lambda);
    cols.push_back(cayley_lift(r - 1, moment_curve_point(r - 1, t, params, variant), r));
  }
  return cols;
}

bool sign_flip(const ConstructionParams& params) { return (params.r * (params.r - 1) / 2) % 2 == 1; }

}  // namespace

Rational witness_determinant(const WitnessSubset& subset, std::span<const Rational> x,
                             const ConstructionParams& params, CurveVariant variant) {
  const std::size_t D = params.d + params.r - 1;
  if (x.size() != D) throw DimensionError("witness point must lie in R^{d+r-1}");
  const auto cols = witness_columns(subset, params, variant);
  Matrix m(D + 1, D + 1);
  for (std::size_t c = 0; c <= D; ++c) {
    m(0, c) = 1;
    const auto& p = c == 0 ? Point(x.begin(), x.end()) : cols[c - 1];
    for (std::size_t row = 1; row <= D; ++row) m(row, c) = p[row - 1];
  }
  Rational det = determinant(m);
  return sign_flip(params) ? Rational(-det) : det;
}

Hyperplane witness_hyperplane(const WitnessSubset& subset, const ConstructionParams& params,
                              CurveVariant variant) {
  const std::size_t D = params.d + params.r - 1;
  const auto cols = witness_columns(subset, params, variant);
  // Expansion along the x column: minors drop one row of the remaining block.
  Hyperplane h;
  h.normal.resize(D);
  const bool flip = sign_flip(params);
  for (std::size_t skip = 0; skip <= D; ++skip) {
    Matrix minor(D, D);
    std::size_t out_row = 0;
    for (std::size_t row = 0; row <= D; ++row) {
      if (row == skip) continue;
      for (std::size_t c = 0; c < D; ++c) minor(out_row, c) = row == 0 ? Rational(1) : cols[c][row - 1];
      ++out_row;
    }
    Rational v = determinant(minor);
    if ((skip % 2 == 1) != flip) v = -v;
    if (skip == 0) {
      h.offset = v;
    } else {
      h.normal[skip - 1] = v;
    }
  }
  return h;
}

Integer witness_check_count(const ConstructionParams& params) {
  Integer total = 0;
  const std::size_t sum = params.total_points();
  for (std::size_t k = params.r; k <= params.max_witness_size(); ++k) {
    total += static_cast<unsigned long>(sum - k) * phi(k, params.n);
  }
  return total;
}

bool witnesses_positive(const ConstructionParams& params, CurveVariant variant,
                        std::size_t& checks) {
  const auto family = cayley_embed(generate_family(params, variant),
                                   CayleyConfig::averaging(params.r));
  for (std::size_t k = params.r; k <= params.max_witness_size(); ++k) {
    for (const auto& subset : spanning_subsets(params.n, k)) {
      const auto h = witness_hyperplane(subset, params, variant);
      const auto members = subset.global_indices(params.n);
      for (std::size_t u = 0, next = 0; u < family.size(); ++u) {
        if (next < members.size() && members[next] == u) {
          ++next;
          continue;
        }
        ++checks;
        if (h.evaluate(family.points[u]) <= 0) return false;
      }
    }
  }
  return true;
}

namespace {

template <class Apply>
SearchCertificate halving_search(ConstructionParams params, CurveVariant variant,
                                 unsigned max_halvings, Apply apply) {
  SearchCertificate cert;
  for (unsigned h = 0; h <= max_halvings; ++h) {
    const Rational value = power_of_two_inverse(h);
    apply(params, value);
    std::size_t checks = 0;
    cert.value = value;
    cert.halvings = h;
    if (witnesses_positive(params, variant, checks)) {
      cert.found = true;
      cert.checks = checks;
      return cert;
    }
  }
  return cert;
}

}  // namespace

SearchCertificate find_tau_star(const ConstructionParams& params, unsigned max_halvings) {
  params.validate();
  return halving_search(params, CurveVariant::kUnperturbed, max_halvings,
                        [](ConstructionParams& p, const Rational& v) { p.tau = v; });
}

SearchCertificate find_zeta_diamond(const ConstructionParams& params, unsigned max_halvings) {
  params.validate();
  return halving_search(params, CurveVariant::kPerturbed, max_halvings,
                        [](ConstructionParams& p, const Rational& v) { p.zeta = v; });
}

std::vector<NeighborlyResult> verify_neighborly(const ConstructionParams& params) {
  if (params.zeta <= 0) throw std::invalid_argument("neighborliness needs zeta > 0");
  const auto family = generate_family(params, CurveVariant::kPerturbed);
  std::vector<NeighborlyResult> out;
  for (const auto& part : family.parts()) {
    const auto lattice = convex_hull(part);
    NeighborlyResult res;
    res.polytope_dim = lattice.polytope_dim();
    res.neighborliness = neighborliness(lattice);
    res.ok = res.polytope_dim == params.d && res.neighborliness >= params.d / 2;
    out.push_back(res);
  }
  return out;
}

TightnessReport verify_tightness(std::size_t d, std::size_t r, const std::vector<std::size_t>& n,
                                 unsigned max_halvings) {
  TightnessReport report;
  report.params = ConstructionParams::defaults(d, r, n);
  auto& params = report.params;
  params.validate();
  auto& checks = report.checks;
  const Integer expected_count = witness_check_count(params);

  report.tau = find_tau_star(params, max_halvings);
  checks.push_back(check_true("tau_star_found", report.tau.found));
  if (!report.tau.found) return report;
  params.tau = report.tau.value;
  checks.push_back(check_equal("tau_star_check_count", to_string(expected_count),
                               std::to_string(report.tau.checks)));

  report.zeta = find_zeta_diamond(params, max_halvings);
  checks.push_back(check_true("zeta_diamond_found", report.zeta.found));
  if (!report.zeta.found) return report;
  params.zeta = report.zeta.value;
  checks.push_back(check_equal("zeta_diamond_check_count", to_string(expected_count),
                               std::to_string(report.zeta.checks)));

  const auto family = generate_family(params, CurveVariant::kPerturbed);
  const auto cayley = convex_hull(cayley_embed(family, CayleyConfig::averaging(r)));
  report.cayley_f_vector = minksum_from_cayley(cayley, family);
  report.direct_f_vector = minksum_direct(family);
  checks.push_back(check_equal("oracles_agree", format_tuple(report.direct_f_vector),
                               format_tuple(report.cayley_f_vector)));

  const std::size_t top = params.max_witness_size();
  for (std::size_t k = 0; k + r <= top; ++k) {
    report.phi.push_back(phi(k + r, n));
    const auto expected = to_string(report.phi.back());
    auto entry = [&](const std::vector<std::size_t>& f) {
      return k < f.size() ? std::to_string(f[k]) : std::string("missing");
    };
    checks.push_back(check_equal("f" + std::to_string(k) + "_cayley", expected,
                                 entry(report.cayley_f_vector)));
    checks.push_back(check_equal("f" + std::to_string(k) + "_direct", expected,
                                 entry(report.direct_f_vector)));
  }
  // Independent of the determinants: every witness subset is a face of the hull.
  for (std::size_t k = r; k <= top; ++k) {
    std::size_t faces = 0;
    const auto subsets = spanning_subsets(n, k);
    for (const auto& s : subsets) {
      if (is_face(cayley, s.global_indices(n))) ++faces;
    }
    checks.push_back(check_equal("spanning_" + std::to_string(k) + "_subsets_are_faces",
                                 std::to_string(subsets.size()), std::to_string(faces)));
  }
  report.neighborly = verify_neighborly(params);
  return report;
}

}  // namespace cayleysum
