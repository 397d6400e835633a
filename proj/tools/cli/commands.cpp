#include "commands.hpp"

#include "cayleysum/bounds.hpp"
#include "cayleysum/cayley.hpp"
#include "cayleysum/construction.hpp"
#include "cayleysum/det_asymptotics.hpp"
#include "cayleysum/io.hpp"
#include "cayleysum/selftest.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <functional>
#include <ostream>
#include <sstream>

namespace cayleysum::cli {

namespace {

struct Options {
  std::size_t d = 0;
  std::size_t r = 0;
  std::vector<std::size_t> n;
  std::size_t ell = 0;
  std::size_t k = 0;
  std::size_t l = 0;
  std::vector<long> m;
  std::vector<std::string> inputs;
  std::string method;
  std::string kind;
  std::string out;
  std::string report;
  std::string spec;
  std::string alpha;
  std::uint64_t seed = 20240601;
  unsigned max_halvings = 64;
  bool find_tau0 = false;
  bool timing = false;
};

class Stopwatch {
 public:
  explicit Stopwatch(RunReport& report) : report_(report) {}
  template <class F>
  auto stage(const std::string& name, F&& f) {
    const auto start = std::chrono::steady_clock::now();
    auto result = f();
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    report_.timing.push_back({name, elapsed.count()});
    return result;
  }

 private:
  RunReport& report_;
};

Json sizes_json(const std::vector<std::size_t>& v) { return Json(v); }

Json integers_json(const std::vector<Integer>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(to_string(x));
  return j;
}

Json certificate_json(const SearchCertificate& c) {
  return {{"found", c.found},
          {"value", rational_to_json(c.value)},
          {"halvings", c.halvings},
          {"checks", c.checks}};
}

// "1,2,3;1,2,4" -> one rational list per part.
std::vector<std::vector<Rational>> parse_alpha(const std::string& text) {
  std::vector<std::vector<Rational>> out;
  std::stringstream parts(text);
  std::string part;
  while (std::getline(parts, part, ';')) {
    std::vector<Rational> values;
    std::stringstream items(part);
    std::string item;
    while (std::getline(items, item, ',')) values.push_back(parse_rational(item));
    out.push_back(std::move(values));
  }
  return out;
}

void emit(const RunReport& report, const Options& opt, const std::string& path,
          std::ostream& out) {
  const auto j = report.to_json(opt.timing);
  if (path.empty()) {
    out << j.dump(2) << '\n';
  } else {
    write_json_file(path, j);
  }
}

RunReport cmd_bound(const Options& opt) {
  RunReport rep;
  rep.command = "bound";
  rep.inputs["kind"] = opt.kind;
  if (opt.kind == "trivial") {
    const VertexProfile profile{opt.d == 0 ? opt.k + 1 : opt.d, opt.n};
    rep.inputs["params"] = {{"k", opt.k}, {"n", opt.n}, {"d", profile.d}};
    rep.outputs["value"] = to_string(trivial_upper_bound(opt.k, profile));
  } else if (opt.kind == "three") {
    if (opt.m.size() != 2) throw std::invalid_argument("--m needs two facet counts");
    const auto b = three_polytope_bounds(opt.m[0], opt.m[1]);
    rep.inputs["params"] = {{"m", opt.m}};
    rep.outputs["values"] = {{"f0", to_string(b.f0)}, {"f1", to_string(b.f1)},
                             {"f2", to_string(b.f2)}};
  } else if (opt.kind == "two") {
    if (opt.n.size() != 2) throw std::invalid_argument("--n needs two vertex counts");
    rep.inputs["params"] = {{"k", opt.k}, {"d", opt.d}, {"n", opt.n}};
    const auto hull_value = two_polytope_bound(opt.k, opt.d, opt.n[0], opt.n[1]);
    const auto closed = two_polytope_bound(opt.k, opt.d, opt.n[0], opt.n[1],
                                           CyclicSource::kClosedForm);
    rep.outputs["value"] = to_string(hull_value);
    rep.checks.push_back(
        check_equal("cyclic_hull_matches_closed_form", to_string(closed), to_string(hull_value)));
  } else if (opt.kind == "zonotope") {
    if (opt.n.size() != 1) throw std::invalid_argument("--n needs one generator count");
    rep.inputs["params"] = {{"l", opt.l}, {"n", opt.n[0]}, {"d", opt.d}};
    rep.outputs["value"] = to_string(zonotope_bound(opt.l, opt.n[0], opt.d));
  } else if (opt.kind == "f0-many") {
    const VertexProfile profile{opt.d, opt.n};
    const auto b = many_summand_f0_bounds(profile);
    rep.inputs["params"] = {{"d", opt.d}, {"n", opt.n}};
    rep.outputs["values"] = {{"sanyal", to_string(b.sanyal)}, {"weibel", to_string(b.weibel)}};
  } else {
    throw std::invalid_argument("unknown bound kind '" + opt.kind + "'");
  }
  return rep;
}

RunReport cmd_hull(const Options& opt) {
  if (opt.inputs.size() != 1) throw std::invalid_argument("hull takes exactly one --inputs file");
  RunReport rep;
  rep.command = "hull";
  rep.inputs["file"] = opt.inputs.front();
  const auto method = opt.method.empty() || opt.method == "dd" ? HullMethod::kDoubleDescription
                      : opt.method == "exhaustive"
                          ? HullMethod::kExhaustive
                          : throw std::invalid_argument("hull --method is dd or exhaustive");
  rep.inputs["method"] = method == HullMethod::kExhaustive ? "exhaustive" : "dd";
  const auto points = point_set_from_json(read_json_file(opt.inputs.front()));
  Stopwatch watch(rep);
  const auto lattice = watch.stage("hull", [&] { return convex_hull(points, method); });
  rep.outputs["lattice"] = lattice_to_json(lattice);
  rep.outputs["neighborliness"] = neighborliness(lattice);
  long euler = 0;
  for (std::size_t k = 0; k < lattice.f_vector().size(); ++k) {
    euler += (k % 2 == 0 ? 1 : -1) * static_cast<long>(lattice.f_vector()[k]);
  }
  const long expected = lattice.polytope_dim() % 2 == 1 ? 2 : 0;
  rep.checks.push_back(
      check_equal("euler_relation", std::to_string(expected), std::to_string(euler)));
  return rep;
}

RunReport cmd_minksum(const Options& opt) {
  if (opt.inputs.size() < 2) throw std::invalid_argument("minksum needs at least two --inputs");
  const std::string method = opt.method.empty() ? "both" : opt.method;
  if (method != "cayley" && method != "direct" && method != "both") {
    throw std::invalid_argument("minksum --method is cayley, direct or both");
  }
  RunReport rep;
  rep.command = "minksum";
  rep.inputs["files"] = opt.inputs;
  rep.inputs["method"] = method;
  std::vector<PointSet> parts;
  for (const auto& f : opt.inputs) parts.push_back(point_set_from_json(read_json_file(f)));
  const PartitionedPointSet pps(std::move(parts));
  Stopwatch watch(rep);

  std::vector<std::size_t> cayley;
  std::vector<std::size_t> direct;
  if (method != "direct") {
    cayley = watch.stage("cayley", [&] {
      return minksum_via_cayley(pps, CayleyConfig::averaging(pps.r()));
    });
    rep.outputs["cayley_f_vector"] = sizes_json(cayley);
  }
  if (method != "cayley") {
    direct = watch.stage("direct", [&] { return minksum_direct(pps); });
    rep.outputs["direct_f_vector"] = sizes_json(direct);
  }
  rep.outputs["f_vector"] = sizes_json(method == "direct" ? direct : cayley);
  if (method == "both") {
    rep.checks.push_back(check_equal("oracles_agree", format_tuple(direct), format_tuple(cayley)));
  }
  const auto& f = method == "direct" ? direct : cayley;
  const auto n = pps.sizes();
  for (std::size_t k = 0; k < f.size(); ++k) {
    const auto bound = phi(k + pps.r(), n);
    rep.checks.push_back(check_true("f" + std::to_string(k) + "_within_trivial_bound",
                                    Integer(static_cast<unsigned long>(f[k])) <= bound,
                                    std::to_string(f[k]) + " > " + to_string(bound)));
  }
  return rep;
}

RunReport cmd_construct(const Options& opt) {
  RunReport rep;
  rep.command = "construct";
  auto params = ConstructionParams::defaults(opt.d, opt.r, opt.n);
  if (!opt.alpha.empty()) params.alpha = parse_alpha(opt.alpha);
  params.validate();
  rep.inputs["params"] = params_to_json(params);
  rep.inputs["max_halvings"] = opt.max_halvings;
  Stopwatch watch(rep);

  const auto tau = watch.stage("tau_star", [&] { return find_tau_star(params, opt.max_halvings); });
  rep.outputs["tau_star"] = certificate_json(tau);
  rep.checks.push_back(check_true("tau_star_found", tau.found));
  if (!tau.found) return rep;
  params.tau = tau.value;

  const auto zeta =
      watch.stage("zeta_diamond", [&] { return find_zeta_diamond(params, opt.max_halvings); });
  rep.outputs["zeta_diamond"] = certificate_json(zeta);
  rep.checks.push_back(check_true("zeta_diamond_found", zeta.found));
  if (!zeta.found) return rep;
  params.zeta = zeta.value;

  const auto expected = to_string(witness_check_count(params));
  rep.checks.push_back(check_equal("tau_star_check_count", expected, std::to_string(tau.checks)));
  rep.checks.push_back(
      check_equal("zeta_diamond_check_count", expected, std::to_string(zeta.checks)));
  rep.outputs["params"] = params_to_json(params);
  rep.outputs["family"] = family_to_json(generate_family(params, CurveVariant::kPerturbed));
  return rep;
}

RunReport cmd_verify_tight(const Options& opt) {
  RunReport rep;
  rep.command = "verify-tight";
  rep.inputs = {{"d", opt.d}, {"r", opt.r}, {"n", opt.n}, {"max_halvings", opt.max_halvings}};
  Stopwatch watch(rep);
  const auto t = watch.stage("pipeline", [&] {
    return verify_tightness(opt.d, opt.r, opt.n, opt.max_halvings);
  });
  rep.outputs["params"] = params_to_json(t.params);
  rep.outputs["tau_star"] = certificate_json(t.tau);
  rep.outputs["zeta_diamond"] = certificate_json(t.zeta);
  rep.outputs["cayley_f_vector"] = sizes_json(t.cayley_f_vector);
  rep.outputs["direct_f_vector"] = sizes_json(t.direct_f_vector);
  rep.outputs["phi"] = integers_json(t.phi);
  Json parts = Json::array();
  for (const auto& nb : t.neighborly) {
    parts.push_back({{"polytope_dim", nb.polytope_dim},
                     {"neighborliness", nb.neighborliness},
                     {"neighborly_d_polytope", nb.ok}});
  }
  rep.outputs["parts"] = parts;
  rep.checks = t.checks;
  return rep;
}

RunReport cmd_delta(const Options& opt) {
  if (opt.spec.empty()) throw std::invalid_argument("delta needs --spec");
  RunReport rep;
  rep.command = "delta";
  const auto spec = delta_spec_from_json(read_json_file(opt.spec));
  rep.inputs["spec"] = delta_spec_to_json(spec);
  const auto lt = leading_term(spec);
  Json rho = Json::array();
  for (const auto& r : lt.rho) rho.push_back(r);
  rep.outputs["leading_term"] = {
      {"rho", rho}, {"theta", lt.theta}, {"coefficient", rational_to_json(lt.coefficient)}};
  rep.checks.push_back(check_true("leading_coefficient_positive", lt.coefficient > 0));

  if (spec.K() <= 8) {
    const auto poly = delta_polynomial(spec);
    Json terms = Json::object();
    for (const auto& [e, c] : poly) terms[std::to_string(e)] = rational_to_json(c);
    rep.outputs["polynomial"] = terms;
    const auto lowest = poly.empty() ? std::string("none")
                                     : std::to_string(poly.begin()->first) + ":" +
                                           to_string(poly.begin()->second);
    rep.checks.push_back(check_equal("lowest_term",
                                     std::to_string(lt.theta) + ":" + to_string(lt.coefficient),
                                     lowest));
  }
  if (opt.find_tau0) {
    Stopwatch watch(rep);
    const auto l2 = watch.stage("tau0", [&] { return verify_lemma2(spec, opt.max_halvings); });
    Json samples = Json::array();
    for (const auto& s : l2.samples) {
      samples.push_back(
          {{"tau", rational_to_json(s.tau)}, {"deviation", s.deviation.get_d()}});
    }
    rep.outputs["tau0"] = rational_to_json(l2.tau0);
    rep.outputs["delta_at_tau0"] = rational_to_json(l2.delta_at_tau0);
    rep.outputs["delta_at_half_tau0"] = rational_to_json(l2.delta_at_half);
    rep.outputs["ratio_samples"] = samples;
    rep.checks.push_back(check_true("tau0_found", l2.found));
    rep.checks.push_back(check_true("ratio_converging", l2.ratio_converging));
  }
  return rep;
}

}  // namespace

CommandResult run_command(const std::vector<std::string>& args, std::ostream& out,
                          std::ostream& err) {
  CLI::App app{"Minkowski sums via the Cayley trick, exact bounds and certificates", "cayleysum"};
  app.require_subcommand(1);
  Options opt;

  auto add_profile = [&](CLI::App* sub) {
    sub->add_option("--d", opt.d, "Dimension")->required();
    sub->add_option("--r", opt.r, "Number of summands")->required();
    sub->add_option("--n", opt.n, "Vertex counts n1,n2,...")->delimiter(',')->required();
    sub->add_option("--max-halvings", opt.max_halvings, "Halving steps for tau and zeta");
  };
  auto add_out = [&](CLI::App* sub, const char* name) {
    sub->add_option(name, name == std::string("--out") ? opt.out : opt.report,
                    "Write the JSON report here instead of standard output");
    sub->add_flag("--timing", opt.timing, "Include per-stage wall-clock times");
  };

  auto* phi_cmd = app.add_subcommand("phi", "Number of spanning l-subsets");
  phi_cmd->add_option("--ell", opt.ell, "Subset size")->required();
  phi_cmd->add_option("--n", opt.n, "Part sizes n1,n2,...")->delimiter(',')->required();
  phi_cmd->add_option("--out", opt.out, "Also write a JSON report here");

  auto* bound_cmd = app.add_subcommand("bound", "Evaluate a face-count bound");
  bound_cmd->add_option("--kind", opt.kind, "trivial|three|two|zonotope|f0-many")->required();
  bound_cmd->add_option("--k", opt.k, "Face index");
  bound_cmd->add_option("--l", opt.l, "Zonotope face dimension");
  bound_cmd->add_option("--d", opt.d, "Dimension");
  bound_cmd->add_option("--n", opt.n, "Vertex or generator counts")->delimiter(',');
  bound_cmd->add_option("--m", opt.m, "Facet counts m1,m2")->delimiter(',');
  add_out(bound_cmd, "--out");

  auto* hull_cmd = app.add_subcommand("hull", "Face lattice of a point set");
  hull_cmd->add_option("--inputs", opt.inputs, "Point set JSON")->required();
  hull_cmd->add_option("--method", opt.method, "dd|exhaustive");
  add_out(hull_cmd, "--out");

  auto* mink_cmd = app.add_subcommand("minksum", "f-vector of a Minkowski sum");
  mink_cmd->add_option("--inputs", opt.inputs, "One point set JSON per summand")
      ->required()
      ->expected(2, -1);
  mink_cmd->add_option("--method", opt.method, "cayley|direct|both");
  add_out(mink_cmd, "--out");

  auto* construct_cmd = app.add_subcommand("construct", "Certified lower-bound family");
  add_profile(construct_cmd);
  construct_cmd->add_option("--alpha", opt.alpha, "Per-part parameters, e.g. 1,2,3;1,2,3");
  add_out(construct_cmd, "--out");

  auto* tight_cmd = app.add_subcommand("verify-tight", "Check the family attains phi");
  add_profile(tight_cmd);
  add_out(tight_cmd, "--report");

  auto* delta_cmd = app.add_subcommand("delta", "Lowest-order term of a block determinant");
  delta_cmd->add_option("--spec", opt.spec, "Delta spec JSON")->required();
  delta_cmd->add_flag("--find-tau0", opt.find_tau0, "Search for a positivity threshold");
  delta_cmd->add_option("--max-halvings", opt.max_halvings, "Halving steps for tau0");
  add_out(delta_cmd, "--report");

  auto* self_cmd = app.add_subcommand("selftest", "Randomized invariant suites");
  self_cmd->add_option("--seed", opt.seed, "Random seed");
  add_out(self_cmd, "--report");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return {kPass, std::nullopt};
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n\n" << app.help();
    return {kUsage, std::nullopt};
  }

  try {
    if (*phi_cmd) {
      const auto value = phi(opt.ell, opt.n);
      out << to_string(value) << '\n';
      RunReport rep;
      rep.command = "phi";
      rep.inputs = {{"ell", opt.ell}, {"n", opt.n}};
      rep.outputs["value"] = to_string(value);
      if (!opt.out.empty()) write_json_file(opt.out, rep.to_json());
      return {kPass, rep};
    }

    std::function<RunReport()> run;
    std::string path;
    if (*bound_cmd) {
      run = [&] { return cmd_bound(opt); };
      path = opt.out;
    } else if (*hull_cmd) {
      run = [&] { return cmd_hull(opt); };
      path = opt.out;
    } else if (*mink_cmd) {
      run = [&] { return cmd_minksum(opt); };
      path = opt.out;
    } else if (*construct_cmd) {
      run = [&] { return cmd_construct(opt); };
      path = opt.out;
    } else if (*tight_cmd) {
      run = [&] { return cmd_verify_tight(opt); };
      path = opt.report;
    } else if (*delta_cmd) {
      run = [&] { return cmd_delta(opt); };
      path = opt.report;
    } else {
      run = [&] { return run_selftest(opt.seed); };
      path = opt.report;
    }
    RunReport rep = run();
    emit(rep, opt, path, out);
    if (!rep.passed()) {
      for (const auto& c : rep.checks) {
        if (!c.pass) err << "check failed: " << c.name << " expected " << c.expected << ", got "
                         << c.actual << '\n';
      }
      return {kCheckFailure, rep};
    }
    return {kPass, rep};
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return {kUsage, std::nullopt};
  }
}

}  // namespace cayleysum::cli
