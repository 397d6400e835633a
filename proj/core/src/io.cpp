#include "cayleysum/io.hpp"

#include <fstream>
#include <stdexcept>

namespace cayleysum {

Json rational_to_json(const Rational& q) { return to_string(q); }

Rational rational_from_json(const Json& j) {
  if (j.is_string()) return parse_rational(j.get<std::string>());
  if (j.is_number_integer()) return Rational(Integer(j.dump()));
  throw std::invalid_argument("expected a rational string, got " + j.dump());
}

namespace {

Json rationals_to_json(std::span<const Rational> values) {
  Json out = Json::array();
  for (const auto& v : values) out.push_back(rational_to_json(v));
  return out;
}

std::vector<Rational> rationals_from_json(const Json& j) {
  std::vector<Rational> out;
  for (const auto& v : j) out.push_back(rational_from_json(v));
  return out;
}

}  // namespace

Json point_set_to_json(const PointSet& points) {
  Json j;
  j["ambient_dim"] = points.ambient_dim;
  j["points"] = Json::array();
  for (const auto& p : points.points) j["points"].push_back(rationals_to_json(p));
  if (!points.labels.empty()) j["labels"] = points.labels;
  return j;
}

PointSet point_set_from_json(const Json& j) {
  std::vector<Point> pts;
  for (const auto& p : j.at("points")) pts.push_back(rationals_from_json(p));
  std::vector<std::string> labels;
  if (j.contains("labels")) labels = j.at("labels").get<std::vector<std::string>>();
  return PointSet(j.at("ambient_dim").get<std::size_t>(), std::move(pts), std::move(labels));
}

Json lattice_to_json(const FaceLattice& lattice) {
  Json j;
  j["dims"] = {lattice.ambient_dim(), lattice.polytope_dim()};
  j["num_points"] = lattice.num_points();
  j["faces"] = Json::array();
  for (const auto& f : lattice.faces()) {
    j["faces"].push_back({{"dim", f.dim}, {"vertices", f.vertices}});
  }
  j["f_vector"] = lattice.f_vector();
  return j;
}

FaceLattice lattice_from_json(const Json& j) {
  std::vector<Face> faces;
  for (const auto& f : j.at("faces")) {
    faces.push_back({f.at("dim").get<std::size_t>(),
                     f.at("vertices").get<std::vector<std::size_t>>()});
  }
  const auto& dims = j.at("dims");
  return FaceLattice(dims.at(0).get<std::size_t>(), dims.at(1).get<std::size_t>(),
                     j.at("num_points").get<std::size_t>(), std::move(faces));
}

Json delta_spec_to_json(const DeltaSpec& spec) {
  Json j;
  j["kappa"] = spec.kappa;
  j["beta"] = spec.beta;
  j["x"] = Json::array();
  for (const auto& block : spec.x) j["x"].push_back(rationals_to_json(block));
  return j;
}

DeltaSpec delta_spec_from_json(const Json& j) {
  DeltaSpec spec;
  spec.beta = j.at("beta").get<std::vector<unsigned long>>();
  for (const auto& block : j.at("x")) spec.x.push_back(rationals_from_json(block));
  if (j.contains("kappa")) {
    spec.kappa = j.at("kappa").get<std::vector<std::size_t>>();
  } else {
    for (const auto& block : spec.x) spec.kappa.push_back(block.size());
  }
  spec.validate();
  return spec;
}

Json params_to_json(const ConstructionParams& params) {
  Json j;
  j["d"] = params.d;
  j["r"] = params.r;
  j["n"] = params.n;
  j["alpha"] = Json::array();
  for (const auto& a : params.alpha) j["alpha"].push_back(rationals_to_json(a));
  j["nu"] = params.nu;
  j["epsilon"] = rational_to_json(params.epsilon);
  j["M"] = rational_to_json(params.M);
  j["tau"] = rational_to_json(params.tau);
  j["zeta"] = rational_to_json(params.zeta);
  return j;
}

ConstructionParams params_from_json(const Json& j) {
  auto p = ConstructionParams::defaults(j.at("d").get<std::size_t>(), j.at("r").get<std::size_t>(),
                                        j.at("n").get<std::vector<std::size_t>>());
  if (j.contains("alpha")) {
    p.alpha.clear();
    for (const auto& a : j.at("alpha")) p.alpha.push_back(rationals_from_json(a));
  }
  if (j.contains("nu")) p.nu = j.at("nu").get<std::vector<unsigned long>>();
  if (j.contains("epsilon")) p.epsilon = rational_from_json(j.at("epsilon"));
  if (j.contains("M")) p.M = rational_from_json(j.at("M"));
  if (j.contains("tau")) p.tau = rational_from_json(j.at("tau"));
  if (j.contains("zeta")) p.zeta = rational_from_json(j.at("zeta"));
  p.validate();
  return p;
}

Json family_to_json(const PartitionedPointSet& family) {
  Json j;
  j["parts"] = Json::array();
  for (const auto& part : family.parts()) j["parts"].push_back(point_set_to_json(part));
  return j;
}

PartitionedPointSet family_from_json(const Json& j) {
  std::vector<PointSet> parts;
  for (const auto& p : j.at("parts")) parts.push_back(point_set_from_json(p));
  return PartitionedPointSet(std::move(parts));
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw std::invalid_argument(path.string() + ": " + e.what());
  }
}

void write_json_file(const std::filesystem::path& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path.string());
  out << j.dump(2) << '\n';
}

}  // namespace cayleysum
