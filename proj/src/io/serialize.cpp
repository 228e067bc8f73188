#include "bubblering/io/serialize.hpp"

#include <sstream>
#include <variant>

#include "bubblering/errors.hpp"

namespace bubblering::io {

namespace {

using geometry::CrossSection;
using geometry::Point;

[[noreturn]] void schema(const std::string& detail) {
  throw ShapeError("schema", detail);
}

double number(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key) || !obj.at(key).is_number()) {
    schema(where + "." + key + " must be a number");
  }
  return obj.at(key).get<double>();
}

std::vector<double> number_list(const Json& obj, const char* key,
                                const std::string& where) {
  if (!obj.contains(key) || !obj.at(key).is_array()) {
    schema(where + "." + key + " must be an array of numbers");
  }
  std::vector<double> out;
  for (const Json& v : obj.at(key)) {
    if (!v.is_number()) schema(where + "." + key + " must contain only numbers");
    out.push_back(v.get<double>());
  }
  return out;
}

int resolution_of(const Json& j, int fallback) {
  if (!j.contains("resolution")) return fallback;
  const Json& r = j.at("resolution");
  if (!r.is_number_integer()) schema("resolution must be an integer");
  return r.get<int>();
}

template <class T>
Json points(const std::vector<T>& v) {
  Json a = Json::array();
  for (const auto& p : v) a.push_back(p);
  return a;
}

Json terms(const certify::BoundTerms& t) {
  return Json{{"b_star", t.b_star},
              {"r_max", t.r_max},
              {"surface_length", t.surface_length},
              {"height", t.height},
              {"perimeter", t.perimeter},
              {"term_curvature", t.term_curvature},
              {"term_bernoulli", t.term_bernoulli},
              {"we_min", t.we_min}};
}

void flatten(const Json& j, const std::string& prefix, std::ostringstream& os) {
  if (j.is_object()) {
    for (const auto& [k, v] : j.items()) {
      flatten(v, prefix.empty() ? k : prefix + "." + k, os);
    }
  } else if (!j.is_array()) {
    os << prefix << ',' << (j.is_string() ? j.get<std::string>() : j.dump()) << '\n';
  }
}

}  // namespace

Json parse_json(const std::string& text, const std::string& origin) {
  try {
    return Json::parse(text);
  } catch (const Json::parse_error& e) {
    schema(origin + " is not valid JSON: " + e.what());
  }
}

CrossSection shape_from_json(const Json& j) {
  if (!j.is_object()) schema("shape must be a JSON object");
  if (!j.contains("kind") || !j.at("kind").is_string()) {
    schema("shape.kind must be one of ellipse, disk, fourier-star, polygon");
  }
  if (!j.contains("params") || !j.at("params").is_object()) {
    schema("shape.params must be an object");
  }
  const std::string kind = j.at("kind").get<std::string>();
  const Json& p = j.at("params");
  const int res = resolution_of(j, geometry::kDefaultResolution);
  if (kind == "ellipse") {
    return CrossSection(geometry::Ellipse{number(p, "R0", "params"),
                                          number(p, "m", "params"),
                                          number(p, "n", "params")},
                        res);
  }
  if (kind == "disk") {
    return CrossSection(
        geometry::Disk{number(p, "R0", "params"), number(p, "rho0", "params")}, res);
  }
  if (kind == "fourier-star") {
    return CrossSection(geometry::FourierStar{number(p, "R0", "params"),
                                              number(p, "base_radius", "params"),
                                              number_list(p, "coeffs", "params")},
                        res);
  }
  if (kind == "polygon") {
    if (!p.contains("vertices") || !p.at("vertices").is_array()) {
      schema("params.vertices must be an array of [r, z] pairs");
    }
    std::vector<Point> v;
    for (const Json& q : p.at("vertices")) {
      if (!q.is_array() || q.size() != 2 || !q[0].is_number() || !q[1].is_number()) {
        schema("params.vertices must be an array of [r, z] pairs");
      }
      v.push_back({q[0].get<double>(), q[1].get<double>()});
    }
    return CrossSection(geometry::Polygon{v}, res);
  }
  schema("unknown shape kind '" + kind + "'");
}

Json shape_to_json(const CrossSection& shape) {
  Json j;
  j["kind"] = shape.kind_name();
  j["params"] = std::visit(
      [](const auto& k) -> Json {
        using T = std::decay_t<decltype(k)>;
        if constexpr (std::is_same_v<T, geometry::Ellipse>) {
          return Json{{"R0", k.center_r}, {"m", k.semi_r}, {"n", k.semi_z}};
        } else if constexpr (std::is_same_v<T, geometry::Disk>) {
          return Json{{"R0", k.center_r}, {"rho0", k.radius}};
        } else if constexpr (std::is_same_v<T, geometry::FourierStar>) {
          return Json{{"R0", k.center_r},
                      {"base_radius", k.base_radius},
                      {"coeffs", k.cosine_coeffs}};
        } else {
          Json v = Json::array();
          for (const Point& q : k.vertices) v.push_back({q.r, q.z});
          return Json{{"vertices", v}};
        }
      },
      shape.kind());
  j["resolution"] = shape.resolution();
  return j;
}

stream::ShapeFamily family_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("family") || !j.at("family").is_string()) {
    schema("family description must be an object with a \"family\" name");
  }
  const std::string name = j.at("family").get<std::string>();
  const int res = resolution_of(j, 128);
  std::vector<double> init;
  if (j.contains("initial")) init = number_list(j, "initial", "family");
  if (name == "thick-disk") {
    if (init.empty()) init = {1.5};
    if (init.size() != 1) schema("thick-disk family takes one parameter [R0]");
    return stream::thick_disk_family(init[0], res);
  }
  if (name == "ellipse") {
    if (init.empty()) init = {2.0, 0.0};
    if (init.size() != 2) schema("ellipse family takes [R0, log_aspect]");
    return stream::ellipse_family(init[0], init[1], res);
  }
  if (name == "fourier-star") {
    if (init.empty()) init = {2.0, 0.0, 0.0};
    return stream::fourier_star_family(
        init[0], std::vector<double>(init.begin() + 1, init.end()), res);
  }
  schema("unknown family '" + name + "'");
}

Json family_to_json(const stream::ShapeFamily& f) {
  return Json{{"family", f.name()},
              {"parameters", f.parameter_names()},
              {"initial", f.initial},
              {"resolution", f.resolution},
              {"require_thick", f.require_thick}};
}

Json to_json(const geometry::GeometryReport& r) {
  return Json{{"area", r.area},
              {"major_radius", r.major_radius},
              {"minor_radius", r.minor_radius},
              {"mu", r.mu},
              {"mu_sqrt_area", r.mu_sqrt_area},
              {"inverse_square_integral", r.inverse_square_integral},
              {"delta", r.delta},
              {"total_curvature", r.total_curvature},
              {"total_mean_curvature", r.total_mean_curvature},
              {"r_max", r.r_max},
              {"r_min", r.r_min},
              {"height_h", r.height_h},
              {"perimeter", r.perimeter},
              {"is_thick", r.is_thick},
              {"resolution", r.resolution},
              {"quadrature_error", r.quadrature_error}};
}

Json to_json(const certify::BoundTerms& t) { return terms(t); }

Json to_json(const certify::BoundCertificate& c) {
  Json j{{"mu", c.mu},
         {"mu_sqrt_area", c.mu_sqrt_area},
         {"mu_convention", "mu = R/a with a = sqrt(|E|/2pi); mu_sqrt_area = R/sqrt|E| = mu/sqrt(2pi)"},
         {"delta", c.delta},
         {"is_thick", c.is_thick},
         {"branch", certify::to_string(c.branch)},
         {"term_curvature", c.term_curvature},
         {"term_bernoulli", c.term_bernoulli},
         {"we_min", c.we_min},
         {"form_constant", certify::form_constant()},
         {"universal", terms(c.universal)}};
  if (c.has_measured) j["measured"] = terms(c.measured);
  return j;
}

Json to_json(const stream::BoundarySolution& s, bool with_nodes) {
  Json j{{"resolution", s.resolution},
         {"W", s.W},
         {"gamma", s.gamma},
         {"circulation", s.circulation},
         {"circulation_target", s.circulation_target},
         {"circulation_error", std::abs(s.circulation - s.circulation_target)},
         {"trace_error", s.trace_error},
         {"condition_estimate", s.condition_estimate}};
  if (with_nodes) {
    Json r = Json::array(), z = Json::array();
    for (const Point& p : s.nodes.position) {
      r.push_back(p.r);
      z.push_back(p.z);
    }
    j["nodes_r"] = r;
    j["nodes_z"] = z;
    j["density"] = points(s.density);
    j["psi_trace"] = points(s.psi_trace);
    j["dn_psi"] = points(s.dn_psi);
  }
  return j;
}

Json to_json(const stream::ResidualReport& r, bool with_pointwise) {
  Json j{{"dyn_residual_l2", r.dyn_residual_l2},
         {"dyn_residual_max", r.dyn_residual_max},
         {"identity15_gap", r.identity15_gap},
         {"identity15_gap_relative", r.identity15_gap_relative},
         {"max_principle_violation", r.max_principle_violation},
         {"lambda", r.lambda},
         {"we", r.we},
         {"W", r.W},
         {"perimeter", r.perimeter},
         {"total_mean_curvature", r.total_mean_curvature}};
  if (with_pointwise) j["pointwise"] = points(r.pointwise);
  return j;
}

Json to_json(const stream::SearchResult& r) {
  Json j{{"family", family_to_json(r.family)},
         {"we", r.we},
         {"budget", r.budget},
         {"seed", r.seed},
         {"evaluations", r.log.size()},
         {"best_params", r.best_params},
         {"W", r.W},
         {"lambda", r.lambda},
         {"residual", to_json(r.report, false)}};
  if (r.best_shape) j["best_shape"] = shape_to_json(*r.best_shape);
  return j;
}

std::string flat_csv(const Json& j) {
  std::ostringstream os;
  os << "key,value\n";
  flatten(j, "", os);
  return os.str();
}

}  // namespace bubblering::io
