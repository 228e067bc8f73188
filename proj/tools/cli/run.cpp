#include "run.hpp"

#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

#include "bubblering/certify/bound.hpp"
#include "bubblering/errors.hpp"
#include "bubblering/geometry/functionals.hpp"
#include "bubblering/io/serialize.hpp"
#include "bubblering/stream/minimize.hpp"
#include "bubblering/stream/residual.hpp"
#include "bubblering/stream/solver.hpp"

#ifndef BUBBLERING_VERSION
#define BUBBLERING_VERSION "unknown"
#endif

namespace bubblering::cli {

namespace {

using io::Json;

// A failure to write or read a file, reported as a validation error.
struct IoFailure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json config_json(const RunConfig& c) {
  Json j{{"command", c.command}};
  if (!c.shape.empty()) j["shape"] = c.shape;
  if (c.we) j["we"] = *c.we;
  j["seed"] = c.seed;
  if (c.command == "search") j["budget"] = c.budget;
  if (c.format) j["format"] = *c.format;
  if (c.resolution) j["resolution"] = *c.resolution;
  if (c.command == "solve") {
    j["W"] = c.W;
    j["lambda"] = c.lambda;
  }
  if (c.command == "norbury-table") {
    j["eps"] = c.eps;
    j["R0"] = c.r0;
  }
  if (c.command == "verify-lemmas") j["count"] = c.count;
  return j;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoFailure("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f || !(f << text)) throw IoFailure("cannot write '" + path + "'");
}

Json load_json(const std::string& arg) {
  if (arg.empty()) throw std::invalid_argument("--shape is required");
  const auto first = arg.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && arg[first] == '{') return io::parse_json(arg, "--shape");
  return io::parse_json(read_file(arg), arg);
}

geometry::CrossSection load_shape(const RunConfig& c) {
  geometry::CrossSection s = io::shape_from_json(load_json(c.shape));
  if (c.resolution) s = s.with_resolution(*c.resolution);
  return s;
}

double require_we(const RunConfig& c) {
  if (!c.we) throw std::invalid_argument("--we is required for " + c.command);
  if (!(*c.we > 0.0)) throw std::invalid_argument("--we must be positive");
  return *c.we;
}

std::string csv_header(const RunConfig& c, int resolution) {
  std::ostringstream os;
  os << "# tool=bubblering version=" << BUBBLERING_VERSION << " command=" << c.command
     << " seed=" << c.seed << " resolution=" << resolution << " units=" << io::kUnits << '\n'
     << "# config=" << config_json(c).dump() << '\n';
  return os.str();
}

std::string envelope(const RunConfig& c, int resolution, Json result) {
  Json j{{"tool", "bubblering"},
         {"version", BUBBLERING_VERSION},
         {"command", c.command},
         {"config", config_json(c)},
         {"seed", c.seed},
         {"resolution", resolution},
         {"units", io::kUnits},
         {"result", std::move(result)}};
  return j.dump(2) + "\n";
}

std::string format_of(const RunConfig& c, const char* fallback) {
  const std::string f = c.format.value_or(fallback);
  if (f != "json" && f != "csv") throw std::invalid_argument("--format must be json or csv");
  return f;
}

void emit(const RunConfig& c, std::ostream& out, const std::string& text) {
  if (c.out.empty()) {
    out << text;
  } else {
    write_file(c.out, text);
  }
}

// Output in the chosen format: JSON envelope, or the flattened result as CSV.
void emit_result(const RunConfig& c, std::ostream& out, int resolution, const Json& result) {
  if (format_of(c, "json") == "csv") {
    emit(c, out, csv_header(c, resolution) + io::flat_csv(result));
  } else {
    emit(c, out, envelope(c, resolution, result));
  }
}

int cmd_analyze(const RunConfig& c, std::ostream& out) {
  const auto shape = load_shape(c);
  const auto input = geometry::geometry_report(shape);
  const auto norm = geometry::normalize(shape);
  const auto normalized = geometry::geometry_report(norm.shape);
  Json result{{"shape", io::shape_to_json(shape)},
              {"input_units", "as given in the shape file"},
              {"report", io::to_json(input)},
              {"normalization", {{"scale_a", norm.scale_a}, {"w_factor", norm.w_factor},
                                 {"gamma_factor", norm.gamma_factor},
                                 {"lambda_factor", norm.lambda_factor}}},
              {"normalized", io::to_json(normalized)}};
  emit_result(c, out, input.resolution, result);
  return kExitOk;
}

int cmd_bound(const RunConfig& c, std::ostream& out) {
  const auto shape = geometry::normalize(load_shape(c)).shape;
  const auto cert = certify::explicit_bound(shape);
  Json result{{"normalized_shape", io::shape_to_json(shape)}, {"certificate", io::to_json(cert)}};
  if (c.we) {
    const double we = require_we(c);
    result["verdict"] = {
        {"we", we},
        {"universal", certify::to_string(certify::verdict(cert, we, cert.is_thick))},
        {"measured", certify::to_string(certify::verdict(cert, we, cert.is_thick,
                                                         certify::Variant::Measured))}};
  }
  emit_result(c, out, shape.resolution(), result);
  return kExitOk;
}

int cmd_solve(const RunConfig& c, std::ostream& out) {
  const double we = require_we(c);
  const auto shape = geometry::normalize(load_shape(c)).shape;
  const auto sol = stream::solve_dirichlet(shape, c.W);
  const auto rep = stream::dynamic_residual(shape, sol, we, c.lambda);
  if (format_of(c, "json") == "csv") {
    std::ostringstream os;
    os << csv_header(c, sol.resolution) << "r,z,density,psi_trace,dn_psi,defect\n";
    os.precision(17);
    for (int i = 0; i < sol.resolution; ++i) {
      os << sol.nodes.position[i].r << ',' << sol.nodes.position[i].z << ','
         << sol.density[i] << ',' << sol.psi_trace[i] << ',' << sol.dn_psi[i] << ','
         << rep.pointwise[i] << '\n';
    }
    emit(c, out, os.str());
  } else {
    Json result{{"normalized_shape", io::shape_to_json(shape)},
                {"solution", io::to_json(sol, true)},
                {"residual", io::to_json(rep, true)}};
    emit(c, out, envelope(c, sol.resolution, result));
  }
  return kExitOk;
}

int cmd_search(const RunConfig& c, std::ostream& out) {
  const double we = require_we(c);
  auto family = io::family_from_json(load_json(c.shape));
  if (c.resolution) family.resolution = *c.resolution;
  const auto res = stream::residual_minimize(family, we, c.budget, c.seed);
  const std::string log = csv_header(c, family.resolution) + stream::evaluation_log_csv(res);
  if (format_of(c, "json") == "csv") {
    emit(c, out, log);
    return kExitOk;
  }
  Json result = io::to_json(res);
  if (res.best_shape) {
    const auto cert = certify::explicit_bound(*res.best_shape);
    result["certificate"] = io::to_json(cert);
    result["verdict"] = {
        {"universal", certify::to_string(certify::verdict(cert, we, cert.is_thick))},
        {"measured", certify::to_string(certify::verdict(cert, we, cert.is_thick,
                                                         certify::Variant::Measured))}};
  }
  std::string log_path = c.log;
  if (log_path.empty() && !c.out.empty()) log_path = c.out + ".log.csv";
  if (!log_path.empty()) {
    write_file(log_path, log);
    result["log_csv"] = log_path;
  }
  emit(c, out, envelope(c, family.resolution, result));
  return kExitOk;
}

int cmd_verify(const RunConfig& c, std::ostream& out) {
  if (c.count < 1) throw std::invalid_argument("--count must be at least 1");
  const auto suites = verify_lemmas(c.seed, c.count);
  bool all = true;
  for (const auto& s : suites) all = all && s.passed();
  if (format_of(c, "json") == "csv") {
    std::ostringstream os;
    os << csv_header(c, 0) << "suite,measure,count,failures,worst,tolerance,passed\n";
    os.precision(17);
    for (const auto& s : suites) {
      os << s.name << ',' << s.measure << ',' << s.count << ',' << s.failures << ','
         << s.worst << ',' << s.tolerance << ',' << (s.passed() ? "true" : "false") << '\n';
    }
    emit(c, out, os.str());
  } else {
    Json list = Json::array();
    for (const auto& s : suites) {
      list.push_back({{"suite", s.name}, {"measure", s.measure}, {"count", s.count},
                      {"failures", s.failures}, {"worst", s.worst},
                      {"tolerance", s.tolerance}, {"passed", s.passed()}});
    }
    emit(c, out, envelope(c, 0, Json{{"suites", list}, {"all_passed", all}}));
  }
  return all ? kExitOk : kExitPropertyFailure;
}

int cmd_norbury(const RunConfig& c, std::ostream& out) {
  const auto rows = certify::norbury_scaling_probe(c.eps, c.r0);
  const int res = geometry::kDefaultResolution;
  if (format_of(c, "csv") == "csv") {
    std::ostringstream os;
    os << csv_header(c, res)
       << "eps_over_r0,delta,delta_report,delta_scaled,mu,we_min,we_min_measured\n";
    os.precision(17);
    for (const auto& r : rows) {
      os << r.eps_over_r0 << ',' << r.delta << ',' << r.delta_report << ',' << r.delta_scaled
         << ',' << r.mu << ',' << r.we_min << ',' << r.we_min_measured << '\n';
    }
    emit(c, out, os.str());
  } else {
    Json list = Json::array();
    for (const auto& r : rows) {
      list.push_back({{"eps_over_r0", r.eps_over_r0}, {"delta", r.delta},
                      {"delta_report", r.delta_report}, {"delta_scaled", r.delta_scaled},
                      {"mu", r.mu}, {"we_min", r.we_min},
                      {"we_min_measured", r.we_min_measured}});
    }
    emit(c, out, envelope(c, res, Json{{"rows", list}}));
  }
  return kExitOk;
}

}  // namespace

int run(const RunConfig& c, std::ostream& out, std::ostream& err) {
  static const std::map<std::string, std::function<int(const RunConfig&, std::ostream&)>>
      commands{{"analyze", cmd_analyze}, {"bound", cmd_bound},
               {"solve", cmd_solve},     {"search", cmd_search},
               {"verify-lemmas", cmd_verify}, {"norbury-table", cmd_norbury}};
  const auto it = commands.find(c.command);
  if (it == commands.end()) {
    err << "error: unknown command '" << c.command << "'\n";
    return kExitValidation;
  }
  try {
    return it->second(c, out);
  } catch (const ShapeError& e) {
    err << "error: invalid shape (" << e.invariant() << "): " << e.what() << '\n';
    return kExitValidation;
  } catch (const UnsupportedShapeError& e) {
    err << "error: unsupported shape: " << e.what() << '\n';
    return kExitValidation;
  } catch (const SolverError& e) {
    err << "error: solver failed: " << e.what() << '\n';
    return kExitSolver;
  } catch (const QuadratureError& e) {
    err << "error: quadrature failed: " << e.what() << '\n';
    return kExitSolver;
  } catch (const IoFailure& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return kExitValidation;
  }
}

}  // namespace bubblering::cli
