#include "h2vqe/io.hpp"

#include <cstdio>
#include <fstream>

#include "h2vqe/error.hpp"
#include "json.hpp"

namespace h2vqe {
namespace {

using json = nlohmann::ordered_json;

json initial_point_json(const InitialPoint& p) {
  switch (p.kind) {
    case InitialPoint::Kind::zeros: return {{"kind", "zeros"}};
    case InitialPoint::Kind::random: return {{"kind", "random"}, {"lo", p.lo}, {"hi", p.hi}};
    case InitialPoint::Kind::explicit_values: return {{"kind", "explicit"}, {"values", p.values}};
  }
  return {};
}

InitialPoint initial_point_from(const json& j) {
  const auto kind = j.at("kind").get<std::string>();
  if (kind == "zeros") return InitialPoint::zeros();
  if (kind == "random") return InitialPoint::random(j.at("lo").get<double>(), j.at("hi").get<double>());
  if (kind == "explicit") return InitialPoint::explicit_point(j.at("values").get<std::vector<double>>());
  throw Error(ErrorKind::validation, "unknown initial point kind '" + kind + "'");
}

json config_json(const VqeConfig& c) {
  json j;
  j["distance_angstrom"] = c.distance;
  j["basis"] = c.basis;
  j["mapping"] = std::string(to_string(c.mapping));
  j["tqr"] = c.tqr;
  j["initial_state"] = std::string(to_string(c.initial_state));
  j["ansatz"] = std::string(to_string(c.var_form));
  j["depth"] = c.depth;
  j["optimizer"] = std::string(to_string(c.optimizer));
  j["backend"] = std::string(to_string(c.backend));
  j["shots"] = c.shots;
  j["max_iter"] = c.max_iter;
  j["seed"] = c.seed;
  j["initial_point"] = initial_point_json(c.initial_point);
  j["fd_step"] = c.fd_step ? json(*c.fd_step) : json(nullptr);
  j["save_steps"] = c.save_steps;
  return j;
}

VqeConfig config_from(const json& j) {
  VqeConfig c;
  c.distance = j.at("distance_angstrom").get<double>();
  c.basis = j.at("basis").get<std::string>();
  c.mapping = parse_mapping(j.at("mapping").get<std::string>());
  c.tqr = j.at("tqr").get<bool>();
  c.initial_state = parse_initial_state(j.at("initial_state").get<std::string>());
  c.var_form = parse_var_form(j.at("ansatz").get<std::string>());
  c.depth = j.at("depth").get<int>();
  c.optimizer = parse_optimizer(j.at("optimizer").get<std::string>());
  c.backend = parse_backend(j.at("backend").get<std::string>());
  c.shots = j.at("shots").get<std::uint64_t>();
  c.max_iter = j.at("max_iter").get<int>();
  c.seed = j.at("seed").get<std::uint64_t>();
  c.initial_point = initial_point_from(j.at("initial_point"));
  if (!j.at("fd_step").is_null()) c.fd_step = j.at("fd_step").get<double>();
  c.save_steps = j.at("save_steps").get<int>();
  return c;
}

}  // namespace

std::string format_sig12(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

std::string config_to_json(const VqeConfig& c) { return config_json(c).dump(2); }

std::string result_to_json(const VqeResult& r) {
  json j;
  j["total_energy"] = r.total_energy;
  j["electronic_energy"] = r.electronic_energy;
  j["shift"] = r.shift;
  j["stddev"] = r.stddev;
  j["reference_total_energy"] = r.reference_total_energy;
  j["rhf_total_energy"] = r.rhf_total_energy;
  j["optimal_parameters"] = r.optimal_parameters;
  j["n_evaluations"] = r.n_evaluations;
  j["optimizer_iterations"] = r.optimizer_iterations;
  j["converged"] = r.converged;
  j["n_qubits"] = r.n_qubits;
  j["n_parameters"] = r.n_parameters;
  j["config"] = config_json(r.config);
  auto trace = json::array();
  for (const auto& t : r.trace)
    trace.push_back({{"nfev", t.nfev}, {"parameters", t.parameters}, {"energy", t.energy}, {"stddev", t.stddev}});
  j["trace"] = std::move(trace);
  return j.dump(2) + "\n";
}

VqeResult result_from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::validation, std::string("malformed result JSON: ") + e.what());
  }
  try {
    VqeResult r;
    r.total_energy = j.at("total_energy").get<double>();
    r.electronic_energy = j.at("electronic_energy").get<double>();
    r.shift = j.at("shift").get<double>();
    r.stddev = j.at("stddev").get<double>();
    r.reference_total_energy = j.at("reference_total_energy").get<double>();
    r.rhf_total_energy = j.at("rhf_total_energy").get<double>();
    r.optimal_parameters = j.at("optimal_parameters").get<std::vector<double>>();
    r.n_evaluations = j.at("n_evaluations").get<std::uint64_t>();
    r.optimizer_iterations = j.at("optimizer_iterations").get<int>();
    r.converged = j.at("converged").get<bool>();
    r.n_qubits = j.at("n_qubits").get<std::size_t>();
    r.n_parameters = j.at("n_parameters").get<std::size_t>();
    r.config = config_from(j.at("config"));
    for (const auto& t : j.at("trace"))
      r.trace.push_back({t.at("nfev").get<std::uint64_t>(), t.at("parameters").get<std::vector<double>>(),
                         t.at("energy").get<double>(), t.at("stddev").get<double>()});
    return r;
  } catch (const json::exception& e) {
    throw Error(ErrorKind::validation, std::string("incomplete result JSON: ") + e.what());
  }
}

std::string trace_csv(const std::vector<IterationRecord>& trace) {
  std::size_t width = 0;
  for (const auto& t : trace) width = std::max(width, t.parameters.size());
  std::string out = "nfev,energy,stddev";
  for (std::size_t k = 0; k < width; ++k) out += ",p" + std::to_string(k);
  out += '\n';
  for (const auto& t : trace) {
    out += std::to_string(t.nfev) + ',' + format_sig12(t.energy) + ',' + format_sig12(t.stddev);
    for (double p : t.parameters) out += ',' + format_sig12(p);
    out += '\n';
  }
  return out;
}

std::string scan_csv(const std::vector<ScanPoint>& points) {
  std::string out = "distance_angstrom,vqe_total_ha,reference_total_ha,nfev\n";
  for (const auto& p : points)
    out += format_sig12(p.distance) + ',' + format_sig12(p.vqe_total_energy) + ',' +
           format_sig12(p.reference_total_energy) + ',' + std::to_string(p.n_evaluations) + '\n';
  return out;
}

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(ErrorKind::io, "cannot open '" + path.string() + "' for writing");
  out << content;
  out.flush();
  if (!out) throw Error(ErrorKind::io, "failed writing '" + path.string() + "'");
}

}  // namespace h2vqe
