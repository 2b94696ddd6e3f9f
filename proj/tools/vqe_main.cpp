#include <charconv>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "h2vqe/driver.hpp"
#include "h2vqe/error.hpp"
#include "h2vqe/io.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfiguration = 1;
constexpr int kExitNumerical = 2;
constexpr int kExitPartialScan = 3;

struct CommonFlags {
  double dist = 0.74;
  std::string mapping = "parity";
  std::optional<bool> tqr;
  std::string initial_state = "hartree_fock";
  std::string ansatz = "uccsd";
  int depth = 1;
  std::string optimizer = "bfgs";
  std::string backend = "statevector";
  std::uint64_t shots = h2vqe::kDefaultShots;
  int max_iter = h2vqe::kDefaultMaxIter;
  std::uint64_t seed = 0;
  std::string initial_point = "random";
};

void add_common(CLI::App& cmd, CommonFlags& f, bool with_dist) {
  if (with_dist) cmd.add_option("--dist", f.dist, "Bond length in Angstrom")->capture_default_str();
  cmd.add_option("--mapping", f.mapping, "parity|jordan_wigner|bravyi_kitaev")->capture_default_str();
  cmd.add_flag("--tqr,!--no-tqr", f.tqr,
               "Two-qubit reduction (parity only; on by default with parity)");
  cmd.add_option("--initial-state", f.initial_state, "hartree_fock|zero")->capture_default_str();
  cmd.add_option("--ansatz", f.ansatz, "uccsd|real_amplitudes|efficient_su2|two_local|excitation_preserving")
      ->capture_default_str();
  cmd.add_option("--depth", f.depth, "Ansatz repetitions")->capture_default_str();
  cmd.add_option("--optimizer", f.optimizer,
                 "bfgs|nelder_mead|spsa (cobyla maps to nelder_mead, slsqp and l_bfgs_b to bfgs)")
      ->capture_default_str();
  cmd.add_option("--backend", f.backend, "statevector|sampled")->capture_default_str();
  cmd.add_option("--shots", f.shots, "Shots per Pauli term on the sampled backend")->capture_default_str();
  cmd.add_option("--max-iter", f.max_iter, "Optimizer iteration budget")->capture_default_str();
  cmd.add_option("--seed", f.seed, "Master seed")->capture_default_str();
  cmd.add_option("--initial-point", f.initial_point, "zeros|random|random:LO,HI|v1,v2,...")
      ->capture_default_str();
}

std::vector<double> parse_doubles(const std::string& text) {
  std::vector<double> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    const std::size_t end = std::min(text.find(',', start), text.size());
    const std::string item = text.substr(start, end - start);
    double v = 0.0;
    const auto res = std::from_chars(item.data(), item.data() + item.size(), v);
    if (item.empty() || res.ec != std::errc{} || res.ptr != item.data() + item.size())
      throw h2vqe::Error(h2vqe::ErrorKind::configuration, "cannot parse number '" + item + "'");
    out.push_back(v);
    start = end + 1;
  }
  return out;
}

h2vqe::InitialPoint parse_initial_point(const std::string& text) {
  if (text == "zeros") return h2vqe::InitialPoint::zeros();
  if (text == "random") return h2vqe::InitialPoint::random();
  if (text.rfind("random:", 0) == 0) {
    const auto bounds = parse_doubles(text.substr(7));
    if (bounds.size() != 2)
      throw h2vqe::Error(h2vqe::ErrorKind::configuration, "random interval needs LO,HI");
    return h2vqe::InitialPoint::random(bounds[0], bounds[1]);
  }
  return h2vqe::InitialPoint::explicit_point(parse_doubles(text));
}

h2vqe::VqeConfig make_config(const CommonFlags& f) {
  h2vqe::VqeConfig c;
  c.distance = f.dist;
  c.mapping = h2vqe::parse_mapping(f.mapping);
  c.tqr = f.tqr.value_or(c.mapping == h2vqe::Mapping::parity);
  c.initial_state = h2vqe::parse_initial_state(f.initial_state);
  c.var_form = h2vqe::parse_var_form(f.ansatz);
  c.depth = f.depth;
  c.optimizer = h2vqe::parse_optimizer(f.optimizer);
  c.backend = h2vqe::parse_backend(f.backend);
  c.shots = f.shots;
  c.max_iter = f.max_iter;
  c.seed = f.seed;
  c.initial_point = parse_initial_point(f.initial_point);
  h2vqe::validate(c);
  return c;
}

int exit_code_for(h2vqe::ErrorKind kind) {
  return h2vqe::is_configuration_error(kind) ? kExitConfiguration : kExitNumerical;
}

int run_point_command(const CommonFlags& flags, const std::string& out, const std::string& trace) {
  const h2vqe::VqeConfig config = make_config(flags);
  const h2vqe::VqeResult r = h2vqe::run_point(config);
  const std::string json = h2vqe::result_to_json(r);
  if (out.empty()) {
    std::cout << json << '\n';
  } else {
    h2vqe::write_text_file(out, json + "\n");
  }
  if (!trace.empty()) h2vqe::write_text_file(trace, h2vqe::trace_csv(r.trace));
  std::fprintf(stderr, "total_energy %s  reference %s  |diff| %.3e  nfev %llu\n",
               h2vqe::format_sig12(r.total_energy).c_str(), h2vqe::format_sig12(r.reference_total_energy).c_str(),
               std::abs(r.total_energy - r.reference_total_energy),
               static_cast<unsigned long long>(r.n_evaluations));
  return kExitOk;
}

int run_scan_command(const CommonFlags& flags, double from, double to, double step, bool warm_start,
                     unsigned threads, const std::string& out) {
  const h2vqe::VqeConfig config = make_config(flags);
  const auto distances = h2vqe::distance_grid(from, to, step);
  const auto points = h2vqe::run_scan(config, distances, {warm_start, threads});
  const std::string csv = h2vqe::scan_csv(points);
  if (out.empty()) {
    std::cout << csv;
  } else {
    h2vqe::write_text_file(out, csv);
  }
  std::size_t failed = 0;
  for (const auto& p : points) {
    if (!p.error) continue;
    ++failed;
    std::fprintf(stderr, "point %s failed: %s\n", h2vqe::format_sig12(p.distance).c_str(), p.error->c_str());
  }
  return failed ? kExitPartialScan : kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Variational ground-state energy of H2 in a minimal basis"};
  app.require_subcommand(1);

  CommonFlags point_flags;
  std::string point_out, point_trace;
  auto* point = app.add_subcommand("point", "One bond length; writes the full result as JSON");
  add_common(*point, point_flags, true);
  point->add_option("--out", point_out, "Result JSON path (stdout when omitted)");
  point->add_option("--trace", point_trace, "Per-evaluation trace CSV path");

  CommonFlags scan_flags;
  double from = 0.3, to = 2.5, step = 0.1;
  bool warm_start = false;
  unsigned threads = 0;
  std::string scan_out;
  auto* scan = app.add_subcommand("scan", "Dissociation curve over a distance grid; writes CSV");
  add_common(*scan, scan_flags, false);
  scan->add_option("--from", from, "First distance in Angstrom")->capture_default_str();
  scan->add_option("--to", to, "Last distance in Angstrom")->capture_default_str();
  scan->add_option("--step", step, "Grid spacing in Angstrom")->capture_default_str();
  scan->add_flag("--warm-start", warm_start, "Start each point from the previous optimum");
  scan->add_option("--threads", threads, "Worker threads (0 = all cores)")->capture_default_str();
  scan->add_option("--out", scan_out, "Curve CSV path (stdout when omitted)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfiguration;
  }

  try {
    if (*point) return run_point_command(point_flags, point_out, point_trace);
    return run_scan_command(scan_flags, from, to, step, warm_start, threads, scan_out);
  } catch (const h2vqe::Error& e) {
    std::fprintf(stderr, "vqe: %s\n", e.what());
    return exit_code_for(e.kind());
  } catch (const std::exception& e) {
    std::fprintf(stderr, "vqe: %s\n", e.what());
    return kExitNumerical;
  }
}
