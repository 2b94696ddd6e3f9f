#include "h2vqe/driver.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <future>
#include <thread>

#include "h2vqe/exact.hpp"
#include "h2vqe/random.hpp"
#include "h2vqe/scf.hpp"

namespace h2vqe {
namespace {

template <class F>
auto stage(const char* name, F&& f) -> decltype(f()) {
  try {
    return f();
  } catch (const ConvergenceError& e) {
    throw ConvergenceError(std::string(name) + ": " + e.what(), e.last_value());
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(name) + ": " + e.what());
  }
}

std::vector<double> initial_parameters(const VqeConfig& config, std::size_t n) {
  switch (config.initial_point.kind) {
    case InitialPoint::Kind::zeros:
      return std::vector<double>(n, 0.0);
    case InitialPoint::Kind::random: {
      const std::array interval{config.initial_point.lo, config.initial_point.hi};
      return random_initial_point(n, interval, derive_seed(config.seed, "initial_point"));
    }
    case InitialPoint::Kind::explicit_values:
      if (config.initial_point.values.size() != n)
        throw Error(ErrorKind::configuration, "explicit initial point has " +
                                                  std::to_string(config.initial_point.values.size()) +
                                                  " values, ansatz has " + std::to_string(n) + " parameters");
      return config.initial_point.values;
  }
  return {};
}

}  // namespace

void validate(const VqeConfig& c) {
  if (!(c.distance > 0.0) || !std::isfinite(c.distance))
    throw Error(ErrorKind::configuration, "distance must be positive");
  if (c.basis != "sto3g" && c.basis != "sto-3g")
    throw Error(ErrorKind::configuration, "only the STO-3G basis is available");
  if (c.tqr && c.mapping != Mapping::parity)
    throw Error(ErrorKind::configuration, "two-qubit reduction requires the parity mapping");
  if (c.depth < 1) throw Error(ErrorKind::configuration, "depth must be >= 1");
  if (c.shots < 1) throw Error(ErrorKind::configuration, "shots must be >= 1");
  if (c.max_iter < 0) throw Error(ErrorKind::configuration, "max_iter must be >= 0");
  if (c.save_steps < 1) throw Error(ErrorKind::configuration, "save_steps must be >= 1");
  if (c.fd_step && !(*c.fd_step > 0.0)) throw Error(ErrorKind::configuration, "fd_step must be positive");
  if (c.initial_point.kind == InitialPoint::Kind::random && !(c.initial_point.lo <= c.initial_point.hi))
    throw Error(ErrorKind::configuration, "initial-point interval needs lo <= hi");
}

bool operator==(const VqeResult& a, const VqeResult& b) {
  auto same_trace = [](const std::vector<IterationRecord>& x, const std::vector<IterationRecord>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i)
      if (x[i].nfev != y[i].nfev || x[i].parameters != y[i].parameters || x[i].energy != y[i].energy ||
          x[i].stddev != y[i].stddev)
        return false;
    return true;
  };
  return a.electronic_energy == b.electronic_energy && a.shift == b.shift && a.total_energy == b.total_energy &&
         a.stddev == b.stddev && a.reference_total_energy == b.reference_total_energy &&
         a.rhf_total_energy == b.rhf_total_energy && a.optimal_parameters == b.optimal_parameters &&
         same_trace(a.trace, b.trace) && a.n_evaluations == b.n_evaluations &&
         a.optimizer_iterations == b.optimizer_iterations && a.converged == b.converged &&
         a.n_qubits == b.n_qubits && a.n_parameters == b.n_parameters && a.config == b.config;
}

Circuit build_ansatz(const VqeConfig& config, const QubitHamiltonian& h) {
  const Circuit initial = config.initial_state == InitialState::hartree_fock
                              ? hartree_fock_circuit(h.n_modes, h.n_particles, h.mapping, h.reduced)
                              : zero_state(h.n_qubits);
  switch (config.var_form) {
    case VarForm::uccsd:
      return uccsd(h.n_modes, h.n_particles, h.mapping, h.reduced, config.depth, initial);
    case VarForm::real_amplitudes:
      return real_amplitudes(h.n_qubits, config.depth, initial);
    case VarForm::efficient_su2:
      return efficient_su2(h.n_qubits, config.depth, initial);
    case VarForm::two_local:
      return two_local_ry_rz_cz(h.n_qubits, config.depth, initial);
    case VarForm::excitation_preserving:
      return excitation_preserving(h.n_qubits, config.depth, initial);
  }
  throw Error(ErrorKind::configuration, "unknown variational form");
}

VqeResult run_point(const VqeConfig& config) {
  stage("config", [&] { validate(config); });

  const MolecularProblem problem = stage("integrals", [&] { return hydrogen_problem(config.distance); });
  const QubitHamiltonian h =
      stage("mapping", [&] { return qubit_hamiltonian(problem.integrals, config.mapping, config.tqr); });
  const Circuit ansatz = stage("ansatz", [&] { return build_ansatz(config, h); });
  const std::vector<double> x0 =
      stage("initial_point", [&] { return initial_parameters(config, ansatz.n_parameters()); });

  VqeResult result;
  result.config = config;
  result.shift = h.shift;
  result.rhf_total_energy = problem.scf.total_energy;
  result.n_qubits = h.n_qubits;
  result.n_parameters = ansatz.n_parameters();

  const bool sampled = config.backend == BackendKind::sampled;
  std::uint64_t shots = config.shots;
  Objective objective(
      ansatz.n_parameters(),
      [&](std::span<const double> x, std::uint64_t nfev) {
        if (!sampled) return expectation_exact(simulate(ansatz, x), h.pauli_sum);
        return expectation_sampled(ansatz, x, h.pauli_sum, shots, derive_seed(config.seed, "sampling", nfev));
      },
      [&](const IterationRecord& r) { result.trace.push_back(r); });

  std::vector<double> best = x0;
  stage("optimizer", [&] {
    if (config.max_iter == 0) return;
    OptResult opt;
    switch (config.optimizer) {
      case OptimizerKind::nelder_mead: {
        NelderMeadOptions o;
        o.max_iter = config.max_iter;
        opt = nelder_mead(objective, x0, o);
        break;
      }
      case OptimizerKind::bfgs: {
        BfgsOptions o;
        o.max_iter = config.max_iter;
        o.fd_step = config.fd_step.value_or(sampled ? 0.1 : 1e-6);
        opt = bfgs_fd(objective, x0, o);
        break;
      }
      case OptimizerKind::spsa: {
        SpsaOptions o;
        o.max_iter = config.max_iter;
        o.save_steps = config.save_steps;
        o.seed = derive_seed(config.seed, "spsa");
        opt = spsa(objective, x0, o);
        break;
      }
    }
    if (opt.aborted) throw Error(ErrorKind::numerical, "objective returned a non-finite value");
    best = opt.best_parameters;
    result.optimizer_iterations = opt.iterations;
    result.converged = opt.converged;
  });

  // Report the best iterate re-measured: exactly on the statevector backend,
  // with ten times the shots on the sampled one.
  shots = config.shots * 10;
  const ExpectationEstimate final_estimate = stage("final", [&] { return objective.evaluate(best); });
  result.optimal_parameters = best;
  result.electronic_energy = final_estimate.value;
  result.stddev = final_estimate.stddev;
  result.total_energy = result.electronic_energy + result.shift;
  result.n_evaluations = objective.evaluations();

  result.reference_total_energy =
      stage("reference", [&] { return lowest_eigenvalue(h.pauli_sum).ground_energy; }) + h.shift;
  if (!std::isfinite(result.total_energy)) throw Error(ErrorKind::numerical, "final energy is not finite");
  return result;
}

std::vector<ScanPoint> run_scan(const VqeConfig& config, const std::vector<double>& distances,
                                const ScanOptions& options) {
  if (distances.empty()) throw Error(ErrorKind::configuration, "scan needs at least one distance");
  for (std::size_t i = 0; i < distances.size(); ++i) {
    if (!(distances[i] > 0.0)) throw Error(ErrorKind::configuration, "scan distances must be positive");
    if (i > 0 && !(distances[i] > distances[i - 1]))
      throw Error(ErrorKind::configuration, "scan distances must be strictly increasing");
  }
  validate(config);

  std::vector<ScanPoint> points(distances.size());
  std::vector<double> previous_best;

  auto run_one = [&](std::size_t i, const std::vector<double>* warm) {
    ScanPoint p;
    p.distance = distances[i];
    VqeConfig c = config;
    c.distance = distances[i];
    c.seed = derive_seed(config.seed, "scan", i);
    if (warm && !warm->empty()) c.initial_point = InitialPoint::explicit_point(*warm);
    try {
      VqeResult r = run_point(c);
      p.vqe_total_energy = r.total_energy;
      p.reference_total_energy = r.reference_total_energy;
      p.n_evaluations = r.n_evaluations;
      return std::pair{p, std::move(r.optimal_parameters)};
    } catch (const Error& e) {
      p.vqe_total_energy = p.reference_total_energy = std::nan("");
      p.error = e.what();
      p.error_kind = e.kind();
      return std::pair{p, std::vector<double>{}};
    }
  };

  if (options.warm_start) {
    for (std::size_t i = 0; i < distances.size(); ++i) {
      auto [p, best] = run_one(i, &previous_best);
      points[i] = p;
      if (!best.empty()) previous_best = std::move(best);
    }
    return points;
  }

  unsigned threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min<unsigned>(threads, static_cast<unsigned>(distances.size()));
  if (threads <= 1) {
    for (std::size_t i = 0; i < distances.size(); ++i) points[i] = run_one(i, nullptr).first;
    return points;
  }
  std::vector<std::future<void>> workers;
  std::atomic<std::size_t> next{0};
  for (unsigned t = 0; t < threads; ++t)
    workers.push_back(std::async(std::launch::async, [&] {
      for (std::size_t i = next++; i < distances.size(); i = next++) points[i] = run_one(i, nullptr).first;
    }));
  for (auto& w : workers) w.get();
  return points;
}

std::vector<double> distance_grid(double from, double to, double step) {
  if (!(step > 0.0) || !(from > 0.0) || !(to >= from))
    throw Error(ErrorKind::configuration, "distance grid needs 0 < from <= to and step > 0");
  const auto count = static_cast<std::size_t>(std::floor((to - from) / step + 1e-6)) + 1;
  std::vector<double> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(std::round((from + static_cast<double>(i) * step) * 1e12) / 1e12);
  return out;
}

}  // namespace h2vqe
