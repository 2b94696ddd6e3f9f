#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "h2vqe/ansatz.hpp"
#include "h2vqe/backend.hpp"
#include "h2vqe/error.hpp"
#include "h2vqe/fermion.hpp"
#include "h2vqe/optimizer.hpp"

namespace h2vqe {

struct InitialPoint {
  enum class Kind { zeros, random, explicit_values };
  Kind kind = Kind::random;
  double lo = 0.0;
  double hi = 1.0;
  std::vector<double> values;

  static InitialPoint zeros() { return {Kind::zeros, 0.0, 0.0, {}}; }
  static InitialPoint random(double lo = 0.0, double hi = 1.0) { return {Kind::random, lo, hi, {}}; }
  static InitialPoint explicit_point(std::vector<double> v) { return {Kind::explicit_values, 0.0, 0.0, std::move(v)}; }

  friend bool operator==(const InitialPoint&, const InitialPoint&) = default;
};

/// Run configuration. Defaults: 0.74 A, STO-3G, parity with two-qubit
/// reduction, Hartree-Fock reference, UCCSD, statevector, quasi-Newton,
/// random start on [0, 1], 500 iterations.
struct VqeConfig {
  double distance = 0.74;  // Angstrom
  std::string basis = "sto3g";
  Mapping mapping = Mapping::parity;
  bool tqr = true;
  InitialState initial_state = InitialState::hartree_fock;
  VarForm var_form = VarForm::uccsd;
  int depth = 1;
  OptimizerKind optimizer = OptimizerKind::bfgs;
  BackendKind backend = BackendKind::statevector;
  std::uint64_t shots = kDefaultShots;
  int max_iter = kDefaultMaxIter;
  std::uint64_t seed = 0;
  InitialPoint initial_point = InitialPoint::random();
  std::optional<double> fd_step;  // 1e-6 statevector, 0.1 sampled when unset
  int save_steps = 100;

  friend bool operator==(const VqeConfig&, const VqeConfig&) = default;
};

/// Throws configuration for invariant violations (tqr without parity,
/// depth < 1, zero shots, negative max_iter, bad interval, unknown basis).
void validate(const VqeConfig& config);

struct VqeResult {
  double electronic_energy = 0.0;
  double shift = 0.0;
  double total_energy = 0.0;  // electronic_energy + shift
  double stddev = 0.0;
  double reference_total_energy = 0.0;
  double rhf_total_energy = 0.0;
  std::vector<double> optimal_parameters;
  std::vector<IterationRecord> trace;  // every objective evaluation
  std::uint64_t n_evaluations = 0;
  int optimizer_iterations = 0;
  bool converged = false;
  std::size_t n_qubits = 0;
  std::size_t n_parameters = 0;
  VqeConfig config;

  friend bool operator==(const VqeResult&, const VqeResult&);
};

/// The ansatz the pipeline would build for `config`, on the Hamiltonian's
/// register.
Circuit build_ansatz(const VqeConfig& config, const QubitHamiltonian& h);

/// Integrals, RHF, mapping, ansatz, initial point, optimization, and the exact
/// reference for one bond length. Upstream errors are rethrown with the stage
/// name prepended.
VqeResult run_point(const VqeConfig& config);

struct ScanPoint {
  double distance = 0.0;
  double vqe_total_energy = 0.0;
  double reference_total_energy = 0.0;
  std::uint64_t n_evaluations = 0;
  std::optional<std::string> error;
  std::optional<ErrorKind> error_kind;
};

struct ScanOptions {
  bool warm_start = false;
  unsigned threads = 0;  // 0 = hardware concurrency; warm starts run serially
};

/// Runs every distance with a seed derived from the config seed and the
/// point index. Failures are recorded per point and the scan continues.
std::vector<ScanPoint> run_scan(const VqeConfig& config, const std::vector<double>& distances,
                                const ScanOptions& options = {});

/// from, from + step, ... up to `to` inclusive (within step / 1e6).
std::vector<double> distance_grid(double from, double to, double step);

}  // namespace h2vqe
