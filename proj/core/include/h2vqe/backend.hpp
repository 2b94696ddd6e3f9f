#pragma once

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <string_view>

#include "h2vqe/circuit.hpp"
#include "h2vqe/pauli.hpp"
#include "h2vqe/statevector.hpp"

namespace h2vqe {

enum class BackendKind { statevector, sampled };

std::string_view to_string(BackendKind b);
/// Accepts "statevector" and "sampled" (alias "qasm").
BackendKind parse_backend(std::string_view name);

inline constexpr std::uint64_t kDefaultShots = 8192;

struct ExpectationEstimate {
  double value = 0.0;
  double stddev = 0.0;
  std::uint64_t shots_used = 0;  // per measured term; 0 for exact
};

/// Runs the circuit on |0...0>. Throws binding when the bindings length
/// differs from the circuit's parameter count.
StateVector simulate(const Circuit& circuit, std::span<const double> bindings);

/// Re<psi|P|psi> for one Pauli string.
double pauli_expectation(const StateVector& state, const PauliString& p);

/// Re<psi|H|psi> summed term by term.
ExpectationEstimate expectation_exact(const StateVector& state, const PauliSum& h);

/// Outcome histogram keyed by bitstring with qubit 0 leftmost.
using Counts = std::map<std::string, std::uint64_t>;

Counts sample_counts(const StateVector& state, std::uint64_t shots, std::uint64_t seed);
std::string bitstring(std::uint64_t index, std::size_t n_qubits);

/// Hamiltonian averaging: every non-identity term is measured with its own
/// `shots` after rotating its support into the Z basis.
ExpectationEstimate expectation_sampled(const Circuit& circuit, std::span<const double> bindings, const PauliSum& h,
                                        std::uint64_t shots, std::uint64_t seed);

}  // namespace h2vqe
