#include "h2vqe/backend.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <vector>

#include "h2vqe/error.hpp"
#include "h2vqe/random.hpp"

namespace h2vqe {
namespace {

constexpr std::array<Complex, 4> kIPowers{Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}};

// Cumulative distribution over basis states for repeated sampling.
std::vector<double> cumulative_probabilities(const StateVector& state) {
  std::vector<double> cdf(state.dimension());
  double acc = 0.0;
  for (std::size_t i = 0; i < state.dimension(); ++i) {
    acc += std::norm(state[i]);
    cdf[i] = acc;
  }
  return cdf;
}

std::size_t draw(const std::vector<double>& cdf, Rng& rng) {
  const double u = uniform01(rng) * cdf.back();
  auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
  if (it == cdf.end()) --it;
  return static_cast<std::size_t>(it - cdf.begin());
}

}  // namespace

std::string_view to_string(BackendKind b) { return b == BackendKind::statevector ? "statevector" : "sampled"; }

BackendKind parse_backend(std::string_view name) {
  if (name == "statevector") return BackendKind::statevector;
  if (name == "sampled" || name == "qasm") return BackendKind::sampled;
  throw Error(ErrorKind::configuration, "unknown backend '" + std::string(name) + "'");
}

StateVector simulate(const Circuit& circuit, std::span<const double> bindings) {
  if (bindings.size() != circuit.n_parameters())
    throw Error(ErrorKind::binding, "expected " + std::to_string(circuit.n_parameters()) + " parameters, got " +
                                        std::to_string(bindings.size()));
  StateVector state(circuit.n_qubits());
  for (const auto& g : circuit.gates()) state.apply(g, bindings);
  return state;
}

double pauli_expectation(const StateVector& state, const PauliString& p) {
  if (p.n_qubits() != state.n_qubits()) throw Error(ErrorKind::dimension, "Pauli/state qubit mismatch");
  const std::uint64_t x = p.x_mask(), z = p.z_mask();
  Complex sum = 0.0;
  for (std::size_t j = 0; j < state.dimension(); ++j) {
    const Complex v = state[j];
    sum += (std::popcount(z & j) & 1) ? -std::conj(state[j ^ x]) * v : std::conj(state[j ^ x]) * v;
  }
  return (kIPowers[std::popcount(x & z) % 4] * sum).real();
}

ExpectationEstimate expectation_exact(const StateVector& state, const PauliSum& h) {
  if (h.n_qubits() != state.n_qubits()) throw Error(ErrorKind::dimension, "Hamiltonian/state qubit mismatch");
  double value = 0.0;
  for (const auto& t : h.terms()) {
    if (t.string.is_identity()) {
      value += t.coefficient.real();
      continue;
    }
    value += t.coefficient.real() * pauli_expectation(state, t.string);
    // Imaginary coefficients on Hermitian strings contribute i*<P>, which has
    // no real part.
  }
  return {value, 0.0, 0};
}

std::string bitstring(std::uint64_t index, std::size_t n_qubits) {
  std::string s(n_qubits, '0');
  for (std::size_t q = 0; q < n_qubits; ++q)
    if ((index >> q) & 1ULL) s[q] = '1';
  return s;
}

Counts sample_counts(const StateVector& state, std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw Error(ErrorKind::configuration, "shots must be >= 1");
  const auto cdf = cumulative_probabilities(state);
  Rng rng(seed);
  std::vector<std::uint64_t> hist(state.dimension(), 0);
  for (std::uint64_t s = 0; s < shots; ++s) ++hist[draw(cdf, rng)];
  Counts counts;
  for (std::size_t i = 0; i < hist.size(); ++i)
    if (hist[i] > 0) counts[bitstring(i, state.n_qubits())] = hist[i];
  return counts;
}

ExpectationEstimate expectation_sampled(const Circuit& circuit, std::span<const double> bindings, const PauliSum& h,
                                        std::uint64_t shots, std::uint64_t seed) {
  if (shots == 0) throw Error(ErrorKind::configuration, "shots must be >= 1");
  if (h.n_qubits() != circuit.n_qubits()) throw Error(ErrorKind::dimension, "Hamiltonian/circuit qubit mismatch");
  const PauliSum terms = simplify(h, 0.0);
  if (!is_hermitian(terms)) throw Error(ErrorKind::validation, "sampled expectation needs a Hermitian operator");

  // The prepared state is shared; each term gets its own basis rotation and
  // a fresh, independently seeded batch of shots.
  const StateVector prepared = simulate(circuit, bindings);
  double value = 0.0;
  double variance = 0.0;
  std::uint64_t term_index = 0;
  for (const auto& t : terms.terms()) {
    const double c = t.coefficient.real();
    if (t.string.is_identity()) {
      value += c;
      continue;
    }
    StateVector rotated = prepared;
    for (std::size_t q = 0; q < t.string.n_qubits(); ++q) {
      const char l = t.string.letter(q);
      if (l == 'X') {
        rotated.apply_1q(gate_matrix_1q(GateKind::H, 0.0), q);
      } else if (l == 'Y') {
        rotated.apply_1q(gate_matrix_1q(GateKind::SDG, 0.0), q);
        rotated.apply_1q(gate_matrix_1q(GateKind::H, 0.0), q);
      }
    }
    const auto cdf = cumulative_probabilities(rotated);
    Rng rng(derive_seed(seed, "term", term_index++));
    const std::uint64_t support = t.string.support();
    std::uint64_t minus = 0;
    for (std::uint64_t s = 0; s < shots; ++s)
      if (std::popcount(draw(cdf, rng) & support) & 1) ++minus;
    const double n = static_cast<double>(shots);
    const double mean = (n - 2.0 * static_cast<double>(minus)) / n;
    // Unbiased sample variance of the +-1 outcomes.
    const double var = shots > 1 ? (1.0 - mean * mean) * n / (n - 1.0) : 0.0;
    value += c * mean;
    variance += c * c * var / n;
  }
  return {value, std::sqrt(variance), shots};
}

}  // namespace h2vqe
