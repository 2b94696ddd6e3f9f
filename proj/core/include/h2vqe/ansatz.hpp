#pragma once

#include <array>
#include <cstdint>
#include <span>
#include <string_view>
#include <vector>

#include "h2vqe/circuit.hpp"
#include "h2vqe/fermion.hpp"

namespace h2vqe {

enum class InitialState { zero, hartree_fock };
enum class VarForm { uccsd, real_amplitudes, efficient_su2, two_local, excitation_preserving };

std::string_view to_string(InitialState s);
std::string_view to_string(VarForm f);
InitialState parse_initial_state(std::string_view name);
VarForm parse_var_form(std::string_view name);

/// X gates preparing the Hartree-Fock determinant (lowest n/2 orbitals of
/// each spin, block ordered) in the chosen encoding; when `reduced`, the two
/// parity symmetry qubits are dropped. Reduction requires the parity map.
Circuit hartree_fock_circuit(std::size_t n_spin_orbitals, std::size_t n_particles, Mapping mapping, bool reduced);

Circuit zero_state(std::size_t n_qubits);

struct ExcitationList {
  std::vector<std::array<std::size_t, 2>> singles;  // (occupied, virtual), same spin
  std::vector<std::array<std::size_t, 4>> doubles;  // (i, j, a, b), i<j occupied, a<b virtual
  std::size_t size() const { return singles.size() + doubles.size(); }
};

/// Spin-conserving singles and doubles out of the Hartree-Fock determinant.
ExcitationList uccsd_excitations(std::size_t n_spin_orbitals, std::size_t n_particles);

/// Appends exp(-i * (scale * p[slot] / 2) * P) using basis changes, a CX
/// ladder over the support in ascending order and one RZ.
void append_pauli_exponential(Circuit& circuit, const PauliString& pauli, std::size_t slot, double scale);

/// Anti-Hermitian excitation generators mapped to qubits (one per excitation,
/// on the Hamiltonian's register): coefficients are purely imaginary.
std::vector<PauliSum> uccsd_generators(std::size_t n_spin_orbitals, std::size_t n_particles, Mapping mapping,
                                       bool reduced);

/// `initial` followed by `depth` first-order Trotter steps of exp(T - T+),
/// one amplitude per excitation shared across all repetitions.
Circuit uccsd(std::size_t n_spin_orbitals, std::size_t n_particles, Mapping mapping, bool reduced, int depth,
              const Circuit& initial);

/// RY layers with full CX entanglement; (depth + 1) * n parameters.
Circuit real_amplitudes(std::size_t n_qubits, int depth, const Circuit& initial);
/// RY+RZ layers with full CX entanglement; 2 (depth + 1) n parameters.
Circuit efficient_su2(std::size_t n_qubits, int depth, const Circuit& initial);
/// RY+RZ layers with full CZ entanglement; 2 (depth + 1) n parameters.
Circuit two_local_ry_rz_cz(std::size_t n_qubits, int depth, const Circuit& initial);
/// RZ layers with parameterized XX+YY entanglers on every pair;
/// (depth + 1) n + depth n (n - 1) / 2 parameters.
Circuit excitation_preserving(std::size_t n_qubits, int depth, const Circuit& initial);

/// Uniform draws on [lo, hi] for `interval` = {lo, hi}, on [0, v] for {v}.
/// Throws configuration for an empty interval or lo > hi.
std::vector<double> random_initial_point(std::size_t n_parameters, std::span<const double> interval,
                                         std::uint64_t seed);

}  // namespace h2vqe
