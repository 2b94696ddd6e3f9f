#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "h2vqe/pauli.hpp"
#include "h2vqe/scf.hpp"

namespace h2vqe {

enum class Mapping { jordan_wigner, parity, bravyi_kitaev };

std::string_view to_string(Mapping m);
/// Accepts "jordan_wigner", "parity", "bravyi_kitaev" (and "jw", "bk").
Mapping parse_mapping(std::string_view name);

/// Second-quantized electronic Hamiltonian
///   H = sum_pq h1[p][q] a+_p a_q + 1/2 sum_pqrs h2[p][q][r][s] a+_p a+_q a_s a_r
/// with h2 in physicist notation. The nuclear repulsion is not part of it.
struct FermionicOperator {
  RealMatrix h1;
  std::vector<double> h2;
  std::size_t n_modes = 0;

  double h2_at(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    return h2[((p * n_modes + q) * n_modes + r) * n_modes + s];
  }
};

/// Validates symmetry of the integrals (to 1e-10) and packages them.
FermionicOperator build_fermionic(const SpinOrbitalIntegrals& ints);

/// Occupation-to-qubit encoding over GF(2): qubit i stores the XOR of the
/// occupations j with matrix(i, j) = 1. Lower triangular for all three maps.
class FermionEncoding {
 public:
  FermionEncoding(Mapping mapping, std::size_t n_modes);

  Mapping mapping() const noexcept { return mapping_; }
  std::size_t n_modes() const noexcept { return n_; }

  bool bit(std::size_t row, std::size_t col) const { return matrix_[row][col]; }
  /// Encodes an occupation bit vector (bit j = mode j) into qubit bits.
  std::uint64_t encode(std::uint64_t occupation) const;

  /// Qubits other than j whose stored value flips when mode j changes.
  std::vector<std::size_t> update_set(std::size_t j) const;
  /// Qubits whose parity equals the parity of modes 0..j-1.
  std::vector<std::size_t> parity_set(std::size_t j) const;
  /// Qubits other than j that, with qubit j, give the occupation of mode j.
  std::vector<std::size_t> flip_set(std::size_t j) const;
  /// parity_set minus flip_set (symmetric difference).
  std::vector<std::size_t> remainder_set(std::size_t j) const;

  /// a+_j and a_j as Pauli sums.
  PauliSum creation(std::size_t j) const;
  PauliSum annihilation(std::size_t j) const;

 private:
  Mapping mapping_;
  std::size_t n_;
  std::vector<std::vector<bool>> matrix_;
  std::vector<std::vector<bool>> inverse_;
};

/// Maps to qubits under the chosen encoding, simplified at `threshold`.
PauliSum map_to_qubits(const FermionicOperator& op, Mapping mapping, double threshold = kPauliThreshold);

/// Total number operator sum_j a+_j a_j under a mapping.
PauliSum number_operator(std::size_t n_modes, Mapping mapping);

/// Symmetry qubits removed by two_qubit_reduction for an n-mode register.
std::pair<std::size_t, std::size_t> reduction_qubits(std::size_t n_modes);

/// Removes qubits n/2-1 and n-1 from a parity-mapped operator, replacing Z
/// there by (-1)^{n_alpha} and (-1)^{n_alpha + n_beta} respectively, with
/// n_alpha = n_beta = n_particles / 2. Throws symmetry if any term has X or Y
/// on those qubits.
PauliSum two_qubit_reduction(const PauliSum& sum, std::size_t n_particles, double threshold = kPauliThreshold);

struct QubitHamiltonian {
  PauliSum pauli_sum;
  std::size_t n_qubits = 0;
  double shift = 0.0;  // nuclear repulsion, Hartree
  std::size_t n_particles = 0;
  std::size_t n_modes = 0;
  Mapping mapping = Mapping::parity;
  bool reduced = false;
};

/// Fermionic build + mapping (+ reduction when `reduce`). Reduction is only
/// defined for the parity mapping; other mappings are rejected.
QubitHamiltonian qubit_hamiltonian(const SpinOrbitalIntegrals& ints, Mapping mapping, bool reduce);

/// Brings an operator already mapped on the full n-mode register onto the
/// Hamiltonian's register: reduced the same way when the Hamiltonian is.
PauliSum match_register(const QubitHamiltonian& h, const PauliSum& mapped_full);

/// JSON text {n_qubits, shift, n_particles, mapping_tag, reduced, terms}.
std::string to_json(const QubitHamiltonian& h);

}  // namespace h2vqe
