#pragma once

#include <vector>

#include "h2vqe/linalg.hpp"
#include "h2vqe/pauli.hpp"
#include "h2vqe/scf.hpp"

namespace h2vqe {

struct HermitianEigen {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// Cyclic complex Jacobi diagonalization of a Hermitian matrix. Throws
/// validation when the input is not Hermitian within `hermitian_tol`.
HermitianEigen eigh(const ComplexMatrix& m, double hermitian_tol = 1e-10);
HermitianEigen eigh(const RealMatrix& m, double hermitian_tol = 1e-10);

struct SpectrumResult {
  std::vector<double> eigenvalues;  // ascending, length 2^n
  double ground_energy = 0.0;
  std::vector<Complex> ground_state;
};

/// Dense diagonalization of a Pauli sum (the electronic spectrum; callers add
/// the nuclear shift).
SpectrumResult lowest_eigenvalue(const PauliSum& h);

/// Full CI over all two-electron determinants of four spin orbitals with
/// Slater-Condon matrix elements. Returns the lowest total energy including
/// nuclear repulsion.
double fci_oracle(const SpinOrbitalIntegrals& ints);

/// The 6x6 determinant-basis Hamiltonian fci_oracle diagonalizes (no shift),
/// determinants |pq> with p < q in lexicographic order.
RealMatrix fci_hamiltonian(const SpinOrbitalIntegrals& ints);

}  // namespace h2vqe
