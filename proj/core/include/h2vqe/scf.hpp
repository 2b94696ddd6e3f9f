#pragma once

#include <cstddef>
#include <vector>

#include "h2vqe/integrals.hpp"
#include "h2vqe/linalg.hpp"

namespace h2vqe {

struct ScfOptions {
  double energy_tolerance = 1e-10;  // Hartree, on the change between iterations
  int max_iterations = 200;
};

struct ScfResult {
  RealMatrix mo_coefficients;            // columns are MOs, ascending energy
  std::vector<double> orbital_energies;  // ascending
  double electronic_energy = 0.0;
  double total_energy = 0.0;             // electronic + nuclear repulsion
  int iterations = 0;
  std::vector<double> energy_history;    // total energy per iteration
};

/// Eigen-decomposition of a real symmetric 2x2 matrix; values ascending,
/// vectors as columns with a non-negative first nonzero component.
struct SymmetricEigen2 {
  std::array<double, 2> values;
  RealMatrix vectors;
};
SymmetricEigen2 eigen_symmetric_2x2(const RealMatrix& m);

/// Closed-shell restricted Hartree-Fock. Uses symmetric orthogonalization and
/// a core-Hamiltonian guess. Throws ConvergenceError carrying the last total
/// energy when the energy change does not fall below tolerance.
ScfResult rhf_scf(const AOIntegrals& ao, const MoleculeGeometry& geometry, const ScfOptions& options = {});

/// Electron integrals in the spin-orbital basis. Spin orbital P has spatial
/// index P % n_spatial and spin P / n_spatial (all alpha first, then beta).
/// h2 is physicist notation: h2(p,q,r,s) = <pq|rs> = (pr|qs).
struct SpinOrbitalIntegrals {
  RealMatrix h1;
  std::vector<double> h2;
  std::size_t n_spin_orbitals = 0;
  std::size_t n_particles = 0;
  double nuclear_repulsion = 0.0;

  double& h2_at(std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    const std::size_t n = n_spin_orbitals;
    return h2[((p * n + q) * n + r) * n + s];
  }
  double h2_at(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    const std::size_t n = n_spin_orbitals;
    return h2[((p * n + q) * n + r) * n + s];
  }
};

SpinOrbitalIntegrals spin_orbital_integrals(const AOIntegrals& ao, const RealMatrix& mo_coefficients,
                                            const MoleculeGeometry& geometry);

/// Everything the chemistry front end produces for one bond length.
struct MolecularProblem {
  MoleculeGeometry geometry;
  AOIntegrals ao;
  ScfResult scf;
  SpinOrbitalIntegrals integrals;
};

MolecularProblem hydrogen_problem(double distance_angstrom);

}  // namespace h2vqe
