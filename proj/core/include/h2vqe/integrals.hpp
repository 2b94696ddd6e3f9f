#pragma once

#include <array>
#include <vector>

#include "h2vqe/linalg.hpp"

namespace h2vqe {

/// 1 Angstrom expressed in Bohr.
inline constexpr double kBohrRadiusAngstrom = 0.529177210903;
inline constexpr double kBohrPerAngstrom = 1.0 / kBohrRadiusAngstrom;

using Vec3 = std::array<double, 3>;

struct GaussianPrimitive {
  double exponent;     // Bohr^-2
  double coefficient;  // contraction coefficient, dimensionless
};

/// Contracted s-type orbital. `normalization[i]` multiplies primitive i so
/// that the contracted function has unit norm.
struct ContractedOrbital {
  Vec3 center{};
  std::vector<GaussianPrimitive> primitives;
  std::vector<double> normalization;
};

struct Atom {
  int atomic_number;
  Vec3 position;  // Bohr
};

struct MoleculeGeometry {
  std::vector<Atom> atoms;
  int charge = 0;
  int spin = 0;
};

/// H at the origin and H at (0, 0, distance) with distance in Angstrom.
MoleculeGeometry hydrogen_molecule(double distance_angstrom);

/// Throws unsupported unless the geometry is neutral singlet H2.
void require_hydrogen_molecule(const MoleculeGeometry& geometry);

/// STO-3G 1s hydrogen function centered at `center`, normalized.
ContractedOrbital sto3g_hydrogen(const Vec3& center);

/// One STO-3G orbital per atom.
std::vector<ContractedOrbital> sto3g_basis(const MoleculeGeometry& geometry);

/// Boys function of order zero. Throws domain for t < 0.
double boys_f0(double t);

/// Below this argument boys_f0 uses its Taylor series.
inline constexpr double kBoysSeriesThreshold = 1e-4;

/// Atomic-orbital integrals. `eri` is in chemist notation,
/// eri[(p*n + q)*n*n + r*n + s] = (pq|rs).
struct AOIntegrals {
  RealMatrix overlap;
  RealMatrix kinetic;
  RealMatrix nuclear;
  std::vector<double> eri;
  std::size_t n_basis = 0;

  double eri_at(std::size_t p, std::size_t q, std::size_t r, std::size_t s) const {
    return eri[((p * n_basis + q) * n_basis + r) * n_basis + s];
  }
  RealMatrix core_hamiltonian() const { return kinetic + nuclear; }
};

AOIntegrals ao_integrals(const MoleculeGeometry& geometry, const std::vector<ContractedOrbital>& basis);

/// Sum over atom pairs of Z_i Z_j / r_ij, in Hartree. Throws singularity for
/// coincident nuclei.
double nuclear_repulsion(const MoleculeGeometry& geometry);

// Primitive (unnormalized) s-Gaussian integrals, exp(-a|r-A|^2) etc.
namespace primitive {
double overlap(double a, const Vec3& A, double b, const Vec3& B);
double kinetic(double a, const Vec3& A, double b, const Vec3& B);
double nuclear(double a, const Vec3& A, double b, const Vec3& B, const Vec3& C, double charge);
double coulomb(double a, const Vec3& A, double b, const Vec3& B, double c, const Vec3& C, double d,
               const Vec3& D);
}  // namespace primitive

}  // namespace h2vqe
