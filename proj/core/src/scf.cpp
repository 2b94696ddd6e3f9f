#include "h2vqe/scf.hpp"

#include <cmath>
#include <string>

#include "h2vqe/error.hpp"

namespace h2vqe {
namespace {

RealMatrix inverse_sqrt(const RealMatrix& s) {
  const auto eig = eigen_symmetric_2x2(s);
  if (!(eig.values[0] > 0.0)) throw Error(ErrorKind::numerical, "overlap matrix is not positive definite");
  RealMatrix d(2, 2);
  d(0, 0) = 1.0 / std::sqrt(eig.values[0]);
  d(1, 1) = 1.0 / std::sqrt(eig.values[1]);
  return eig.vectors * d * eig.vectors.transpose();
}

RealMatrix density(const RealMatrix& c, std::size_t n_occupied) {
  const std::size_t n = c.rows();
  RealMatrix p(n, n);
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu)
      for (std::size_t k = 0; k < n_occupied; ++k) p(mu, nu) += 2.0 * c(mu, k) * c(nu, k);
  return p;
}

RealMatrix fock(const AOIntegrals& ao, const RealMatrix& hcore, const RealMatrix& p) {
  const std::size_t n = ao.n_basis;
  RealMatrix f = hcore;
  for (std::size_t mu = 0; mu < n; ++mu)
    for (std::size_t nu = 0; nu < n; ++nu) {
      double g = 0.0;
      for (std::size_t la = 0; la < n; ++la)
        for (std::size_t si = 0; si < n; ++si)
          g += p(la, si) * (ao.eri_at(mu, nu, si, la) - 0.5 * ao.eri_at(mu, la, si, nu));
      f(mu, nu) += g;
    }
  return f;
}

double electronic_energy(const RealMatrix& p, const RealMatrix& hcore, const RealMatrix& f) {
  double e = 0.0;
  for (std::size_t i = 0; i < p.rows(); ++i)
    for (std::size_t j = 0; j < p.cols(); ++j) e += 0.5 * p(j, i) * (hcore(i, j) + f(i, j));
  return e;
}

// Diagonalizes F in the orthogonalized basis; returns (C, energies).
std::pair<RealMatrix, std::array<double, 2>> solve_roothaan(const RealMatrix& f, const RealMatrix& x) {
  const RealMatrix fp = x.transpose() * f * x;
  const auto eig = eigen_symmetric_2x2(fp);
  RealMatrix c = x * eig.vectors;
  for (std::size_t k = 0; k < 2; ++k) {
    const double lead = std::abs(c(0, k)) > 1e-14 ? c(0, k) : c(1, k);
    if (lead < 0.0)
      for (std::size_t mu = 0; mu < 2; ++mu) c(mu, k) = -c(mu, k);
  }
  return {c, eig.values};
}

}  // namespace

SymmetricEigen2 eigen_symmetric_2x2(const RealMatrix& m) {
  if (m.rows() != 2 || m.cols() != 2) throw Error(ErrorKind::dimension, "expected a 2x2 matrix");
  const double a = m(0, 0), b = 0.5 * (m(0, 1) + m(1, 0)), d = m(1, 1);
  SymmetricEigen2 out;
  out.vectors = RealMatrix(2, 2);
  const double mean = 0.5 * (a + d);
  const double radius = std::hypot(0.5 * (a - d), b);
  out.values = {mean - radius, mean + radius};
  if (radius == 0.0) {
    out.vectors = RealMatrix::identity(2);
    return out;
  }
  // Rotation angle that diagonalizes [[a, b], [b, d]].
  const double theta = 0.5 * std::atan2(2.0 * b, a - d);
  const double c = std::cos(theta), s = std::sin(theta);
  // (c, s) pairs with mean + radius, (-s, c) with mean - radius.
  std::array<std::array<double, 2>, 2> cols{{{-s, c}, {c, s}}};
  for (std::size_t k = 0; k < 2; ++k) {
    auto v = cols[k];
    const double lead = std::abs(v[0]) > 1e-14 ? v[0] : v[1];
    if (lead < 0.0) v = {-v[0], -v[1]};
    out.vectors(0, k) = v[0];
    out.vectors(1, k) = v[1];
  }
  return out;
}

ScfResult rhf_scf(const AOIntegrals& ao, const MoleculeGeometry& geometry, const ScfOptions& options) {
  require_hydrogen_molecule(geometry);
  if (ao.n_basis != 2) throw Error(ErrorKind::dimension, "rhf_scf expects a two-function basis");
  const std::size_t n_occupied = 1;
  const double e_nuc = nuclear_repulsion(geometry);

  const RealMatrix hcore = ao.core_hamiltonian();
  const RealMatrix x = inverse_sqrt(ao.overlap);

  auto [c, eps] = solve_roothaan(hcore, x);
  RealMatrix p = density(c, n_occupied);

  ScfResult result;
  double previous = 0.0;
  for (int iter = 1; iter <= options.max_iterations; ++iter) {
    const RealMatrix f = fock(ao, hcore, p);
    const double e_elec = electronic_energy(p, hcore, f);
    const double e_total = e_elec + e_nuc;
    result.energy_history.push_back(e_total);

    std::tie(c, eps) = solve_roothaan(f, x);
    p = density(c, n_occupied);

    if (iter > 1 && std::abs(e_total - previous) < options.energy_tolerance) {
      // Report quantities consistent with the final density.
      const RealMatrix f_final = fock(ao, hcore, p);
      std::tie(c, eps) = solve_roothaan(f_final, x);
      result.mo_coefficients = c;
      result.orbital_energies = {eps[0], eps[1]};
      result.electronic_energy = electronic_energy(p, hcore, f_final);
      result.total_energy = result.electronic_energy + e_nuc;
      result.iterations = iter;
      return result;
    }
    previous = e_total;
  }
  throw ConvergenceError("RHF did not converge in " + std::to_string(options.max_iterations) + " iterations",
                         previous);
}

SpinOrbitalIntegrals spin_orbital_integrals(const AOIntegrals& ao, const RealMatrix& c,
                                            const MoleculeGeometry& geometry) {
  const std::size_t n = ao.n_basis;
  if (c.rows() != n || c.cols() != n) throw Error(ErrorKind::dimension, "MO coefficient shape mismatch");

  const RealMatrix h_mo = c.transpose() * ao.core_hamiltonian() * c;

  // Four quarter transformations, chemist notation (pq|rs).
  std::vector<double> a(ao.eri), b(n * n * n * n, 0.0);
  auto at = [n](std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return ((p * n + q) * n + r) * n + s;
  };
  for (int pass = 0; pass < 4; ++pass) {
    std::fill(b.begin(), b.end(), 0.0);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        for (std::size_t k = 0; k < n; ++k)
          for (std::size_t l = 0; l < n; ++l)
            for (std::size_t m = 0; m < n; ++m) {
              // Rotate the leading index and cycle it to the back.
              b[at(j, k, l, i)] += c(m, i) * a[at(m, j, k, l)];
            }
    std::swap(a, b);
  }
  const std::vector<double>& mo_eri = a;

  SpinOrbitalIntegrals out;
  out.n_spin_orbitals = 2 * n;
  out.n_particles = 2;
  out.nuclear_repulsion = nuclear_repulsion(geometry);
  const std::size_t ns = out.n_spin_orbitals;
  out.h1 = RealMatrix(ns, ns);
  out.h2.assign(ns * ns * ns * ns, 0.0);

  auto spatial = [n](std::size_t p) { return p % n; };
  auto spin = [n](std::size_t p) { return p / n; };
  for (std::size_t p = 0; p < ns; ++p)
    for (std::size_t q = 0; q < ns; ++q)
      if (spin(p) == spin(q)) out.h1(p, q) = h_mo(spatial(p), spatial(q));

  for (std::size_t p = 0; p < ns; ++p)
    for (std::size_t q = 0; q < ns; ++q)
      for (std::size_t r = 0; r < ns; ++r)
        for (std::size_t s = 0; s < ns; ++s)
          if (spin(p) == spin(r) && spin(q) == spin(s))
            out.h2_at(p, q, r, s) = mo_eri[at(spatial(p), spatial(r), spatial(q), spatial(s))];
  return out;
}

MolecularProblem hydrogen_problem(double distance_angstrom) {
  if (!(distance_angstrom > 0.0)) throw Error(ErrorKind::configuration, "distance must be positive");
  MolecularProblem problem;
  problem.geometry = hydrogen_molecule(distance_angstrom);
  problem.ao = ao_integrals(problem.geometry, sto3g_basis(problem.geometry));
  problem.scf = rhf_scf(problem.ao, problem.geometry);
  problem.integrals = spin_orbital_integrals(problem.ao, problem.scf.mo_coefficients, problem.geometry);
  return problem;
}

}  // namespace h2vqe
