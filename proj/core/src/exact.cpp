#include "h2vqe/exact.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "h2vqe/error.hpp"

namespace h2vqe {

HermitianEigen eigh(const ComplexMatrix& input, double hermitian_tol) {
  const std::size_t n = input.rows();
  if (input.cols() != n) throw Error(ErrorKind::dimension, "eigh needs a square matrix");
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j)
      if (std::abs(input(i, j) - std::conj(input(j, i))) > hermitian_tol)
        throw Error(ErrorKind::validation, "matrix is not Hermitian");

  ComplexMatrix a = input;
  // Symmetrize exactly so rounding in the input does not accumulate.
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = a(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      const Complex v = 0.5 * (a(i, j) + std::conj(a(j, i)));
      a(i, j) = v;
      a(j, i) = std::conj(v);
    }
  }
  ComplexMatrix v = ComplexMatrix::identity(n);

  auto off_norm = [&] {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (i != j) s += std::norm(a(i, j));
    return std::sqrt(s);
  };
  const double scale = std::max(1.0, max_abs(a));

  for (int sweep = 0; sweep < 100 && off_norm() > 1e-15 * scale; ++sweep) {
    for (std::size_t p = 0; p + 1 < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) {
        const double r = std::abs(a(p, q));
        if (r < 1e-300) continue;
        // U = diag phase then real rotation: with a_pq = r e^{i phi},
        // columns p, q of U are (c, -s e^{-i phi}) and (s, c e^{-i phi}).
        const Complex phase = a(p, q) / r;
        const double app = a(p, p).real(), aqq = a(q, q).real();
        const double tau = (aqq - app) / (2.0 * r);
        const double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
        const double c = 1.0 / std::sqrt(1.0 + t * t);
        const double s = t * c;
        const Complex upp = c, upq = s, uqp = -s * std::conj(phase), uqq = c * std::conj(phase);

        for (std::size_t k = 0; k < n; ++k) {  // A <- A U
          const Complex akp = a(k, p), akq = a(k, q);
          a(k, p) = akp * upp + akq * uqp;
          a(k, q) = akp * upq + akq * uqq;
        }
        for (std::size_t k = 0; k < n; ++k) {  // A <- U^H A
          const Complex apk = a(p, k), aqk = a(q, k);
          a(p, k) = std::conj(upp) * apk + std::conj(uqp) * aqk;
          a(q, k) = std::conj(upq) * apk + std::conj(uqq) * aqk;
        }
        a(p, q) = a(q, p) = 0.0;
        for (std::size_t k = 0; k < n; ++k) {  // V <- V U
          const Complex vkp = v(k, p), vkq = v(k, q);
          v(k, p) = vkp * upp + vkq * uqp;
          v(k, q) = vkp * upq + vkq * uqq;
        }
      }
  }
  if (off_norm() > 1e-10 * scale) throw Error(ErrorKind::numerical, "Jacobi eigensolver did not converge");

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](auto i, auto j) { return a(i, i).real() < a(j, j).real(); });
  HermitianEigen out;
  out.vectors = ComplexMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    out.values.push_back(a(order[k], order[k]).real());
    for (std::size_t i = 0; i < n; ++i) out.vectors(i, k) = v(i, order[k]);
  }
  return out;
}

HermitianEigen eigh(const RealMatrix& m, double hermitian_tol) {
  ComplexMatrix c(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) c(i, j) = m(i, j);
  return eigh(c, hermitian_tol);
}

SpectrumResult lowest_eigenvalue(const PauliSum& h) {
  if (!is_hermitian(h, 1e-10)) throw Error(ErrorKind::validation, "Hamiltonian is not Hermitian");
  const auto eig = eigh(to_matrix(h));
  SpectrumResult out;
  out.eigenvalues = eig.values;
  out.ground_energy = eig.values.front();
  for (std::size_t i = 0; i < eig.vectors.rows(); ++i) out.ground_state.push_back(eig.vectors(i, 0));
  return out;
}

RealMatrix fci_hamiltonian(const SpinOrbitalIntegrals& ints) {
  if (ints.n_spin_orbitals != 4 || ints.n_particles != 2)
    throw Error(ErrorKind::unsupported, "fci_oracle handles 2 electrons in 4 spin orbitals");
  std::vector<std::array<std::size_t, 2>> dets;
  for (std::size_t p = 0; p < 4; ++p)
    for (std::size_t q = p + 1; q < 4; ++q) dets.push_back({p, q});

  auto anti = [&](std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return ints.h2_at(p, q, r, s) - ints.h2_at(p, q, s, r);
  };
  const auto& h = ints.h1;
  RealMatrix m(dets.size(), dets.size());
  for (std::size_t I = 0; I < dets.size(); ++I)
    for (std::size_t J = 0; J < dets.size(); ++J) {
      const auto [p, q] = dets[I];
      const auto [r, s] = dets[J];
      // <pq|H|rs> for normalized two-electron determinants; covers the
      // diagonal, single- and double-difference Slater-Condon cases.
      double one = 0.0;
      if (q == s) one += h(p, r);
      if (q == r) one -= h(p, s);
      if (p == s) one -= h(q, r);
      if (p == r) one += h(q, s);
      m(I, J) = one + anti(p, q, r, s);
    }
  return m;
}

double fci_oracle(const SpinOrbitalIntegrals& ints) {
  const auto eig = eigh(fci_hamiltonian(ints));
  return eig.values.front() + ints.nuclear_repulsion;
}

}  // namespace h2vqe
