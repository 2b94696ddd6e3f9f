#pragma once

// Independent reference computations used by the unit and acceptance tests.
// Nothing here calls the closed-form integral kernels, the Pauli phase rule or
// the library eigensolver.

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <numbers>
#include <span>
#include <vector>

#include "h2vqe/integrals.hpp"
#include "h2vqe/linalg.hpp"
#include "h2vqe/pauli.hpp"

namespace oracle {

using h2vqe::Complex;
using h2vqe::ComplexMatrix;
using h2vqe::RealMatrix;
using h2vqe::Vec3;

inline std::array<Complex, 4> pauli_2x2(char letter) {
  const Complex i{0.0, 1.0};
  switch (letter) {
    case 'X': return {0.0, 1.0, 1.0, 0.0};
    case 'Y': return {0.0, -i, i, 0.0};
    case 'Z': return {1.0, 0.0, 0.0, -1.0};
    default: return {1.0, 0.0, 0.0, 1.0};
  }
}

inline ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
  ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j)
      for (std::size_t k = 0; k < b.rows(); ++k)
        for (std::size_t l = 0; l < b.cols(); ++l) out(i * b.rows() + k, j * b.cols() + l) = a(i, j) * b(k, l);
  return out;
}

/// Dense matrix of a letter string with qubit 0 as the least significant
/// index bit: P_{n-1} (x) ... (x) P_0.
inline ComplexMatrix string_matrix(const std::string& letters) {
  ComplexMatrix m(1, 1, 1.0);
  for (std::size_t q = letters.size(); q-- > 0;) {
    const auto p = pauli_2x2(letters[q]);
    ComplexMatrix f(2, 2);
    f(0, 0) = p[0], f(0, 1) = p[1], f(1, 0) = p[2], f(1, 1) = p[3];
    m = kron(m, f);
  }
  return m;
}

inline ComplexMatrix sum_matrix(const h2vqe::PauliSum& s) {
  const std::size_t dim = std::size_t{1} << s.n_qubits();
  ComplexMatrix m(dim, dim);
  for (const auto& t : s.terms()) {
    const auto p = string_matrix(t.string.letters());
    for (std::size_t i = 0; i < dim; ++i)
      for (std::size_t j = 0; j < dim; ++j) m(i, j) += t.coefficient * p(i, j);
  }
  return m;
}

inline double frobenius_distance(const ComplexMatrix& a, const ComplexMatrix& b) {
  double s = 0.0;
  for (std::size_t i = 0; i < a.data().size(); ++i) s += std::norm(a.data()[i] - b.data()[i]);
  return std::sqrt(s);
}

inline std::vector<Complex> matvec(const ComplexMatrix& m, std::span<const Complex> v) {
  std::vector<Complex> out(m.rows());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out[i] += m(i, j) * v[j];
  return out;
}

inline Complex inner(std::span<const Complex> a, std::span<const Complex> b) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

// ---- Gaussian integrals by quadrature ----

/// Composite trapezoid on [lo, hi]; spectrally accurate for smooth decaying
/// integrands that vanish at both ends.
inline double trapezoid(const std::function<double(double)>& f, double lo, double hi, std::size_t n) {
  const double h = (hi - lo) / static_cast<double>(n);
  double s = 0.5 * (f(lo) + f(hi));
  for (std::size_t k = 1; k < n; ++k) s += f(lo + h * static_cast<double>(k));
  return s * h;
}

inline double gauss1d(double a, double A, double b, double B, int derivative_order) {
  // derivative_order 0: int g_a g_b dx; 1: int g_a' g_b' dx.
  const double lo = std::min(A, B) - 12.0, hi = std::max(A, B) + 12.0;
  return trapezoid(
      [&](double x) {
        const double ga = std::exp(-a * (x - A) * (x - A)), gb = std::exp(-b * (x - B) * (x - B));
        if (derivative_order == 0) return ga * gb;
        return (-2.0 * a * (x - A) * ga) * (-2.0 * b * (x - B) * gb);
      },
      lo, hi, 6000);
}

inline double overlap_primitive(double a, const Vec3& A, double b, const Vec3& B) {
  double s = 1.0;
  for (int d = 0; d < 3; ++d) s *= gauss1d(a, A[d], b, B[d], 0);
  return s;
}

/// Kinetic element from 1/2 int grad g_a . grad g_b.
inline double kinetic_primitive(double a, const Vec3& A, double b, const Vec3& B) {
  std::array<double, 3> s{}, t{};
  for (int d = 0; d < 3; ++d) s[d] = gauss1d(a, A[d], b, B[d], 0), t[d] = gauss1d(a, A[d], b, B[d], 1);
  return 0.5 * (t[0] * s[1] * s[2] + s[0] * t[1] * s[2] + s[0] * s[1] * t[2]);
}

struct ProductGaussian {
  double prefactor;
  double exponent;
  Vec3 center;
};

inline ProductGaussian product(double a, const Vec3& A, double b, const Vec3& B) {
  ProductGaussian g{};
  g.exponent = a + b;
  double r2 = 0.0;
  for (int d = 0; d < 3; ++d) {
    g.center[d] = (a * A[d] + b * B[d]) / g.exponent;
    r2 += (A[d] - B[d]) * (A[d] - B[d]);
  }
  g.prefactor = std::exp(-a * b / g.exponent * r2);
  return g;
}

inline double distance(const Vec3& a, const Vec3& b) {
  return std::sqrt((a[0] - b[0]) * (a[0] - b[0]) + (a[1] - b[1]) * (a[1] - b[1]) + (a[2] - b[2]) * (a[2] - b[2]));
}

/// (2/pi) int_0^inf exp(-s k^2) j0(k R) dk, the momentum-space Coulomb kernel.
inline double coulomb_kernel(double s, double R) {
  const double kmax = std::sqrt(50.0 / s);
  auto integrand = [&](double k) {
    const double x = k * R;
    const double j0 = std::abs(x) < 1e-8 ? 1.0 - x * x / 6.0 : std::sin(x) / x;
    return std::exp(-s * k * k) * j0;
  };
  return 2.0 / std::numbers::pi * trapezoid(integrand, 0.0, kmax, 4000);
}

/// -Z int g_a g_b / |r - C|.
inline double nuclear_primitive(double a, const Vec3& A, double b, const Vec3& B, const Vec3& C, double Z) {
  const auto p = product(a, A, b, B);
  const double q = std::pow(std::numbers::pi / p.exponent, 1.5);
  return -Z * p.prefactor * q * coulomb_kernel(1.0 / (4.0 * p.exponent), distance(p.center, C));
}

inline double coulomb_primitive(double a, const Vec3& A, double b, const Vec3& B, double c, const Vec3& C, double d,
                                const Vec3& D) {
  const auto p = product(a, A, b, B), q = product(c, C, d, D);
  const double v = std::pow(std::numbers::pi / p.exponent, 1.5) * std::pow(std::numbers::pi / q.exponent, 1.5);
  const double s = 1.0 / (4.0 * p.exponent) + 1.0 / (4.0 * q.exponent);
  return p.prefactor * q.prefactor * v * coulomb_kernel(s, distance(p.center, q.center));
}

template <class F>
double contract2(const h2vqe::ContractedOrbital& u, const h2vqe::ContractedOrbital& v, F&& f) {
  double s = 0.0;
  for (std::size_t i = 0; i < u.primitives.size(); ++i)
    for (std::size_t j = 0; j < v.primitives.size(); ++j)
      s += u.primitives[i].coefficient * u.normalization[i] * v.primitives[j].coefficient * v.normalization[j] *
           f(u.primitives[i].exponent, v.primitives[j].exponent);
  return s;
}

inline double eri_contracted(const h2vqe::ContractedOrbital& p, const h2vqe::ContractedOrbital& q,
                             const h2vqe::ContractedOrbital& r, const h2vqe::ContractedOrbital& s) {
  double sum = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j)
      for (std::size_t k = 0; k < 3; ++k)
        for (std::size_t l = 0; l < 3; ++l) {
          const double w = p.primitives[i].coefficient * p.normalization[i] * q.primitives[j].coefficient *
                           q.normalization[j] * r.primitives[k].coefficient * r.normalization[k] *
                           s.primitives[l].coefficient * s.normalization[l];
          sum += w * coulomb_primitive(p.primitives[i].exponent, p.center, q.primitives[j].exponent, q.center,
                                       r.primitives[k].exponent, r.center, s.primitives[l].exponent, s.center);
        }
  return sum;
}

struct QuadratureIntegrals {
  RealMatrix S{2, 2}, T{2, 2}, V{2, 2};
  std::array<double, 16> eri{};
  double at(int p, int q, int r, int s) const { return eri[((p * 2 + q) * 2 + r) * 2 + s]; }
};

inline QuadratureIntegrals quadrature_integrals(const h2vqe::MoleculeGeometry& g) {
  const auto basis = h2vqe::sto3g_basis(g);
  QuadratureIntegrals out;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      const auto& u = basis[i];
      const auto& v = basis[j];
      out.S(i, j) = contract2(u, v, [&](double a, double b) { return overlap_primitive(a, u.center, b, v.center); });
      out.T(i, j) = contract2(u, v, [&](double a, double b) { return kinetic_primitive(a, u.center, b, v.center); });
      out.V(i, j) = contract2(u, v, [&](double a, double b) {
        double s = 0.0;
        for (const auto& atom : g.atoms)
          s += nuclear_primitive(a, u.center, b, v.center, atom.position, atom.atomic_number);
        return s;
      });
    }
  for (int p = 0; p < 2; ++p)
    for (int q = 0; q < 2; ++q)
      for (int r = 0; r < 2; ++r)
        for (int s = 0; s < 2; ++s)
          out.eri[((p * 2 + q) * 2 + r) * 2 + s] = eri_contracted(basis[p], basis[q], basis[r], basis[s]);
  return out;
}

/// Closed-shell H2 RHF from symmetry: the occupied MO is the normalized
/// gerade combination, so no SCF iteration is required.
struct SymmetricRhf {
  double total_energy;
  double h_gg;
  double j_gg;
  std::array<double, 2> c_g;
  std::array<double, 2> c_u;
};

inline SymmetricRhf symmetric_rhf(const QuadratureIntegrals& q, double nuclear_repulsion) {
  const double s = q.S(0, 1);
  const double ng = 1.0 / std::sqrt(2.0 * (1.0 + s)), nu = 1.0 / std::sqrt(2.0 * (1.0 - s));
  SymmetricRhf out{};
  out.c_g = {ng, ng};
  out.c_u = {nu, -nu};
  const RealMatrix h = q.T + q.V;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) out.h_gg += out.c_g[i] * out.c_g[j] * h(i, j);
  for (int p = 0; p < 2; ++p)
    for (int r = 0; r < 2; ++r)
      for (int u = 0; u < 2; ++u)
        for (int w = 0; w < 2; ++w) out.j_gg += out.c_g[p] * out.c_g[r] * out.c_g[u] * out.c_g[w] * q.at(p, r, u, w);
  out.total_energy = 2.0 * out.h_gg + out.j_gg + nuclear_repulsion;
  return out;
}

// ---- finite differences ----

/// Five-point central stencil, O(h^4).
inline std::vector<double> five_point_gradient(const std::function<double(std::span<const double>)>& f,
                                               std::span<const double> x, double h) {
  std::vector<double> g(x.size());
  std::vector<double> y(x.begin(), x.end());
  for (std::size_t i = 0; i < x.size(); ++i) {
    auto at = [&](double offset) {
      y[i] = x[i] + offset;
      const double v = f(y);
      y[i] = x[i];
      return v;
    };
    g[i] = (-at(2 * h) + 8 * at(h) - 8 * at(-h) + at(-2 * h)) / (12 * h);
  }
  return g;
}

// ---- small dense eigen problems ----

/// Characteristic polynomial coefficients c_0..c_n of det(lambda I - M),
/// c_n = 1, by the Faddeev-LeVerrier recursion.
inline std::vector<Complex> characteristic_polynomial(const ComplexMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<Complex> c(n + 1);
  c[n] = 1.0;
  ComplexMatrix mk(n, n);  // M_0 = 0
  for (std::size_t k = 1; k <= n; ++k) {
    ComplexMatrix next = m * mk;
    for (std::size_t i = 0; i < n; ++i) next(i, i) += c[n - k + 1];
    mk = next;
    const ComplexMatrix am = m * mk;
    Complex trace = 0.0;
    for (std::size_t i = 0; i < n; ++i) trace += am(i, i);
    c[n - k] = -trace / static_cast<double>(k);
  }
  return c;
}

/// Coefficients of prod (lambda - r_i), constant term first.
inline std::vector<Complex> polynomial_from_roots(std::span<const double> roots) {
  std::vector<Complex> c{1.0};
  for (double r : roots) {
    std::vector<Complex> next(c.size() + 1);
    for (std::size_t i = 0; i < c.size(); ++i) {
      next[i + 1] += c[i];
      next[i] -= r * c[i];
    }
    c = next;
  }
  return c;
}

}  // namespace oracle
