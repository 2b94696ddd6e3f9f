#include "h2vqe/integrals.hpp"

#include <cmath>
#include <numbers>

#include "h2vqe/error.hpp"

namespace h2vqe {
namespace {

constexpr std::array<double, 3> kSto3gExponents{3.42525091, 0.62391373, 0.16885540};
constexpr std::array<double, 3> kSto3gCoefficients{0.15432897, 0.53532814, 0.44463454};

double distance2(const Vec3& a, const Vec3& b) {
  const double dx = a[0] - b[0], dy = a[1] - b[1], dz = a[2] - b[2];
  return dx * dx + dy * dy + dz * dz;
}

Vec3 weighted_center(double a, const Vec3& A, double b, const Vec3& B) {
  const double p = a + b;
  return {(a * A[0] + b * B[0]) / p, (a * A[1] + b * B[1]) / p, (a * A[2] + b * B[2]) / p};
}

template <class F>
double contract2(const ContractedOrbital& u, const ContractedOrbital& v, F&& f) {
  double sum = 0.0;
  for (std::size_t i = 0; i < u.primitives.size(); ++i)
    for (std::size_t j = 0; j < v.primitives.size(); ++j)
      sum += u.primitives[i].coefficient * u.normalization[i] * v.primitives[j].coefficient *
             v.normalization[j] * f(u.primitives[i].exponent, v.primitives[j].exponent);
  return sum;
}

}  // namespace

MoleculeGeometry hydrogen_molecule(double distance_angstrom) {
  if (!std::isfinite(distance_angstrom) || distance_angstrom < 0.0)
    throw Error(ErrorKind::configuration, "bond distance must be finite and non-negative");
  MoleculeGeometry g;
  g.atoms.push_back({1, {0.0, 0.0, 0.0}});
  g.atoms.push_back({1, {0.0, 0.0, distance_angstrom * kBohrPerAngstrom}});
  return g;
}

void require_hydrogen_molecule(const MoleculeGeometry& geometry) {
  if (geometry.atoms.size() != 2)
    throw Error(ErrorKind::unsupported, "only two-atom hydrogen molecules are supported");
  for (const auto& atom : geometry.atoms)
    if (atom.atomic_number != 1)
      throw Error(ErrorKind::unsupported,
                  "unsupported element Z=" + std::to_string(atom.atomic_number) + " (STO-3G hydrogen only)");
  if (geometry.charge != 0 || geometry.spin != 0)
    throw Error(ErrorKind::unsupported, "only the neutral singlet is supported");
}

ContractedOrbital sto3g_hydrogen(const Vec3& center) {
  ContractedOrbital orb;
  orb.center = center;
  for (std::size_t i = 0; i < kSto3gExponents.size(); ++i) {
    orb.primitives.push_back({kSto3gExponents[i], kSto3gCoefficients[i]});
    orb.normalization.push_back(std::pow(2.0 * kSto3gExponents[i] / std::numbers::pi, 0.75));
  }
  // The published coefficients are rounded; rescale so <phi|phi> = 1 exactly.
  const double self = contract2(orb, orb, [&](double a, double b) {
    return primitive::overlap(a, center, b, center);
  });
  const double scale = 1.0 / std::sqrt(self);
  for (auto& n : orb.normalization) n *= scale;
  return orb;
}

std::vector<ContractedOrbital> sto3g_basis(const MoleculeGeometry& geometry) {
  require_hydrogen_molecule(geometry);
  std::vector<ContractedOrbital> basis;
  for (const auto& atom : geometry.atoms) basis.push_back(sto3g_hydrogen(atom.position));
  return basis;
}

double boys_f0(double t) {
  if (!(t >= 0.0)) throw Error(ErrorKind::domain, "boys_f0 requires t >= 0");
  if (t <= kBoysSeriesThreshold) return 1.0 - t / 3.0 + t * t / 10.0 - t * t * t / 42.0;
  const double s = std::sqrt(t);
  return 0.5 * std::sqrt(std::numbers::pi / t) * std::erf(s);
}

namespace primitive {

double overlap(double a, const Vec3& A, double b, const Vec3& B) {
  const double p = a + b;
  return std::pow(std::numbers::pi / p, 1.5) * std::exp(-a * b / p * distance2(A, B));
}

double kinetic(double a, const Vec3& A, double b, const Vec3& B) {
  const double p = a + b;
  const double mu = a * b / p;
  const double r2 = distance2(A, B);
  return mu * (3.0 - 2.0 * mu * r2) * std::pow(std::numbers::pi / p, 1.5) * std::exp(-mu * r2);
}

double nuclear(double a, const Vec3& A, double b, const Vec3& B, const Vec3& C, double charge) {
  const double p = a + b;
  const Vec3 P = weighted_center(a, A, b, B);
  return -2.0 * std::numbers::pi / p * charge * std::exp(-a * b / p * distance2(A, B)) *
         boys_f0(p * distance2(P, C));
}

double coulomb(double a, const Vec3& A, double b, const Vec3& B, double c, const Vec3& C, double d,
               const Vec3& D) {
  const double p = a + b;
  const double q = c + d;
  const Vec3 P = weighted_center(a, A, b, B);
  const Vec3 Q = weighted_center(c, C, d, D);
  const double pref = 2.0 * std::pow(std::numbers::pi, 2.5) / (p * q * std::sqrt(p + q));
  return pref * std::exp(-a * b / p * distance2(A, B) - c * d / q * distance2(C, D)) *
         boys_f0(p * q / (p + q) * distance2(P, Q));
}

}  // namespace primitive

AOIntegrals ao_integrals(const MoleculeGeometry& geometry, const std::vector<ContractedOrbital>& basis) {
  require_hydrogen_molecule(geometry);
  if (basis.size() != geometry.atoms.size())
    throw Error(ErrorKind::dimension, "expected one contracted orbital per atom");

  const std::size_t n = basis.size();
  AOIntegrals out;
  out.n_basis = n;
  out.overlap = RealMatrix(n, n);
  out.kinetic = RealMatrix(n, n);
  out.nuclear = RealMatrix(n, n);
  out.eri.assign(n * n * n * n, 0.0);

  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j <= i; ++j) {
      const auto& u = basis[i];
      const auto& v = basis[j];
      const double s = contract2(u, v, [&](double a, double b) {
        return primitive::overlap(a, u.center, b, v.center);
      });
      const double t = contract2(u, v, [&](double a, double b) {
        return primitive::kinetic(a, u.center, b, v.center);
      });
      const double vn = contract2(u, v, [&](double a, double b) {
        double sum = 0.0;
        for (const auto& atom : geometry.atoms)
          sum += primitive::nuclear(a, u.center, b, v.center, atom.position, atom.atomic_number);
        return sum;
      });
      out.overlap(i, j) = out.overlap(j, i) = s;
      out.kinetic(i, j) = out.kinetic(j, i) = t;
      out.nuclear(i, j) = out.nuclear(j, i) = vn;
    }
  }
  auto idx = [n](std::size_t p, std::size_t q, std::size_t r, std::size_t s) {
    return ((p * n + q) * n + r) * n + s;
  };
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q <= p; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s <= r; ++s) {
          if (p * (p + 1) / 2 + q < r * (r + 1) / 2 + s) continue;
          const auto& bp = basis[p];
          const auto& bq = basis[q];
          const auto& br = basis[r];
          const auto& bs = basis[s];
          double value = 0.0;
          for (std::size_t i = 0; i < bp.primitives.size(); ++i)
            for (std::size_t j = 0; j < bq.primitives.size(); ++j)
              for (std::size_t k = 0; k < br.primitives.size(); ++k)
                for (std::size_t l = 0; l < bs.primitives.size(); ++l) {
                  const double w = bp.primitives[i].coefficient * bp.normalization[i] *
                                   bq.primitives[j].coefficient * bq.normalization[j] *
                                   br.primitives[k].coefficient * br.normalization[k] *
                                   bs.primitives[l].coefficient * bs.normalization[l];
                  value += w * primitive::coulomb(bp.primitives[i].exponent, bp.center,
                                                  bq.primitives[j].exponent, bq.center,
                                                  br.primitives[k].exponent, br.center,
                                                  bs.primitives[l].exponent, bs.center);
                }
          // Eight-fold permutational symmetry of real chemist-notation integrals.
          for (auto [a, b, c, d] : {std::array{p, q, r, s}, std::array{q, p, r, s}, std::array{p, q, s, r},
                                    std::array{q, p, s, r}, std::array{r, s, p, q}, std::array{s, r, p, q},
                                    std::array{r, s, q, p}, std::array{s, r, q, p}})
            out.eri[idx(a, b, c, d)] = value;
        }
  return out;
}

double nuclear_repulsion(const MoleculeGeometry& geometry) {
  if (geometry.atoms.size() < 2) throw Error(ErrorKind::validation, "nuclear repulsion needs at least two atoms");
  double e = 0.0;
  for (std::size_t i = 0; i < geometry.atoms.size(); ++i)
    for (std::size_t j = i + 1; j < geometry.atoms.size(); ++j) {
      const double r = std::sqrt(distance2(geometry.atoms[i].position, geometry.atoms[j].position));
      if (!(r > 0.0)) throw Error(ErrorKind::singularity, "coincident nuclei");
      e += static_cast<double>(geometry.atoms[i].atomic_number) * geometry.atoms[j].atomic_number / r;
    }
  return e;
}

}  // namespace h2vqe
