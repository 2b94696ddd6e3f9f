#include "h2vqe/fermion.hpp"

#include <algorithm>
#include <cmath>

#include "h2vqe/error.hpp"
#include "json.hpp"

namespace h2vqe {
namespace {

constexpr double kSymmetryTolerance = 1e-10;

std::vector<std::vector<bool>> encoding_matrix(Mapping mapping, std::size_t n) {
  std::vector<std::vector<bool>> m(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) {
    switch (mapping) {
      case Mapping::jordan_wigner:
        m[i][i] = true;
        break;
      case Mapping::parity:
        for (std::size_t j = 0; j <= i; ++j) m[i][j] = true;
        break;
      case Mapping::bravyi_kitaev: {
        // Fenwick tree: qubit i holds modes (i+1 - lowbit(i+1), i].
        const std::size_t k = i + 1;
        const std::size_t low = k & (~k + 1);
        for (std::size_t j = k - low; j <= i; ++j) m[i][j] = true;
        break;
      }
    }
  }
  return m;
}

std::vector<std::vector<bool>> gf2_inverse(std::vector<std::vector<bool>> a) {
  const std::size_t n = a.size();
  std::vector<std::vector<bool>> inv(n, std::vector<bool>(n, false));
  for (std::size_t i = 0; i < n; ++i) inv[i][i] = true;
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && !a[pivot][col]) ++pivot;
    if (pivot == n) throw Error(ErrorKind::numerical, "singular GF(2) encoding matrix");
    std::swap(a[pivot], a[col]);
    std::swap(inv[pivot], inv[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || !a[r][col]) continue;
      for (std::size_t c = 0; c < n; ++c) {
        a[r][c] = a[r][c] != a[col][c];
        inv[r][c] = inv[r][c] != inv[col][c];
      }
    }
  }
  return inv;
}

PauliString letters_on(std::size_t n, const std::vector<std::size_t>& qubits, char letter) {
  std::string s(n, 'I');
  for (auto q : qubits) s[q] = letter;
  return PauliString::from_letters(s);
}

}  // namespace

std::string_view to_string(Mapping m) {
  switch (m) {
    case Mapping::jordan_wigner: return "jordan_wigner";
    case Mapping::parity: return "parity";
    case Mapping::bravyi_kitaev: return "bravyi_kitaev";
  }
  return "unknown";
}

Mapping parse_mapping(std::string_view name) {
  if (name == "jordan_wigner" || name == "jw") return Mapping::jordan_wigner;
  if (name == "parity") return Mapping::parity;
  if (name == "bravyi_kitaev" || name == "bk") return Mapping::bravyi_kitaev;
  throw Error(ErrorKind::configuration, "unknown mapping '" + std::string(name) + "'");
}

FermionicOperator build_fermionic(const SpinOrbitalIntegrals& ints) {
  const std::size_t n = ints.n_spin_orbitals;
  if (ints.h1.rows() != n || ints.h1.cols() != n || ints.h2.size() != n * n * n * n)
    throw Error(ErrorKind::dimension, "integral tensor shapes do not match the mode count");
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      if (std::abs(ints.h1(p, q) - ints.h1(q, p)) > kSymmetryTolerance)
        throw Error(ErrorKind::validation, "h1 is not symmetric");
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q)
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          const double v = ints.h2_at(p, q, r, s);
          // <pq|rs> = <qp|sr> = <rs|pq> for real orbitals.
          if (std::abs(v - ints.h2_at(q, p, s, r)) > kSymmetryTolerance ||
              std::abs(v - ints.h2_at(r, s, p, q)) > kSymmetryTolerance)
            throw Error(ErrorKind::validation, "h2 violates permutational symmetry");
        }
  return FermionicOperator{ints.h1, ints.h2, n};
}

FermionEncoding::FermionEncoding(Mapping mapping, std::size_t n_modes)
    : mapping_(mapping), n_(n_modes), matrix_(encoding_matrix(mapping, n_modes)), inverse_(gf2_inverse(matrix_)) {
  if (n_modes == 0 || n_modes > 64) throw Error(ErrorKind::resource, "mode count must be in [1, 64]");
}

std::uint64_t FermionEncoding::encode(std::uint64_t occupation) const {
  std::uint64_t out = 0;
  for (std::size_t i = 0; i < n_; ++i) {
    bool bit = false;
    for (std::size_t j = 0; j < n_; ++j)
      if (matrix_[i][j] && ((occupation >> j) & 1ULL)) bit = !bit;
    if (bit) out |= 1ULL << i;
  }
  return out;
}

std::vector<std::size_t> FermionEncoding::update_set(std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (i != j && matrix_[i][j]) out.push_back(i);
  return out;
}

std::vector<std::size_t> FermionEncoding::parity_set(std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i) {
    bool bit = false;
    for (std::size_t k = 0; k < j; ++k)
      if (inverse_[k][i]) bit = !bit;
    if (bit) out.push_back(i);
  }
  return out;
}

std::vector<std::size_t> FermionEncoding::flip_set(std::size_t j) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i)
    if (i != j && inverse_[j][i]) out.push_back(i);
  return out;
}

std::vector<std::size_t> FermionEncoding::remainder_set(std::size_t j) const {
  const auto p = parity_set(j);
  const auto f = flip_set(j);
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n_; ++i) {
    const bool in_p = std::find(p.begin(), p.end(), i) != p.end();
    const bool in_f = std::find(f.begin(), f.end(), i) != f.end();
    if (in_p != in_f) out.push_back(i);
  }
  return out;
}

PauliSum FermionEncoding::creation(std::size_t j) const {
  if (j >= n_) throw Error(ErrorKind::dimension, "mode index out of range");
  // a+_j = X_{U(j)} X_j Z_{P(j)} (I + Z_j Z_{F(j)}) / 2: project on n_j = 0,
  // apply the sign of the lower occupations, then flip every qubit storing n_j.
  auto flips = update_set(j);
  flips.push_back(j);
  auto projector_z = flip_set(j);
  projector_z.push_back(j);
  const PauliSum flip = PauliSum::from_string(letters_on(n_, flips, 'X'));
  const PauliSum sign = PauliSum::from_string(letters_on(n_, parity_set(j), 'Z'));
  PauliSum projector = PauliSum::identity(n_, 0.5);
  projector.add(0.5, letters_on(n_, projector_z, 'Z'));
  return simplify(flip * sign * projector, 0.0);
}

PauliSum FermionEncoding::annihilation(std::size_t j) const { return creation(j).adjoint(); }

PauliSum map_to_qubits(const FermionicOperator& op, Mapping mapping, double threshold) {
  const std::size_t n = op.n_modes;
  if (n > kDenseQubitCap) throw Error(ErrorKind::resource, "mapping limited to 12 modes");
  const FermionEncoding enc(mapping, n);
  std::vector<PauliSum> up, down;
  for (std::size_t j = 0; j < n; ++j) {
    up.push_back(enc.creation(j));
    down.push_back(enc.annihilation(j));
  }

  PauliSum out(n);
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      const double h = op.h1(p, q);
      if (h != 0.0) out += (up[p] * down[q]) * Complex{h, 0.0};
    }
  for (std::size_t p = 0; p < n; ++p)
    for (std::size_t q = 0; q < n; ++q) {
      if (p == q) continue;  // a+_p a+_p = 0
      const PauliSum creators = simplify(up[p] * up[q], 0.0);
      for (std::size_t r = 0; r < n; ++r)
        for (std::size_t s = 0; s < n; ++s) {
          if (r == s) continue;
          const double h = op.h2_at(p, q, r, s);
          if (h == 0.0) continue;
          out += (creators * (down[s] * down[r])) * Complex{0.5 * h, 0.0};
        }
      out = simplify(out, 0.0);
    }
  return simplify(out, threshold);
}

PauliSum number_operator(std::size_t n_modes, Mapping mapping) {
  const FermionEncoding enc(mapping, n_modes);
  PauliSum out(n_modes);
  for (std::size_t j = 0; j < n_modes; ++j) out += enc.creation(j) * enc.annihilation(j);
  return simplify(out, 0.0);
}

std::pair<std::size_t, std::size_t> reduction_qubits(std::size_t n_modes) {
  return {n_modes / 2 - 1, n_modes - 1};
}

PauliSum two_qubit_reduction(const PauliSum& sum, std::size_t n_particles, double threshold) {
  const std::size_t n = sum.n_qubits();
  if (n < 2 || n % 2 != 0) throw Error(ErrorKind::symmetry, "two-qubit reduction needs an even register");
  if (n_particles % 2 != 0)
    throw Error(ErrorKind::configuration, "two-qubit reduction assumes n_alpha = n_beta");
  const auto [qa, qt] = reduction_qubits(n);
  const std::size_t n_alpha = n_particles / 2;
  const double sign_alpha = (n_alpha % 2 == 0) ? 1.0 : -1.0;
  const double sign_total = (n_particles % 2 == 0) ? 1.0 : -1.0;
  const std::uint64_t symmetry_bits = (1ULL << qa) | (1ULL << qt);
  const std::uint64_t keep = ((n >= 64) ? ~0ULL : ((1ULL << n) - 1)) & ~symmetry_bits;

  PauliSum out(n - 2);
  for (const auto& t : sum.terms()) {
    if (t.string.x_mask() & symmetry_bits)
      throw Error(ErrorKind::symmetry, "term " + t.string.letters() + " acts with X/Y on a symmetry qubit");
    double sign = 1.0;
    if ((t.string.z_mask() >> qa) & 1ULL) sign *= sign_alpha;
    if ((t.string.z_mask() >> qt) & 1ULL) sign *= sign_total;
    out.add(t.coefficient * sign, t.string.restrict_to(keep));
  }
  return simplify(out, threshold);
}

QubitHamiltonian qubit_hamiltonian(const SpinOrbitalIntegrals& ints, Mapping mapping, bool reduce) {
  if (reduce && mapping != Mapping::parity)
    throw Error(ErrorKind::symmetry, "two-qubit reduction is only defined for the parity mapping");
  QubitHamiltonian h;
  h.n_modes = ints.n_spin_orbitals;
  h.n_particles = ints.n_particles;
  h.shift = ints.nuclear_repulsion;
  h.mapping = mapping;
  h.reduced = reduce;
  h.pauli_sum = map_to_qubits(build_fermionic(ints), mapping);
  if (reduce) h.pauli_sum = two_qubit_reduction(h.pauli_sum, h.n_particles);
  h.n_qubits = h.pauli_sum.n_qubits();
  return h;
}

PauliSum match_register(const QubitHamiltonian& h, const PauliSum& mapped_full) {
  if (mapped_full.n_qubits() != h.n_modes) throw Error(ErrorKind::dimension, "operator is not on the full register");
  if (!h.reduced) return mapped_full;
  return two_qubit_reduction(mapped_full, h.n_particles, 0.0);
}

std::string to_json(const QubitHamiltonian& h) {
  nlohmann::ordered_json j;
  j["n_qubits"] = h.n_qubits;
  j["shift"] = h.shift;
  j["n_particles"] = h.n_particles;
  j["mapping_tag"] = std::string(to_string(h.mapping));
  j["reduced"] = h.reduced;
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : h.pauli_sum.terms())
    terms.push_back({{"re", t.coefficient.real()}, {"im", t.coefficient.imag()}, {"pauli", t.string.letters()}});
  j["terms"] = std::move(terms);
  return j.dump(2);
}

}  // namespace h2vqe
