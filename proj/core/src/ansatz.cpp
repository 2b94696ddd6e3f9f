#include "h2vqe/ansatz.hpp"

#include <cmath>
#include <string>

#include "h2vqe/error.hpp"
#include "h2vqe/random.hpp"

namespace h2vqe {
namespace {

void require_depth(int depth) {
  if (depth < 1) throw Error(ErrorKind::configuration, "depth must be >= 1");
}

void require_width(const Circuit& initial, std::size_t n_qubits) {
  if (initial.n_qubits() != n_qubits)
    throw Error(ErrorKind::configuration, "initial state width does not match the variational form");
}

enum class Entangler { cx, cz };

void entangle_full(Circuit& c, Entangler kind) {
  const std::size_t n = c.n_qubits();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) c.add(kind == Entangler::cx ? GateKind::CX : GateKind::CZ, i, j);
}

std::size_t rotation_layer(Circuit& c, std::span<const GateKind> kinds, std::size_t slot) {
  for (GateKind k : kinds)
    for (std::size_t q = 0; q < c.n_qubits(); ++q) c.add(k, q, Angle::parameter(slot++));
  return slot;
}

Circuit layered(std::size_t n_qubits, int depth, const Circuit& initial, std::span<const GateKind> rotations,
                Entangler entangler) {
  require_depth(depth);
  require_width(initial, n_qubits);
  Circuit c(n_qubits);
  c.append(initial);
  const std::size_t offset = initial.n_parameters();
  std::size_t slot = rotation_layer(c, rotations, offset);
  for (int r = 0; r < depth; ++r) {
    entangle_full(c, entangler);
    slot = rotation_layer(c, rotations, slot);
  }
  return c;
}

std::uint64_t hartree_fock_occupation(std::size_t n_spin_orbitals, std::size_t n_particles) {
  if (n_spin_orbitals % 2 != 0 || n_particles > n_spin_orbitals || n_particles % 2 != 0)
    throw Error(ErrorKind::configuration, "closed-shell filling needs even orbital and particle counts");
  const std::size_t half = n_spin_orbitals / 2;
  const std::size_t per_spin = n_particles / 2;
  std::uint64_t occ = 0;
  for (std::size_t k = 0; k < per_spin; ++k) occ |= (1ULL << k) | (1ULL << (half + k));
  return occ;
}

}  // namespace

std::string_view to_string(InitialState s) {
  return s == InitialState::zero ? "zero" : "hartree_fock";
}

std::string_view to_string(VarForm f) {
  switch (f) {
    case VarForm::uccsd: return "uccsd";
    case VarForm::real_amplitudes: return "real_amplitudes";
    case VarForm::efficient_su2: return "efficient_su2";
    case VarForm::two_local: return "two_local";
    case VarForm::excitation_preserving: return "excitation_preserving";
  }
  return "unknown";
}

InitialState parse_initial_state(std::string_view name) {
  if (name == "zero") return InitialState::zero;
  if (name == "hartree_fock" || name == "hf") return InitialState::hartree_fock;
  throw Error(ErrorKind::configuration, "unknown initial state '" + std::string(name) + "'");
}

VarForm parse_var_form(std::string_view name) {
  if (name == "uccsd") return VarForm::uccsd;
  if (name == "real_amplitudes") return VarForm::real_amplitudes;
  if (name == "efficient_su2") return VarForm::efficient_su2;
  if (name == "two_local") return VarForm::two_local;
  if (name == "excitation_preserving") return VarForm::excitation_preserving;
  throw Error(ErrorKind::configuration, "unknown variational form '" + std::string(name) + "'");
}

Circuit hartree_fock_circuit(std::size_t n_spin_orbitals, std::size_t n_particles, Mapping mapping, bool reduced) {
  if (reduced && mapping != Mapping::parity)
    throw Error(ErrorKind::configuration, "a reduced Hartree-Fock state requires the parity mapping");
  const std::uint64_t bits = FermionEncoding(mapping, n_spin_orbitals).encode(
      hartree_fock_occupation(n_spin_orbitals, n_particles));

  if (!reduced) {
    Circuit c(n_spin_orbitals);
    for (std::size_t q = 0; q < n_spin_orbitals; ++q)
      if ((bits >> q) & 1ULL) c.add(GateKind::X, q);
    return c;
  }
  const auto [qa, qt] = reduction_qubits(n_spin_orbitals);
  Circuit c(n_spin_orbitals - 2);
  std::size_t out = 0;
  for (std::size_t q = 0; q < n_spin_orbitals; ++q) {
    if (q == qa || q == qt) continue;
    if ((bits >> q) & 1ULL) c.add(GateKind::X, out);
    ++out;
  }
  return c;
}

Circuit zero_state(std::size_t n_qubits) { return Circuit(n_qubits); }

ExcitationList uccsd_excitations(std::size_t n_spin_orbitals, std::size_t n_particles) {
  const std::uint64_t occ = hartree_fock_occupation(n_spin_orbitals, n_particles);
  const std::size_t half = n_spin_orbitals / 2;
  auto spin = [half](std::size_t p) { return p / half; };
  std::vector<std::size_t> occupied, virtuals;
  for (std::size_t p = 0; p < n_spin_orbitals; ++p) ((occ >> p) & 1ULL ? occupied : virtuals).push_back(p);

  ExcitationList list;
  for (auto i : occupied)
    for (auto a : virtuals)
      if (spin(i) == spin(a)) list.singles.push_back({i, a});
  for (std::size_t x = 0; x < occupied.size(); ++x)
    for (std::size_t y = x + 1; y < occupied.size(); ++y)
      for (std::size_t u = 0; u < virtuals.size(); ++u)
        for (std::size_t v = u + 1; v < virtuals.size(); ++v) {
          const auto i = occupied[x], j = occupied[y], a = virtuals[u], b = virtuals[v];
          if (spin(i) + spin(j) == spin(a) + spin(b)) list.doubles.push_back({i, j, a, b});
        }
  return list;
}

void append_pauli_exponential(Circuit& c, const PauliString& pauli, std::size_t slot, double scale) {
  std::vector<std::size_t> support;
  for (std::size_t q = 0; q < pauli.n_qubits(); ++q)
    if (pauli.letter(q) != 'I') support.push_back(q);
  if (support.empty()) return;  // global phase

  for (auto q : support) {
    if (pauli.letter(q) == 'X') c.add(GateKind::H, q);
    if (pauli.letter(q) == 'Y') {
      c.add(GateKind::SDG, q);
      c.add(GateKind::H, q);
    }
  }
  for (std::size_t k = 0; k + 1 < support.size(); ++k) c.add(GateKind::CX, support[k], support[k + 1]);
  c.add(GateKind::RZ, support.back(), Angle::parameter(slot, scale));
  for (std::size_t k = support.size() - 1; k > 0; --k) c.add(GateKind::CX, support[k - 1], support[k]);
  for (auto q : support) {
    if (pauli.letter(q) == 'X') c.add(GateKind::H, q);
    if (pauli.letter(q) == 'Y') {
      c.add(GateKind::H, q);
      c.add(GateKind::S, q);
    }
  }
}

std::vector<PauliSum> uccsd_generators(std::size_t n_spin_orbitals, std::size_t n_particles, Mapping mapping,
                                       bool reduced) {
  if (reduced && mapping != Mapping::parity)
    throw Error(ErrorKind::configuration, "reduced UCCSD requires the parity mapping");
  const auto excitations = uccsd_excitations(n_spin_orbitals, n_particles);
  const FermionEncoding enc(mapping, n_spin_orbitals);

  auto finish = [&](const PauliSum& t) {
    PauliSum g = simplify(t - t.adjoint(), 1e-14);
    if (reduced) g = two_qubit_reduction(g, n_particles, 1e-14);
    return g;
  };

  std::vector<PauliSum> out;
  for (const auto& [i, a] : excitations.singles) out.push_back(finish(enc.creation(a) * enc.annihilation(i)));
  for (const auto& [i, j, a, b] : excitations.doubles)
    out.push_back(finish(enc.creation(a) * enc.creation(b) * enc.annihilation(j) * enc.annihilation(i)));
  return out;
}

Circuit uccsd(std::size_t n_spin_orbitals, std::size_t n_particles, Mapping mapping, bool reduced, int depth,
              const Circuit& initial) {
  require_depth(depth);
  const auto generators = uccsd_generators(n_spin_orbitals, n_particles, mapping, reduced);
  if (generators.empty()) throw Error(ErrorKind::configuration, "UCCSD has no excitations for this filling");
  const std::size_t n_qubits = reduced ? n_spin_orbitals - 2 : n_spin_orbitals;
  require_width(initial, n_qubits);

  Circuit c(n_qubits);
  c.append(initial);
  const std::size_t offset = initial.n_parameters();
  for (int r = 0; r < depth; ++r) {
    for (std::size_t k = 0; k < generators.size(); ++k) {
      // exp(theta * sum_j i c_j P_j) = prod_j exp(-i (-2 c_j theta / 2) P_j); the
      // strings of one excitation commute, so the product is exact.
      for (const auto& term : generators[k].terms()) {
        if (std::abs(term.coefficient.real()) > 1e-12)
          throw Error(ErrorKind::numerical, "excitation generator is not anti-Hermitian");
        append_pauli_exponential(c, term.string, offset + k, -2.0 * term.coefficient.imag());
      }
    }
  }
  c.set_n_parameters(offset + generators.size());
  return c;
}

Circuit real_amplitudes(std::size_t n_qubits, int depth, const Circuit& initial) {
  static constexpr std::array kinds{GateKind::RY};
  return layered(n_qubits, depth, initial, kinds, Entangler::cx);
}

Circuit efficient_su2(std::size_t n_qubits, int depth, const Circuit& initial) {
  static constexpr std::array kinds{GateKind::RY, GateKind::RZ};
  return layered(n_qubits, depth, initial, kinds, Entangler::cx);
}

Circuit two_local_ry_rz_cz(std::size_t n_qubits, int depth, const Circuit& initial) {
  static constexpr std::array kinds{GateKind::RY, GateKind::RZ};
  return layered(n_qubits, depth, initial, kinds, Entangler::cz);
}

Circuit excitation_preserving(std::size_t n_qubits, int depth, const Circuit& initial) {
  require_depth(depth);
  require_width(initial, n_qubits);
  static constexpr std::array kinds{GateKind::RZ};
  Circuit c(n_qubits);
  c.append(initial);
  std::size_t slot = rotation_layer(c, kinds, initial.n_parameters());
  for (int r = 0; r < depth; ++r) {
    for (std::size_t i = 0; i < n_qubits; ++i)
      for (std::size_t j = i + 1; j < n_qubits; ++j) c.add(GateKind::XXPLUSYY, i, j, Angle::parameter(slot++));
    slot = rotation_layer(c, kinds, slot);
  }
  return c;
}

std::vector<double> random_initial_point(std::size_t n_parameters, std::span<const double> interval,
                                         std::uint64_t seed) {
  if (interval.empty()) throw Error(ErrorKind::configuration, "initial-point interval is empty");
  const double lo = interval.size() > 1 ? interval[0] : 0.0;
  const double hi = interval.size() > 1 ? interval[1] : interval[0];
  if (!(lo <= hi)) throw Error(ErrorKind::configuration, "initial-point interval needs lo <= hi");
  Rng rng(seed);
  std::vector<double> x(n_parameters);
  for (auto& v : x) v = lo + (hi - lo) * uniform01(rng);
  return x;
}

}  // namespace h2vqe
