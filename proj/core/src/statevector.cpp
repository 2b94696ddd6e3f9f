#include "h2vqe/statevector.hpp"

#include <cmath>
#include <numbers>

#include "h2vqe/error.hpp"

namespace h2vqe {
namespace {

constexpr Complex kI{0.0, 1.0};

void check_qubit(std::size_t q, std::size_t n) {
  if (q >= n) throw Error(ErrorKind::validation, "qubit " + std::to_string(q) + " out of range");
}

}  // namespace

StateVector::StateVector(std::size_t n_qubits) : n_qubits_(n_qubits) {
  if (n_qubits > 26) throw Error(ErrorKind::resource, "statevector limited to 26 qubits");
  amps_.assign(std::size_t{1} << n_qubits, Complex{});
  amps_[0] = 1.0;
}

StateVector::StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes)
    : n_qubits_(n_qubits), amps_(std::move(amplitudes)) {
  if (amps_.size() != (std::size_t{1} << n_qubits)) throw Error(ErrorKind::dimension, "amplitude count != 2^n");
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& a : amps_) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::apply_1q(const std::array<Complex, 4>& u, std::size_t qubit) {
  check_qubit(qubit, n_qubits_);
  const std::size_t stride = std::size_t{1} << qubit;
  for (std::size_t base = 0; base < amps_.size(); base += 2 * stride)
    for (std::size_t i = base; i < base + stride; ++i) {
      const Complex a0 = amps_[i], a1 = amps_[i + stride];
      amps_[i] = u[0] * a0 + u[1] * a1;
      amps_[i + stride] = u[2] * a0 + u[3] * a1;
    }
}

void StateVector::apply_2q(const std::array<Complex, 16>& u, std::size_t q0, std::size_t q1) {
  check_qubit(q0, n_qubits_);
  check_qubit(q1, n_qubits_);
  if (q0 == q1) throw Error(ErrorKind::validation, "two-qubit gate on a single qubit");
  const std::size_t m0 = std::size_t{1} << q0, m1 = std::size_t{1} << q1;
  for (std::size_t i = 0; i < amps_.size(); ++i) {
    if (i & (m0 | m1)) continue;
    const std::array<std::size_t, 4> idx{i, i | m0, i | m1, i | m0 | m1};
    const std::array<Complex, 4> in{amps_[idx[0]], amps_[idx[1]], amps_[idx[2]], amps_[idx[3]]};
    for (std::size_t r = 0; r < 4; ++r)
      amps_[idx[r]] = u[4 * r] * in[0] + u[4 * r + 1] * in[1] + u[4 * r + 2] * in[2] + u[4 * r + 3] * in[3];
  }
}

void StateVector::apply_x(std::size_t qubit) {
  check_qubit(qubit, n_qubits_);
  const std::size_t m = std::size_t{1} << qubit;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if (!(i & m)) std::swap(amps_[i], amps_[i | m]);
}

void StateVector::apply_cx(std::size_t control, std::size_t target) {
  check_qubit(control, n_qubits_);
  check_qubit(target, n_qubits_);
  if (control == target) throw Error(ErrorKind::validation, "CX control equals target");
  const std::size_t mc = std::size_t{1} << control, mt = std::size_t{1} << target;
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if ((i & mc) && !(i & mt)) std::swap(amps_[i], amps_[i | mt]);
}

void StateVector::apply_cz(std::size_t a, std::size_t b) {
  check_qubit(a, n_qubits_);
  check_qubit(b, n_qubits_);
  if (a == b) throw Error(ErrorKind::validation, "CZ on a single qubit");
  const std::size_t m = (std::size_t{1} << a) | (std::size_t{1} << b);
  for (std::size_t i = 0; i < amps_.size(); ++i)
    if ((i & m) == m) amps_[i] = -amps_[i];
}

void StateVector::apply(const Gate& gate, std::span<const double> parameters) {
  switch (gate.kind) {
    case GateKind::X: apply_x(gate.qubits[0]); return;
    case GateKind::CX: apply_cx(gate.qubits[0], gate.qubits[1]); return;
    case GateKind::CZ: apply_cz(gate.qubits[0], gate.qubits[1]); return;
    case GateKind::XXPLUSYY:
      apply_2q(gate_matrix_2q(gate.kind, gate.angle.resolve(parameters)), gate.qubits[0], gate.qubits[1]);
      return;
    default:
      apply_1q(gate_matrix_1q(gate.kind, gate.angle.resolve(parameters)), gate.qubits[0]);
      return;
  }
}

std::array<Complex, 4> gate_matrix_1q(GateKind kind, double angle) {
  const double c = std::cos(angle / 2), s = std::sin(angle / 2);
  const double r = 1.0 / std::numbers::sqrt2;
  switch (kind) {
    case GateKind::X: return {0.0, 1.0, 1.0, 0.0};
    case GateKind::H: return {r, r, r, -r};
    case GateKind::S: return {1.0, 0.0, 0.0, kI};
    case GateKind::SDG: return {1.0, 0.0, 0.0, -kI};
    case GateKind::RX: return {c, -kI * s, -kI * s, c};
    case GateKind::RY: return {c, -s, s, c};
    case GateKind::RZ: return {std::exp(-kI * (angle / 2)), 0.0, 0.0, std::exp(kI * (angle / 2))};
    default: throw Error(ErrorKind::validation, "not a single-qubit gate: " + std::string(to_string(kind)));
  }
}

std::array<Complex, 16> gate_matrix_2q(GateKind kind, double angle) {
  std::array<Complex, 16> u{};
  switch (kind) {
    case GateKind::CX:  // control = local bit 0
      u[0] = 1.0; u[4 * 1 + 3] = 1.0; u[4 * 2 + 2] = 1.0; u[4 * 3 + 1] = 1.0;
      return u;
    case GateKind::CZ:
      u[0] = 1.0; u[5] = 1.0; u[10] = 1.0; u[15] = -1.0;
      return u;
    case GateKind::XXPLUSYY: {
      // (XX + YY) / 2 swaps |01> and |10> and annihilates |00>, |11>.
      u[0] = 1.0;
      u[15] = 1.0;
      u[5] = u[10] = std::cos(angle);
      u[6] = u[9] = -kI * std::sin(angle);
      return u;
    }
    default: throw Error(ErrorKind::validation, "not a two-qubit gate: " + std::string(to_string(kind)));
  }
}

double fidelity(const StateVector& a, const StateVector& b) {
  if (a.dimension() != b.dimension()) throw Error(ErrorKind::dimension, "state dimension mismatch");
  Complex overlap = 0.0;
  for (std::size_t i = 0; i < a.dimension(); ++i) overlap += std::conj(a[i]) * b[i];
  return std::norm(overlap);
}

}  // namespace h2vqe
