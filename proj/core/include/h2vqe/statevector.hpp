#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "h2vqe/circuit.hpp"
#include "h2vqe/linalg.hpp"

namespace h2vqe {

/// Dense 2^n amplitudes; bit q of a basis index is qubit q.
class StateVector {
 public:
  explicit StateVector(std::size_t n_qubits);  // |0...0>
  StateVector(std::size_t n_qubits, std::vector<Complex> amplitudes);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t dimension() const noexcept { return amps_.size(); }
  std::span<const Complex> amplitudes() const noexcept { return amps_; }
  Complex operator[](std::size_t i) const { return amps_[i]; }

  double norm() const;

  /// u = {u00, u01, u10, u11} acting on `qubit`.
  void apply_1q(const std::array<Complex, 4>& u, std::size_t qubit);
  /// 4x4 row-major u on the pair; local index = bit(q0) + 2 bit(q1).
  void apply_2q(const std::array<Complex, 16>& u, std::size_t q0, std::size_t q1);
  void apply_x(std::size_t qubit);
  void apply_cx(std::size_t control, std::size_t target);
  void apply_cz(std::size_t a, std::size_t b);

  void apply(const Gate& gate, std::span<const double> parameters);

 private:
  std::size_t n_qubits_;
  std::vector<Complex> amps_;
};

/// 2x2 matrix of a single-qubit gate.
std::array<Complex, 4> gate_matrix_1q(GateKind kind, double angle);
/// 4x4 matrix of a two-qubit gate, local index = bit(q0) + 2 bit(q1).
std::array<Complex, 16> gate_matrix_2q(GateKind kind, double angle);

/// |<a|b>|^2.
double fidelity(const StateVector& a, const StateVector& b);

}  // namespace h2vqe
