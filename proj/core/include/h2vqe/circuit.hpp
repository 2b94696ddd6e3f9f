#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace h2vqe {

enum class GateKind { X, H, S, SDG, RX, RY, RZ, CX, CZ, XXPLUSYY };

std::string_view to_string(GateKind kind);
bool is_two_qubit(GateKind kind);
bool is_rotation(GateKind kind);

/// Rotation angle: a fixed value or scale * parameters[slot].
struct Angle {
  double value = 0.0;
  std::optional<std::size_t> slot;
  double scale = 1.0;

  static Angle fixed(double v) { return Angle{v, std::nullopt, 1.0}; }
  static Angle parameter(std::size_t slot, double scale = 1.0) { return Angle{0.0, slot, scale}; }

  double resolve(std::span<const double> parameters) const;
};

/// Rotations follow R_P(theta) = exp(-i theta P / 2);
/// XXPLUSYY(theta) = exp(-i theta (XX + YY) / 2). For CX, qubits[0] is the
/// control.
struct Gate {
  GateKind kind;
  std::array<std::size_t, 2> qubits{0, 0};
  Angle angle{};
};

class Circuit {
 public:
  Circuit() = default;
  explicit Circuit(std::size_t n_qubits) : n_qubits_(n_qubits) {}

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::size_t n_parameters() const noexcept { return n_parameters_; }
  const std::vector<Gate>& gates() const noexcept { return gates_; }
  std::size_t size() const noexcept { return gates_.size(); }

  /// Validates qubit indices and grows n_parameters for new slots.
  Circuit& add(const Gate& gate);
  Circuit& add(GateKind kind, std::size_t q0) { return add(Gate{kind, {q0, q0}, {}}); }
  Circuit& add(GateKind kind, std::size_t q0, std::size_t q1) { return add(Gate{kind, {q0, q1}, {}}); }
  Circuit& add(GateKind kind, std::size_t q0, Angle angle) { return add(Gate{kind, {q0, q0}, angle}); }
  Circuit& add(GateKind kind, std::size_t q0, std::size_t q1, Angle angle) {
    return add(Gate{kind, {q0, q1}, angle});
  }

  /// Appends `other`, shifting its parameter slots by `slot_offset`.
  Circuit& append(const Circuit& other, std::size_t slot_offset = 0);

  /// Reserves parameter slots without referencing them.
  void set_n_parameters(std::size_t n);

  /// Every slot < n_parameters is referenced somewhere.
  bool all_parameters_referenced() const;

  /// One gate per line: `<kind> <q0[,q1]> [<angle>|p[k]|p[k]*scale]`.
  std::string dump() const;

 private:
  std::size_t n_qubits_ = 0;
  std::size_t n_parameters_ = 0;
  std::vector<Gate> gates_;
};

}  // namespace h2vqe
