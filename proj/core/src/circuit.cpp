#include "h2vqe/circuit.hpp"

#include <algorithm>
#include <charconv>

#include "h2vqe/error.hpp"

namespace h2vqe {
namespace {

std::string format_double(double v) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

}  // namespace

std::string_view to_string(GateKind kind) {
  switch (kind) {
    case GateKind::X: return "X";
    case GateKind::H: return "H";
    case GateKind::S: return "S";
    case GateKind::SDG: return "SDG";
    case GateKind::RX: return "RX";
    case GateKind::RY: return "RY";
    case GateKind::RZ: return "RZ";
    case GateKind::CX: return "CX";
    case GateKind::CZ: return "CZ";
    case GateKind::XXPLUSYY: return "XXPLUSYY";
  }
  return "?";
}

bool is_two_qubit(GateKind kind) {
  return kind == GateKind::CX || kind == GateKind::CZ || kind == GateKind::XXPLUSYY;
}

bool is_rotation(GateKind kind) {
  return kind == GateKind::RX || kind == GateKind::RY || kind == GateKind::RZ || kind == GateKind::XXPLUSYY;
}

double Angle::resolve(std::span<const double> parameters) const {
  if (!slot) return value;
  if (*slot >= parameters.size())
    throw Error(ErrorKind::binding, "parameter p[" + std::to_string(*slot) + "] is unbound");
  return scale * parameters[*slot];
}

Circuit& Circuit::add(const Gate& gate) {
  if (gate.qubits[0] >= n_qubits_ || (is_two_qubit(gate.kind) && gate.qubits[1] >= n_qubits_))
    throw Error(ErrorKind::validation, "gate qubit out of range");
  if (is_two_qubit(gate.kind) && gate.qubits[0] == gate.qubits[1])
    throw Error(ErrorKind::validation, "two-qubit gate needs distinct qubits");
  if (gate.angle.slot && !is_rotation(gate.kind))
    throw Error(ErrorKind::validation, "only rotations can be parameterized");
  Gate g = gate;
  if (!is_two_qubit(g.kind)) g.qubits[1] = g.qubits[0];
  if (g.angle.slot) n_parameters_ = std::max(n_parameters_, *g.angle.slot + 1);
  gates_.push_back(g);
  return *this;
}

Circuit& Circuit::append(const Circuit& other, std::size_t slot_offset) {
  if (other.n_qubits_ != n_qubits_) throw Error(ErrorKind::dimension, "appending a circuit of different width");
  for (Gate g : other.gates_) {
    if (g.angle.slot) g.angle.slot = *g.angle.slot + slot_offset;
    add(g);
  }
  if (other.n_parameters_ > 0) n_parameters_ = std::max(n_parameters_, other.n_parameters_ + slot_offset);
  return *this;
}

void Circuit::set_n_parameters(std::size_t n) { n_parameters_ = std::max(n_parameters_, n); }

bool Circuit::all_parameters_referenced() const {
  std::vector<bool> seen(n_parameters_, false);
  for (const auto& g : gates_)
    if (g.angle.slot) seen[*g.angle.slot] = true;
  for (bool b : seen)
    if (!b) return false;
  return true;
}

std::string Circuit::dump() const {
  std::string out;
  for (const auto& g : gates_) {
    out += to_string(g.kind);
    out += ' ';
    out += std::to_string(g.qubits[0]);
    if (is_two_qubit(g.kind)) out += ',' + std::to_string(g.qubits[1]);
    if (is_rotation(g.kind)) {
      out += ' ';
      if (g.angle.slot) {
        out += "p[" + std::to_string(*g.angle.slot) + "]";
        if (g.angle.scale != 1.0) out += "*" + format_double(g.angle.scale);
      } else {
        out += format_double(g.angle.value);
      }
    }
    out += '\n';
  }
  return out;
}

}  // namespace h2vqe
