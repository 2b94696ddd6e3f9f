#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "h2vqe/linalg.hpp"

namespace h2vqe {

/// Pauli threshold used wherever small coefficients are pruned.
inline constexpr double kPauliThreshold = 1e-8;

/// Largest register to_matrix will realize densely.
inline constexpr std::size_t kDenseQubitCap = 12;

/// Tensor product of single-qubit Paulis in symplectic form. Qubit q carries
/// (x, z) bits: I=(0,0), Z=(0,1), X=(1,0), Y=(1,1). The operator represented
/// is i^{|x&z|} X^x Z^z, so Y = iXZ.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n_qubits) : n_qubits_(n_qubits) { check_size(); }
  PauliString(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask);

  /// Parses letters, qubit 0 leftmost, e.g. "XIZY".
  static PauliString from_letters(std::string_view letters);
  /// Single letter on one qubit of an n-qubit register.
  static PauliString single(std::size_t n_qubits, std::size_t qubit, char letter);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  std::uint64_t x_mask() const noexcept { return x_; }
  std::uint64_t z_mask() const noexcept { return z_; }

  char letter(std::size_t qubit) const;
  std::string letters() const;
  bool is_identity() const noexcept { return (x_ | z_) == 0; }
  std::uint64_t support() const noexcept { return x_ | z_; }

  /// Same string restricted to the qubits whose bits in `keep` are set,
  /// packed toward qubit 0.
  PauliString restrict_to(std::uint64_t keep) const;

  friend bool operator==(const PauliString&, const PauliString&) = default;
  /// Canonical order: (n_qubits, z_mask, x_mask) lexicographic.
  friend std::strong_ordering operator<=>(const PauliString& a, const PauliString& b) {
    if (auto c = a.n_qubits_ <=> b.n_qubits_; c != 0) return c;
    if (auto c = a.z_ <=> b.z_; c != 0) return c;
    return a.x_ <=> b.x_;
  }

 private:
  void check_size() const;

  std::size_t n_qubits_ = 0;
  std::uint64_t x_ = 0;
  std::uint64_t z_ = 0;
};

/// Product a*b = phase * product, phase in {1, i, -1, -i}. Throws dimension on
/// mismatched registers.
std::pair<Complex, PauliString> multiply(const PauliString& a, const PauliString& b);

/// True when the strings commute.
bool commutes(const PauliString& a, const PauliString& b);

struct PauliTerm {
  Complex coefficient;
  PauliString string;
};

/// Weighted sum of Pauli strings on a fixed register.
class PauliSum {
 public:
  PauliSum() = default;
  explicit PauliSum(std::size_t n_qubits) : n_qubits_(n_qubits) {}
  PauliSum(std::size_t n_qubits, std::vector<PauliTerm> terms);

  static PauliSum identity(std::size_t n_qubits, Complex coefficient = 1.0);
  static PauliSum from_string(const PauliString& s, Complex coefficient = 1.0);

  std::size_t n_qubits() const noexcept { return n_qubits_; }
  const std::vector<PauliTerm>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool empty() const noexcept { return terms_.empty(); }

  void add(Complex coefficient, const PauliString& s);
  /// Coefficient of `s` summed over all matching terms.
  Complex coefficient_of(const PauliString& s) const;
  /// Coefficient of the identity string.
  Complex identity_coefficient() const;

  PauliSum adjoint() const;

  PauliSum& operator+=(const PauliSum& other);
  PauliSum& operator-=(const PauliSum& other);
  PauliSum& operator*=(Complex scale);

  friend PauliSum operator+(PauliSum a, const PauliSum& b) { return a += b; }
  friend PauliSum operator-(PauliSum a, const PauliSum& b) { return a -= b; }
  friend PauliSum operator*(PauliSum a, Complex s) { return a *= s; }
  friend PauliSum operator*(Complex s, PauliSum a) { return a *= s; }
  /// Operator product, unsimplified (|a| * |b| terms).
  friend PauliSum operator*(const PauliSum& a, const PauliSum& b);

  friend bool operator==(const PauliSum& a, const PauliSum& b);

 private:
  std::size_t n_qubits_ = 0;
  std::vector<PauliTerm> terms_;
};

/// Combines like strings and drops terms with |coefficient| < threshold.
/// Output is sorted in canonical string order.
PauliSum simplify(const PauliSum& s, double threshold = kPauliThreshold);

/// Dense 2^n x 2^n matrix; basis index bit q is qubit q. Throws resource
/// above kDenseQubitCap qubits.
ComplexMatrix to_matrix(const PauliSum& s);

/// Every simplified coefficient has |imag| < tol.
bool is_hermitian(const PauliSum& s, double tol = 1e-10);

/// Text form: one `<re> <im> <letters>` line per term, qubit 0 leftmost,
/// shortest round-trip decimal for both coefficient parts.
std::string to_text(const PauliSum& s);
PauliSum from_text(std::string_view text);

}  // namespace h2vqe
