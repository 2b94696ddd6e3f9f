#include "h2vqe/pauli.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <map>
#include <sstream>

#include "h2vqe/error.hpp"

namespace h2vqe {
namespace {

constexpr std::array<Complex, 4> kIPowers{Complex{1, 0}, Complex{0, 1}, Complex{-1, 0}, Complex{0, -1}};

std::uint64_t register_mask(std::size_t n) { return n >= 64 ? ~0ULL : ((1ULL << n) - 1ULL); }

void require_same_register(std::size_t a, std::size_t b) {
  if (a != b)
    throw Error(ErrorKind::dimension,
                "qubit count mismatch: " + std::to_string(a) + " vs " + std::to_string(b));
}

std::string format_double(double v) {
  if (v == 0.0) v = 0.0;
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), v);
  return std::string(buf, res.ptr);
}

double parse_double(std::string_view token) {
  double v = 0.0;
  auto res = std::from_chars(token.data(), token.data() + token.size(), v);
  if (res.ec != std::errc() || res.ptr != token.data() + token.size())
    throw Error(ErrorKind::validation, "malformed coefficient '" + std::string(token) + "'");
  return v;
}

}  // namespace

PauliString::PauliString(std::size_t n_qubits, std::uint64_t x_mask, std::uint64_t z_mask)
    : n_qubits_(n_qubits), x_(x_mask), z_(z_mask) {
  check_size();
  if (((x_ | z_) & ~register_mask(n_qubits_)) != 0)
    throw Error(ErrorKind::dimension, "Pauli masks exceed the register");
}

void PauliString::check_size() const {
  if (n_qubits_ > 64) throw Error(ErrorKind::resource, "Pauli strings are limited to 64 qubits");
}

PauliString PauliString::from_letters(std::string_view letters) {
  std::uint64_t x = 0, z = 0;
  for (std::size_t q = 0; q < letters.size(); ++q) {
    switch (letters[q]) {
      case 'I': break;
      case 'X': x |= 1ULL << q; break;
      case 'Y': x |= 1ULL << q; z |= 1ULL << q; break;
      case 'Z': z |= 1ULL << q; break;
      default: throw Error(ErrorKind::validation, std::string("bad Pauli letter '") + letters[q] + "'");
    }
  }
  return PauliString(letters.size(), x, z);
}

PauliString PauliString::single(std::size_t n_qubits, std::size_t qubit, char letter) {
  if (qubit >= n_qubits) throw Error(ErrorKind::dimension, "qubit index out of range");
  std::string s(n_qubits, 'I');
  s[qubit] = letter;
  return from_letters(s);
}

char PauliString::letter(std::size_t qubit) const {
  const bool x = (x_ >> qubit) & 1ULL;
  const bool z = (z_ >> qubit) & 1ULL;
  return x ? (z ? 'Y' : 'X') : (z ? 'Z' : 'I');
}

std::string PauliString::letters() const {
  std::string s(n_qubits_, 'I');
  for (std::size_t q = 0; q < n_qubits_; ++q) s[q] = letter(q);
  return s;
}

PauliString PauliString::restrict_to(std::uint64_t keep) const {
  std::uint64_t x = 0, z = 0;
  std::size_t out = 0;
  for (std::size_t q = 0; q < n_qubits_; ++q) {
    if (!((keep >> q) & 1ULL)) continue;
    x |= ((x_ >> q) & 1ULL) << out;
    z |= ((z_ >> q) & 1ULL) << out;
    ++out;
  }
  return PauliString(out, x, z);
}

std::pair<Complex, PauliString> multiply(const PauliString& a, const PauliString& b) {
  require_same_register(a.n_qubits(), b.n_qubits());
  // i^{|x1 z1|} X^x1 Z^z1 * i^{|x2 z2|} X^x2 Z^z2
  //   = i^{|x1 z1| + |x2 z2| + 2|z1 x2|} X^x Z^z, and X^x Z^z = i^{-|x z|} P(x, z).
  const std::uint64_t x = a.x_mask() ^ b.x_mask();
  const std::uint64_t z = a.z_mask() ^ b.z_mask();
  const int power = std::popcount(a.x_mask() & a.z_mask()) + std::popcount(b.x_mask() & b.z_mask()) +
                    2 * std::popcount(a.z_mask() & b.x_mask()) - std::popcount(x & z);
  return {kIPowers[((power % 4) + 4) % 4], PauliString(a.n_qubits(), x, z)};
}

bool commutes(const PauliString& a, const PauliString& b) {
  require_same_register(a.n_qubits(), b.n_qubits());
  return (std::popcount(a.x_mask() & b.z_mask()) + std::popcount(a.z_mask() & b.x_mask())) % 2 == 0;
}

PauliSum::PauliSum(std::size_t n_qubits, std::vector<PauliTerm> terms)
    : n_qubits_(n_qubits), terms_(std::move(terms)) {
  for (const auto& t : terms_) {
    require_same_register(n_qubits_, t.string.n_qubits());
    if (!std::isfinite(t.coefficient.real()) || !std::isfinite(t.coefficient.imag()))
      throw Error(ErrorKind::validation, "non-finite Pauli coefficient");
  }
}

PauliSum PauliSum::identity(std::size_t n_qubits, Complex coefficient) {
  return PauliSum(n_qubits, {{coefficient, PauliString(n_qubits)}});
}

PauliSum PauliSum::from_string(const PauliString& s, Complex coefficient) {
  return PauliSum(s.n_qubits(), {{coefficient, s}});
}

void PauliSum::add(Complex coefficient, const PauliString& s) {
  require_same_register(n_qubits_, s.n_qubits());
  if (!std::isfinite(coefficient.real()) || !std::isfinite(coefficient.imag()))
    throw Error(ErrorKind::validation, "non-finite Pauli coefficient");
  terms_.push_back({coefficient, s});
}

Complex PauliSum::coefficient_of(const PauliString& s) const {
  Complex sum = 0.0;
  for (const auto& t : terms_)
    if (t.string == s) sum += t.coefficient;
  return sum;
}

Complex PauliSum::identity_coefficient() const { return coefficient_of(PauliString(n_qubits_)); }

PauliSum PauliSum::adjoint() const {
  PauliSum out(*this);
  for (auto& t : out.terms_) t.coefficient = std::conj(t.coefficient);
  return out;
}

PauliSum& PauliSum::operator+=(const PauliSum& other) {
  require_same_register(n_qubits_, other.n_qubits_);
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

PauliSum& PauliSum::operator-=(const PauliSum& other) {
  require_same_register(n_qubits_, other.n_qubits_);
  for (const auto& t : other.terms_) terms_.push_back({-t.coefficient, t.string});
  return *this;
}

PauliSum& PauliSum::operator*=(Complex scale) {
  for (auto& t : terms_) t.coefficient *= scale;
  return *this;
}

PauliSum operator*(const PauliSum& a, const PauliSum& b) {
  require_same_register(a.n_qubits_, b.n_qubits_);
  PauliSum out(a.n_qubits_);
  out.terms_.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_)
    for (const auto& tb : b.terms_) {
      auto [phase, product] = multiply(ta.string, tb.string);
      out.terms_.push_back({phase * ta.coefficient * tb.coefficient, product});
    }
  return out;
}

bool operator==(const PauliSum& a, const PauliSum& b) {
  if (a.n_qubits_ != b.n_qubits_ || a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i)
    if (a.terms_[i].string != b.terms_[i].string || a.terms_[i].coefficient != b.terms_[i].coefficient)
      return false;
  return true;
}

PauliSum simplify(const PauliSum& s, double threshold) {
  if (!(threshold >= 0.0)) throw Error(ErrorKind::validation, "threshold must be non-negative");
  std::map<PauliString, Complex> merged;
  for (const auto& t : s.terms()) merged[t.string] += t.coefficient;
  std::vector<PauliTerm> terms;
  terms.reserve(merged.size());
  for (const auto& [str, c] : merged)
    if (std::abs(c) >= threshold && c != Complex{0.0, 0.0}) terms.push_back({c, str});
  return PauliSum(s.n_qubits(), std::move(terms));
}

ComplexMatrix to_matrix(const PauliSum& s) {
  const std::size_t n = s.n_qubits();
  if (n > kDenseQubitCap)
    throw Error(ErrorKind::resource, "dense realization capped at " + std::to_string(kDenseQubitCap) + " qubits");
  const std::size_t dim = std::size_t{1} << n;
  ComplexMatrix m(dim, dim);
  for (const auto& t : s.terms()) {
    const std::uint64_t x = t.string.x_mask(), z = t.string.z_mask();
    const Complex base = t.coefficient * kIPowers[std::popcount(x & z) % 4];
    for (std::size_t j = 0; j < dim; ++j) {
      const bool negative = std::popcount(z & j) & 1;
      m(j ^ x, j) += negative ? -base : base;
    }
  }
  return m;
}

bool is_hermitian(const PauliSum& s, double tol) {
  const PauliSum merged = simplify(s, 0.0);
  for (const auto& t : merged.terms())
    if (std::abs(t.coefficient.imag()) >= tol) return false;
  return true;
}

std::string to_text(const PauliSum& s) {
  std::string out;
  for (const auto& t : s.terms()) {
    out += format_double(t.coefficient.real());
    out += ' ';
    out += format_double(t.coefficient.imag());
    out += ' ';
    out += t.string.letters();
    out += '\n';
  }
  return out;
}

PauliSum from_text(std::string_view text) {
  std::vector<PauliTerm> terms;
  std::size_t n_qubits = 0;
  bool first = true;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    std::string re, im, letters, extra;
    if (!(fields >> re >> im >> letters) || (fields >> extra))
      throw Error(ErrorKind::validation, "malformed Pauli line " + std::to_string(line_no));
    auto str = PauliString::from_letters(letters);
    if (first) {
      n_qubits = str.n_qubits();
      first = false;
    }
    require_same_register(n_qubits, str.n_qubits());
    terms.push_back({Complex{parse_double(re), parse_double(im)}, str});
  }
  return PauliSum(n_qubits, std::move(terms));
}

}  // namespace h2vqe
