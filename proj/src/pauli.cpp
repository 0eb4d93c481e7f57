#include "qeccat/pauli.hpp"

#include <array>

#include "qeccat/errors.hpp"

namespace qeccat {

namespace {

// letters_table[a][b] = product letter, phase_table[a][b] = k with
// sigma_a sigma_b = i^k sigma_c (XY = iZ, YX = -iZ, ...).
constexpr std::array<std::array<std::uint8_t, 4>, 4> kProductLetter = {{
    {0, 1, 2, 3},
    {1, 0, 3, 2},
    {2, 3, 0, 1},
    {3, 2, 1, 0},
}};
constexpr std::array<std::array<int, 4>, 4> kProductPhase = {{
    {0, 0, 0, 0},
    {0, 0, 1, 3},
    {0, 3, 0, 1},
    {0, 1, 3, 0},
}};

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Eigen::Matrix2cd pauli_matrix(Pauli p) {
  Eigen::Matrix2cd m;
  const Complex i(0.0, 1.0);
  switch (p) {
    case Pauli::I: m << 1, 0, 0, 1; break;
    case Pauli::X: m << 0, 1, 1, 0; break;
    case Pauli::Y: m << 0, -i, i, 0; break;
    case Pauli::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

PauliString::PauliString(std::vector<Pauli> letters, int phase_quarter)
    : letters_(std::move(letters)), phase_(((phase_quarter % 4) + 4) % 4) {}

PauliString PauliString::identity(int n) {
  return PauliString(std::vector<Pauli>(static_cast<std::size_t>(n), Pauli::I));
}

PauliString PauliString::single(Pauli p, int qubit, int n) {
  if (qubit < 0 || qubit >= n) throw LengthMismatch("qubit index out of range");
  std::vector<Pauli> ls(static_cast<std::size_t>(n), Pauli::I);
  ls[static_cast<std::size_t>(qubit)] = p;
  return PauliString(std::move(ls));
}

PauliString PauliString::from_label(std::string_view label, int phase_quarter) {
  std::vector<Pauli> ls;
  ls.reserve(label.size());
  for (char c : label) {
    switch (c) {
      case 'I': ls.push_back(Pauli::I); break;
      case 'X': ls.push_back(Pauli::X); break;
      case 'Y': ls.push_back(Pauli::Y); break;
      case 'Z': ls.push_back(Pauli::Z); break;
      default: throw LengthMismatch(std::string("bad pauli letter: ") + c);
    }
  }
  return PauliString(std::move(ls), phase_quarter);
}

bool PauliString::commutes_with(const PauliString& other) const {
  if (size() != other.size()) throw LengthMismatch("pauli length mismatch");
  int anti = 0;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    Pauli a = letters_[i], b = other.letters_[i];
    if (a != Pauli::I && b != Pauli::I && a != b) ++anti;
  }
  return anti % 2 == 0;
}

PauliString PauliString::operator*(const PauliString& rhs) const {
  if (size() != rhs.size()) throw LengthMismatch("pauli length mismatch");
  std::vector<Pauli> out(letters_.size());
  int phase = phase_ + rhs.phase_;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    auto a = static_cast<std::size_t>(letters_[i]);
    auto b = static_cast<std::size_t>(rhs.letters_[i]);
    out[i] = static_cast<Pauli>(kProductLetter[a][b]);
    phase += kProductPhase[a][b];
  }
  return PauliString(std::move(out), phase);
}

bool PauliString::same_letters(const PauliString& other) const {
  return letters_ == other.letters_;
}

bool PauliString::is_identity_letters() const {
  for (Pauli p : letters_)
    if (p != Pauli::I) return false;
  return true;
}

int PauliString::weight() const {
  int w = 0;
  for (Pauli p : letters_)
    if (p != Pauli::I) ++w;
  return w;
}

std::string PauliString::label() const {
  std::string s;
  s.reserve(letters_.size());
  for (Pauli p : letters_) s.push_back(pauli_char(p));
  return s;
}

Eigen::MatrixXcd PauliString::matrix() const {
  Eigen::MatrixXcd m = Eigen::MatrixXcd::Identity(1, 1);
  for (Pauli p : letters_) {
    Eigen::MatrixXcd next(m.rows() * 2, m.cols() * 2);
    const Eigen::Matrix2cd block = pauli_matrix(p);
    for (Eigen::Index r = 0; r < m.rows(); ++r)
      for (Eigen::Index c = 0; c < m.cols(); ++c)
        next.block(r * 2, c * 2, 2, 2) = m(r, c) * block;
    m.swap(next);
  }
  const Complex i(0.0, 1.0);
  Complex ph = 1.0;
  for (int k = 0; k < phase_; ++k) ph *= i;
  return ph * m;
}

}  // namespace qeccat
