#pragma once

#include <Eigen/Dense>
#include <complex>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace qeccat {

using Complex = std::complex<double>;

enum class Pauli : std::uint8_t { I = 0, X = 1, Y = 2, Z = 3 };

char pauli_char(Pauli p);
Eigen::Matrix2cd pauli_matrix(Pauli p);

// n-qubit Pauli operator with an explicit i^k phase so products stay exact.
// Qubit 0 is the leftmost letter (most significant tensor factor).
class PauliString {
 public:
  explicit PauliString(std::vector<Pauli> letters, int phase_quarter = 0);

  static PauliString identity(int n);
  static PauliString single(Pauli p, int qubit, int n);
  static PauliString from_label(std::string_view label, int phase_quarter = 0);

  int size() const { return static_cast<int>(letters_.size()); }
  Pauli letter(int i) const { return letters_[static_cast<std::size_t>(i)]; }
  const std::vector<Pauli>& letters() const { return letters_; }
  // Phase exponent k in i^k, always in {0,1,2,3}.
  int phase_quarter() const { return phase_; }

  bool commutes_with(const PauliString& other) const;
  PauliString operator*(const PauliString& rhs) const;

  bool same_letters(const PauliString& other) const;
  bool is_identity_letters() const;
  int weight() const;

  std::string label() const;
  Eigen::MatrixXcd matrix() const;

 private:
  std::vector<Pauli> letters_;
  int phase_;
};

}  // namespace qeccat
