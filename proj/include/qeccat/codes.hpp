#pragma once

#include <Eigen/Dense>
#include <cstdint>
#include <vector>

#include "qeccat/pauli.hpp"

namespace qeccat {

// The five protocols: A/B are the two three-qubit codes with corrections in
// their native basis, C/D the same codes with Y corrections, FIVE the
// five-qubit single-error-correcting code.
enum class ProtocolId { A, B, C, D, FIVE };

const char* to_string(ProtocolId p);
ProtocolId protocol_from_string(std::string_view name);
bool is_three_qubit(ProtocolId p);

struct StabilizerCode {
  int n = 0;
  std::vector<PauliString> generators;
  Eigen::VectorXcd logical_zero;
  Eigen::VectorXcd logical_one;
  PauliString logical_x;
  PauliString logical_z;

  StabilizerCode() : logical_x({}), logical_z({}) {}
};

// Bit j set <=> the error anticommutes with generator j.
using Syndrome = std::uint32_t;

class CorrectionTable {
 public:
  explicit CorrectionTable(std::vector<PauliString> by_syndrome);

  const PauliString& correction(Syndrome s) const;
  std::size_t size() const { return table_.size(); }

 private:
  std::vector<PauliString> table_;
};

struct Protocol {
  ProtocolId id;
  StabilizerCode code;
  CorrectionTable table;
};

// Cached immutable protocol definitions.
const Protocol& build_protocol(ProtocolId id);

// 2^n x 2 isometry mapping the logical qubit into the codespace.
Eigen::MatrixXcd encode_isometry(const StabilizerCode& code);

Syndrome syndrome_of(const StabilizerCode& code, const PauliString& error);

enum class LogicalClass { I, X, Y, Z };

// Classifies a syndrome-free residual operator by its action on the
// codespace. Throws NontrivialSyndrome if the residual has a syndrome.
LogicalClass logical_class(const StabilizerCode& code,
                           const PauliString& residual);

}  // namespace qeccat
