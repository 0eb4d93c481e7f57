#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "qeccat/codes.hpp"
#include "qeccat/planner.hpp"

namespace qeccat {

struct GateCounts {
  int encode = 0;
  int decode = 0;
};

// Per-protocol gate cost of one encode/decode round on one block.
GateCounts gate_count_profile(ProtocolId p);

// Physical qubits per logical qubit after `level` concatenations.
std::int64_t qubit_count(CodeFamily family, int level);

struct GateTotals {
  std::int64_t encode = 0;
  std::int64_t decode = 0;
};

// Total gates for a full round at depth seq.size(): level k of the sequence
// (innermost first) runs on b^(L-1-k) blocks of the outer levels.
GateTotals gate_counts(const std::vector<ProtocolId>& seq);

// Probability that every gate of one level-by-level round works, r per gate:
// R = r^(sum of per-level module costs n_e + n_d).
double accuracy_rate(const std::vector<ProtocolId>& seq, double r);

struct LevelResources {
  int level = 0;
  ProtocolId protocol = ProtocolId::A;
  std::int64_t qubits = 0;
  std::int64_t encode_gates = 0;
  std::int64_t decode_gates = 0;
  double accuracy = 1.0;          // R_l
  double fidelity = 0.0;          // f_l
  double realized_fidelity = 0.0; // F_l = R_l * f_l
  bool fault_tolerant = false;    // F_l > F_{l-1}
};

struct ResourceReport {
  CodeFamily family = CodeFamily::three_qubit;
  double gate_accuracy = 1.0;
  double f0 = 0.0;
  double F0 = 0.0;
  std::vector<LevelResources> levels;
  int best_level = 0;
  double best_realized = 0.0;
};

ResourceReport realized_fidelity_report(const ConcatPlan& plan, double r);

}  // namespace qeccat
