#pragma once

#include "qeccat/channel.hpp"
#include "qeccat/codes.hpp"

namespace qeccat {

struct LevelMapResult {
  ProtocolId protocol;
  QubitChannel effective;
  PauliMixture pauli_view;
  bool lossless_pauli = false;
};

// Closed-form one-level map of a Pauli mixture under protocols A-D.
PauliMixture pauli_level_map(ProtocolId p, const PauliMixture& m);

// Independent route: exhaustive 4^n enumeration of Pauli error patterns,
// classifying each corrected residual. Accepts FIVE as well.
PauliMixture pauli_enumeration_oracle(ProtocolId p, const PauliMixture& m);

// Exact effective logical channel of one encode/noise/correct/decode round:
// Kraus family { V^dag C_s P_s (E_i1 x ... x E_in) V } accumulated into a
// Choi matrix and reduced to canonical Kraus form.
LevelMapResult effective_channel_exact(ProtocolId p, const QubitChannel& ch);

LevelMapResult five_qubit_level_map(const QubitChannel& ch);

}  // namespace qeccat
