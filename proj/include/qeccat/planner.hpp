#pragma once

#include <vector>

#include "qeccat/channel.hpp"
#include "qeccat/codes.hpp"
#include "qeccat/level_map.hpp"

namespace qeccat {

enum class CodeFamily { three_qubit, five_qubit };

const char* to_string(CodeFamily f);

// Picks the protocol whose corrected error type dominates. The four rules
// partition score space, so exactly one matches.
ProtocolId classify(const SimilarityScores& s);

struct LevelRecord {
  int level = 0;
  SimilarityScores scores_before;
  ProtocolId protocol = ProtocolId::A;
  QubitChannel effective_after = QubitChannel::identity();
  double fidelity_after = 0.0;
};

struct ConcatPlan {
  CodeFamily family = CodeFamily::three_qubit;
  QubitChannel initial = QubitChannel::identity();
  std::vector<LevelRecord> records;

  std::vector<ProtocolId> sequence() const;
};

// Adaptive concatenation: at each level classify the current effective
// channel, apply the chosen protocol exactly, recurse on the result.
// five_qubit always applies FIVE. levels must be >= 1.
ConcatPlan plan(const QubitChannel& ch, int levels, CodeFamily family);

// Same propagation but with a caller-fixed protocol sequence (one family).
ConcatPlan plan_with_sequence(const QubitChannel& ch,
                              const std::vector<ProtocolId>& seq);

}  // namespace qeccat
