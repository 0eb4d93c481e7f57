#include "qeccat/planner.hpp"

#include "qeccat/errors.hpp"

namespace qeccat {

const char* to_string(CodeFamily f) {
  return f == CodeFamily::three_qubit ? "three_qubit" : "five_qubit";
}

ProtocolId classify(const SimilarityScores& s) {
  // Rules in order; they partition score space, so the first match is the
  // only match.
  if (s.s_y < s.s_x && s.s_x >= s.s_z) return ProtocolId::A;
  if (s.s_y < s.s_z && s.s_z > s.s_x) return ProtocolId::B;
  if (s.s_y >= s.s_z && s.s_z >= s.s_x) return ProtocolId::C;
  if (s.s_y >= s.s_x && s.s_x > s.s_z) return ProtocolId::D;
  throw Error("classifier rules failed to match");  // unreachable
}

std::vector<ProtocolId> ConcatPlan::sequence() const {
  std::vector<ProtocolId> s;
  s.reserve(records.size());
  for (const auto& r : records) s.push_back(r.protocol);
  return s;
}

namespace {

ConcatPlan run_levels(const QubitChannel& ch, CodeFamily family,
                      const std::vector<ProtocolId>* fixed, int levels) {
  ConcatPlan out;
  out.family = family;
  out.initial = ch;
  QubitChannel cur = ch;
  for (int l = 1; l <= levels; ++l) {
    LevelRecord rec;
    rec.level = l;
    rec.scores_before = similarity(cur);
    if (fixed)
      rec.protocol = (*fixed)[static_cast<std::size_t>(l - 1)];
    else
      rec.protocol = family == CodeFamily::five_qubit
                         ? ProtocolId::FIVE
                         : classify(rec.scores_before);
    LevelMapResult step = effective_channel_exact(rec.protocol, cur);
    cur = step.effective;
    rec.effective_after = step.effective;
    rec.fidelity_after = similarity(step.effective).s_i;
    out.records.push_back(std::move(rec));
  }
  return out;
}

}  // namespace

ConcatPlan plan(const QubitChannel& ch, int levels, CodeFamily family) {
  if (levels < 1) throw ZeroLevels("levels must be at least 1");
  return run_levels(ch, family, nullptr, levels);
}

ConcatPlan plan_with_sequence(const QubitChannel& ch,
                              const std::vector<ProtocolId>& seq) {
  if (seq.empty()) throw ZeroLevels("protocol sequence is empty");
  bool five = seq.front() == ProtocolId::FIVE;
  for (ProtocolId p : seq)
    if ((p == ProtocolId::FIVE) != five)
      throw MixedFamilies("sequence mixes three-qubit and five-qubit protocols");
  return run_levels(ch,
                    five ? CodeFamily::five_qubit : CodeFamily::three_qubit,
                    &seq, static_cast<int>(seq.size()));
}

}  // namespace qeccat
