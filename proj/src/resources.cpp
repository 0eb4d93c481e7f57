#include "qeccat/resources.hpp"

#include <cmath>

#include "qeccat/errors.hpp"

namespace qeccat {

namespace {

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t out = 1;
  for (int i = 0; i < exp; ++i) out *= base;
  return out;
}

CodeFamily family_of(const std::vector<ProtocolId>& seq) {
  if (seq.empty()) throw EmptyPlan("empty protocol sequence");
  bool five = seq.front() == ProtocolId::FIVE;
  for (ProtocolId p : seq)
    if ((p == ProtocolId::FIVE) != five)
      throw MixedFamilies("sequence mixes three-qubit and five-qubit protocols");
  return five ? CodeFamily::five_qubit : CodeFamily::three_qubit;
}

void check_rate(double r) {
  if (!(r > 0.0) || r > 1.0)
    throw ParameterOutOfRange("per-gate accuracy must lie in (0, 1]");
}

}  // namespace

GateCounts gate_count_profile(ProtocolId p) {
  switch (p) {
    case ProtocolId::A: return {2, 3};
    case ProtocolId::B: return {4, 5};
    case ProtocolId::C: return {2, 5};
    case ProtocolId::D: return {4, 7};
    case ProtocolId::FIVE: return {15, 22};
  }
  throw UnsupportedProtocol("unknown protocol id");
}

std::int64_t qubit_count(CodeFamily family, int level) {
  if (level < 0) throw ParameterOutOfRange("level must be nonnegative");
  return ipow(family == CodeFamily::three_qubit ? 3 : 5, level);
}

GateTotals gate_counts(const std::vector<ProtocolId>& seq) {
  CodeFamily fam = family_of(seq);
  const std::int64_t b = fam == CodeFamily::three_qubit ? 3 : 5;
  const int levels = static_cast<int>(seq.size());
  GateTotals out;
  for (int k = 0; k < levels; ++k) {
    // level k+1 (innermost first) repeats across the outer blocks
    std::int64_t blocks = ipow(b, levels - 1 - k);
    GateCounts g = gate_count_profile(seq[static_cast<std::size_t>(k)]);
    out.encode += g.encode * blocks;
    out.decode += g.decode * blocks;
  }
  return out;
}

double accuracy_rate(const std::vector<ProtocolId>& seq, double r) {
  family_of(seq);
  check_rate(r);
  // Exponent counts one module per level, not the block totals.
  std::int64_t exponent = 0;
  for (ProtocolId p : seq) {
    GateCounts g = gate_count_profile(p);
    exponent += g.encode + g.decode;
  }
  return std::pow(r, static_cast<double>(exponent));
}

ResourceReport realized_fidelity_report(const ConcatPlan& plan, double r) {
  if (plan.records.empty()) throw EmptyPlan("plan has no levels");
  check_rate(r);

  ResourceReport rep;
  rep.family = plan.family;
  rep.gate_accuracy = r;
  rep.f0 = similarity(plan.initial).s_i;
  rep.F0 = rep.f0;  // no gates on the unencoded qubit
  rep.best_level = 0;
  rep.best_realized = rep.F0;

  std::vector<ProtocolId> seq;
  double prev_realized = rep.F0;
  for (const LevelRecord& rec : plan.records) {
    seq.push_back(rec.protocol);
    GateTotals totals = gate_counts(seq);
    LevelResources row;
    row.level = rec.level;
    row.protocol = rec.protocol;
    row.qubits = qubit_count(plan.family, rec.level);
    row.encode_gates = totals.encode;
    row.decode_gates = totals.decode;
    row.accuracy = accuracy_rate(seq, r);
    row.fidelity = rec.fidelity_after;
    row.realized_fidelity = row.accuracy * row.fidelity;
    row.fault_tolerant = row.realized_fidelity > prev_realized;
    prev_realized = row.realized_fidelity;
    if (row.realized_fidelity > rep.best_realized) {
      rep.best_realized = row.realized_fidelity;
      rep.best_level = row.level;
    }
    rep.levels.push_back(row);
  }
  return rep;
}

}  // namespace qeccat
