#include "qeccat/codes.hpp"

#include <string>

#include "qeccat/errors.hpp"

namespace qeccat {

const char* to_string(ProtocolId p) {
  switch (p) {
    case ProtocolId::A: return "A";
    case ProtocolId::B: return "B";
    case ProtocolId::C: return "C";
    case ProtocolId::D: return "D";
    case ProtocolId::FIVE: return "FIVE";
  }
  return "?";
}

ProtocolId protocol_from_string(std::string_view name) {
  if (name == "A") return ProtocolId::A;
  if (name == "B") return ProtocolId::B;
  if (name == "C") return ProtocolId::C;
  if (name == "D") return ProtocolId::D;
  if (name == "FIVE" || name == "five") return ProtocolId::FIVE;
  throw UnsupportedProtocol("unknown protocol: " + std::string(name));
}

bool is_three_qubit(ProtocolId p) { return p != ProtocolId::FIVE; }

CorrectionTable::CorrectionTable(std::vector<PauliString> by_syndrome)
    : table_(std::move(by_syndrome)) {}

const PauliString& CorrectionTable::correction(Syndrome s) const {
  if (s >= table_.size()) throw NontrivialSyndrome("syndrome out of range");
  return table_[s];
}

Syndrome syndrome_of(const StabilizerCode& code, const PauliString& error) {
  Syndrome s = 0;
  for (std::size_t j = 0; j < code.generators.size(); ++j)
    if (!error.commutes_with(code.generators[j])) s |= 1u << j;
  return s;
}

LogicalClass logical_class(const StabilizerCode& code,
                           const PauliString& residual) {
  if (syndrome_of(code, residual) != 0)
    throw NontrivialSyndrome("residual operator has a nonzero syndrome");
  bool x_part = !residual.commutes_with(code.logical_z);
  bool z_part = !residual.commutes_with(code.logical_x);
  if (x_part && z_part) return LogicalClass::Y;
  if (x_part) return LogicalClass::X;
  if (z_part) return LogicalClass::Z;
  return LogicalClass::I;
}

Eigen::MatrixXcd encode_isometry(const StabilizerCode& code) {
  Eigen::MatrixXcd v(code.logical_zero.size(), 2);
  v.col(0) = code.logical_zero;
  v.col(1) = code.logical_one;
  return v;
}

namespace {

// Codewords from the stabilizer projector: |0> = normalize(prod (I+G)/2 |seed>)
// with seed |0...0>, |1> = X_L |0>.
void fill_codewords(StabilizerCode& code) {
  const Eigen::Index dim = Eigen::Index(1) << code.n;
  Eigen::VectorXcd seed = Eigen::VectorXcd::Zero(dim);
  seed(0) = 1.0;
  Eigen::VectorXcd v = seed;
  for (const auto& g : code.generators)
    v = 0.5 * (v + g.matrix() * v);
  double norm = v.norm();
  if (norm < 1e-12)
    throw InvalidChannel("stabilizer projector annihilates the seed state");
  code.logical_zero = v / norm;
  code.logical_one = code.logical_x.matrix() * code.logical_zero;
}

StabilizerCode make_bit_flip_code() {
  StabilizerCode c;
  c.n = 3;
  c.generators = {PauliString::from_label("ZZI"),
                  PauliString::from_label("IZZ")};
  c.logical_x = PauliString::from_label("XXX");
  c.logical_z = PauliString::from_label("ZII");
  fill_codewords(c);
  return c;
}

StabilizerCode make_phase_flip_code() {
  StabilizerCode c;
  c.n = 3;
  c.generators = {PauliString::from_label("XXI"),
                  PauliString::from_label("IXX")};
  c.logical_x = PauliString::from_label("XII");
  c.logical_z = PauliString::from_label("ZZZ");
  fill_codewords(c);
  return c;
}

StabilizerCode make_five_qubit_code() {
  StabilizerCode c;
  c.n = 5;
  c.generators = {PauliString::from_label("XZZXI"),
                  PauliString::from_label("IXZZX"),
                  PauliString::from_label("XIXZZ"),
                  PauliString::from_label("ZXIXZ")};
  c.logical_x = PauliString::from_label("XXXXX");
  c.logical_z = PauliString::from_label("ZZZZZ");
  fill_codewords(c);
  return c;
}

// Correction set = identity plus one fixed single-qubit letter per qubit
// (three-qubit codes), or all fifteen weight-one errors (five-qubit code).
CorrectionTable make_table(const StabilizerCode& code,
                           const std::vector<Pauli>& kinds) {
  std::size_t slots = std::size_t(1) << code.generators.size();
  std::vector<PauliString> table(slots, PauliString::identity(code.n));
  std::vector<bool> filled(slots, false);
  filled[0] = true;
  for (int q = 0; q < code.n; ++q) {
    for (Pauli kind : kinds) {
      PauliString corr = PauliString::single(kind, q, code.n);
      Syndrome s = syndrome_of(code, corr);
      if (filled[s])
        throw InvalidChannel("correction table collision at syndrome " +
                             std::to_string(s));
      table[s] = corr;
      filled[s] = true;
    }
  }
  for (bool f : filled)
    if (!f) throw InvalidChannel("correction table has an unreachable syndrome");
  return CorrectionTable(std::move(table));
}

Protocol make_protocol(ProtocolId id) {
  switch (id) {
    case ProtocolId::A: {
      StabilizerCode c = make_bit_flip_code();
      CorrectionTable t = make_table(c, {Pauli::X});
      return Protocol{id, std::move(c), std::move(t)};
    }
    case ProtocolId::B: {
      StabilizerCode c = make_phase_flip_code();
      CorrectionTable t = make_table(c, {Pauli::Z});
      return Protocol{id, std::move(c), std::move(t)};
    }
    case ProtocolId::C: {
      StabilizerCode c = make_bit_flip_code();
      CorrectionTable t = make_table(c, {Pauli::Y});
      return Protocol{id, std::move(c), std::move(t)};
    }
    case ProtocolId::D: {
      StabilizerCode c = make_phase_flip_code();
      CorrectionTable t = make_table(c, {Pauli::Y});
      return Protocol{id, std::move(c), std::move(t)};
    }
    case ProtocolId::FIVE: {
      StabilizerCode c = make_five_qubit_code();
      CorrectionTable t = make_table(c, {Pauli::X, Pauli::Y, Pauli::Z});
      return Protocol{id, std::move(c), std::move(t)};
    }
  }
  throw UnsupportedProtocol("unknown protocol id");
}

}  // namespace

const Protocol& build_protocol(ProtocolId id) {
  static const Protocol a = make_protocol(ProtocolId::A);
  static const Protocol b = make_protocol(ProtocolId::B);
  static const Protocol c = make_protocol(ProtocolId::C);
  static const Protocol d = make_protocol(ProtocolId::D);
  static const Protocol five = make_protocol(ProtocolId::FIVE);
  switch (id) {
    case ProtocolId::A: return a;
    case ProtocolId::B: return b;
    case ProtocolId::C: return c;
    case ProtocolId::D: return d;
    case ProtocolId::FIVE: return five;
  }
  throw UnsupportedProtocol("unknown protocol id");
}

}  // namespace qeccat
