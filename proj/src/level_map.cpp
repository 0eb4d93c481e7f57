#include "qeccat/level_map.hpp"

#include <array>
#include <cmath>

#include "qeccat/errors.hpp"

namespace qeccat {

namespace {

using Mix = std::array<double, 4>;  // f, px, py, pz

// One level of the bit-flip-corrected code on a Pauli mixture.
Mix map_bit_flip(const Mix& m) {
  const double f = m[0], px = m[1], py = m[2], pz = m[3];
  double f1 = f * f * f + 3 * f * f * px + 3 * f * pz * pz +
              6 * f * py * pz + 3 * px * pz * pz;
  double p1x = px * px * px + 3 * px * px * f + 3 * px * py * py +
               6 * px * py * pz + 3 * f * py * py;
  double p1y = py * py * py + 3 * py * py * pz + 3 * py * px * px +
               6 * f * py * px + 3 * pz * px * px;
  double p1z = pz * pz * pz + 3 * pz * pz * py + 3 * pz * f * f +
               6 * f * px * pz + 3 * py * f * f;
  return {f1, p1x, p1y, p1z};
}

// One level of the phase-flip-corrected code.
Mix map_phase_flip(const Mix& m) {
  const double f = m[0], px = m[1], py = m[2], pz = m[3];
  double f1 = f * f * f + 3 * f * f * pz + 3 * f * px * px +
              6 * f * py * px + 3 * pz * px * px;
  double p1x = px * px * px + 3 * px * px * py + 3 * px * f * f +
               6 * px * pz * f + 3 * py * f * f;
  double p1y = py * py * py + 3 * py * py * px + 3 * py * pz * pz +
               6 * py * f * pz + 3 * px * pz * pz;
  double p1z = pz * pz * pz + 3 * pz * pz * f + 3 * pz * py * py +
               6 * pz * px * py + 3 * f * py * py;
  return {f1, p1x, p1y, p1z};
}

void check_normalized(const PauliMixture& m) {
  if (std::abs(m.sum() - 1.0) > 1e-9)
    throw NotNormalized("pauli mixture not normalized");
}

// Cached per-protocol decode maps D_s = V^dag C_s P_s, one per syndrome.
struct DecoderSet {
  Eigen::MatrixXcd isometry;               // 2^n x 2
  std::vector<Eigen::MatrixXcd> decoders;  // 2 x 2^n each
};

DecoderSet make_decoder_set(ProtocolId id) {
  const Protocol& proto = build_protocol(id);
  const StabilizerCode& code = proto.code;
  const Eigen::Index dim = Eigen::Index(1) << code.n;
  DecoderSet out;
  out.isometry = encode_isometry(code);
  Eigen::MatrixXcd vdag = out.isometry.adjoint();
  for (Syndrome s = 0; s < proto.table.size(); ++s) {
    Eigen::MatrixXcd p = Eigen::MatrixXcd::Identity(dim, dim);
    for (std::size_t j = 0; j < code.generators.size(); ++j) {
      double sign = ((s >> j) & 1u) ? -1.0 : 1.0;
      p = p * 0.5 *
          (Eigen::MatrixXcd::Identity(dim, dim) +
           sign * code.generators[j].matrix());
    }
    out.decoders.push_back(vdag * proto.table.correction(s).matrix() * p);
  }
  return out;
}

const DecoderSet& decoder_set(ProtocolId id) {
  static const DecoderSet a = make_decoder_set(ProtocolId::A);
  static const DecoderSet b = make_decoder_set(ProtocolId::B);
  static const DecoderSet c = make_decoder_set(ProtocolId::C);
  static const DecoderSet d = make_decoder_set(ProtocolId::D);
  static const DecoderSet five = make_decoder_set(ProtocolId::FIVE);
  switch (id) {
    case ProtocolId::A: return a;
    case ProtocolId::B: return b;
    case ProtocolId::C: return c;
    case ProtocolId::D: return d;
    case ProtocolId::FIVE: return five;
  }
  throw UnsupportedProtocol("unknown protocol id");
}

// In-place application of a 2x2 operator to qubit q (0 = leftmost) of every
// column of a 2^n x m matrix.
void apply_single_qubit(Eigen::MatrixXcd& u, const Eigen::Matrix2cd& e, int q,
                        int n) {
  const Eigen::Index dim = u.rows();
  const Eigen::Index stride = Eigen::Index(1) << (n - 1 - q);
  for (Eigen::Index c = 0; c < u.cols(); ++c) {
    for (Eigen::Index base = 0; base < dim; base += 2 * stride) {
      for (Eigen::Index off = 0; off < stride; ++off) {
        const Eigen::Index i0 = base + off;
        const Eigen::Index i1 = i0 + stride;
        const Complex a = u(i0, c);
        const Complex b = u(i1, c);
        u(i0, c) = e(0, 0) * a + e(0, 1) * b;
        u(i1, c) = e(1, 0) * a + e(1, 1) * b;
      }
    }
  }
}

}  // namespace

PauliMixture pauli_level_map(ProtocolId p, const PauliMixture& m) {
  check_normalized(m);
  const Mix in{m.f, m.px, m.py, m.pz};
  Mix out;
  switch (p) {
    case ProtocolId::A:
      out = map_bit_flip(in);
      break;
    case ProtocolId::B:
      out = map_phase_flip(in);
      break;
    case ProtocolId::C: {
      Mix o = map_bit_flip({in[0], in[2], in[1], in[3]});
      out = {o[0], o[2], o[1], o[3]};
      break;
    }
    case ProtocolId::D: {
      Mix o = map_phase_flip({in[0], in[1], in[3], in[2]});
      out = {o[0], o[1], o[3], o[2]};
      break;
    }
    case ProtocolId::FIVE:
      throw UnsupportedProtocol(
          "no closed-form mixture map for the five-qubit protocol");
  }
  return PauliMixture::make(out[0], out[1], out[2], out[3]);
}

PauliMixture pauli_enumeration_oracle(ProtocolId p, const PauliMixture& m) {
  check_normalized(m);
  const Protocol& proto = build_protocol(p);
  const int n = proto.code.n;
  const double probs[4] = {m.f, m.px, m.py, m.pz};
  const Pauli letters[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  double out[4] = {0.0, 0.0, 0.0, 0.0};  // indexed by LogicalClass

  std::vector<int> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    double w = 1.0;
    for (int q = 0; q < n; ++q) w *= probs[idx[static_cast<std::size_t>(q)]];
    if (w != 0.0) {
      std::vector<Pauli> ls(static_cast<std::size_t>(n));
      for (int q = 0; q < n; ++q)
        ls[static_cast<std::size_t>(q)] = letters[idx[static_cast<std::size_t>(q)]];
      PauliString err(std::move(ls));
      Syndrome s = syndrome_of(proto.code, err);
      PauliString residual = proto.table.correction(s) * err;
      out[static_cast<int>(logical_class(proto.code, residual))] += w;
    }
    int q = n - 1;
    while (q >= 0 && ++idx[static_cast<std::size_t>(q)] == 4) {
      idx[static_cast<std::size_t>(q)] = 0;
      --q;
    }
    if (q < 0) break;
  }
  return PauliMixture::make(out[0], out[1], out[2], out[3]);
}

LevelMapResult effective_channel_exact(ProtocolId p, const QubitChannel& ch) {
  const DecoderSet& dec = decoder_set(p);
  const Protocol& proto = build_protocol(p);
  const int n = proto.code.n;
  const auto& ops = ch.kraus();
  const int k = static_cast<int>(ops.size());

  // Per-syndrome Choi partial sums, reduced in syndrome order so the
  // accumulation is deterministic.
  std::vector<Eigen::Matrix4cd> parts(dec.decoders.size(),
                                      Eigen::Matrix4cd::Zero());
  std::vector<int> tup(static_cast<std::size_t>(n), 0);
  Eigen::MatrixXcd u;
  while (true) {
    u = dec.isometry;
    for (int q = 0; q < n; ++q)
      apply_single_qubit(u, ops[static_cast<std::size_t>(
                                tup[static_cast<std::size_t>(q)])],
                         q, n);
    for (std::size_t s = 0; s < dec.decoders.size(); ++s) {
      Eigen::Matrix2cd kr = dec.decoders[s] * u;
      Eigen::Vector4cd v;
      v << kr(0, 0), kr(0, 1), kr(1, 0), kr(1, 1);
      parts[s].noalias() += v * v.adjoint();
    }
    int q = n - 1;
    while (q >= 0 && ++tup[static_cast<std::size_t>(q)] == k) {
      tup[static_cast<std::size_t>(q)] = 0;
      --q;
    }
    if (q < 0) break;
  }
  Eigen::Matrix4cd total = Eigen::Matrix4cd::Zero();
  for (const auto& part : parts) total += part;

  LevelMapResult res{p, from_choi(total), PauliMixture{}, false};
  PauliProjection proj = pauli_projection(res.effective);
  res.pauli_view = proj.mixture;
  res.lossless_pauli = proj.lossless;
  return res;
}

LevelMapResult five_qubit_level_map(const QubitChannel& ch) {
  return effective_channel_exact(ProtocolId::FIVE, ch);
}

}  // namespace qeccat
