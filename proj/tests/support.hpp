#pragma once

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <cstdlib>
#include <random>
#include <vector>

#include "qeccat/channel.hpp"
#include "qeccat/codes.hpp"

namespace support {

inline std::uint64_t seed_from_env() {
  if (const char* s = std::getenv("QECCAT_SEED")) {
    char* end = nullptr;
    std::uint64_t v = std::strtoull(s, &end, 10);
    if (end != s) return v;
  }
  return 20240817ull;
}

inline std::mt19937_64 make_rng(std::uint64_t salt = 0) {
  return std::mt19937_64(seed_from_env() ^ salt);
}

inline qeccat::PauliMixture random_mixture(std::mt19937_64& rng) {
  std::uniform_real_distribution<double> u(0.0, 1.0);
  double w[4];
  double total = 0.0;
  for (double& x : w) {
    x = -std::log(1.0 - u(rng));  // Dirichlet(1,1,1,1) via exponentials
    total += x;
  }
  return qeccat::PauliMixture::make(w[0] / total, w[1] / total, w[2] / total,
                                    w[3] / total);
}

// Random CPTP channel through a random Choi matrix: PSD from a Gaussian
// square, then the input-side factor rescaled so the partial trace over the
// output is the identity.
inline qeccat::QubitChannel random_cptp_channel(std::mt19937_64& rng) {
  std::normal_distribution<double> g(0.0, 1.0);
  Eigen::Matrix4cd gm;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) gm(i, j) = qeccat::Complex(g(rng), g(rng));
  Eigen::Matrix4cd raw = gm * gm.adjoint();

  Eigen::Matrix2cd pt;  // partial trace over the output factor
  pt << raw(0, 0) + raw(2, 2), raw(0, 1) + raw(2, 3),
        raw(1, 0) + raw(3, 2), raw(1, 1) + raw(3, 3);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> es(pt);
  Eigen::Matrix2cd inv_sqrt = es.operatorInverseSqrt();

  Eigen::Matrix4cd fix = Eigen::Matrix4cd::Zero();
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        fix(2 * i + j, 2 * i + k) = inv_sqrt(j, k);  // I (x) pt^(-1/2)
  Eigen::Matrix4cd choi = fix * raw * fix.adjoint();
  return qeccat::from_choi(choi);
}

inline Eigen::MatrixXcd kron(const Eigen::MatrixXcd& a,
                             const Eigen::MatrixXcd& b) {
  Eigen::MatrixXcd out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

// Independent propagation route: superoperator composition on the doubled
// space, S = sum_i E_i (x) conj(E_i), reshuffled to a Choi matrix at the end.
inline Eigen::Matrix4cd choi_via_superop(qeccat::ProtocolId p,
                                         const qeccat::QubitChannel& ch) {
  using namespace qeccat;
  const Protocol& proto = build_protocol(p);
  const StabilizerCode& code = proto.code;
  const Eigen::Index dim = Eigen::Index(1) << code.n;

  Eigen::MatrixXcd v = encode_isometry(code);
  Eigen::MatrixXcd s_enc = kron(v, v.conjugate());

  Eigen::MatrixXcd s_one = Eigen::MatrixXcd::Zero(4, 4);
  for (const auto& e : ch.kraus())
    s_one += kron(e, e.conjugate());
  Eigen::MatrixXcd s_inter = Eigen::MatrixXcd::Identity(1, 1);
  for (int q = 0; q < code.n; ++q) s_inter = kron(s_inter, s_one);

  // the kron power indexes per-qubit (row, col) pairs; the encoder and
  // decoder superoperators index composite (rows, cols), so permute
  std::vector<Eigen::Index> to_block(static_cast<std::size_t>(dim * dim));
  for (Eigen::Index a = 0; a < dim * dim; ++a) {
    Eigen::Index rest = a, row = 0, col = 0;
    for (int q = code.n - 1; q >= 0; --q) {
      Eigen::Index pair = rest & 3;
      rest >>= 2;
      row |= ((pair >> 1) & 1) << (code.n - 1 - q);
      col |= (pair & 1) << (code.n - 1 - q);
    }
    to_block[static_cast<std::size_t>(a)] = row * dim + col;
  }
  Eigen::MatrixXcd s_noise(dim * dim, dim * dim);
  for (Eigen::Index a = 0; a < dim * dim; ++a)
    for (Eigen::Index b = 0; b < dim * dim; ++b)
      s_noise(to_block[static_cast<std::size_t>(a)],
              to_block[static_cast<std::size_t>(b)]) = s_inter(a, b);

  Eigen::MatrixXcd s_dec = Eigen::MatrixXcd::Zero(4, dim * dim);
  for (Syndrome s = 0; s < proto.table.size(); ++s) {
    Eigen::MatrixXcd proj = Eigen::MatrixXcd::Identity(dim, dim);
    for (std::size_t j = 0; j < code.generators.size(); ++j) {
      double sign = ((s >> j) & 1u) ? -1.0 : 1.0;
      proj = proj * 0.5 *
             (Eigen::MatrixXcd::Identity(dim, dim) +
              sign * code.generators[j].matrix());
    }
    Eigen::MatrixXcd d =
        v.adjoint() * proto.table.correction(s).matrix() * proj;
    s_dec += kron(d, d.conjugate());
  }

  Eigen::MatrixXcd s_total = s_dec * (s_noise * s_enc);  // 4x4
  Eigen::Matrix4cd choi;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int k = 0; k < 2; ++k)
        for (int l = 0; l < 2; ++l)
          choi(2 * i + j, 2 * k + l) = s_total(2 * i + k, 2 * j + l);
  return choi;
}

inline double max_abs_diff(const Eigen::Matrix4cd& a,
                           const Eigen::Matrix4cd& b) {
  return (a - b).cwiseAbs().maxCoeff();
}

}  // namespace support
