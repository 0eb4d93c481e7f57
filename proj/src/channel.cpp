#include "qeccat/channel.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>

#include "qeccat/errors.hpp"
#include "qeccat/pauli.hpp"

namespace qeccat {

namespace {

constexpr double kTpTol = 1e-10;
constexpr double kCpTol = 1e-10;
constexpr double kKrausCutoff = 1e-12;

Eigen::Vector4cd vec_rm(const Eigen::Matrix2cd& e) {
  Eigen::Vector4cd v;
  v << e(0, 0), e(0, 1), e(1, 0), e(1, 1);
  return v;
}

Eigen::Matrix2cd unvec_rm(const Eigen::Vector4cd& v) {
  Eigen::Matrix2cd e;
  e << v(0), v(1), v(2), v(3);
  return e;
}

// Kraus set from a PSD Choi matrix: descending eigenvalues, tiny components
// dropped, each operator phase-fixed so its largest entry is real >= 0.
std::vector<Eigen::Matrix2cd> kraus_from_choi(const Eigen::Matrix4cd& m) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(m);
  if (es.info() != Eigen::Success)
    throw InvalidChannel("choi eigendecomposition failed");
  std::vector<Eigen::Matrix2cd> ops;
  for (int k = 3; k >= 0; --k) {  // solver sorts ascending
    double lam = es.eigenvalues()(k);
    if (lam < -kCpTol) throw NotCompletelyPositive("choi matrix not positive");
    if (lam < kKrausCutoff) continue;
    Eigen::Matrix2cd e = std::sqrt(lam) * unvec_rm(es.eigenvectors().col(k));
    int best = 0;
    for (int i = 1; i < 4; ++i)
      if (std::abs(e(i / 2, i % 2)) > std::abs(e(best / 2, best % 2)))
        best = i;
    Complex top = e(best / 2, best % 2);
    if (std::abs(top) > 0.0) e *= std::conj(top) / std::abs(top);
    ops.push_back(e);
  }
  if (ops.empty()) throw InvalidChannel("choi matrix is numerically zero");
  return ops;
}

Eigen::Matrix2cd kraus_sum(const std::vector<Eigen::Matrix2cd>& ops) {
  Eigen::Matrix2cd s = Eigen::Matrix2cd::Zero();
  for (const auto& e : ops) s += e.adjoint() * e;
  return s;
}

}  // namespace

PauliMixture PauliMixture::make(double f, double px, double py, double pz) {
  double vals[4] = {f, px, py, pz};
  for (double& v : vals) {
    if (v < -1e-15) throw NegativeProbability("negative pauli weight");
    if (v < 0.0) v = 0.0;
  }
  double s = vals[0] + vals[1] + vals[2] + vals[3];
  if (std::abs(s - 1.0) > 1e-9)
    throw NotNormalized("pauli weights do not sum to 1");
  return PauliMixture{vals[0] / s, vals[1] / s, vals[2] / s, vals[3] / s};
}

QubitChannel QubitChannel::from_kraus(std::vector<Eigen::Matrix2cd> ops,
                                      double tp_tol) {
  if (ops.empty()) throw InvalidChannel("empty kraus set");
  Eigen::Matrix2cd s = kraus_sum(ops);
  double err = (s - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff();
  if (err > tp_tol) throw NotTracePreserving("kraus sum deviates from identity");
  return QubitChannel(std::move(ops));
}

QubitChannel QubitChannel::identity() {
  return QubitChannel({Eigen::Matrix2cd::Identity()});
}

QubitChannel make_general_pauli(double f, double px, double py, double pz) {
  if (f < 0 || px < 0 || py < 0 || pz < 0)
    throw NegativeProbability("negative pauli weight");
  double s = f + px + py + pz;
  if (std::abs(s - 1.0) > 1e-9)
    throw NotNormalized("pauli weights do not sum to 1");
  std::vector<Eigen::Matrix2cd> ops;
  const Pauli ps[4] = {Pauli::I, Pauli::X, Pauli::Y, Pauli::Z};
  const double ws[4] = {f / s, px / s, py / s, pz / s};
  for (int k = 0; k < 4; ++k)
    if (ws[k] > 0.0) ops.push_back(std::sqrt(ws[k]) * pauli_matrix(ps[k]));
  return QubitChannel::from_kraus(std::move(ops));
}

QubitChannel make_general_pauli(const PauliMixture& m) {
  return make_general_pauli(m.f, m.px, m.py, m.pz);
}

QubitChannel make_depolarizing(double fidelity) {
  if (fidelity < 0.25 || fidelity > 1.0)
    throw ParameterOutOfRange("depolarizing fidelity outside [1/4, 1]");
  double p = (1.0 - fidelity) / 3.0;
  return make_general_pauli(fidelity, p, p, p);
}

QubitChannel make_amplitude_damping(double gamma) {
  if (gamma < 0.0 || gamma > 1.0)
    throw ParameterOutOfRange("damping rate outside [0, 1]");
  Eigen::Matrix2cd e0 = Eigen::Matrix2cd::Zero();
  e0(0, 0) = 1.0;
  e0(1, 1) = std::sqrt(1.0 - gamma);
  std::vector<Eigen::Matrix2cd> ops{e0};
  if (gamma > 0.0) {
    Eigen::Matrix2cd e1 = Eigen::Matrix2cd::Zero();
    e1(0, 1) = std::sqrt(gamma);
    ops.push_back(e1);
  }
  return QubitChannel::from_kraus(std::move(ops));
}

QubitChannel amplitude_damping_for_fidelity(double target) {
  if (target > 1.0) throw ParameterOutOfRange("fidelity above 1");
  if (target < 0.25)
    throw TargetUnreachable("damping channel fidelity never drops below 1/4");
  // s_i(gamma) = (1 + sqrt(1-gamma))^2 / 4 decreases from 1 to 1/4.
  auto fid = [](double g) {
    double r = 1.0 + std::sqrt(1.0 - g);
    return r * r / 4.0;
  };
  double lo = 0.0, hi = 1.0;
  for (int it = 0; it < 200; ++it) {
    double mid = 0.5 * (lo + hi);
    if (fid(mid) >= target)
      lo = mid;
    else
      hi = mid;
  }
  double gamma = (fid(lo) - target <= target - fid(hi)) ? lo : hi;
  return make_amplitude_damping(gamma);
}

SimilarityScores similarity(const QubitChannel& ch) {
  const Eigen::Matrix2cd sx = pauli_matrix(Pauli::X);
  const Eigen::Matrix2cd sy = pauli_matrix(Pauli::Y);
  const Eigen::Matrix2cd sz = pauli_matrix(Pauli::Z);
  SimilarityScores s;
  for (const auto& e : ch.kraus()) {
    s.s_i += std::norm(e.trace());
    s.s_x += std::norm((e * sx).trace());
    s.s_y += std::norm((e * sy).trace());
    s.s_z += std::norm((e * sz).trace());
  }
  s.s_i /= 4.0;
  s.s_x /= 4.0;
  s.s_y /= 4.0;
  s.s_z /= 4.0;
  return s;
}

Eigen::Matrix4cd choi(const QubitChannel& ch) {
  Eigen::Matrix4cd m = Eigen::Matrix4cd::Zero();
  for (const auto& e : ch.kraus()) {
    Eigen::Vector4cd v = vec_rm(e);
    m += v * v.adjoint();
  }
  return m;
}

QubitChannel from_choi(const Eigen::Matrix4cd& m) {
  if ((m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-10)
    throw NotHermitian("choi matrix not hermitian");
  // Partial trace over the output factor must be the identity.
  Eigen::Matrix2cd pt;
  pt << m(0, 0) + m(2, 2), m(0, 1) + m(2, 3),
        m(1, 0) + m(3, 2), m(1, 1) + m(3, 3);
  if ((pt - Eigen::Matrix2cd::Identity()).cwiseAbs().maxCoeff() > 1e-9)
    throw NotTracePreserving("choi partial trace deviates from identity");
  auto ops = kraus_from_choi(0.5 * (m + m.adjoint()));
  return QubitChannel::from_kraus(std::move(ops), 1e-9);
}

QubitChannel canonicalize_kraus(const QubitChannel& ch) {
  auto ops = kraus_from_choi(choi(ch));
  return QubitChannel::from_kraus(std::move(ops), 1e-9);
}

PauliProjection pauli_projection(const QubitChannel& ch) {
  SimilarityScores s = similarity(ch);
  double vals[4] = {s.s_i, s.s_x, s.s_y, s.s_z};
  for (double& v : vals)
    if (v < 0.0) v = 0.0;
  PauliProjection out;
  out.mixture = PauliMixture::make(vals[0], vals[1], vals[2], vals[3]);
  Eigen::Matrix4cd diff =
      choi(make_general_pauli(out.mixture)) - choi(ch);
  out.lossless = diff.cwiseAbs().maxCoeff() < 1e-10;
  return out;
}

double trace_preservation_error(const QubitChannel& ch) {
  return (kraus_sum(ch.kraus()) - Eigen::Matrix2cd::Identity())
      .cwiseAbs()
      .maxCoeff();
}

double min_choi_eigenvalue(const QubitChannel& ch) {
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix4cd> es(choi(ch));
  return es.eigenvalues().minCoeff();
}

}  // namespace qeccat
