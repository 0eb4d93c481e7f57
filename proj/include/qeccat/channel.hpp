#pragma once

#include <Eigen/Dense>
#include <complex>
#include <vector>

#include "qeccat/pauli.hpp"

namespace qeccat {

// Similarity of a channel's Kraus set to each Pauli direction,
//   s_P = (1/4) sum_i |tr(E_i sigma_P)|^2.
// For any trace-preserving channel the four scores sum to 1 and s_i is the
// channel fidelity.
struct SimilarityScores {
  double s_i = 0.0;
  double s_x = 0.0;
  double s_z = 0.0;
  double s_y = 0.0;

  double sum() const { return s_i + s_x + s_z + s_y; }
};

// Probabilistic Pauli channel rho -> f rho + px X rho X + py Y rho Y + pz Z rho Z.
struct PauliMixture {
  double f = 1.0;
  double px = 0.0;
  double py = 0.0;
  double pz = 0.0;

  // Validates and rescales: rejects weights below -1e-15, clamps fp dust to 0,
  // requires the sum within 1e-9 of 1, then normalizes exactly.
  static PauliMixture make(double f, double px, double py, double pz);

  double sum() const { return f + px + py + pz; }
};

// Single-qubit CPTP map held as an explicit Kraus set.
class QubitChannel {
 public:
  // Validates complete positivity and trace preservation (sum E^dag E = I
  // within tp_tol, Choi eigenvalues >= -1e-10).
  static QubitChannel from_kraus(std::vector<Eigen::Matrix2cd> ops,
                                 double tp_tol = 1e-10);
  static QubitChannel identity();

  const std::vector<Eigen::Matrix2cd>& kraus() const { return kraus_; }
  int rank() const { return static_cast<int>(kraus_.size()); }

 private:
  explicit QubitChannel(std::vector<Eigen::Matrix2cd> ops)
      : kraus_(std::move(ops)) {}

  std::vector<Eigen::Matrix2cd> kraus_;
};

QubitChannel make_general_pauli(double f, double px, double py, double pz);
QubitChannel make_general_pauli(const PauliMixture& m);
QubitChannel make_depolarizing(double fidelity);
QubitChannel make_amplitude_damping(double gamma);

// Solves for the damping rate whose channel fidelity equals target
// (bisection; reachable targets are [1/4, 1]).
QubitChannel amplitude_damping_for_fidelity(double target);

SimilarityScores similarity(const QubitChannel& ch);

// Unnormalized Choi matrix sum_i vec(E_i) vec(E_i)^dag with row-major vec;
// trace 2 for a trace-preserving channel.
Eigen::Matrix4cd choi(const QubitChannel& ch);

// Recovers a channel from its Choi matrix. Validates Hermiticity, positivity
// and trace preservation, then returns the canonical Kraus set.
QubitChannel from_choi(const Eigen::Matrix4cd& m);

// Minimal Kraus set from the Choi eigendecomposition: eigenvalues descending,
// components below 1e-12 dropped, each operator's largest entry made real
// and nonnegative.
QubitChannel canonicalize_kraus(const QubitChannel& ch);

struct PauliProjection {
  PauliMixture mixture;  // chi-matrix diagonal (s_i, s_x, s_y, s_z)
  bool lossless = false;  // true when the channel *is* that Pauli mixture
};

PauliProjection pauli_projection(const QubitChannel& ch);

// Diagnostics used by validation and the CLI.
double trace_preservation_error(const QubitChannel& ch);
double min_choi_eigenvalue(const QubitChannel& ch);

}  // namespace qeccat
