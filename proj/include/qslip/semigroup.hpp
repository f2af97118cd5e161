#pragma once

// Single-qubit dephasing semigroup: the Bloch-vector dynamics dr/dt = -2 L r with
// L = H + D, its analytic propagator, the positivity classification of the maps,
// and the norm bounds that drive the slippage contraction.

#include <array>
#include <string_view>

#include "qslip/qmat.hpp"

namespace qslip {

/// Model rates (a, b, omega) in inverse-time units; Omega = sqrt(omega^2 - b^2).
///
/// Construction requires a >= 0, b >= 0 and omega > b so that Omega is real and
/// positive. The overdamped branch omega <= b is rejected.
class ModelParams {
 public:
  ModelParams(double a, double b, double omega = 1.0);

  double a() const { return a_; }
  double b() const { return b_; }
  double omega() const { return omega_; }
  double Omega() const { return Omega_; }

 private:
  double a_;
  double b_;
  double omega_;
  double Omega_;
};

struct BlochVector {
  double r1 = 0.0;
  double r2 = 0.0;
  double r3 = 0.0;

  double norm_squared() const { return r1 * r1 + r2 * r2 + r3 * r3; }
  double norm() const;
  /// True when |r| <= 1 + tol::kBlochState.
  bool is_state() const;
  std::array<double, 3> as_array() const { return {r1, r2, r3}; }

  friend bool operator==(const BlochVector&, const BlochVector&) = default;
};

/// rho = (1 + r . sigma) / 2
Matrix2 density_from_bloch(const BlochVector& r);
/// r_k = Tr(rho sigma_k); requires rho Hermitian with unit trace.
BlochVector bloch_from_density(const Matrix2& rho);

enum class Classification { CompletelyPositive, PositiveNotCP, NonPositive };

std::string_view to_string(Classification c);

/// b = 0 -> CompletelyPositive; b != 0 and a^2 >= b^2 -> PositiveNotCP;
/// otherwise NonPositive. Requires a >= 0 and omega > |b|.
Classification classify(double a, double b, double omega = 1.0);
Classification classify(const ModelParams& p);

/// Constants of the classical stochastic field that produce the model.
struct StochasticFieldParams {
  double G1 = 0.0;
  double G2 = 0.0;
  double G3 = 0.0;
  double lambda = 0.0;   // transverse correlation rate
  double lambda3 = 0.0;  // longitudinal correlation rate
  double omega_tilde = 0.0;

  /// Throws ValidationError unless every field is positive and G1 > G2.
  void validate() const;
};

struct DerivedParams {
  double omega = 0.0;
  double alpha1 = 0.0;
  double alpha2 = 0.0;
  double a = 0.0;
  /// Signed off-diagonal rate 2 w~ (G2 - G1) / (lambda^2 + 4 w~^2); negative when G1 > G2.
  double b_raw = 0.0;

  /// Model with b = |b_raw|; alpha1 and alpha2 are dropped.
  ModelParams model() const;
};

DerivedParams derive_params(const StochasticFieldParams& s);

/// L together with its antisymmetric (Hamiltonian) and symmetric (dissipative) parts.
struct Generator {
  RealMatrix3 full;
  RealMatrix3 hamiltonian;
  RealMatrix3 dissipator;
};

Generator generator(const ModelParams& p);

/// Analytic G_t = exp(-2 t L).
RealMatrix3 propagator_matrix(const ModelParams& p, double t);

/// Bloch vector at time t >= 0.
BlochVector propagate(const ModelParams& p, const BlochVector& r, double t);

/// -2 <r|D|r> = -2a(r1^2 + r2^2) - 4b r1 r2, i.e. (1/2) d|r_t|^2/dt at r
/// (d|r_t|/dt for a pure state).
double exit_rate(const ModelParams& p, const BlochVector& r);

/// R^2(t): the largest eigenvalue of G_t^T G_t on the 1-2 block.
double norm_bound_curve(const ModelParams& p, double t);

struct NormBound {
  double R = 1.0;
  double t_prime = 0.0;
};

/// Maximum R of sqrt(R^2(t)) and where it is reached. For a^2 >= b^2 the maps are
/// positive and the result is (1, 0).
NormBound norm_bound_max(const ModelParams& p);

}  // namespace qslip
