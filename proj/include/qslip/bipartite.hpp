#pragma once

// Two-qubit analysis: isotropic states P_mu evolved by gamma_t (x) id, their
// closed-form spectra and concurrence, the critical radii R4 and R1(t), and the
// detection of time windows where the local dynamics creates entanglement.

#include <array>
#include <optional>
#include <vector>

#include "qslip/qmat.hpp"
#include "qslip/semigroup.hpp"

namespace qslip {

/// P_mu = (1/4)(1 (x) 1 + mu (s1(x)s1 - s2(x)s2 + s3(x)s3)). Requires mu in [0, 1].
Matrix4 isotropic(double mu);

/// P_mu(t) = (gamma_t (x) id)[P_mu], built from the explicit B_t, C_t entries.
Matrix4 evolve_isotropic(const ModelParams& p, double mu, double t);

/// (e1, e2, e3, e4) of P_mu(t). The listed order is descending when sin(2 Omega t) >= 0;
/// e3 and e4 swap roles otherwise. Accepts mu in [-1, 1] so the partially
/// transposed spectrum (mu -> -mu) can be evaluated.
std::array<double, 4> eigenvalues_closed_form(const ModelParams& p, double mu, double t);

/// R4(t) = 1 + 2 e^{-2at} (b/Omega) sin(2 Omega t)
double r4_curve(const ModelParams& p, double t);

struct R4Max {
  double R4 = 1.0;
  double t_star = 0.0;
};

/// Maximum of R4(t) over t >= 0 and the time t* where it is reached.
R4Max r4_max(const ModelParams& p);

/// R1(t) = 1 + 2 e^{-2at} sqrt(1 + (b/Omega)^2 sin^2(2 Omega t))
double r1_curve(const ModelParams& p, double t);

/// 1 / R4: the largest mu keeping P_mu(t) a state for all t.
double positivity_bound(const ModelParams& p);

/// Wootters concurrence max{0, l1 - l2 - l3 - l4} of a two-qubit state.
/// Throws ValidationError unless rho is Hermitian, has unit trace and no eigenvalue
/// below -tol::kStateEigenvalue.
double concurrence_wootters(const Matrix4& rho);

/// c_mu(t) = mu e^{-2at} sqrt(1 + (b/Omega)^2 sin^2) - (1 - mu)/2, unclamped and unvalidated.
double concurrence_raw(const ModelParams& p, double mu, double t);

/// max{0, c_mu(t)}. Throws ValidationError when mu > 1/R4 (P_mu(t) is not a
/// state for all t) or mu < 0.
double concurrence_closed_form(const ModelParams& p, double mu, double t);

/// d c_mu / dt = 2 mu e^{-2at} / sqrt(1 + (b/Omega)^2 sin^2(2 Omega t)) * G(t)
double concurrence_derivative(const ModelParams& p, double mu, double t);

/// G(t) = (b^2 sqrt(Omega^2 + a^2) / Omega^2) cos(2 Omega t + phi) sin(2 Omega t) - a,
/// cos(phi) = Omega / sqrt(Omega^2 + a^2).
double concurrence_rate_factor(const ModelParams& p, double t);

struct RateFactorMax {
  double G = 0.0;
  double t_bar = 0.0;  // t* / 2
};

RateFactorMax concurrence_rate_max(const ModelParams& p);

/// a^2 < b^4 / (4 omega^2), i.e. G > 0.
bool can_create_entanglement(const ModelParams& p);

struct WindowSample {
  double f = 0.0;         // > 0  <=>  R1(t_bar + t) > R4
  double g = 0.0;         // G(t_bar + t)
  double headroom = 0.0;  // R1(t_bar + t) - 3
};

/// Window functions at offset t >= 0 from t_bar.
WindowSample window_functions(const ModelParams& p, double t_offset);

struct Interval {
  double t1 = 0.0;
  double t2 = 0.0;
};

struct WindowReport {
  double t_bar = 0.0;
  std::vector<Interval> intervals;  // offsets where f > 0 and g > 0
  double mu_upper_physical = 1.0;   // 1 / R4
  double mu_upper_corrected = 1.0;  // 1 / max R1(t_bar + t) over the intervals
  std::optional<double> max_headroom;  // max of R1 - 3 over the intervals
  bool kills_all_entanglement = false;
};

/// Scans offsets in [0, t_max_offset] with the given spacing for maximal
/// intervals where f > 0 and g > 0. Endpoints are bisected to tol::kEndpointBisection.
WindowReport detect_windows(const ModelParams& p, double t_max_offset, double grid_step);

/// Default scan: offsets [0, pi/Omega] on 4000 points.
WindowReport detect_windows(const ModelParams& p);

/// True iff the sorted spectrum of the partial transpose of P_mu(t) matches the
/// closed-form spectrum at -mu within 1e-10.
bool partial_transpose_spectrum_check(const ModelParams& p, double mu, double t);

}  // namespace qslip
