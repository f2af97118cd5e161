#pragma once

// Independent numerical references for the closed forms: fixed-step RK4
// integration of the master equation written directly in operator form, a
// coarse-grid + golden-section maximizer, and central finite differences.
// Nothing here calls the analytic propagator or the closed-form spectra.

#include <cstddef>
#include <functional>
#include <vector>

#include "qslip/qmat.hpp"
#include "qslip/semigroup.hpp"

namespace qslip::oracle {

struct IntegratorConfig {
  double step = 1e-4;
  double t_max = 1.0;
  /// Keep every sample_stride-th step (the final time is always kept).
  std::size_t sample_stride = 1;

  /// Throws ValidationError unless 0 < step <= t_max and step * max(a, b, omega) <= 0.01.
  void validate(const ModelParams& p) const;
};

template <std::size_t N>
struct Trajectory {
  std::vector<double> times;
  std::vector<ComplexMatrix<N>> states;
};

/// drho/dt = -i[omega s3, rho] + a(s3 rho s3 - rho) - b(s1 rho s2 + s2 rho s1)
Matrix2 master_rhs(const ModelParams& p, const Matrix2& rho);
/// Same generator acting on the first qubit only (s_i -> s_i (x) 1).
Matrix4 master_rhs(const ModelParams& p, const Matrix4& rho);

Trajectory<2> integrate_master_2x2(const ModelParams& p, const Matrix2& rho0, const IntegratorConfig& cfg);
Trajectory<4> integrate_master_4x4(const ModelParams& p, const Matrix4& rho0, const IntegratorConfig& cfg);

struct Maximum {
  double argmax = 0.0;
  double value = 0.0;
};

/// 1000-point coarse grid on [t_lo, t_hi], then golden-section search on the
/// bracket around the best grid point until the bracket is narrower than tol.
Maximum maximize_scalar(const std::function<double(double)>& fn, double t_lo, double t_hi, double tol);

/// (fn(t + h) - fn(t - h)) / 2h
double central_difference(const std::function<double(double)>& fn, double t, double h);

}  // namespace qslip::oracle
