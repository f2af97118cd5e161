#include "qslip/oracle.hpp"

#include <algorithm>
#include <cmath>

#include "qslip/errors.hpp"
#include "qslip/tolerances.hpp"

namespace qslip::oracle {

void IntegratorConfig::validate(const ModelParams& p) const {
  if (!(step > 0.0) || !std::isfinite(step)) throw ValidationError("integrator step must be > 0");
  if (!(t_max > 0.0) || !std::isfinite(t_max)) throw ValidationError("integrator horizon must be > 0");
  if (step > t_max) throw ValidationError("integrator step must not exceed the horizon");
  if (sample_stride == 0) throw ValidationError("sample stride must be >= 1");
  const double rate = std::max({p.a(), p.b(), p.omega()});
  if (step * rate > 0.01 * (1.0 + 1e-12)) throw ValidationError("integrator step too large for the model rates");
}

namespace {

template <std::size_t N>
ComplexMatrix<N> rhs(const ModelParams& p, const ComplexMatrix<N>& rho, const ComplexMatrix<N>& s1,
                     const ComplexMatrix<N>& s2, const ComplexMatrix<N>& s3) {
  const Complex minus_i(0.0, -1.0);
  ComplexMatrix<N> out = (s3 * rho - rho * s3) * (minus_i * p.omega());
  out += (s3 * rho * s3 - rho) * p.a();
  out -= (s1 * rho * s2 + s2 * rho * s1) * p.b();
  return out;
}

template <std::size_t N, typename Rhs>
Trajectory<N> rk4(const ComplexMatrix<N>& rho0, const IntegratorConfig& cfg, Rhs&& f) {
  const auto steps = static_cast<std::size_t>(std::ceil(cfg.t_max / cfg.step - 1e-9));
  const double h = cfg.t_max / static_cast<double>(steps);

  Trajectory<N> traj;
  traj.times.push_back(0.0);
  traj.states.push_back(rho0);
  ComplexMatrix<N> rho = rho0;
  for (std::size_t k = 1; k <= steps; ++k) {
    const ComplexMatrix<N> k1 = f(rho);
    const ComplexMatrix<N> k2 = f(rho + k1 * (0.5 * h));
    const ComplexMatrix<N> k3 = f(rho + k2 * (0.5 * h));
    const ComplexMatrix<N> k4 = f(rho + k3 * h);
    rho += (k1 + k2 * 2.0 + k3 * 2.0 + k4) * (h / 6.0);
    if (k % cfg.sample_stride == 0 || k == steps) {
      traj.times.push_back(static_cast<double>(k) * h);
      traj.states.push_back(rho);
    }
  }
  return traj;
}

template <std::size_t N>
void require_state(const ComplexMatrix<N>& rho) {
  if (hermiticity_defect(rho) > tol::kHermitianInput) throw ValidationError("initial state is not Hermitian");
  if (std::abs(trace(rho) - 1.0) > tol::kTrace) throw ValidationError("initial state must have unit trace");
}

}  // namespace

Matrix2 master_rhs(const ModelParams& p, const Matrix2& rho) {
  static const Matrix2 s1 = pauli_x(), s2 = pauli_y(), s3 = pauli_z();
  return rhs(p, rho, s1, s2, s3);
}

Matrix4 master_rhs(const ModelParams& p, const Matrix4& rho) {
  static const Matrix4 s1 = tensor(pauli_x(), Matrix2::identity());
  static const Matrix4 s2 = tensor(pauli_y(), Matrix2::identity());
  static const Matrix4 s3 = tensor(pauli_z(), Matrix2::identity());
  return rhs(p, rho, s1, s2, s3);
}

Trajectory<2> integrate_master_2x2(const ModelParams& p, const Matrix2& rho0, const IntegratorConfig& cfg) {
  cfg.validate(p);
  require_state(rho0);
  return rk4(rho0, cfg, [&](const Matrix2& r) { return master_rhs(p, r); });
}

Trajectory<4> integrate_master_4x4(const ModelParams& p, const Matrix4& rho0, const IntegratorConfig& cfg) {
  cfg.validate(p);
  require_state(rho0);
  return rk4(rho0, cfg, [&](const Matrix4& r) { return master_rhs(p, r); });
}

Maximum maximize_scalar(const std::function<double(double)>& fn, double t_lo, double t_hi, double tol) {
  if (!(t_lo < t_hi)) throw ValidationError("maximize_scalar: need t_lo < t_hi");
  if (!(tol > 0.0)) throw ValidationError("maximize_scalar: tol must be > 0");

  constexpr int kCoarse = 1000;
  const double dx = (t_hi - t_lo) / (kCoarse - 1);
  int best = 0;
  double best_val = fn(t_lo);
  for (int i = 1; i < kCoarse; ++i) {
    const double v = fn(t_lo + i * dx);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }

  double lo = t_lo + std::max(best - 1, 0) * dx;
  double hi = t_lo + std::min(best + 1, kCoarse - 1) * dx;
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = fn(x1);
  double f2 = fn(x2);
  while (hi - lo > tol) {
    if (f1 < f2) {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = fn(x2);
    } else {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = fn(x1);
    }
  }
  const double mid = 0.5 * (lo + hi);
  Maximum out{mid, fn(mid)};
  // The coarse grid point wins when the maximum sits on a boundary.
  if (best_val > out.value) out = {t_lo + best * dx, best_val};
  return out;
}

double central_difference(const std::function<double(double)>& fn, double t, double h) {
  return (fn(t + h) - fn(t - h)) / (2.0 * h);
}

}  // namespace qslip::oracle
