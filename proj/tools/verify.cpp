#include "verify.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "qslip/bipartite.hpp"
#include "qslip/oracle.hpp"

namespace qslip::cli {
namespace {

constexpr double kHorizon = 5.0;
constexpr int kGridPoints = 500;

double grid_time(int k) { return kHorizon * k / (kGridPoints - 1); }

double rk4_step(const ModelParams& p) { return std::min(1e-4, 0.01 / std::max({p.a(), p.b(), p.omega()})); }

CheckResult check(std::string name, double deviation, double tolerance) {
  return {std::move(name), deviation, tolerance, std::isfinite(deviation) && deviation <= tolerance};
}

double propagator_vs_rk4(const ModelParams& p) {
  const double s = 1.0 / std::numbers::sqrt2;
  oracle::IntegratorConfig cfg;
  cfg.step = rk4_step(p);
  cfg.t_max = kHorizon;
  cfg.sample_stride = 100;
  double worst = 0.0;
  for (const BlochVector r0 : {BlochVector{s, s, 0.0}, BlochVector{s, -s, 0.0}, BlochVector{0.6, 0.0, 0.8}}) {
    const auto traj = oracle::integrate_master_2x2(p, density_from_bloch(r0), cfg);
    for (std::size_t k = 0; k < traj.times.size(); ++k) {
      const BlochVector num = bloch_from_density(traj.states[k]);
      const BlochVector exact = propagate(p, r0, traj.times[k]);
      worst = std::max({worst, std::abs(num.r1 - exact.r1), std::abs(num.r2 - exact.r2), std::abs(num.r3 - exact.r3)});
    }
  }
  return worst;
}

double bipartite_vs_rk4(const ModelParams& p, double mu) {
  oracle::IntegratorConfig cfg;
  cfg.step = rk4_step(p);
  cfg.t_max = 2.0;
  cfg.sample_stride = 100;
  const auto traj = oracle::integrate_master_4x4(p, isotropic(mu), cfg);
  double worst = 0.0;
  for (std::size_t k = 0; k < traj.times.size(); ++k)
    worst = std::max(worst, max_abs_diff(traj.states[k], evolve_isotropic(p, mu, traj.times[k])));
  return worst;
}

std::array<double, 4> sorted_desc(std::array<double, 4> v) {
  std::sort(v.begin(), v.end(), std::greater<>());
  return v;
}

double spectrum_diff(const std::array<double, 4>& x, const std::array<double, 4>& y) {
  double d = 0.0;
  for (int k = 0; k < 4; ++k) d = std::max(d, std::abs(x[k] - y[k]));
  return d;
}

double eigenvalues_vs_jacobi(const ModelParams& p, double mu) {
  double worst = 0.0;
  for (int k = 0; k < kGridPoints; ++k) {
    const double t = grid_time(k);
    worst = std::max(worst, spectrum_diff(sorted_desc(eigenvalues_closed_form(p, mu, t)),
                                          hermitian_eigenvalues(evolve_isotropic(p, mu, t))));
  }
  return worst;
}

double concurrence_vs_wootters(const ModelParams& p, double mu, double tol) {
  const bool always_valid = mu <= positivity_bound(p);
  double worst = 0.0;
  for (int k = 0; k < kGridPoints; ++k) {
    const double t = grid_time(k);
    const auto e = eigenvalues_closed_form(p, mu, t);
    if (*std::min_element(e.begin(), e.end()) < -tol) continue;
    const double closed =
        always_valid ? concurrence_closed_form(p, mu, t) : std::max(0.0, concurrence_raw(p, mu, t));
    worst = std::max(worst, std::abs(closed - concurrence_wootters(evolve_isotropic(p, mu, t))));
  }
  return worst;
}

double against_maximizer(const std::function<double(double)>& fn, double hi, double value, double argmax,
                         bool compare_argmax) {
  const auto m = oracle::maximize_scalar(fn, 0.0, hi, 1e-10);
  double d = std::abs(m.value - value);
  if (compare_argmax) d = std::max(d, std::abs(m.argmax - argmax));
  return d;
}

double ppt_symmetry(const ModelParams& p, double mu) {
  double worst = 0.0;
  for (int k = 0; k < kGridPoints; ++k) {
    const double t = grid_time(k);
    worst = std::max(worst, spectrum_diff(hermitian_eigenvalues(partial_transpose_first(evolve_isotropic(p, mu, t))),
                                          sorted_desc(eigenvalues_closed_form(p, -mu, t))));
  }
  return worst;
}

}  // namespace

std::vector<CheckResult> run_checks(const ModelParams& p, double mu, const VerifyTolerances& tol) {
  // isotropic() rejects mu outside [0, 1] before any check runs.
  isotropic(mu);
  const double quarter = std::numbers::pi / (2.0 * p.Omega());
  const bool has_b = p.b() > 0.0;

  std::vector<CheckResult> out;
  out.push_back(check("propagator_vs_rk4", propagator_vs_rk4(p), tol.ode));
  out.push_back(check("bipartite_vs_rk4", bipartite_vs_rk4(p, mu), tol.ode));
  out.push_back(check("eigenvalues_vs_jacobi", eigenvalues_vs_jacobi(p, mu), tol.algebraic));
  out.push_back(check("concurrence_vs_wootters", concurrence_vs_wootters(p, mu, tol.algebraic), tol.algebraic));

  const auto nb = norm_bound_max(p);
  out.push_back(check("norm_bound_vs_maximizer",
                      against_maximizer([&](double t) { return std::sqrt(norm_bound_curve(p, t)); }, quarter, nb.R,
                                        nb.t_prime, has_b || p.a() > 0.0),
                      tol.maximizer));
  const auto r4 = r4_max(p);
  out.push_back(check("r4_vs_maximizer",
                      against_maximizer([&](double t) { return r4_curve(p, t); }, 2.0 * quarter, r4.R4, r4.t_star,
                                        has_b),
                      tol.maximizer));
  const auto g = concurrence_rate_max(p);
  out.push_back(check("rate_factor_vs_maximizer",
                      against_maximizer([&](double t) { return concurrence_rate_factor(p, t); }, quarter, g.G,
                                        g.t_bar, has_b),
                      tol.maximizer));
  out.push_back(check("ppt_symmetry", ppt_symmetry(p, mu), tol.algebraic));
  return out;
}

}  // namespace qslip::cli
