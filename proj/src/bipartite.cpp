#include "qslip/bipartite.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include "qslip/errors.hpp"
#include "qslip/tolerances.hpp"

namespace qslip {

namespace {

void require_time(double t) {
  if (!(t >= 0.0) || !std::isfinite(t)) throw ValidationError("time must be finite and >= 0");
}

void require_mu(double mu) {
  if (!std::isfinite(mu) || mu < 0.0 || mu > 1.0) throw ValidationError("mu must lie in [0, 1]");
}

// sqrt(1 + (b/Omega)^2 sin^2(2 Omega t))
double envelope(const ModelParams& p, double t) {
  const double s = p.b() / p.Omega() * std::sin(2.0 * p.Omega() * t);
  return std::sqrt(1.0 + s * s);
}

Matrix4 sigma_y_y() { return tensor(pauli_y(), pauli_y()); }

// Golden-section refinement of a local maximum of fn on [lo, hi].
double local_max(const std::function<double(double)>& fn, double lo, double hi) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = fn(x1);
  double f2 = fn(x2);
  while (hi - lo > 1e-12) {
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
  return std::max({fn(lo), fn(hi), f1, f2});
}

}  // namespace

Matrix4 isotropic(double mu) {
  require_mu(mu);
  Matrix4 corr = tensor(pauli_x(), pauli_x()) - tensor(pauli_y(), pauli_y()) + tensor(pauli_z(), pauli_z());
  return (Matrix4::identity() + corr * mu) * 0.25;
}

Matrix4 evolve_isotropic(const ModelParams& p, double mu, double t) {
  require_mu(mu);
  require_time(t);
  const double W = p.Omega();
  const double decay = std::exp(-2.0 * p.a() * t);
  const double c = std::cos(2.0 * W * t);
  const double s = std::sin(2.0 * W * t);
  const Complex B = decay * Complex(c, -p.omega() / W * s);
  const Complex C = Complex(0.0, p.b() / W * decay * s);

  Matrix4 m;
  m(0, 0) = 1.0 + mu;
  m(1, 1) = 1.0 - mu;
  m(2, 2) = 1.0 - mu;
  m(3, 3) = 1.0 + mu;
  m(0, 3) = 2.0 * mu * B;
  m(3, 0) = 2.0 * mu * std::conj(B);
  m(1, 2) = 2.0 * mu * C;
  m(2, 1) = 2.0 * mu * std::conj(C);
  return m * 0.25;
}

std::array<double, 4> eigenvalues_closed_form(const ModelParams& p, double mu, double t) {
  require_time(t);
  if (!std::isfinite(mu) || std::abs(mu) > 1.0) throw ValidationError("mu must lie in [-1, 1]");
  const double decay = std::exp(-2.0 * p.a() * t);
  const double env = envelope(p, t);
  const double osc = p.b() / p.Omega() * std::sin(2.0 * p.Omega() * t);
  return {0.25 * (1.0 + mu * (1.0 + 2.0 * decay * env)), 0.25 * (1.0 + mu * (1.0 - 2.0 * decay * env)),
          0.25 * (1.0 - mu * (1.0 - 2.0 * decay * osc)), 0.25 * (1.0 - mu * (1.0 + 2.0 * decay * osc))};
}

double r4_curve(const ModelParams& p, double t) {
  require_time(t);
  return 1.0 + 2.0 * std::exp(-2.0 * p.a() * t) * p.b() / p.Omega() * std::sin(2.0 * p.Omega() * t);
}

R4Max r4_max(const ModelParams& p) {
  const double W = p.Omega();
  const double hyp = std::hypot(W, p.a());
  const double t_star = std::asin(std::min(1.0, W / hyp)) / (2.0 * W);
  return {1.0 + 2.0 * std::exp(-2.0 * p.a() * t_star) * p.b() / hyp, t_star};
}

double r1_curve(const ModelParams& p, double t) {
  require_time(t);
  return 1.0 + 2.0 * std::exp(-2.0 * p.a() * t) * envelope(p, t);
}

double positivity_bound(const ModelParams& p) { return 1.0 / r4_max(p).R4; }

double concurrence_wootters(const Matrix4& rho) {
  if (hermiticity_defect(rho) > tol::kHermitianInput) throw ValidationError("concurrence: input is not Hermitian");
  if (std::abs(trace(rho) - 1.0) > tol::kTrace) throw ValidationError("concurrence: input trace is not 1");
  const EigenSystem<4> es = hermitian_eigensystem(rho);
  if (es.values[3] < -tol::kStateEigenvalue) throw ValidationError("concurrence: input has a negative eigenvalue");

  // sqrt(rho) rho~ sqrt(rho) is Hermitian PSD and shares its spectrum with rho rho~.
  Matrix4 root_diag;
  for (std::size_t k = 0; k < 4; ++k) root_diag(k, k) = std::sqrt(std::max(es.values[k], 0.0));
  const Matrix4 root = es.vectors * root_diag * adjoint(es.vectors);
  const Matrix4 yy = sigma_y_y();
  const Matrix4 flipped = yy * conjugate(rho) * yy;
  Matrix4 product = root * flipped * root;
  product = (product + adjoint(product)) * 0.5;

  const auto mu2 = hermitian_eigenvalues(product);
  std::array<double, 4> lambda{};
  for (std::size_t k = 0; k < 4; ++k) lambda[k] = std::sqrt(std::max(mu2[k], 0.0));
  return std::max(0.0, lambda[0] - lambda[1] - lambda[2] - lambda[3]);
}

double concurrence_raw(const ModelParams& p, double mu, double t) {
  return mu * std::exp(-2.0 * p.a() * t) * envelope(p, t) - 0.5 * (1.0 - mu);
}

double concurrence_closed_form(const ModelParams& p, double mu, double t) {
  require_mu(mu);
  require_time(t);
  if (mu > positivity_bound(p))
    throw ValidationError("concurrence closed form requires mu <= 1/R4 (P_mu(t) must stay a state)");
  return std::max(0.0, concurrence_raw(p, mu, t));
}

double concurrence_derivative(const ModelParams& p, double mu, double t) {
  require_time(t);
  return 2.0 * mu * std::exp(-2.0 * p.a() * t) / envelope(p, t) * concurrence_rate_factor(p, t);
}

double concurrence_rate_factor(const ModelParams& p, double t) {
  require_time(t);
  const double W = p.Omega();
  const double hyp = std::hypot(W, p.a());
  const double phi = std::acos(std::min(1.0, W / hyp));
  const double b2 = p.b() * p.b();
  return b2 * hyp / (W * W) * std::cos(2.0 * W * t + phi) * std::sin(2.0 * W * t) - p.a();
}

RateFactorMax concurrence_rate_max(const ModelParams& p) {
  const double W = p.Omega();
  const double hyp = std::hypot(W, p.a());
  const double G = p.b() * p.b() / (2.0 * W * W) * (hyp - p.a()) - p.a();
  return {G, 0.5 * r4_max(p).t_star};
}

bool can_create_entanglement(const ModelParams& p) {
  const double b2 = p.b() * p.b();
  return p.a() * p.a() < b2 * b2 / (4.0 * p.omega() * p.omega());
}

WindowSample window_functions(const ModelParams& p, double t_offset) {
  require_time(t_offset);
  const double t_bar = concurrence_rate_max(p).t_bar;
  const double hyp = std::hypot(p.Omega(), p.a());
  const double s = p.b() / p.Omega() * std::sin(2.0 * p.Omega() * (t_bar + t_offset));
  WindowSample out;
  out.f = std::exp(-2.0 * p.a() * t_offset) * std::sqrt(1.0 + s * s) - std::exp(-2.0 * p.a() * t_bar) * p.b() / hyp;
  out.g = concurrence_rate_factor(p, t_bar + t_offset);
  out.headroom = r1_curve(p, t_bar + t_offset) - 3.0;
  return out;
}

WindowReport detect_windows(const ModelParams& p, double t_max_offset, double grid_step) {
  if (!(t_max_offset > 0.0) || !std::isfinite(t_max_offset)) throw ValidationError("window horizon must be > 0");
  if (!(grid_step > 0.0) || !(grid_step <= t_max_offset)) throw ValidationError("window grid step must lie in (0, horizon]");

  WindowReport report;
  report.t_bar = concurrence_rate_max(p).t_bar;
  report.mu_upper_physical = positivity_bound(p);

  auto inside = [&](double t) {
    const WindowSample w = window_functions(p, t);
    return w.f > 0.0 && w.g > 0.0;
  };
  // Boundary between a point inside and one outside the overlap.
  auto bisect = [&](double in, double out) {
    while (std::abs(out - in) > tol::kEndpointBisection) {
      const double mid = 0.5 * (in + out);
      (inside(mid) ? in : out) = mid;
    }
    return in;
  };

  std::vector<double> grid;
  const auto n = static_cast<std::size_t>(std::floor(t_max_offset / grid_step + 1e-9));
  for (std::size_t k = 0; k <= n; ++k) grid.push_back(std::min(static_cast<double>(k) * grid_step, t_max_offset));
  if (grid.back() < t_max_offset) grid.push_back(t_max_offset);

  bool open = false;
  Interval current;
  std::vector<std::vector<double>> samples;
  for (std::size_t k = 0; k < grid.size(); ++k) {
    const bool in = inside(grid[k]);
    if (in && !open) {
      current.t1 = k == 0 ? grid[0] : bisect(grid[k], grid[k - 1]);
      samples.emplace_back();
      open = true;
    } else if (!in && open) {
      current.t2 = bisect(grid[k - 1], grid[k]);
      report.intervals.push_back(current);
      open = false;
    }
    if (in) samples.back().push_back(grid[k]);
  }
  if (open) {
    current.t2 = grid.back();
    report.intervals.push_back(current);
  }

  if (report.intervals.empty()) {
    report.mu_upper_corrected = report.mu_upper_physical;
  } else {
    auto r1 = [&](double t) { return r1_curve(p, report.t_bar + t); };
    double best = 0.0;
    for (std::size_t i = 0; i < report.intervals.size(); ++i) {
      const Interval& iv = report.intervals[i];
      double arg = iv.t1;
      double val = r1(iv.t1);
      for (double t : samples[i])
        if (r1(t) > val) {
          val = r1(t);
          arg = t;
        }
      if (r1(iv.t2) > val) {
        val = r1(iv.t2);
        arg = iv.t2;
      }
      const double lo = std::max(iv.t1, arg - grid_step);
      const double hi = std::min(iv.t2, arg + grid_step);
      if (hi > lo) val = std::max(val, local_max(r1, lo, hi));
      best = std::max(best, val);
    }
    report.mu_upper_corrected = 1.0 / best;
    report.max_headroom = best - 3.0;
  }
  report.kills_all_entanglement = report.mu_upper_corrected <= 1.0 / 3.0 + tol::kKillsThreshold;
  return report;
}

WindowReport detect_windows(const ModelParams& p) {
  const double horizon = std::numbers::pi / p.Omega();
  return detect_windows(p, horizon, horizon / 3999.0);
}

bool partial_transpose_spectrum_check(const ModelParams& p, double mu, double t) {
  auto numeric = hermitian_eigenvalues(partial_transpose_first(evolve_isotropic(p, mu, t)));
  auto closed = eigenvalues_closed_form(p, -mu, t);
  std::sort(closed.begin(), closed.end(), std::greater<>());
  for (std::size_t k = 0; k < 4; ++k)
    if (std::abs(numeric[k] - closed[k]) > 1e-10) return false;
  return true;
}

}  // namespace qslip
