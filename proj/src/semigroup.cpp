#include "qslip/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "qslip/errors.hpp"
#include "qslip/tolerances.hpp"

namespace qslip {

namespace {

bool finite(double x) { return std::isfinite(x); }

void require_time(double t) {
  if (!(t >= 0.0) || !finite(t)) throw ValidationError("time must be finite and >= 0");
}

}  // namespace

ModelParams::ModelParams(double a, double b, double omega) : a_(a), b_(b), omega_(omega) {
  if (!finite(a) || !finite(b) || !finite(omega)) throw ValidationError("model parameters must be finite");
  if (a < 0.0) throw ValidationError("a must be >= 0");
  if (b < 0.0) throw ValidationError("b must be >= 0");
  if (!(omega > b)) {
    std::ostringstream msg;
    msg << "omega must exceed b (omega=" << omega << ", b=" << b << ")";
    throw ValidationError(msg.str());
  }
  Omega_ = std::sqrt((omega - b) * (omega + b));
}

double BlochVector::norm() const { return std::sqrt(norm_squared()); }

bool BlochVector::is_state() const { return norm() <= 1.0 + tol::kBlochState; }

Matrix2 density_from_bloch(const BlochVector& r) {
  return {Complex(0.5 * (1.0 + r.r3)), Complex(0.5 * r.r1, -0.5 * r.r2), Complex(0.5 * r.r1, 0.5 * r.r2),
          Complex(0.5 * (1.0 - r.r3))};
}

BlochVector bloch_from_density(const Matrix2& rho) {
  if (hermiticity_defect(rho) > tol::kHermitianInput) throw ValidationError("density matrix is not Hermitian");
  if (std::abs(trace(rho) - 1.0) > tol::kTrace) throw ValidationError("density matrix must have unit trace");
  return {2.0 * rho(0, 1).real(), -2.0 * rho(0, 1).imag(), (rho(0, 0) - rho(1, 1)).real()};
}

std::string_view to_string(Classification c) {
  switch (c) {
    case Classification::CompletelyPositive: return "CompletelyPositive";
    case Classification::PositiveNotCP: return "PositiveNotCP";
    case Classification::NonPositive: return "NonPositive";
  }
  return "unknown";
}

Classification classify(double a, double b, double omega) {
  if (!finite(a) || !finite(b) || !finite(omega)) throw ValidationError("model parameters must be finite");
  if (a < 0.0) throw ValidationError("a must be >= 0");
  if (!(omega > std::abs(b))) throw ValidationError("omega must exceed |b|");
  if (b == 0.0) return Classification::CompletelyPositive;
  if (a * a >= b * b) return Classification::PositiveNotCP;
  return Classification::NonPositive;
}

Classification classify(const ModelParams& p) { return classify(p.a(), p.b(), p.omega()); }

void StochasticFieldParams::validate() const {
  const double all[] = {G1, G2, G3, lambda, lambda3, omega_tilde};
  for (double v : all)
    if (!finite(v) || !(v > 0.0)) throw ValidationError("stochastic field constants must be finite and > 0");
  if (!(G1 > G2)) throw ValidationError("stochastic field requires G1 > G2");
}

ModelParams DerivedParams::model() const { return ModelParams(a, std::abs(b_raw), omega); }

DerivedParams derive_params(const StochasticFieldParams& s) {
  s.validate();
  const double w = s.omega_tilde;
  const double denom = s.lambda * s.lambda + 4.0 * w * w;
  DerivedParams out;
  out.omega = w * (1.0 + 2.0 * (s.G1 + s.G2) / denom);
  out.alpha1 = 2.0 * s.G1 * s.lambda / denom;
  out.alpha2 = 2.0 * s.G2 * s.lambda / denom;
  out.a = 2.0 * s.G3 / s.lambda3;
  out.b_raw = 2.0 * w * (s.G2 - s.G1) / denom;
  return out;
}

Generator generator(const ModelParams& p) {
  const double a = p.a();
  const double b = p.b();
  const double w = p.omega();
  Generator g;
  g.hamiltonian = {0, w, 0, -w, 0, 0, 0, 0, 0};
  g.dissipator = {a, b, 0, b, a, 0, 0, 0, 0};
  g.full = {a, b + w, 0, b - w, a, 0, 0, 0, 0};
  return g;
}

RealMatrix3 propagator_matrix(const ModelParams& p, double t) {
  require_time(t);
  const double W = p.Omega();
  const double decay = std::exp(-2.0 * p.a() * t);
  const double c = std::cos(2.0 * W * t);
  const double s = std::sin(2.0 * W * t);
  return {decay * c, -decay * (p.omega() + p.b()) / W * s, 0.0,
          decay * (p.omega() - p.b()) / W * s, decay * c, 0.0,
          0.0, 0.0, 1.0};
}

BlochVector propagate(const ModelParams& p, const BlochVector& r, double t) {
  require_time(t);
  const double W = p.Omega();
  const double decay = std::exp(-2.0 * p.a() * t);
  const double c = std::cos(2.0 * W * t);
  const double s = std::sin(2.0 * W * t);
  return {decay * (r.r1 * c - r.r2 * (p.omega() + p.b()) / W * s),
          decay * (r.r1 * (p.omega() - p.b()) / W * s + r.r2 * c),
          r.r3};
}

double exit_rate(const ModelParams& p, const BlochVector& r) {
  const RealMatrix3 d = generator(p).dissipator;
  const auto v = r.as_array();
  const auto dv = d.apply(v);
  return -2.0 * (v[0] * dv[0] + v[1] * dv[1] + v[2] * dv[2]);
}

double norm_bound_curve(const ModelParams& p, double t) {
  require_time(t);
  const double x = p.b() / p.Omega() * std::abs(std::sin(2.0 * t * p.Omega()));
  const double root = x + std::sqrt(1.0 + x * x);
  return std::exp(-4.0 * p.a() * t) * root * root;
}

NormBound norm_bound_max(const ModelParams& p) {
  const double a = p.a();
  const double b = p.b();
  if (a * a >= b * b) return {1.0, 0.0};
  const double W = p.Omega();
  const double q = std::sqrt(b * b - a * a);
  const double arg = std::min(1.0, W / b * std::sqrt((b * b - a * a) / (W * W + a * a)));
  const double t_prime = std::asin(arg) / (2.0 * W);
  const double R = std::exp(-2.0 * a * t_prime) * std::sqrt((p.omega() + q) / (p.omega() - q));
  return {R, t_prime};
}

}  // namespace qslip
