#include "qslip/slippage.hpp"

#include <cmath>
#include <limits>

#include "qslip/errors.hpp"
#include "qslip/tolerances.hpp"

namespace qslip {

SlippageChannel::SlippageChannel(double mu) : mu_(mu) {
  if (!std::isfinite(mu) || mu < 0.0 || mu > 1.0) throw ValidationError("slippage strength mu must lie in [0, 1]");
}

std::array<Matrix2, 4> SlippageChannel::kraus_operators() const {
  const double w0 = std::sqrt(identity_weight());
  const double w1 = std::sqrt(pauli_weight());
  return {Matrix2::identity() * w0, pauli_x() * w1, pauli_y() * w1, pauli_z() * w1};
}

BlochVector apply_slippage(const SlippageChannel& c, const BlochVector& r) {
  return {c.mu() * r.r1, c.mu() * r.r2, c.mu() * r.r3};
}

Matrix2 kraus_apply(const SlippageChannel& c, const Matrix2& rho) {
  if (hermiticity_defect(rho) > tol::kHermitianInput) throw ValidationError("kraus_apply: input is not Hermitian");
  if (std::abs(trace(rho) - 1.0) > tol::kTrace) throw ValidationError("kraus_apply: input trace is not 1");
  if (hermitian_eigenvalues(rho)[1] < -tol::kStateEigenvalue)
    throw ValidationError("kraus_apply: input has a negative eigenvalue");

  Matrix2 out = rho * c.identity_weight();
  for (int k = 1; k <= 3; ++k) {
    const Matrix2 s = pauli(k);
    out += (s * rho * s) * c.pauli_weight();
  }
  return out;
}

Matrix2 PauliMap::apply(const Matrix2& x) const {
  Matrix2 out;
  for (int k = 0; k < 4; ++k) {
    const Complex coeff = 0.5 * trace(pauli(k) * x);
    out += images[k] * coeff;
  }
  return out;
}

PauliMap identity_map() { return {{pauli(0), pauli(1), pauli(2), pauli(3)}}; }

PauliMap semigroup_map(const ModelParams& p, double t) {
  const RealMatrix3 g = propagator_matrix(p, t);
  PauliMap m;
  m.images[0] = Matrix2::identity();
  for (int k = 1; k <= 3; ++k) {
    Matrix2 img;
    for (int j = 1; j <= 3; ++j) img += pauli(j) * g(j - 1, k - 1);
    m.images[k] = img;
  }
  return m;
}

PauliMap slippage_map(const SlippageChannel& c) {
  return {{pauli(0), pauli(1) * c.mu(), pauli(2) * c.mu(), pauli(3) * c.mu()}};
}

PauliMap compose(const PauliMap& outer, const PauliMap& inner) {
  PauliMap m;
  for (int k = 0; k < 4; ++k) m.images[k] = outer.apply(inner.images[k]);
  return m;
}

Matrix4 choi_matrix(const PauliMap& map) {
  // |i><j| in the Pauli basis.
  const Complex i(0.0, 1.0);
  const Matrix2 e00 = (pauli(0) + pauli(3)) * 0.5;
  const Matrix2 e11 = (pauli(0) - pauli(3)) * 0.5;
  const Matrix2 e01 = (pauli(1) + pauli(2) * i) * 0.5;
  const Matrix2 e10 = (pauli(1) - pauli(2) * i) * 0.5;
  const std::array<std::array<Matrix2, 2>, 2> units{{{e00, e01}, {e10, e11}}};

  Matrix4 out;
  for (int r = 0; r < 2; ++r)
    for (int c = 0; c < 2; ++c) out += tensor(map.apply(units[r][c]), units[r][c]) * 0.5;
  return out;
}

CpReport is_completely_positive(const MapFamily& family, std::span<const double> t_grid) {
  if (t_grid.empty()) throw ValidationError("is_completely_positive: empty time grid");
  CpReport report;
  report.min_eigenvalue = std::numeric_limits<double>::infinity();
  for (double t : t_grid) {
    if (!(t >= 0.0)) throw ValidationError("is_completely_positive: grid times must be >= 0");
    const double lowest = hermitian_eigenvalues(choi_matrix(family(t)))[3];
    if (lowest < report.min_eigenvalue) {
      report.min_eigenvalue = lowest;
      report.worst_t = t;
    }
  }
  report.completely_positive = report.min_eigenvalue >= -tol::kCompletePositivity;
  return report;
}

}  // namespace qslip
