#pragma once

// Slippage channel S_mu (uniform contraction of the Bloch ball) and the
// Choi/Jamiolkowski complete-positivity test for qubit maps.

#include <array>
#include <functional>
#include <span>

#include "qslip/qmat.hpp"
#include "qslip/semigroup.hpp"

namespace qslip {

class SlippageChannel {
 public:
  /// Throws ValidationError unless 0 <= mu <= 1.
  explicit SlippageChannel(double mu);

  double mu() const { return mu_; }

  /// Weight (1 + 3mu)/4 of the identity term.
  double identity_weight() const { return 0.25 * (1.0 + 3.0 * mu_); }
  /// Weight (1 - mu)/4 of each sigma_i rho sigma_i term.
  double pauli_weight() const { return 0.25 * (1.0 - mu_); }

  /// {sqrt(w0) 1, sqrt(w1) sigma_1, sqrt(w1) sigma_2, sqrt(w1) sigma_3}
  std::array<Matrix2, 4> kraus_operators() const;

 private:
  double mu_;
};

/// r -> mu r
BlochVector apply_slippage(const SlippageChannel& c, const BlochVector& r);

/// ((1+3mu)/4) rho + ((1-mu)/4) sum_i sigma_i rho sigma_i. Requires a state.
Matrix2 kraus_apply(const SlippageChannel& c, const Matrix2& rho);

/// A linear qubit map stored by its images of {1, sigma_1, sigma_2, sigma_3}.
struct PauliMap {
  std::array<Matrix2, 4> images;

  Matrix2 apply(const Matrix2& x) const;
};

PauliMap identity_map();
/// gamma_t, with gamma_t[sigma_k] = sum_j (G_t)_{jk} sigma_j.
PauliMap semigroup_map(const ModelParams& p, double t);
PauliMap slippage_map(const SlippageChannel& c);
/// outer o inner
PauliMap compose(const PauliMap& outer, const PauliMap& inner);

/// (map (x) id)[P] with P the projector onto (|00> + |11>)/sqrt(2).
Matrix4 choi_matrix(const PauliMap& map);

using MapFamily = std::function<PauliMap(double)>;

struct CpReport {
  bool completely_positive = true;
  double worst_t = 0.0;
  double min_eigenvalue = 0.0;
};

/// Scans the Choi spectrum of family(t) for every t in t_grid. The family is
/// completely positive on the grid iff every minimum eigenvalue is
/// >= -tol::kCompletePositivity. Throws on an empty grid or negative times.
CpReport is_completely_positive(const MapFamily& family, std::span<const double> t_grid);

}  // namespace qslip
