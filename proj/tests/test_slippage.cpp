#include "doctest.h"

#include <vector>

#include "qslip/bipartite.hpp"
#include "qslip/errors.hpp"
#include "qslip/slippage.hpp"
#include "support.hpp"

using namespace qslip;
using namespace qslip::testing;

namespace {

std::vector<double> grid(double t_max, double step) {
  std::vector<double> g;
  for (int k = 0; k * step <= t_max + 1e-12; ++k) g.push_back(k * step);
  return g;
}

BlochVector random_pure() {
  const double z = uniform(-1, 1), phi = uniform(0, 2 * 3.141592653589793);
  const double s = std::sqrt(1 - z * z);
  return {s * std::cos(phi), s * std::sin(phi), z};
}

}  // namespace

TEST_CASE("SlippageChannel validation and Kraus completeness") {
  CHECK_THROWS_AS(SlippageChannel(-0.01), ValidationError);
  CHECK_THROWS_AS(SlippageChannel(1.01), ValidationError);
  for (double mu : {0.0, 0.25, 0.4, 0.77, 1.0}) {
    const SlippageChannel c(mu);
    CHECK(c.identity_weight() >= 0.0);
    CHECK(c.pauli_weight() >= 0.0);
    Matrix2 sum;
    for (const auto& k : c.kraus_operators()) sum += adjoint(k) * k;
    CHECK(max_abs_diff(sum, Matrix2::identity()) <= 1e-14);
  }
}

TEST_CASE("apply_slippage") {
  const BlochVector r{0.3, -0.2, 0.9};
  CHECK(apply_slippage(SlippageChannel(1.0), r) == r);
  CHECK(apply_slippage(SlippageChannel(0.0), r) == BlochVector{0, 0, 0});
  CHECK(apply_slippage(SlippageChannel(0.25), {1, 0, 0}) == BlochVector{0.25, 0, 0});
}

TEST_CASE("kraus_apply") {
  const Matrix2 up = density_from_bloch({0, 0, 1});
  CHECK(max_abs_diff(kraus_apply(SlippageChannel(1.0), up), up) <= 1e-15);
  for (int trial = 0; trial < 10; ++trial)
    CHECK(max_abs_diff(kraus_apply(SlippageChannel(0.0), random_state<2>()), Matrix2::identity() * 0.5) <= 1e-15);

  // Bloch path and Kraus path are mutual oracles.
  const SlippageChannel c(0.4);
  for (int trial = 0; trial < 100; ++trial) {
    const BlochVector r = random_pure();
    const Matrix2 via_kraus = kraus_apply(c, density_from_bloch(r));
    const Matrix2 via_bloch = density_from_bloch(apply_slippage(c, r));
    CHECK(max_abs_diff(via_kraus, via_bloch) <= 1e-12);
    CHECK(std::abs(trace(via_kraus) - 1.0) <= 1e-14);
  }
  for (int trial = 0; trial < 100; ++trial) {
    const SlippageChannel ci(uniform(0, 1));
    const Matrix2 rho = random_state<2>();
    CHECK(max_abs_diff(kraus_apply(ci, rho), density_from_bloch(apply_slippage(ci, bloch_from_density(rho)))) <= 1e-12);
  }

  CHECK_THROWS_AS(kraus_apply(c, Matrix2{1.0, 0.3, 0.0, 0.0}), ValidationError);  // not Hermitian
  CHECK_THROWS_AS(kraus_apply(c, Matrix2::identity()), ValidationError);         // trace 2
  CHECK_THROWS_AS(kraus_apply(c, Matrix2{1.5, 0.0, 0.0, -0.5}), ValidationError);  // negative
}

TEST_CASE("PauliMap representation") {
  const ModelParams p(0.1, 0.9, 1.0);
  const PauliMap g = semigroup_map(p, 0.4);
  for (int trial = 0; trial < 20; ++trial) {
    const BlochVector r{uniform(-0.5, 0.5), uniform(-0.5, 0.5), uniform(-0.5, 0.5)};
    CHECK(max_abs_diff(g.apply(density_from_bloch(r)), density_from_bloch(propagate(p, r, 0.4))) <= 1e-14);
  }
  const SlippageChannel c(0.3);
  const PauliMap both = compose(g, slippage_map(c));
  const BlochVector r{0.2, 0.5, -0.1};
  CHECK(max_abs_diff(both.apply(density_from_bloch(r)),
                     density_from_bloch(propagate(p, apply_slippage(c, r), 0.4))) <= 1e-14);
}

TEST_CASE("choi_matrix") {
  const Matrix4 id_choi = choi_matrix(identity_map());
  CHECK(max_abs_diff(id_choi, isotropic(1.0)) <= 1e-15);
  const auto ev = hermitian_eigenvalues(id_choi);
  CHECK(ev[0] == doctest::Approx(1.0).epsilon(1e-14));
  for (int k = 1; k < 4; ++k) CHECK(std::abs(ev[k]) <= 1e-14);

  for (double mu : {0.0, 0.1, 0.25, 1.0 / 3.0, 0.6, 1.0}) {
    const Matrix4 choi = choi_matrix(slippage_map(SlippageChannel(mu)));
    CHECK(max_abs_diff(choi, isotropic(mu)) <= 1e-15);
    CHECK(hermiticity_defect(choi) <= 1e-15);
    CHECK(std::abs(trace(choi) - 1.0) <= 1e-15);
    const auto s = hermitian_eigenvalues(choi);
    const double big = (1 + 3 * mu) / 4, small = (1 - mu) / 4;
    CHECK(std::abs(std::max(big, small) - s[0]) <= 1e-10);
    for (int k = 1; k < 4; ++k) CHECK(std::abs(std::min(big, small) - s[k]) <= 1e-10);
  }

  const ModelParams p(0.1, 0.9, 1.0);
  const Matrix4 choi_t = choi_matrix(semigroup_map(p, 0.5));
  CHECK(max_abs_diff(choi_t, evolve_isotropic(p, 1.0, 0.5)) <= 1e-15);
  CHECK(hermitian_eigenvalues(choi_t)[3] < 0.0);
}

TEST_CASE("is_completely_positive") {
  CHECK_THROWS_AS(is_completely_positive([](double) { return identity_map(); }, std::vector<double>{}),
                  ValidationError);

  const auto g = grid(5.0, 0.01);
  const ModelParams cp(0.3, 0.0, 1.0);
  const CpReport r_cp = is_completely_positive([&](double t) { return semigroup_map(cp, t); }, g);
  CHECK(r_cp.completely_positive);

  const ModelParams pos(1.0, 0.5, 2.0);
  const CpReport r_pos = is_completely_positive([&](double t) { return semigroup_map(pos, t); }, g);
  CHECK_FALSE(r_pos.completely_positive);
  CHECK(r_pos.min_eigenvalue < -1e-8);
  CHECK(r_pos.worst_t > 0.0);

  const ModelParams np(0.1, 0.9, 1.0);
  const SlippageChannel c(positivity_bound(np));
  const CpReport slipped =
      is_completely_positive([&](double t) { return compose(semigroup_map(np, t), slippage_map(c)); }, g);
  CHECK(slipped.completely_positive);
  const CpReport bare = is_completely_positive([&](double t) { return semigroup_map(np, t); }, g);
  CHECK_FALSE(bare.completely_positive);
}

TEST_CASE("Choi minimum eigenvalue grows as mu shrinks") {
  const ModelParams p(0.1, 0.9, 1.0);
  for (double t : {0.2, 0.77, 1.5, 3.0}) {
    double previous = -1.0;
    for (int k = 20; k >= 0; --k) {
      const double mu = k / 20.0;
      const double lowest =
          hermitian_eigenvalues(choi_matrix(compose(semigroup_map(p, t), slippage_map(SlippageChannel(mu)))))[3];
      CHECK(lowest >= previous - 1e-12);
      previous = lowest;
    }
  }
}
