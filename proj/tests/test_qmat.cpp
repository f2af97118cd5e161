#include "doctest.h"

#include "qslip/bipartite.hpp"
#include "qslip/errors.hpp"
#include "qslip/qmat.hpp"
#include "qslip/semigroup.hpp"
#include "support.hpp"

using namespace qslip;
using namespace qslip::testing;

TEST_CASE("hermitian_eigenvalues: identity and diagonal") {
  const auto id = hermitian_eigenvalues(Matrix4::identity());
  for (double v : id) CHECK(v == doctest::Approx(1.0).epsilon(1e-15));

  const auto d = hermitian_eigenvalues(Matrix4::diagonal({-0.75, 0.25, 0.75, -0.25}));
  CHECK(d[0] == 0.75);
  CHECK(d[1] == 0.25);
  CHECK(d[2] == -0.25);
  CHECK(d[3] == -0.75);
}

TEST_CASE("hermitian_eigenvalues: P_mu(t) spectrum matches closed forms") {
  const ModelParams p(0.1, 0.9, 1.0);
  const Matrix4 m = evolve_isotropic(p, 0.2, 0.5);
  const auto numeric = hermitian_eigenvalues(m);
  auto closed = eigenvalues_closed_form(p, 0.2, 0.5);
  std::sort(closed.begin(), closed.end(), std::greater<>());
  CHECK(max_diff(numeric, closed) <= 1e-10);

  // Each closed-form value is a root of det(M - x 1); a small shift is not.
  for (double e : closed) CHECK(std::abs(characteristic_polynomial(m, e)) <= 1e-12);
  CHECK(std::abs(characteristic_polynomial(m, closed[0] + 1e-3)) > 1e-8);
  CHECK(max_diff(numeric, eigen_reference(m)) <= 1e-12);
}

TEST_CASE("hermitian_eigenvalues rejects non-Hermitian input") {
  Matrix2 m{1.0, 0.5, 0.0, 1.0};
  CHECK_THROWS_AS(hermitian_eigenvalues(m), ValidationError);
}

TEST_CASE("hermitian_eigensystem reconstructs random Hermitian matrices") {
  for (int trial = 0; trial < 200; ++trial) {
    const Matrix4 m = random_hermitian<4>();
    const auto es = hermitian_eigensystem(m);
    const Matrix4 rebuilt = es.vectors * Matrix4::diagonal(es.values) * adjoint(es.vectors);
    CHECK(max_abs_diff(rebuilt, m) <= 1e-10);
    double sum = 0.0;
    for (double v : es.values) sum += v;
    CHECK(std::abs(sum - trace(m).real()) <= 1e-10);
    CHECK(max_abs_diff(adjoint(es.vectors) * es.vectors, Matrix4::identity()) <= 1e-12);
    CHECK(max_diff(es.values, eigen_reference(m)) <= 1e-10);
    CHECK(std::is_sorted(es.values.begin(), es.values.end(), std::greater<>()));
  }
}

TEST_CASE("expm_real3: trivial cases") {
  const RealMatrix3 zero;
  CHECK(max_abs(expm_real3(zero, 3.0) - RealMatrix3::identity()) == 0.0);
  const RealMatrix3 m{0.3, 1.2, 0.0, -0.7, 0.3, 0.0, 0.0, 0.0, 0.0};
  CHECK(max_abs(expm_real3(m, 0.0) - RealMatrix3::identity()) == 0.0);
}

TEST_CASE("expm_real3 matches the plain series and the analytic propagator") {
  const ModelParams p(0.1, 0.9, 1.0);
  const RealMatrix3 minus_two_L = generator(p).full * -2.0;
  for (double t : {0.05, 0.3, 0.7, 1.0}) {
    CHECK(max_abs(expm_real3(minus_two_L, t) - series_expm(minus_two_L, t)) <= 1e-12);
  }
  for (double t : {0.0, 0.5, 1.7, 4.0, 9.0}) {
    CHECK(max_abs(expm_real3(minus_two_L, t) - propagator_matrix(p, t)) <= 1e-10);
  }
}

TEST_CASE("expm_real3 semigroup property") {
  for (int trial = 0; trial < 100; ++trial) {
    RealMatrix3 m;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m(i, j) = uniform(-1, 1);
    const double t = uniform(0, 5);
    const double s = uniform(0, 5);
    const RealMatrix3 lhs = expm_real3(m, t) * expm_real3(m, s);
    const RealMatrix3 rhs = expm_real3(m, t + s);
    CHECK(max_abs(lhs - rhs) <= 1e-10 * std::max(1.0, max_abs(rhs)));
  }
}

TEST_CASE("tensor: Kronecker layout") {
  CHECK(tensor(Matrix2::identity(), Matrix2::identity()) == Matrix4::identity());
  CHECK(tensor(pauli_z(), pauli_z()) == Matrix4::diagonal({1, -1, -1, 1}));

  // sigma_1 (x) sigma_2: blocks [[0, s2], [s2, 0]].
  const Matrix4 xy = tensor(pauli_x(), pauli_y());
  const Complex i(0.0, 1.0);
  Matrix4 expected;
  expected(0, 3) = -i;
  expected(1, 2) = i;
  expected(2, 1) = -i;
  expected(3, 0) = i;
  CHECK(xy == expected);
}

TEST_CASE("tensor: bilinearity and mixed product") {
  for (int trial = 0; trial < 100; ++trial) {
    const auto a = random_matrix<2>(), b = random_matrix<2>(), c = random_matrix<2>(), d = random_matrix<2>();
    const Complex s(uniform(-1, 1), uniform(-1, 1));
    CHECK(max_abs_diff(tensor(a, b) * tensor(c, d), tensor(a * c, b * d)) <= 1e-12);
    CHECK(max_abs_diff(tensor(a + c * s, b), tensor(a, b) + tensor(c, b) * s) <= 1e-12);
    CHECK(max_abs_diff(tensor(a, b + d * s), tensor(a, b) + tensor(a, d) * s) <= 1e-12);
  }
}

TEST_CASE("partial_transpose_first") {
  const Matrix4 sep = Matrix4::diagonal({0.1, 0.2, 0.3, 0.4});
  CHECK(partial_transpose_first(sep) == sep);

  const Matrix4 bell = isotropic(1.0);
  const auto spec = hermitian_eigenvalues(partial_transpose_first(bell));
  CHECK(spec[3] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(spec[3] == doctest::Approx(eigen_reference(partial_transpose_first(bell))[3]).epsilon(1e-12));

  for (int trial = 0; trial < 50; ++trial) {
    const Matrix4 m = random_hermitian<4>();
    const Matrix4 pt = partial_transpose_first(m);
    CHECK(partial_transpose_first(pt) == m);
    CHECK(std::abs(trace(pt) - trace(m)) <= 1e-14);
    CHECK(hermiticity_defect(pt) <= 1e-14);
  }

  // (A (x) B)^{T_1} = A^T (x) B
  const auto a = random_matrix<2>(), b = random_matrix<2>();
  Matrix2 at;
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) at(i, j) = a(j, i);
  CHECK(max_abs_diff(partial_transpose_first(tensor(a, b)), tensor(at, b)) <= 1e-15);
}

TEST_CASE("partial_trace_first") {
  const auto a = random_state<2>(), b = random_state<2>();
  CHECK(max_abs_diff(partial_trace_first(tensor(a, b)), b) <= 1e-14);
}
