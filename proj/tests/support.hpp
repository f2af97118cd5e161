#pragma once

// Test-only oracles and generators. Kept apart from the library so the checks
// stay independent of the code paths they validate.

#include <Eigen/Dense>

#include <algorithm>
#include <array>
#include <complex>
#include <functional>
#include <random>

#include "qslip/qmat.hpp"

namespace qslip::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20240611);
  return gen;
}

inline double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng()); }

template <std::size_t N>
ComplexMatrix<N> random_matrix() {
  ComplexMatrix<N> m;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) m(i, j) = Complex(uniform(-1, 1), uniform(-1, 1));
  return m;
}

template <std::size_t N>
ComplexMatrix<N> random_hermitian() {
  auto m = random_matrix<N>();
  return (m + adjoint(m)) * 0.5;
}

/// Random density matrix W W^dagger / Tr.
template <std::size_t N>
ComplexMatrix<N> random_state() {
  auto w = random_matrix<N>();
  auto rho = w * adjoint(w);
  return rho * (1.0 / trace(rho).real());
}

/// Eigenvalues (descending) from Eigen's self-adjoint solver.
template <std::size_t N>
std::array<double, N> eigen_reference(const ComplexMatrix<N>& m) {
  Eigen::Matrix<std::complex<double>, N, N> e;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) e(i, j) = m(i, j);
  Eigen::SelfAdjointEigenSolver<Eigen::Matrix<std::complex<double>, N, N>> solver(e, Eigen::EigenvaluesOnly);
  std::array<double, N> out{};
  for (std::size_t k = 0; k < N; ++k) out[k] = solver.eigenvalues()(static_cast<Eigen::Index>(k));
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

/// det(m - x 1) by Gaussian elimination with partial pivoting.
template <std::size_t N>
std::complex<double> characteristic_polynomial(const ComplexMatrix<N>& m, double x) {
  std::array<std::array<std::complex<double>, N>, N> a{};
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) a[i][j] = m(i, j) - (i == j ? x : 0.0);
  std::complex<double> det = 1.0;
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    for (std::size_t r = c + 1; r < N; ++r)
      if (std::abs(a[r][c]) > std::abs(a[piv][c])) piv = r;
    if (std::abs(a[piv][c]) == 0.0) return 0.0;
    if (piv != c) {
      std::swap(a[piv], a[c]);
      det = -det;
    }
    det *= a[c][c];
    for (std::size_t r = c + 1; r < N; ++r) {
      const auto f = a[r][c] / a[c][c];
      for (std::size_t k = c; k < N; ++k) a[r][k] -= f * a[c][k];
    }
  }
  return det;
}

/// Plain Taylor series of exp(t m) with many terms, no scaling (desk-scale norms only).
inline RealMatrix3 series_expm(const RealMatrix3& m, double t) {
  RealMatrix3 a = m * t;
  RealMatrix3 result = RealMatrix3::identity();
  RealMatrix3 term = RealMatrix3::identity();
  for (int k = 1; k < 200; ++k) {
    term = term * a;
    term *= 1.0 / k;
    result += term;
  }
  return result;
}

template <std::size_t N>
double max_diff(const std::array<double, N>& a, const std::array<double, N>& b) {
  double d = 0.0;
  for (std::size_t k = 0; k < N; ++k) d = std::max(d, std::abs(a[k] - b[k]));
  return d;
}

}  // namespace qslip::testing
