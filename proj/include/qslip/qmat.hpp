#pragma once

// Small dense matrices: complex 2x2 / 3x3 / 4x4 and real 3x3.

#include <algorithm>
#include <array>
#include <complex>
#include <cstddef>
#include <initializer_list>

namespace qslip {

using Complex = std::complex<double>;

/// Row-major complex N x N matrix, N in {2, 3, 4}.
template <std::size_t N>
class ComplexMatrix {
  static_assert(N >= 2 && N <= 4, "ComplexMatrix supports dimensions 2, 3 and 4");

 public:
  static constexpr std::size_t kDim = N;

  constexpr ComplexMatrix() = default;

  /// Row-major entries; fewer than N*N values leave the tail zero.
  ComplexMatrix(std::initializer_list<Complex> entries) {
    std::size_t k = 0;
    for (const auto& e : entries) {
      if (k == N * N) break;
      data_[k++] = e;
    }
  }

  static ComplexMatrix identity() {
    ComplexMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = 1.0;
    return m;
  }

  static ComplexMatrix diagonal(const std::array<double, N>& d) {
    ComplexMatrix m;
    for (std::size_t i = 0; i < N; ++i) m(i, i) = d[i];
    return m;
  }

  constexpr std::size_t dim() const { return N; }

  Complex& operator()(std::size_t r, std::size_t c) { return data_[r * N + c]; }
  const Complex& operator()(std::size_t r, std::size_t c) const { return data_[r * N + c]; }

  const std::array<Complex, N * N>& entries() const { return data_; }

  ComplexMatrix& operator+=(const ComplexMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] += o.data_[k];
    return *this;
  }
  ComplexMatrix& operator-=(const ComplexMatrix& o) {
    for (std::size_t k = 0; k < N * N; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  ComplexMatrix& operator*=(Complex s) {
    for (auto& e : data_) e *= s;
    return *this;
  }

  friend ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
  friend ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
  friend ComplexMatrix operator*(ComplexMatrix a, Complex s) { return a *= s; }
  friend ComplexMatrix operator*(Complex s, ComplexMatrix a) { return a *= s; }
  friend ComplexMatrix operator*(ComplexMatrix a, double s) { return a *= Complex(s); }
  friend ComplexMatrix operator*(double s, ComplexMatrix a) { return a *= Complex(s); }

  friend ComplexMatrix operator*(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out;
    for (std::size_t i = 0; i < N; ++i)
      for (std::size_t k = 0; k < N; ++k) {
        const Complex aik = a(i, k);
        if (aik == Complex(0.0)) continue;
        for (std::size_t j = 0; j < N; ++j) out(i, j) += aik * b(k, j);
      }
    return out;
  }

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::array<Complex, N * N> data_{};
};

using Matrix2 = ComplexMatrix<2>;
using Matrix3 = ComplexMatrix<3>;
using Matrix4 = ComplexMatrix<4>;

/// Row-major real 3x3 matrix.
class RealMatrix3 {
 public:
  constexpr RealMatrix3() = default;
  RealMatrix3(std::initializer_list<double> entries) {
    std::size_t k = 0;
    for (double e : entries) {
      if (k == 9) break;
      data_[k++] = e;
    }
  }

  static RealMatrix3 identity() { return {1, 0, 0, 0, 1, 0, 0, 0, 1}; }

  double& operator()(std::size_t r, std::size_t c) { return data_[r * 3 + c]; }
  double operator()(std::size_t r, std::size_t c) const { return data_[r * 3 + c]; }

  RealMatrix3& operator+=(const RealMatrix3& o) {
    for (std::size_t k = 0; k < 9; ++k) data_[k] += o.data_[k];
    return *this;
  }
  RealMatrix3& operator-=(const RealMatrix3& o) {
    for (std::size_t k = 0; k < 9; ++k) data_[k] -= o.data_[k];
    return *this;
  }
  RealMatrix3& operator*=(double s) {
    for (auto& e : data_) e *= s;
    return *this;
  }
  friend RealMatrix3 operator+(RealMatrix3 a, const RealMatrix3& b) { return a += b; }
  friend RealMatrix3 operator-(RealMatrix3 a, const RealMatrix3& b) { return a -= b; }
  friend RealMatrix3 operator*(RealMatrix3 a, double s) { return a *= s; }
  friend RealMatrix3 operator*(double s, RealMatrix3 a) { return a *= s; }
  friend RealMatrix3 operator*(const RealMatrix3& a, const RealMatrix3& b) {
    RealMatrix3 out;
    for (std::size_t i = 0; i < 3; ++i)
      for (std::size_t j = 0; j < 3; ++j) {
        double s = 0.0;
        for (std::size_t k = 0; k < 3; ++k) s += a(i, k) * b(k, j);
        out(i, j) = s;
      }
    return out;
  }
  std::array<double, 3> apply(const std::array<double, 3>& v) const {
    std::array<double, 3> out{};
    for (std::size_t i = 0; i < 3; ++i)
      out[i] = (*this)(i, 0) * v[0] + (*this)(i, 1) * v[1] + (*this)(i, 2) * v[2];
    return out;
  }

  friend bool operator==(const RealMatrix3&, const RealMatrix3&) = default;

 private:
  std::array<double, 9> data_{};
};

// --- elementwise helpers -----------------------------------------------------

template <std::size_t N>
ComplexMatrix<N> adjoint(const ComplexMatrix<N>& m) {
  ComplexMatrix<N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out(i, j) = std::conj(m(j, i));
  return out;
}

/// Entrywise complex conjugate (rho^* in a fixed basis).
template <std::size_t N>
ComplexMatrix<N> conjugate(const ComplexMatrix<N>& m) {
  ComplexMatrix<N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out(i, j) = std::conj(m(i, j));
  return out;
}

template <std::size_t N>
Complex trace(const ComplexMatrix<N>& m) {
  Complex s = 0.0;
  for (std::size_t i = 0; i < N; ++i) s += m(i, i);
  return s;
}

/// max_ij |m_ij|
template <std::size_t N>
double max_abs(const ComplexMatrix<N>& m) {
  double best = 0.0;
  for (const auto& e : m.entries()) best = std::max(best, std::abs(e));
  return best;
}

template <std::size_t N>
double max_abs_diff(const ComplexMatrix<N>& a, const ComplexMatrix<N>& b) {
  return max_abs(a - b);
}

/// max |M - M^dagger|
template <std::size_t N>
double hermiticity_defect(const ComplexMatrix<N>& m) {
  return max_abs(m - adjoint(m));
}

double max_abs(const RealMatrix3& m);
RealMatrix3 transpose(const RealMatrix3& m);

// --- Pauli matrices ----------------------------------------------------------

Matrix2 pauli_x();
Matrix2 pauli_y();
Matrix2 pauli_z();
/// sigma_k for k in {1,2,3}; k = 0 gives the identity.
Matrix2 pauli(int k);

// --- decompositions and structured products ---------------------------------

template <std::size_t N>
struct EigenSystem {
  std::array<double, N> values;  // descending
  ComplexMatrix<N> vectors;      // column k belongs to values[k]
};

/// Eigenvalues of a Hermitian matrix, descending. Cyclic Jacobi rotations.
/// Throws ValidationError if max|M - M^dagger| exceeds tol::kHermitianInput.
template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const ComplexMatrix<N>& m);

template <std::size_t N>
EigenSystem<N> hermitian_eigensystem(const ComplexMatrix<N>& m);

/// Eigenvalues of a real symmetric 3x3 matrix, descending.
std::array<double, 3> symmetric_eigenvalues(const RealMatrix3& m);

/// exp(t * m) by scaling and squaring of a truncated Taylor series.
RealMatrix3 expm_real3(const RealMatrix3& m, double t);

/// Kronecker product a (x) b in the |00>,|01>,|10>,|11> basis.
Matrix4 tensor(const Matrix2& a, const Matrix2& b);

/// Transpose on the first tensor factor.
Matrix4 partial_transpose_first(const Matrix4& m);

/// Trace over the first factor, leaving the second qubit.
Matrix2 partial_trace_first(const Matrix4& m);

}  // namespace qslip
