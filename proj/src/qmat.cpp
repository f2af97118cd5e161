#include "qslip/qmat.hpp"

#include <cmath>
#include <sstream>
#include <utility>

#include "qslip/errors.hpp"
#include "qslip/tolerances.hpp"

namespace qslip {

double max_abs(const RealMatrix3& m) {
  double best = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) best = std::max(best, std::abs(m(i, j)));
  return best;
}

RealMatrix3 transpose(const RealMatrix3& m) {
  RealMatrix3 out;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) out(i, j) = m(j, i);
  return out;
}

Matrix2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
Matrix2 pauli_y() { return {0.0, Complex(0.0, -1.0), Complex(0.0, 1.0), 0.0}; }
Matrix2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

Matrix2 pauli(int k) {
  switch (k) {
    case 0: return Matrix2::identity();
    case 1: return pauli_x();
    case 2: return pauli_y();
    case 3: return pauli_z();
    default: break;
  }
  throw ValidationError("pauli index must be 0..3");
}

namespace {

template <std::size_t N>
double off_diagonal_norm(const ComplexMatrix<N>& a) {
  double s = 0.0;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j)
      if (i != j) s += std::norm(a(i, j));
  return std::sqrt(s);
}

template <std::size_t N>
double frobenius(const ComplexMatrix<N>& a) {
  double s = 0.0;
  for (const auto& e : a.entries()) s += std::norm(e);
  return std::sqrt(s);
}

// Cyclic complex Jacobi. Each (p,q) rotation is V = diag(1, e^{-i phi}) * R(theta)
// restricted to rows/cols p,q, which first makes a_pq real and then zeroes it.
template <std::size_t N>
EigenSystem<N> jacobi(const ComplexMatrix<N>& input, bool want_vectors) {
  if (hermiticity_defect(input) > tol::kHermitianInput) {
    std::ostringstream msg;
    msg << "matrix is not Hermitian (defect " << hermiticity_defect(input) << ")";
    throw ValidationError(msg.str());
  }
  // Symmetrize so the iteration sees an exactly Hermitian matrix.
  ComplexMatrix<N> a = (input + adjoint(input)) * 0.5;
  ComplexMatrix<N> v = ComplexMatrix<N>::identity();

  const double threshold = tol::kJacobiOffDiagonal * std::max(1.0, frobenius(a));
  for (int sweep = 0; sweep < tol::kJacobiMaxSweeps; ++sweep) {
    if (off_diagonal_norm(a) <= threshold) break;
    for (std::size_t p = 0; p + 1 < N; ++p) {
      for (std::size_t q = p + 1; q < N; ++q) {
        const Complex apq = a(p, q);
        const double g = std::abs(apq);
        if (g < 1e-300) continue;
        const Complex phase = apq / g;  // e^{i phi}
        const double app = a(p, p).real();
        const double aqq = a(q, q).real();
        const double theta = (aqq - app) / (2.0 * g);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        // V entries on the (p,q) block.
        const Complex vpp = c;
        const Complex vpq = s;
        const Complex vqp = -s * std::conj(phase);
        const Complex vqq = c * std::conj(phase);

        // a <- a V (columns p,q)
        for (std::size_t k = 0; k < N; ++k) {
          const Complex akp = a(k, p);
          const Complex akq = a(k, q);
          a(k, p) = akp * vpp + akq * vqp;
          a(k, q) = akp * vpq + akq * vqq;
        }
        // a <- V^dagger a (rows p,q)
        for (std::size_t k = 0; k < N; ++k) {
          const Complex apk = a(p, k);
          const Complex aqk = a(q, k);
          a(p, k) = std::conj(vpp) * apk + std::conj(vqp) * aqk;
          a(q, k) = std::conj(vpq) * apk + std::conj(vqq) * aqk;
        }
        a(p, q) = 0.0;
        a(q, p) = 0.0;
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();

        if (want_vectors) {
          for (std::size_t k = 0; k < N; ++k) {
            const Complex vkp = v(k, p);
            const Complex vkq = v(k, q);
            v(k, p) = vkp * vpp + vkq * vqp;
            v(k, q) = vkp * vpq + vkq * vqq;
          }
        }
      }
    }
  }

  std::array<std::size_t, N> order{};
  for (std::size_t i = 0; i < N; ++i) order[i] = i;
  std::sort(order.begin(), order.end(),
            [&](std::size_t l, std::size_t r) { return a(l, l).real() > a(r, r).real(); });

  EigenSystem<N> out{};
  for (std::size_t k = 0; k < N; ++k) {
    out.values[k] = a(order[k], order[k]).real();
    if (want_vectors)
      for (std::size_t r = 0; r < N; ++r) out.vectors(r, k) = v(r, order[k]);
  }
  return out;
}

}  // namespace

template <std::size_t N>
std::array<double, N> hermitian_eigenvalues(const ComplexMatrix<N>& m) {
  return jacobi(m, false).values;
}

template <std::size_t N>
EigenSystem<N> hermitian_eigensystem(const ComplexMatrix<N>& m) {
  return jacobi(m, true);
}

template std::array<double, 2> hermitian_eigenvalues(const Matrix2&);
template std::array<double, 3> hermitian_eigenvalues(const Matrix3&);
template std::array<double, 4> hermitian_eigenvalues(const Matrix4&);
template EigenSystem<2> hermitian_eigensystem(const Matrix2&);
template EigenSystem<3> hermitian_eigensystem(const Matrix3&);
template EigenSystem<4> hermitian_eigensystem(const Matrix4&);

std::array<double, 3> symmetric_eigenvalues(const RealMatrix3& m) {
  if (max_abs(m - transpose(m)) > tol::kHermitianInput)
    throw ValidationError("matrix is not symmetric");
  Matrix3 c;
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) c(i, j) = m(i, j);
  return hermitian_eigenvalues(c);
}

RealMatrix3 expm_real3(const RealMatrix3& m, double t) {
  RealMatrix3 a = m * t;

  double inf_norm = 0.0;
  for (std::size_t i = 0; i < 3; ++i)
    inf_norm = std::max(inf_norm, std::abs(a(i, 0)) + std::abs(a(i, 1)) + std::abs(a(i, 2)));
  int squarings = 0;
  if (inf_norm > 0.5) {
    squarings = static_cast<int>(std::ceil(std::log2(inf_norm / 0.5)));
    a *= std::ldexp(1.0, -squarings);
  }

  RealMatrix3 result = RealMatrix3::identity();
  RealMatrix3 term = RealMatrix3::identity();
  for (int k = 1; k < 64; ++k) {
    term = term * a;
    term *= 1.0 / k;
    result += term;
    if (max_abs(term) < tol::kTaylorTerm) break;
  }
  for (int s = 0; s < squarings; ++s) result = result * result;
  return result;
}

Matrix4 tensor(const Matrix2& a, const Matrix2& b) {
  Matrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * i + k, 2 * j + l) = a(i, j) * b(k, l);
  return out;
}

Matrix4 partial_transpose_first(const Matrix4& m) {
  // Row index 2i+k, column 2j+l  ->  row 2j+k, column 2i+l.
  Matrix4 out;
  for (std::size_t i = 0; i < 2; ++i)
    for (std::size_t j = 0; j < 2; ++j)
      for (std::size_t k = 0; k < 2; ++k)
        for (std::size_t l = 0; l < 2; ++l) out(2 * j + k, 2 * i + l) = m(2 * i + k, 2 * j + l);
  return out;
}

Matrix2 partial_trace_first(const Matrix4& m) {
  Matrix2 out;
  for (std::size_t k = 0; k < 2; ++k)
    for (std::size_t l = 0; l < 2; ++l) out(k, l) = m(k, l) + m(2 + k, 2 + l);
  return out;
}

}  // namespace qslip
