#pragma once

// Small dense linear algebra used throughout the library.  Dimensions are
// tiny (metrics are 1x1..4x4, Hamiltonians up to ~16k only as vectors), so
// plain Gaussian elimination and O(n^2) loops are all we need.

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "geosho/errors.hpp"

namespace geosho {

using cdouble = std::complex<double>;
using cvec = std::vector<cdouble>;
using rvec = std::vector<double>;

// Compensated (Kahan) summation: keeps long accumulations near 1 ulp.
inline double kahan_sum(const rvec& xs) {
  double sum = 0.0, comp = 0.0;
  for (double x : xs) {
    double y = x - comp;
    double t = sum + y;
    comp = (t - sum) - y;
    sum = t;
  }
  return sum;
}

// <a|b>, antilinear in the first argument (physics convention).
inline cdouble inner(const cvec& a, const cvec& b) {
  if (a.size() != b.size())
    throw ContractError("inner: dimension mismatch (" + std::to_string(a.size()) +
                        " vs " + std::to_string(b.size()) + ")");
  cdouble s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += std::conj(a[i]) * b[i];
  return s;
}

inline double norm(const cvec& a) {
  double s = 0.0;
  for (const cdouble& z : a) s += std::norm(z);
  return std::sqrt(s);
}

inline cvec axpy(cdouble alpha, const cvec& x, const cvec& y) {
  if (x.size() != y.size()) throw ContractError("axpy: dimension mismatch");
  cvec r(y);
  for (std::size_t i = 0; i < x.size(); ++i) r[i] += alpha * x[i];
  return r;
}

inline cvec scaled(cdouble alpha, const cvec& x) {
  cvec r(x);
  for (cdouble& z : r) z *= alpha;
  return r;
}

// Dense real square matrix, row-major.
struct SquareMatrix {
  int n = 0;
  rvec a;

  SquareMatrix() = default;
  explicit SquareMatrix(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0.0) {}

  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  static SquareMatrix identity(int dim) {
    SquareMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  static SquareMatrix diagonal(const rvec& d) {
    SquareMatrix m(static_cast<int>(d.size()));
    for (int i = 0; i < m.n; ++i) m(i, i) = d[static_cast<std::size_t>(i)];
    return m;
  }

  double max_asymmetry() const {
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        worst = std::max(worst, std::abs((*this)(i, j) - (*this)(j, i)));
    return worst;
  }
};

// Inverse by Gauss-Jordan with partial pivoting.  Throws SingularMetricError
// when |det| falls below the invertibility guard.  If det_out is non-null the
// determinant is stored there.
inline SquareMatrix inverse(const SquareMatrix& m, double* det_out = nullptr) {
  const int n = m.n;
  SquareMatrix work = m, inv = SquareMatrix::identity(n);
  double det = 1.0;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(work(r, col)) > std::abs(work(pivot, col))) pivot = r;
    if (pivot != col) {
      for (int c = 0; c < n; ++c) {
        std::swap(work(pivot, c), work(col, c));
        std::swap(inv(pivot, c), inv(col, c));
      }
      det = -det;
    }
    const double p = work(col, col);
    det *= p;
    if (!std::isfinite(p) || std::abs(p) < 1e-300)
      throw SingularMetricError("matrix numerically singular (pivot " +
                                std::to_string(p) + " at column " + std::to_string(col) + ")");
    const double ip = 1.0 / p;
    for (int c = 0; c < n; ++c) {
      work(col, c) *= ip;
      inv(col, c) *= ip;
    }
    for (int r = 0; r < n; ++r) {
      if (r == col) continue;
      const double f = work(r, col);
      if (f == 0.0) continue;
      for (int c = 0; c < n; ++c) {
        work(r, c) -= f * work(col, c);
        inv(r, c) -= f * inv(col, c);
      }
    }
  }
  if (det_out) *det_out = det;
  return inv;
}

// Dense complex square matrix, row-major.  Used for Hamiltonians (small n).
struct ComplexMatrix {
  int n = 0;
  cvec a;

  ComplexMatrix() = default;
  explicit ComplexMatrix(int dim) : n(dim), a(static_cast<std::size_t>(dim) * dim, 0.0) {}

  cdouble& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  const cdouble& operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }

  static ComplexMatrix identity(int dim) {
    ComplexMatrix m(dim);
    for (int i = 0; i < dim; ++i) m(i, i) = 1.0;
    return m;
  }

  cvec apply(const cvec& x) const {
    if (static_cast<int>(x.size()) != n) throw ContractError("ComplexMatrix::apply: dimension mismatch");
    cvec y(static_cast<std::size_t>(n), 0.0);
    for (int i = 0; i < n; ++i) {
      cdouble s = 0.0;
      for (int j = 0; j < n; ++j) s += (*this)(i, j) * x[static_cast<std::size_t>(j)];
      y[static_cast<std::size_t>(i)] = s;
    }
    return y;
  }

  // max_ij |a_ij - conj(a_ji)|; zero iff Hermitian.
  double hermiticity_defect() const {
    double worst = 0.0;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j)
        worst = std::max(worst, std::abs((*this)(i, j) - std::conj((*this)(j, i))));
    return worst;
  }
};

}  // namespace geosho
