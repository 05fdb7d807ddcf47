#include "sisframe/hermitian.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <numeric>
#include <stdexcept>

namespace sisframe {

CMatrix CMatrix::identity(std::size_t n) {
  CMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1.0;
  return m;
}

CMatrix CMatrix::adjoint() const {
  CMatrix out(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out(j, i) = std::conj((*this)(i, j));
  return out;
}

CMatrix CMatrix::operator*(const CMatrix& rhs) const {
  if (cols_ != rhs.rows_) throw std::invalid_argument("CMatrix: shape mismatch");
  CMatrix out(rows_, rhs.cols_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const cplx a = (*this)(i, k);
      if (a == cplx{}) continue;
      for (std::size_t j = 0; j < rhs.cols_; ++j) out(i, j) += a * rhs(k, j);
    }
  return out;
}

CMatrix CMatrix::gram() const {
  CMatrix out(rows_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t l = i; l < rows_; ++l) {
      cplx acc{};
      for (std::size_t j = 0; j < cols_; ++j) acc += (*this)(i, j) * std::conj((*this)(l, j));
      out(i, l) = acc;
      out(l, i) = std::conj(acc);
    }
  for (std::size_t i = 0; i < rows_; ++i) out(i, i) = out(i, i).real();
  return out;
}

double CMatrix::max_abs() const {
  double m = 0.0;
  for (const auto& v : data_) m = std::max(m, std::abs(v));
  return m;
}

namespace {

// Square Hermitian matrix in scalar type T, row-major.
template <class T>
struct Square {
  using C = std::complex<T>;
  std::size_t n;
  std::vector<C> d;
  explicit Square(std::size_t size) : n(size), d(size * size) {}
  C& operator()(std::size_t i, std::size_t j) { return d[i * n + j]; }
};

// Cyclic Jacobi on `a` (overwritten).  Each rotation strips the phase of
// a_pq so the 2x2 block is real symmetric.
template <class T>
HermitianEigen jacobi(Square<T>& a, T tol, int max_sweeps) {
  using C = std::complex<T>;
  const std::size_t n = a.n;
  Square<T> v(n);
  for (std::size_t i = 0; i < n; ++i) v(i, i) = T(1);

  HermitianEigen result;
  T scale = 0;
  for (const auto& x : a.d) scale += std::norm(x);
  scale = std::sqrt(scale);

  for (int sweep = 0; sweep < max_sweeps && n > 1; ++sweep) {
    T off = 0;
    for (std::size_t p = 0; p < n; ++p)
      for (std::size_t q = p + 1; q < n; ++q) off += std::norm(a(p, q));
    if (std::sqrt(off) <= tol * scale || off == T(0)) break;
    result.sweeps = sweep + 1;

    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const C apq = a(p, q);
        const T mag = std::abs(apq);
        if (mag == T(0)) continue;
        const C phase = apq / mag;
        const T app = a(p, p).real();
        const T aqq = a(q, q).real();
        const T theta = (aqq - app) / (T(2) * mag);
        const T t = std::copysign(T(1), theta) / (std::abs(theta) + std::sqrt(theta * theta + T(1)));
        const T c = T(1) / std::sqrt(t * t + T(1));
        const T s = t * c;
        // Unitary J with columns p,q: J_pp = c, J_qq = c, J_pq = s*phase,
        // J_qp = -s*conj(phase).  A <- J^H A J, V <- V J.
        for (std::size_t k = 0; k < n; ++k) {
          const C akp = a(k, p);
          const C akq = a(k, q);
          a(k, p) = c * akp - s * std::conj(phase) * akq;
          a(k, q) = s * phase * akp + c * akq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const C apk = a(p, k);
          const C aqk = a(q, k);
          a(p, k) = c * apk - s * phase * aqk;
          a(q, k) = s * std::conj(phase) * apk + c * aqk;
        }
        a(p, q) = T(0);
        a(q, p) = T(0);
        a(p, p) = a(p, p).real();
        a(q, q) = a(q, q).real();
        for (std::size_t k = 0; k < n; ++k) {
          const C vkp = v(k, p);
          const C vkq = v(k, q);
          v(k, p) = c * vkp - s * std::conj(phase) * vkq;
          v(k, q) = s * phase * vkp + c * vkq;
        }
      }
    }
  }

  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](std::size_t x, std::size_t y) {
    return a(x, x).real() < a(y, y).real();
  });
  result.values.resize(n);
  result.vectors = CMatrix(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    result.values[k] = static_cast<double>(a(order[k], order[k]).real());
    for (std::size_t i = 0; i < n; ++i) {
      const C x = v(i, order[k]);
      result.vectors(i, k) = cplx(static_cast<double>(x.real()), static_cast<double>(x.imag()));
    }
  }
  return result;
}

}  // namespace

HermitianEigen hermitian_eigen(const CMatrix& input, double tol, int max_sweeps) {
  const std::size_t n = input.rows();
  if (n != input.cols()) throw std::invalid_argument("hermitian_eigen: matrix not square");
  Square<double> a(n);
  for (std::size_t i = 0; i < n; ++i) {
    a(i, i) = input(i, i).real();
    for (std::size_t j = i + 1; j < n; ++j) {
      a(i, j) = input(i, j);
      a(j, i) = std::conj(input(i, j));
    }
  }
  return jacobi(a, tol, max_sweeps);
}

HermitianEigen gram_eigen(const CMatrix& rows, int max_sweeps) {
  using X = long double;
  const std::size_t n = rows.rows();
  Square<X> g(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t l = i; l < n; ++l) {
      std::complex<X> acc{};
      for (std::size_t j = 0; j < rows.cols(); ++j) {
        const cplx x = rows(i, j);
        const cplx y = rows(l, j);
        acc += std::complex<X>(x.real(), x.imag()) * std::complex<X>(y.real(), -y.imag());
      }
      g(i, l) = acc;
      g(l, i) = std::conj(acc);
    }
    g(i, i) = g(i, i).real();
  }
  return jacobi(g, std::numeric_limits<X>::epsilon(), max_sweeps);
}

CMatrix hermitian_pseudo_inverse(const HermitianEigen& eig, double cutoff) {
  const std::size_t n = eig.values.size();
  CMatrix out(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    const double lambda = eig.values[k];
    if (!(lambda > cutoff)) continue;
    const double inv = 1.0 / lambda;
    for (std::size_t i = 0; i < n; ++i) {
      const cplx vik = eig.vectors(i, k) * inv;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += vik * std::conj(eig.vectors(j, k));
    }
  }
  return out;
}

}  // namespace sisframe
