#include "fermient/eigensystem.hpp"

#include "fermient/errors.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace fermient {

double max_abs(const Matrix& m) {
  return m.size() == 0 ? 0.0 : m.cwiseAbs().maxCoeff();
}

namespace {

constexpr int max_sweeps = 100;
constexpr double off_tolerance = 1e-13;

double off_norm(const Matrix& a) {
  double s = 0.0;
  for (Eigen::Index j = 0; j < a.cols(); ++j) {
    for (Eigen::Index i = 0; i < a.rows(); ++i) {
      if (i != j) s += std::norm(a(i, j));
    }
  }
  return std::sqrt(s);
}

// Zeroes a(p,q) with a complex Givens rotation J; a <- J^H a J, v <- v J.
void rotate(Matrix& a, Matrix& v, Eigen::Index p, Eigen::Index q) {
  const Complex b = a(p, q);
  const double mag = std::abs(b);
  if (mag == 0.0) return;
  const Complex e = std::polar(1.0, -std::arg(b));
  const double app = a(p, p).real();
  const double aqq = a(q, q).real();
  const double tau = (aqq - app) / (2.0 * mag);
  double t = 1.0;
  if (tau != 0.0) {
    t = (tau > 0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
  }
  const double c = 1.0 / std::sqrt(1.0 + t * t);
  const double s = t * c;
  const Complex j00 = c, j01 = s, j10 = -s * e, j11 = c * e;

  for (Eigen::Index k = 0; k < a.rows(); ++k) {
    const Complex kp = a(k, p), kq = a(k, q);
    a(k, p) = kp * j00 + kq * j10;
    a(k, q) = kp * j01 + kq * j11;
  }
  for (Eigen::Index k = 0; k < a.cols(); ++k) {
    const Complex pk = a(p, k), qk = a(q, k);
    a(p, k) = std::conj(j00) * pk + std::conj(j10) * qk;
    a(q, k) = std::conj(j01) * pk + std::conj(j11) * qk;
  }
  a(p, q) = 0.0;
  a(q, p) = 0.0;
  a(p, p) = a(p, p).real();
  a(q, q) = a(q, q).real();

  for (Eigen::Index k = 0; k < v.rows(); ++k) {
    const Complex kp = v(k, p), kq = v(k, q);
    v(k, p) = kp * j00 + kq * j10;
    v(k, q) = kp * j01 + kq * j11;
  }
}

}  // namespace

Spectrum hermitian_eigensystem(const Matrix& m) {
  if (m.rows() != m.cols()) {
    throw Error(ErrorCode::dimension_mismatch, "eigensystem of a non-square matrix");
  }
  const double defect = max_abs(m - m.adjoint());
  if (defect >= 1e-10) {
    throw Error(ErrorCode::not_hermitian,
                "matrix deviates from its adjoint by " + std::to_string(defect));
  }
  const Eigen::Index n = m.rows();
  Matrix a = (m + m.adjoint()) / 2.0;
  Matrix v = Matrix::Identity(n, n);
  const double scale = std::max(1.0, a.norm());

  int sweep = 0;
  while (off_norm(a) >= off_tolerance * scale) {
    if (++sweep > max_sweeps) {
      throw Error(ErrorCode::no_convergence, "Jacobi sweeps exhausted");
    }
    for (Eigen::Index p = 0; p + 1 < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) rotate(a, v, p, q);
    }
  }

  std::vector<Eigen::Index> order(static_cast<std::size_t>(n));
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return a(i, i).real() > a(j, j).real();
  });
  Spectrum out;
  out.eigenvalues.resize(n);
  out.eigenvectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    out.eigenvalues[k] = a(order[k], order[k]).real();
    out.eigenvectors.col(k) = v.col(order[k]);
  }
  return out;
}

Matrix hermitian_function(const Matrix& m, const std::function<Complex(double)>& f) {
  const Spectrum s = hermitian_eigensystem(m);
  Vector d(s.eigenvalues.size());
  for (Eigen::Index k = 0; k < d.size(); ++k) d[k] = f(s.eigenvalues[k]);
  return s.eigenvectors * d.asDiagonal() * s.eigenvectors.adjoint();
}

Matrix exp_i_hermitian(const Matrix& h) {
  return hermitian_function(h, [](double x) { return std::polar(1.0, x); });
}

}  // namespace fermient
