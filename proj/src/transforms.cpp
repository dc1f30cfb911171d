#include "fermient/transforms.hpp"

#include "fermient/correlations.hpp"
#include "fermient/eigensystem.hpp"
#include "fermient/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace fermient {

namespace {

constexpr double symplectic_tolerance = 1e-10;
constexpr double lift_tolerance = 1e-9;

}  // namespace

double symplectic_defect(const Matrix& u, const Matrix& v) {
  const Eigen::Index n = u.rows();
  const Matrix id = Matrix::Identity(n, n);
  double d = max_abs(u * u.adjoint() + v * v.adjoint() - id);
  d = std::max(d, max_abs(u * v.transpose() + v * u.transpose()));
  Matrix w(2 * n, 2 * n);
  w << u, v, v.conjugate(), u.conjugate();
  d = std::max(d, max_abs(w.adjoint() * w - Matrix::Identity(2 * n, 2 * n)));
  return d;
}

BogoliubovMap BogoliubovMap::validate(const Matrix& u, const Matrix& v) {
  if (u.rows() != u.cols() || v.rows() != v.cols() || u.rows() != v.rows() || u.rows() == 0) {
    throw Error(ErrorCode::dimension_mismatch, "U and V must be square of equal size");
  }
  check_mode_count(static_cast<int>(u.rows()));
  const double d = symplectic_defect(u, v);
  if (d > symplectic_tolerance) {
    throw Error(ErrorCode::not_symplectic, "constraint residual " + std::to_string(d));
  }
  return BogoliubovMap(u, v);
}

Matrix BogoliubovMap::W() const {
  const Eigen::Index n = u_.rows();
  Matrix w(2 * n, 2 * n);
  w << u_, v_, v_.conjugate(), u_.conjugate();
  return w;
}

BogoliubovMap identity_map(int n_modes) {
  check_mode_count(n_modes);
  return BogoliubovMap::validate(Matrix::Identity(n_modes, n_modes),
                                 Matrix::Zero(n_modes, n_modes));
}

BogoliubovMap single_particle_map(const Matrix& u) {
  return BogoliubovMap::validate(u, Matrix::Zero(u.rows(), u.cols()));
}

BogoliubovMap particle_hole_map(int n_modes, const std::vector<int>& modes) {
  check_mode_count(n_modes);
  Matrix u = Matrix::Identity(n_modes, n_modes);
  Matrix v = Matrix::Zero(n_modes, n_modes);
  for (int k : modes) {
    check_mode(n_modes, k);
    u(k, k) = 0.0;
    v(k, k) = 1.0;
  }
  return BogoliubovMap::validate(u, v);
}

BogoliubovMap compose(const BogoliubovMap& first, const BogoliubovMap& second) {
  if (first.n_modes() != second.n_modes()) {
    throw Error(ErrorCode::dimension_mismatch, "composing maps on different mode counts");
  }
  const Eigen::Index n = first.n_modes();
  const Matrix w = first.W() * second.W();
  return BogoliubovMap::validate(w.topLeftCorner(n, n), w.topRightCorner(n, n));
}

BogoliubovMap random_bogoliubov(int n_modes, std::uint64_t seed, bool number_conserving) {
  check_mode_count(n_modes);
  const Eigen::Index n = n_modes;
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  auto draw = [&] {
    double re = gauss(rng);
    double im = gauss(rng);
    return Complex(re, im);
  };
  Matrix h(n, n), delta = Matrix::Zero(n, n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) h(i, j) = draw();
  }
  h = (h + h.adjoint()).eval() / 2.0;
  if (!number_conserving) {
    for (Eigen::Index i = 0; i < n; ++i) {
      for (Eigen::Index j = i + 1; j < n; ++j) {
        delta(i, j) = draw();
        delta(j, i) = -delta(i, j);
      }
    }
  }
  Matrix k(2 * n, 2 * n);
  k << h, delta, -delta.conjugate(), -h.conjugate();
  const Matrix w = exp_i_hermitian(k);
  // exp is computed numerically; restore the exact block structure before validating
  Matrix u = (w.topLeftCorner(n, n) + w.bottomRightCorner(n, n).conjugate()) / 2.0;
  Matrix v = (w.topRightCorner(n, n) + w.bottomLeftCorner(n, n).conjugate()) / 2.0;
  return BogoliubovMap::validate(u, v);
}

FockOperator lift_to_fock(const BogoliubovMap& map) {
  const int n = map.n_modes();
  const Eigen::Index dim = Eigen::Index{1} << n;
  std::vector<Matrix> c(static_cast<std::size_t>(n));
  for (int k = 0; k < n; ++k) c[k] = annihilation_matrix(n, k);

  std::vector<Matrix> a(static_cast<std::size_t>(n));
  Matrix number = Matrix::Zero(dim, dim);
  for (int i = 0; i < n; ++i) {
    a[i] = Matrix::Zero(dim, dim);
    for (int k = 0; k < n; ++k) {
      a[i] += std::conj(map.U()(k, i)) * c[k] + map.V()(k, i) * c[k].adjoint();
    }
    number += a[i].adjoint() * a[i];
  }

  const Spectrum s = hermitian_eigensystem(number);
  const double smallest = s.eigenvalues[dim - 1];
  if (smallest > lift_tolerance || (dim > 1 && s.eigenvalues[dim - 2] < 0.5)) {
    throw Error(ErrorCode::lift_failure,
                "no unique quasiparticle vacuum (smallest eigenvalue " +
                    std::to_string(smallest) + ")");
  }
  Vector vac = s.eigenvectors.col(dim - 1);
  Eigen::Index big = 0;
  vac.cwiseAbs().maxCoeff(&big);
  vac *= std::polar(1.0, -std::arg(vac[big]));
  vac[big] = vac[big].real();
  vac.normalize();

  Matrix lifted(dim, dim);
  for (Mask m = 0; m < static_cast<Mask>(dim); ++m) {
    Vector col = vac;
    for (int k = n - 1; k >= 0; --k) {
      if (m & (Mask{1} << k)) col = a[k].adjoint() * col;
    }
    lifted.col(m) = col;
  }

  double residual = max_abs(lifted.adjoint() * lifted - Matrix::Identity(dim, dim));
  for (int i = 0; i < n; ++i) {
    residual = std::max(residual, max_abs(lifted * c[i] * lifted.adjoint() - a[i]));
  }
  if (residual > lift_tolerance) {
    throw Error(ErrorCode::lift_failure, "conjugation residual " + std::to_string(residual));
  }
  return FockOperator(n, std::move(lifted), OperatorKind::unitary);
}

FockState apply_map(const BogoliubovMap& map, const FockState& state) {
  if (map.n_modes() != state.n_modes()) {
    throw Error(ErrorCode::dimension_mismatch, "map and state mode counts differ");
  }
  return FockState::from_vector(lift_to_fock(map).apply(state));
}

FockState quasiparticle_coordinates(const BogoliubovMap& map, const FockState& state) {
  if (map.n_modes() != state.n_modes()) {
    throw Error(ErrorCode::dimension_mismatch, "map and state mode counts differ");
  }
  const FockOperator lifted = lift_to_fock(map);
  return FockState::from_vector(
      FockVector(state.n_modes(), lifted.matrix().adjoint() * state.amplitudes()));
}

FockState particle_hole(const FockState& state, const std::vector<int>& modes) {
  return apply_map(particle_hole_map(state.n_modes(), modes), state);
}

namespace {

// Even-sector masks at n = 4 and the signed involution P with
// psi^T P psi = 2 (a3 a12 - a5 a10 + a6 a9 - a0 a15).
constexpr std::array<Mask, 8> even_masks{0, 3, 5, 6, 9, 10, 12, 15};

struct Partner {
  Mask mask;
  double sign;
};

Partner partner_of(Mask m) {
  switch (m) {
    case 3: return {12, 1.0};
    case 12: return {3, 1.0};
    case 5: return {10, -1.0};
    case 10: return {5, -1.0};
    case 6: return {9, 1.0};
    case 9: return {6, 1.0};
    case 0: return {15, -1.0};
    case 15: return {0, -1.0};
  }
  return {m, 0.0};
}

// x -> P conj(x), an antilinear involution on the even sector.
Vector reflect(const Vector& x) {
  Vector out = Vector::Zero(x.size());
  for (Mask m : even_masks) {
    const Partner p = partner_of(m);
    out[p.mask] = p.sign * std::conj(x[m]);
  }
  return out;
}

Complex pairing(const Vector& x, const Vector& y) {
  Complex s = 0.0;
  for (Mask m : even_masks) {
    const Partner p = partner_of(m);
    s += x[m] * p.sign * y[p.mask];
  }
  return s;
}

Vector make_real(const Vector& x) { return (x + reflect(x)) / 2.0; }

// Unit vector fixed by reflect() and orthogonal to e1.
Vector completing_direction(const Vector& e1) {
  Vector best;
  double best_norm = -1.0;
  for (Mask m : {Mask{0}, Mask{3}, Mask{5}, Mask{6}}) {
    const Partner p = partner_of(m);
    for (int k = 0; k < 2; ++k) {
      Vector x = Vector::Zero(e1.size());
      if (k == 0) {
        x[m] = 1.0;
        x[p.mask] = p.sign;
      } else {
        x[m] = Complex(0.0, 1.0);
        x[p.mask] = Complex(0.0, -p.sign);
      }
      x -= e1.dot(x).real() * e1;
      const double nx = x.norm();
      if (nx > best_norm) {
        best_norm = nx;
        best = x / nx;
      }
    }
  }
  return best;
}

BogoliubovMap vacuum_map(const FockState& gaussian) {
  const int n = gaussian.n_modes();
  const Spectrum s = hermitian_eigensystem(extended_density(gaussian).m);
  Matrix u(n, n), v(n, n);
  for (int k = 0; k < n; ++k) {
    const Vector w = s.eigenvectors.col(2 * n - 1 - k);
    u.col(k) = w.head(n);
    v.col(k) = w.tail(n).conjugate();
  }
  return BogoliubovMap::validate(u, v);
}

}  // namespace

SchmidtForm normal_form(const FockState& state) {
  if (state.n_modes() != 4) {
    throw Error(ErrorCode::wrong_shape, "normal form needs exactly four modes");
  }
  BogoliubovMap pre = identity_map(4);
  Vector psi = state.amplitudes();
  if (state.parity() == Parity::odd) {
    pre = particle_hole_map(4, {0});
    psi = lift_to_fock(pre).apply(state).amplitudes();
  }

  const Complex q = pairing(psi, psi);
  const Vector rotated = psi * std::polar(1.0, -0.5 * std::arg(q));
  const Vector u = make_real(rotated);
  const Vector v = make_real((rotated - reflect(rotated)) / Complex(0.0, 2.0));
  const Vector e1 = make_real(u / u.norm());
  Vector e2;
  if (v.norm() < 1e-12) {
    e2 = completing_direction(e1);
  } else {
    e2 = v - e1.dot(v).real() * e1;
    e2 = make_real(e2 / e2.norm());
    e2.normalize();
  }
  const Vector gaussian = (e1 + Complex(0.0, 1.0) * e2) / std::sqrt(2.0);

  BogoliubovMap map = compose(pre, vacuum_map(FockState::from_vector(FockVector(4, gaussian))));
  map = compose(map, particle_hole_map(4, {0, 1}));
  FockState z = quasiparticle_coordinates(map, state);

  Matrix phases = Matrix::Identity(4, 4);
  phases(0, 0) = std::polar(1.0, std::arg(z[3]));
  phases(2, 2) = std::polar(1.0, std::arg(z[12]));
  map = compose(map, single_particle_map(phases));
  z = quasiparticle_coordinates(map, state);

  double residual = 0.0;
  for (Mask m = 0; m < 16; ++m) {
    if (m != 3 && m != 12) residual = std::max(residual, std::abs(z[m]));
  }
  residual = std::max({residual, std::abs(z[3].imag()), std::abs(z[12].imag())});
  if (residual > 1e-8) {
    throw Error(ErrorCode::no_convergence,
                "normal form residual " + std::to_string(residual));
  }
  const double ap = z[3].real();
  const double am = z[12].real();
  return SchmidtForm{ap, am, map, z, {{{0, 2}, {1, 3}}}, {{{0, 1}, {2, 3}}}, residual};
}

TwoFermionSchmidt two_fermion_schmidt(const FockState& state) {
  const int n = state.n_modes();
  for (Mask m = 0; m < state.dim(); ++m) {
    if (std::popcount(m) != 2 && std::abs(state[m]) > tol::zero) {
      throw Error(ErrorCode::not_two_fermion, "amplitude on mask " + std::to_string(m));
    }
  }
  Matrix alpha = Matrix::Zero(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      alpha(i, j) = state[(Mask{1} << i) | (Mask{1} << j)];
      alpha(j, i) = -alpha(i, j);
    }
  }
  const Spectrum s = hermitian_eigensystem(alpha * alpha.adjoint());

  std::vector<Vector> picked;
  std::vector<double> coefficients;
  auto orthogonalize = [&picked](Vector x) {
    for (int pass = 0; pass < 2; ++pass) {
      for (const Vector& p : picked) x -= p.dot(x) * p;
    }
    return x;
  };

  const double null_level = 1e-14;
  Eigen::Index k = 0;
  while (k < n && s.eigenvalues[k] > null_level) {
    Eigen::Index end = k;
    while (end < n && std::abs(s.eigenvalues[end] - s.eigenvalues[k]) < 1e-8) ++end;
    for (Eigen::Index c = k; c < end; ++c) {
      Vector x = orthogonalize(s.eigenvectors.col(c));
      if (x.norm() < 0.5) continue;
      x.normalize();
      Vector y = -(alpha * x.conjugate());
      const double sv = y.norm();
      if (sv <= 0.0) continue;
      picked.push_back(x);
      y = orthogonalize(y / sv);
      y.normalize();
      picked.push_back(y);
      coefficients.push_back(sv);
    }
    k = end;
  }
  for (Eigen::Index c = 0; c < n && static_cast<int>(picked.size()) < n; ++c) {
    Vector x = orthogonalize(s.eigenvectors.col(n - 1 - c));
    if (x.norm() < 0.5) continue;
    picked.push_back(x.normalized());
  }
  if (static_cast<int>(picked.size()) != n) {
    throw Error(ErrorCode::no_convergence, "could not complete the pairing basis");
  }
  Matrix u(n, n);
  for (int i = 0; i < n; ++i) u.col(i) = picked[static_cast<std::size_t>(i)];

  BogoliubovMap map = single_particle_map(u);
  FockState z = quasiparticle_coordinates(map, state);
  double residual = 0.0;
  Vector expected = Vector::Zero(static_cast<Eigen::Index>(state.dim()));
  for (std::size_t p = 0; p < coefficients.size(); ++p) {
    expected[(Mask{3} << (2 * p))] = coefficients[p];
  }
  residual = (z.amplitudes() - expected).cwiseAbs().maxCoeff();
  if (residual > 1e-8) {
    throw Error(ErrorCode::no_convergence, "Schmidt residual " + std::to_string(residual));
  }
  return TwoFermionSchmidt{coefficients, map, z, residual};
}

}  // namespace fermient
