#include "fermient/correlations.hpp"

#include "fermient/errors.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

namespace fermient {

double von_neumann_term(double p) { return p <= 0.0 ? 0.0 : -p * std::log2(p); }

double quadratic_term(double p) { return 2.0 * p * (1.0 - p); }

EntropyFunction entropy_function(EntropyKind kind) {
  return kind == EntropyKind::von_neumann ? EntropyFunction(von_neumann_term)
                                          : EntropyFunction(quadratic_term);
}

double trace_entropy(const Eigen::VectorXd& eigenvalues, const EntropyFunction& f) {
  double s = 0.0;
  for (Eigen::Index k = 0; k < eigenvalues.size(); ++k) {
    s += f(std::clamp(eigenvalues[k], 0.0, 1.0));
  }
  return s;
}

OneBodyDensity one_body(const FockState& state) {
  const int n = state.n_modes();
  std::vector<Vector> lowered, raised;
  lowered.reserve(n);
  raised.reserve(n);
  for (int i = 0; i < n; ++i) {
    lowered.push_back(apply_annihilation(state, i).amplitudes());
    raised.push_back(apply_creation(state, i).amplitudes());
  }
  OneBodyDensity out{Matrix(n, n), Matrix(n, n)};
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      out.rho(i, j) = lowered[j].dot(lowered[i]);
      out.kappa(i, j) = raised[j].dot(lowered[i]);
    }
  }
  return out;
}

ExtendedDensity extended_density(const FockState& state) {
  const int n = state.n_modes();
  const OneBodyDensity ob = one_body(state);
  Matrix m(2 * n, 2 * n);
  m.topLeftCorner(n, n) = ob.rho;
  m.topRightCorner(n, n) = ob.kappa;
  m.bottomLeftCorner(n, n) = -ob.kappa.conjugate();
  m.bottomRightCorner(n, n) = Matrix::Identity(n, n) - ob.rho.conjugate();
  const double defect = max_abs(m - m.adjoint());
  if (defect > 1e-10) {
    throw Error(ErrorCode::hermiticity_defect,
                "extended density off by " + std::to_string(defect));
  }
  return ExtendedDensity{(m + m.adjoint()) / 2.0};
}

Spectrum sp_spectrum(const FockState& state) { return hermitian_eigensystem(one_body(state).rho); }

Spectrum qsp_spectrum(const FockState& state) {
  return hermitian_eigensystem(extended_density(state).m);
}

double sp_entropy(const FockState& state) { return sp_entropy(state, von_neumann_term); }

double sp_entropy(const FockState& state, const EntropyFunction& f) {
  return trace_entropy(sp_spectrum(state).eigenvalues, [&f](double p) { return f(p) + f(1.0 - p); });
}

double sp_trace_entropy(const FockState& state, const EntropyFunction& f) {
  return trace_entropy(sp_spectrum(state).eigenvalues, f);
}

double qsp_entropy(const FockState& state) { return qsp_entropy(state, von_neumann_term); }

double qsp_entropy(const FockState& state, const EntropyFunction& f) {
  return trace_entropy(qsp_spectrum(state).eigenvalues, f);
}

}  // namespace fermient
