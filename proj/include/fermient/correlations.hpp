#pragma once

#include "fermient/eigensystem.hpp"
#include "fermient/fock.hpp"

#include <functional>

namespace fermient {

// rho(i,j) = <c+_j c_i>, kappa(i,j) = <c_j c_i>.
struct OneBodyDensity {
  Matrix rho;
  Matrix kappa;
};

// [[rho, kappa], [-conj(kappa), I - conj(rho)]].
struct ExtendedDensity {
  Matrix m;
};

// Concave trace-form entropy kernel with f(0) = f(1) = 0.
using EntropyFunction = std::function<double(double)>;

double von_neumann_term(double p);  // -p log2 p
double quadratic_term(double p);    // 2 p (1 - p)

enum class EntropyKind { von_neumann, quadratic };
EntropyFunction entropy_function(EntropyKind kind);

// Sum of f over eigenvalues, each clamped to [0, 1].
double trace_entropy(const Eigen::VectorXd& eigenvalues, const EntropyFunction& f);

OneBodyDensity one_body(const FockState& state);

// Throws HermiticityDefect when the assembled block matrix is off by more than 1e-10.
ExtendedDensity extended_density(const FockState& state);

// Tr h(rho) with h(p) = f(p) + f(1 - p); von Neumann by default.
double sp_entropy(const FockState& state);
double sp_entropy(const FockState& state, const EntropyFunction& f);

// Tr f(rho) itself, i.e. the plain entropy of the one-body matrix.
double sp_trace_entropy(const FockState& state, const EntropyFunction& f);

// Tr f(rho^qsp); von Neumann by default.
double qsp_entropy(const FockState& state);
double qsp_entropy(const FockState& state, const EntropyFunction& f);

Spectrum sp_spectrum(const FockState& state);
Spectrum qsp_spectrum(const FockState& state);

}  // namespace fermient
