#pragma once

#include "fermient/fock.hpp"

#include <functional>

namespace fermient {

struct Spectrum {
  Eigen::VectorXd eigenvalues;  // descending
  Matrix eigenvectors;          // columns, unitary
};

// Cyclic complex Jacobi. Throws NotHermitian if ||M - M^H||_max >= 1e-10,
// NoConvergence after 100 sweeps.
Spectrum hermitian_eigensystem(const Matrix& m);

// f(M) = Q f(Lambda) Q^H for Hermitian M.
Matrix hermitian_function(const Matrix& m, const std::function<Complex(double)>& f);

// exp(i H) for Hermitian H.
Matrix exp_i_hermitian(const Matrix& h);

double max_abs(const Matrix& m);

}  // namespace fermient
