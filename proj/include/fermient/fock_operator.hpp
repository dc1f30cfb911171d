#pragma once

#include "fermient/fock.hpp"

namespace fermient {

enum class OperatorKind { unitary, hermitian, projector };

// Dense operator on the 2^n Fock space, checked against its kind at 1e-10.
class FockOperator {
 public:
  FockOperator(int n_modes, Matrix matrix, OperatorKind kind);

  int n_modes() const { return n_modes_; }
  const Matrix& matrix() const { return matrix_; }
  OperatorKind kind() const { return kind_; }

  FockVector apply(const FockVector& v) const;

 private:
  int n_modes_;
  Matrix matrix_;
  OperatorKind kind_;
};

// Product a * b as a unitary (both must be unitary).
FockOperator operator*(const FockOperator& a, const FockOperator& b);

}  // namespace fermient
