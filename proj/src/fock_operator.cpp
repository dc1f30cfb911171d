#include "fermient/fock_operator.hpp"

#include "fermient/eigensystem.hpp"
#include "fermient/errors.hpp"

namespace fermient {

namespace {

constexpr double kind_tolerance = 1e-10;

const char* kind_name(OperatorKind k) {
  switch (k) {
    case OperatorKind::unitary: return "unitary";
    case OperatorKind::hermitian: return "hermitian";
    case OperatorKind::projector: return "projector";
  }
  return "?";
}

}  // namespace

FockOperator::FockOperator(int n_modes, Matrix matrix, OperatorKind kind)
    : n_modes_(n_modes), matrix_(std::move(matrix)), kind_(kind) {
  check_mode_count(n_modes);
  const Eigen::Index dim = Eigen::Index{1} << n_modes;
  if (matrix_.rows() != dim || matrix_.cols() != dim) {
    throw Error(ErrorCode::dimension_mismatch, "operator matrix does not match mode count");
  }
  double defect = 0.0;
  switch (kind) {
    case OperatorKind::unitary:
      defect = max_abs(matrix_.adjoint() * matrix_ - Matrix::Identity(dim, dim));
      break;
    case OperatorKind::hermitian:
      defect = max_abs(matrix_ - matrix_.adjoint());
      break;
    case OperatorKind::projector:
      defect = std::max(max_abs(matrix_ - matrix_.adjoint()), max_abs(matrix_ * matrix_ - matrix_));
      break;
  }
  if (defect > kind_tolerance) {
    throw Error(ErrorCode::invalid_argument, std::string("operator is not ") + kind_name(kind) +
                                                 " (defect " + std::to_string(defect) + ")");
  }
}

FockVector FockOperator::apply(const FockVector& v) const {
  if (v.n_modes() != n_modes_) {
    throw Error(ErrorCode::dimension_mismatch, "operator and state mode counts differ");
  }
  return FockVector(n_modes_, matrix_ * v.amplitudes());
}

FockOperator operator*(const FockOperator& a, const FockOperator& b) {
  if (a.n_modes() != b.n_modes()) {
    throw Error(ErrorCode::dimension_mismatch, "operator mode counts differ");
  }
  return FockOperator(a.n_modes(), a.matrix() * b.matrix(), OperatorKind::unitary);
}

}  // namespace fermient
