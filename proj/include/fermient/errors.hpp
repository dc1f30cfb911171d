#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fermient {

enum class ErrorCode {
  invalid_argument,
  mixed_parity,
  zero_norm,
  dimension_mismatch,
  not_hermitian,
  hermiticity_defect,
  no_convergence,
  not_symplectic,
  lift_failure,
  not_two_fermion,
  wrong_parity,
  wrong_shape,
  side_mismatch,
  not_normalized,
  overlapping_pairs,
  impossible_branch,
  unknown_state,
  parse_error,
};

std::string_view to_string(ErrorCode code);

// All library failures surface as this type; the code identifies the contract
// that was violated.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fermient
