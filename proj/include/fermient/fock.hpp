#pragma once

// Exact fermionic Fock space over n <= 12 single-particle modes.
//
// Conventions used everywhere in the library:
//   * mode k is bit k of the occupation mask (mode 0 = least-significant bit);
//   * the basis vector for mask {i1 < i2 < ... < ik} is c+_{i1} c+_{i2} ... c+_{ik} |0>;
//   * hence c+_k and c_k acting on a mask pick up (-1)^(number of occupied modes below k).

#include <Eigen/Dense>

#include <bit>
#include <complex>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace fermient {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using Mask = std::uint32_t;

namespace tol {
inline constexpr double norm = 1e-10;
inline constexpr double zero = 1e-12;
inline constexpr double compare = 1e-9;
}  // namespace tol

inline constexpr int max_modes = 12;

enum class Parity { even, odd };

inline Parity parity_of(Mask mask) {
  return (std::popcount(mask) % 2 == 0) ? Parity::even : Parity::odd;
}

inline Parity flip(Parity p) { return p == Parity::even ? Parity::odd : Parity::even; }

// (-1)^(number of set bits of `mask` strictly below `mode`).
inline int prefix_sign(Mask mask, int mode) {
  const Mask below = mask & ((Mask{1} << mode) - 1);
  return (std::popcount(below) % 2 == 0) ? 1 : -1;
}

// A vector in Fock space with no normalization or parity guarantees. Results of
// applying single creation/annihilation operators live here.
class FockVector {
 public:
  explicit FockVector(int n_modes);
  FockVector(int n_modes, Vector amplitudes);

  int n_modes() const { return n_modes_; }
  std::size_t dim() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  Complex operator[](Mask mask) const { return amplitudes_[mask]; }
  double norm() const { return amplitudes_.norm(); }

 private:
  int n_modes_;
  Vector amplitudes_;
};

// Normalized pure state of definite number parity.
class FockState {
 public:
  // Normalizes and infers the parity tag. Amplitudes with magnitude <= tol::zero are
  // ignored for the parity check and dropped.
  static FockState from_vector(const FockVector& v);

  static FockState vacuum(int n_modes);
  static FockState basis(int n_modes, Mask mask);

  int n_modes() const { return vector_.n_modes(); }
  std::size_t dim() const { return vector_.dim(); }
  Parity parity() const { return parity_; }
  const Vector& amplitudes() const { return vector_.amplitudes(); }
  Complex operator[](Mask mask) const { return vector_[mask]; }
  const FockVector& vector() const { return vector_; }
  operator const FockVector&() const { return vector_; }

 private:
  FockState(FockVector v, Parity p) : vector_(std::move(v)), parity_(p) {}

  FockVector vector_;
  Parity parity_;
};

struct MaskAmplitude {
  Mask mask;
  Complex amplitude;
};

// Throws MixedParity, ZeroNorm, or InvalidArgument (mask out of range).
FockState make_state(int n_modes, std::span<const MaskAmplitude> entries);
FockState make_state(int n_modes, std::initializer_list<MaskAmplitude> entries);

FockVector apply_creation(const FockVector& v, int mode);
FockVector apply_annihilation(const FockVector& v, int mode);

// Conjugate-linear in the first argument.
Complex inner_product(const FockVector& a, const FockVector& b);

// +1 for even, -1 for odd.
int number_parity(const FockState& state);

// Complex Gaussian amplitudes on the requested parity sector, normalized.
FockState random_state(int n_modes, Parity parity, std::uint64_t seed);

// Same sampling restricted to a fixed particle number.
FockState random_state_with_number(int n_modes, int particles, std::uint64_t seed);

// splitmix64 of (base, index); used to give every sample of a batch its own seed.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

struct OperatorFactor {
  int mode;
  bool dagger;
};

// Product of creation/annihilation operators, written left to right as in
// c+_a c_b; the rightmost factor acts first.
class OperatorString {
 public:
  OperatorString() = default;
  explicit OperatorString(std::vector<OperatorFactor> factors) : factors_(std::move(factors)) {}

  const std::vector<OperatorFactor>& factors() const { return factors_; }
  std::size_t length() const { return factors_.size(); }

  // Image of a basis mask: either a single signed mask or nothing.
  std::optional<std::pair<Mask, int>> act(Mask mask) const;

  FockVector apply(const FockVector& v) const;

 private:
  std::vector<OperatorFactor> factors_;
};

// Dense 2^n x 2^n matrices of c_mode and c+_mode built from the sign rule.
Matrix annihilation_matrix(int n_modes, int mode);
Matrix creation_matrix(int n_modes, int mode);
Matrix number_matrix(int n_modes, int mode);
Matrix identity_matrix(int n_modes);

void check_mode_count(int n_modes);
void check_mode(int n_modes, int mode);

}  // namespace fermient
