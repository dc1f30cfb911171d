#include "fermient/fock.hpp"

#include "fermient/errors.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

namespace fermient {

void check_mode_count(int n_modes) {
  if (n_modes < 1 || n_modes > max_modes) {
    throw Error(ErrorCode::invalid_argument,
                "mode count " + std::to_string(n_modes) + " outside [1, " +
                    std::to_string(max_modes) + "]");
  }
}

void check_mode(int n_modes, int mode) {
  if (mode < 0 || mode >= n_modes) {
    throw Error(ErrorCode::invalid_argument,
                "mode " + std::to_string(mode) + " outside [0, " + std::to_string(n_modes) + ")");
  }
}

FockVector::FockVector(int n_modes) : n_modes_(n_modes) {
  check_mode_count(n_modes);
  amplitudes_ = Vector::Zero(Eigen::Index{1} << n_modes);
}

FockVector::FockVector(int n_modes, Vector amplitudes)
    : n_modes_(n_modes), amplitudes_(std::move(amplitudes)) {
  check_mode_count(n_modes);
  if (amplitudes_.size() != (Eigen::Index{1} << n_modes)) {
    throw Error(ErrorCode::dimension_mismatch,
                "amplitude vector of length " + std::to_string(amplitudes_.size()) +
                    " for " + std::to_string(n_modes) + " modes");
  }
}

FockState FockState::from_vector(const FockVector& v) {
  double even_max = 0.0;
  double odd_max = 0.0;
  const Vector& a = v.amplitudes();
  for (Eigen::Index m = 0; m < a.size(); ++m) {
    double mag = std::abs(a[m]);
    if (parity_of(static_cast<Mask>(m)) == Parity::even) {
      even_max = std::max(even_max, mag);
    } else {
      odd_max = std::max(odd_max, mag);
    }
  }
  if (even_max > tol::zero && odd_max > tol::zero) {
    throw Error(ErrorCode::mixed_parity, "amplitudes present in both parity sectors");
  }
  Parity parity = (odd_max > even_max) ? Parity::odd : Parity::even;

  Vector out = a;
  for (Eigen::Index m = 0; m < out.size(); ++m) {
    if (std::abs(out[m]) <= tol::zero && parity_of(static_cast<Mask>(m)) != parity) {
      out[m] = 0.0;
    }
  }
  double norm = out.norm();
  if (norm <= tol::zero) {
    throw Error(ErrorCode::zero_norm, "state has vanishing norm");
  }
  out /= norm;
  return FockState(FockVector(v.n_modes(), std::move(out)), parity);
}

FockState FockState::vacuum(int n_modes) { return basis(n_modes, 0); }

FockState FockState::basis(int n_modes, Mask mask) {
  FockVector v(n_modes);
  if (mask >= v.dim()) {
    throw Error(ErrorCode::invalid_argument, "mask " + std::to_string(mask) + " out of range");
  }
  Vector a = v.amplitudes();
  a[mask] = 1.0;
  return FockState(FockVector(n_modes, std::move(a)), parity_of(mask));
}

FockState make_state(int n_modes, std::span<const MaskAmplitude> entries) {
  check_mode_count(n_modes);
  Vector a = Vector::Zero(Eigen::Index{1} << n_modes);
  bool seen_even = false;
  bool seen_odd = false;
  for (const auto& e : entries) {
    if (e.mask >= static_cast<std::size_t>(a.size())) {
      throw Error(ErrorCode::invalid_argument,
                  "mask " + std::to_string(e.mask) + " out of range for " +
                      std::to_string(n_modes) + " modes");
    }
    if (std::abs(e.amplitude) > tol::zero) {
      (parity_of(e.mask) == Parity::even ? seen_even : seen_odd) = true;
    }
    a[e.mask] += e.amplitude;
  }
  if (seen_even && seen_odd) {
    throw Error(ErrorCode::mixed_parity, "entries populate both parity sectors");
  }
  return FockState::from_vector(FockVector(n_modes, std::move(a)));
}

FockState make_state(int n_modes, std::initializer_list<MaskAmplitude> entries) {
  return make_state(n_modes, std::span<const MaskAmplitude>(entries.begin(), entries.size()));
}

FockVector apply_creation(const FockVector& v, int mode) {
  check_mode(v.n_modes(), mode);
  const Mask bit = Mask{1} << mode;
  Vector out = Vector::Zero(static_cast<Eigen::Index>(v.dim()));
  for (Mask m = 0; m < v.dim(); ++m) {
    if (!(m & bit) && v[m] != Complex{}) {
      out[m | bit] = static_cast<double>(prefix_sign(m, mode)) * v[m];
    }
  }
  return FockVector(v.n_modes(), std::move(out));
}

FockVector apply_annihilation(const FockVector& v, int mode) {
  check_mode(v.n_modes(), mode);
  const Mask bit = Mask{1} << mode;
  Vector out = Vector::Zero(static_cast<Eigen::Index>(v.dim()));
  for (Mask m = 0; m < v.dim(); ++m) {
    if ((m & bit) && v[m] != Complex{}) {
      out[m ^ bit] = static_cast<double>(prefix_sign(m, mode)) * v[m];
    }
  }
  return FockVector(v.n_modes(), std::move(out));
}

Complex inner_product(const FockVector& a, const FockVector& b) {
  if (a.n_modes() != b.n_modes()) {
    throw Error(ErrorCode::dimension_mismatch, "inner product of states with " +
                                                   std::to_string(a.n_modes()) + " and " +
                                                   std::to_string(b.n_modes()) + " modes");
  }
  return a.amplitudes().dot(b.amplitudes());
}

int number_parity(const FockState& state) { return state.parity() == Parity::even ? 1 : -1; }

namespace {

template <class Accept>
FockState sample_sector(int n_modes, std::uint64_t seed, Accept accept) {
  check_mode_count(n_modes);
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vector a = Vector::Zero(Eigen::Index{1} << n_modes);
  for (Mask m = 0; m < static_cast<Mask>(a.size()); ++m) {
    if (!accept(m)) continue;
    double re = gauss(rng);
    double im = gauss(rng);
    a[m] = Complex(re, im);
  }
  return FockState::from_vector(FockVector(n_modes, std::move(a)));
}

}  // namespace

FockState random_state(int n_modes, Parity parity, std::uint64_t seed) {
  return sample_sector(n_modes, seed, [parity](Mask m) { return parity_of(m) == parity; });
}

FockState random_state_with_number(int n_modes, int particles, std::uint64_t seed) {
  if (particles < 0 || particles > n_modes) {
    throw Error(ErrorCode::invalid_argument, "particle number out of range");
  }
  return sample_sector(n_modes, seed,
                       [particles](Mask m) { return std::popcount(m) == particles; });
}

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  std::uint64_t z = base + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::optional<std::pair<Mask, int>> OperatorString::act(Mask mask) const {
  int sign = 1;
  for (auto it = factors_.rbegin(); it != factors_.rend(); ++it) {
    const Mask bit = Mask{1} << it->mode;
    const bool occupied = (mask & bit) != 0;
    if (occupied == it->dagger) return std::nullopt;
    sign *= prefix_sign(mask, it->mode);
    mask ^= bit;
  }
  return std::make_pair(mask, sign);
}

FockVector OperatorString::apply(const FockVector& v) const {
  for (const auto& f : factors_) check_mode(v.n_modes(), f.mode);
  Vector out = Vector::Zero(static_cast<Eigen::Index>(v.dim()));
  for (Mask m = 0; m < v.dim(); ++m) {
    if (v[m] == Complex{}) continue;
    if (auto image = act(m)) {
      out[image->first] += static_cast<double>(image->second) * v[m];
    }
  }
  return FockVector(v.n_modes(), std::move(out));
}

Matrix annihilation_matrix(int n_modes, int mode) {
  check_mode_count(n_modes);
  check_mode(n_modes, mode);
  const Eigen::Index dim = Eigen::Index{1} << n_modes;
  const Mask bit = Mask{1} << mode;
  Matrix c = Matrix::Zero(dim, dim);
  for (Mask m = 0; m < static_cast<Mask>(dim); ++m) {
    if (m & bit) c(m ^ bit, m) = static_cast<double>(prefix_sign(m, mode));
  }
  return c;
}

Matrix creation_matrix(int n_modes, int mode) {
  return annihilation_matrix(n_modes, mode).adjoint();
}

Matrix number_matrix(int n_modes, int mode) {
  check_mode_count(n_modes);
  check_mode(n_modes, mode);
  const Eigen::Index dim = Eigen::Index{1} << n_modes;
  Matrix n = Matrix::Zero(dim, dim);
  for (Mask m = 0; m < static_cast<Mask>(dim); ++m) {
    if (m & (Mask{1} << mode)) n(m, m) = 1.0;
  }
  return n;
}

Matrix identity_matrix(int n_modes) {
  check_mode_count(n_modes);
  const Eigen::Index dim = Eigen::Index{1} << n_modes;
  return Matrix::Identity(dim, dim);
}

}  // namespace fermient
