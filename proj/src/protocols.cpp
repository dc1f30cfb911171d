#include "fermient/protocols.hpp"

#include "fermient/eigensystem.hpp"
#include "fermient/entanglement.hpp"
#include "fermient/errors.hpp"

#include <cmath>
#include <numbers>
#include <random>

namespace fermient {

std::string to_string(PairKind kind) { return kind == PairKind::odd ? "odd" : "even"; }

namespace {

void check_encoding(int n_modes, const QubitEncoding& enc) {
  check_mode(n_modes, enc.mode_i);
  check_mode(n_modes, enc.mode_j);
  if (enc.mode_i == enc.mode_j) {
    throw Error(ErrorCode::invalid_argument, "qubit pair needs two distinct modes");
  }
}

Matrix pauli_of_kind(int n, int i, int j, PairKind kind, Axis axis) {
  const Matrix ci = annihilation_matrix(n, i);
  const Matrix cj = annihilation_matrix(n, j);
  const Matrix di = ci.adjoint();
  const Matrix dj = cj.adjoint();
  const Complex mi(0.0, -1.0);
  if (kind == PairKind::odd) {
    switch (axis) {
      case Axis::x: return di * cj + dj * ci;
      case Axis::y: return mi * (di * cj - dj * ci);
      case Axis::z: return di * ci - dj * cj;
    }
  } else {
    switch (axis) {
      case Axis::x: return di * dj + cj * ci;
      case Axis::y: return mi * (di * dj - cj * ci);
      case Axis::z: return di * ci + dj * cj - identity_matrix(n);
    }
  }
  return Matrix();
}

Matrix generator(int n, const QubitEncoding& enc, const std::array<double, 3>& w,
                 bool both_kinds) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  Matrix g = Matrix::Zero(dim, dim);
  const Axis axes[] = {Axis::x, Axis::y, Axis::z};
  for (int k = 0; k < 3; ++k) {
    if (w[k] == 0.0) continue;
    if (both_kinds) {
      g += w[k] * (pauli_of_kind(n, enc.mode_i, enc.mode_j, PairKind::odd, axes[k]) +
                   pauli_of_kind(n, enc.mode_i, enc.mode_j, PairKind::even, axes[k]));
    } else {
      g += w[k] * pauli_of_kind(n, enc.mode_i, enc.mode_j, enc.kind, axes[k]);
    }
  }
  return g;
}

}  // namespace

Matrix pauli_matrix(int n_modes, const QubitEncoding& enc, Axis axis) {
  check_mode_count(n_modes);
  check_encoding(n_modes, enc);
  return pauli_of_kind(n_modes, enc.mode_i, enc.mode_j, enc.kind, axis);
}

FockOperator pauli(int n_modes, const QubitEncoding& enc, Axis axis) {
  return FockOperator(n_modes, pauli_matrix(n_modes, enc, axis), OperatorKind::hermitian);
}

Matrix code_projector(int n_modes, const QubitEncoding& enc) {
  const Matrix z = pauli_matrix(n_modes, enc, Axis::z);
  return z * z;
}

FockOperator rotation(int n_modes, const QubitEncoding& enc, const std::array<double, 3>& lambda,
                      bool both_kinds) {
  check_mode_count(n_modes);
  check_encoding(n_modes, enc);
  return FockOperator(n_modes, exp_i_hermitian(generator(n_modes, enc, lambda, both_kinds)),
                      OperatorKind::unitary);
}

FockOperator pauli_gate(int n_modes, const QubitEncoding& enc, const std::array<double, 3>& w,
                        bool both_kinds) {
  const double h = -std::numbers::pi / 2.0;
  const FockOperator r = rotation(n_modes, enc, {h * w[0], h * w[1], h * w[2]}, both_kinds);
  return FockOperator(n_modes, Complex(0.0, 1.0) * r.matrix(), OperatorKind::unitary);
}

FockOperator cnot(int n_modes, const QubitEncoding& control, const QubitEncoding& target) {
  check_mode_count(n_modes);
  check_encoding(n_modes, control);
  check_encoding(n_modes, target);
  for (int a : {control.mode_i, control.mode_j}) {
    if (a == target.mode_i || a == target.mode_j) {
      throw Error(ErrorCode::overlapping_pairs, "control and target share a mode");
    }
  }
  if (control.kind != target.kind) {
    throw Error(ErrorCode::invalid_argument, "control and target use different encodings");
  }
  const Matrix zc = pauli_matrix(n_modes, control, Axis::z);
  const Matrix zt = pauli_matrix(n_modes, target, Axis::z);
  const Matrix xt = pauli_matrix(n_modes, target, Axis::x);
  const Matrix g = (std::numbers::pi / 4.0) * (zc * zc - zc) * (zt * zt - xt);
  return FockOperator(n_modes, exp_i_hermitian((g + g.adjoint()) / 2.0), OperatorKind::unitary);
}

FockOperator parity_gate(int n_modes, const std::vector<int>& side) {
  check_mode_count(n_modes);
  if (side.empty()) throw Error(ErrorCode::invalid_argument, "parity gate needs a non-empty side");
  Mask side_mask = 0;
  for (int m : side) {
    check_mode(n_modes, m);
    side_mask |= Mask{1} << m;
  }
  const Eigen::Index dim = Eigen::Index{1} << n_modes;
  Matrix d = Matrix::Zero(dim, dim);
  for (Mask m = 0; m < static_cast<Mask>(dim); ++m) {
    d(m, m) = (std::popcount(m & side_mask) % 2 == 0) ? -1.0 : 1.0;
  }
  return FockOperator(n_modes, std::move(d), OperatorKind::unitary);
}

FockState apply(const FockOperator& op, const FockState& state) {
  return FockState::from_vector(op.apply(state));
}

Measurement measure_branch(const FockState& state, int mode, int outcome) {
  check_mode(state.n_modes(), mode);
  if (outcome != 0 && outcome != 1) {
    throw Error(ErrorCode::invalid_argument, "occupation outcome must be 0 or 1");
  }
  const Mask bit = Mask{1} << mode;
  Vector projected = state.amplitudes();
  for (Mask m = 0; m < state.dim(); ++m) {
    if (((m & bit) != 0) != (outcome == 1)) projected[m] = 0.0;
  }
  const double p = projected.squaredNorm();
  if (p < tol::zero) {
    throw Error(ErrorCode::impossible_branch,
                "outcome " + std::to_string(outcome) + " on mode " + std::to_string(mode) +
                    " has probability " + std::to_string(p));
  }
  return Measurement{outcome, p, FockState::from_vector(FockVector(state.n_modes(), projected))};
}

Measurement measure_occupation(const FockState& state, int mode, std::uint64_t seed) {
  check_mode(state.n_modes(), mode);
  double p1 = 0.0;
  for (Mask m = 0; m < state.dim(); ++m) {
    if (m & (Mask{1} << mode)) p1 += std::norm(state[m]);
  }
  std::mt19937_64 rng(seed);
  const double r = std::uniform_real_distribution<double>(0.0, 1.0)(rng);
  return measure_branch(state, mode, r < p1 ? 1 : 0);
}

namespace {

constexpr int a1 = 0, a2 = 1, a3 = 2, a4 = 3, b1 = 4, b2 = 5;
constexpr int teleport_modes = 6;

FockVector create(const FockVector& v, std::initializer_list<int> modes) {
  std::vector<OperatorFactor> f;
  for (int m : modes) f.push_back({m, true});
  return OperatorString(f).apply(v);
}

}  // namespace

FockState teleport_input(Complex alpha, Complex beta, PairKind kind) {
  const FockVector vac = FockState::vacuum(teleport_modes);
  Vector v;
  if (kind == PairKind::odd) {
    const Vector pair = create(vac, {a1, b1}).amplitudes() + create(vac, {a2, b2}).amplitudes();
    const FockVector bell(teleport_modes, pair);
    v = alpha * create(bell, {a3}).amplitudes() + beta * create(bell, {a4}).amplitudes();
  } else {
    const Vector pair = vac.amplitudes() + create(vac, {a1, a2, b1, b2}).amplitudes();
    const FockVector bell(teleport_modes, pair);
    v = beta * bell.amplitudes() + alpha * create(bell, {a3, a4}).amplitudes();
  }
  return FockState::from_vector(FockVector(teleport_modes, v));
}

TeleportReport run_teleportation(Complex alpha, Complex beta, PairKind kind) {
  const double norm = std::norm(alpha) + std::norm(beta);
  if (std::abs(norm - 1.0) > tol::norm) {
    throw Error(ErrorCode::not_normalized, "input qubit has squared norm " + std::to_string(norm));
  }
  const QubitEncoding input{a3, a4, kind};
  const QubitEncoding alice{a1, a2, kind};
  const QubitEncoding bob{b1, b2, kind};
  const double r = 1.0 / std::sqrt(2.0);

  const FockState in = teleport_input(alpha, beta, kind);
  FockState s = apply(cnot(teleport_modes, input, alice), in);
  s = apply(pauli_gate(teleport_modes, input, {r, 0.0, -r}), s);
  s = apply(pauli_gate(teleport_modes, alice, {1.0, 0.0, 0.0}), s);

  const FockOperator x_fix = pauli_gate(teleport_modes, bob, {1.0, 0.0, 0.0});
  const FockOperator z_fix = pauli_gate(teleport_modes, bob, {0.0, 0.0, 1.0});
  const ModePartition bob_side(teleport_modes, {b1, b2}, {a1, a2, a3, a4});
  // local masks of Bob's logical |0> and |1>
  const Mask zero = kind == PairKind::odd ? 1 : 3;
  const Mask one = kind == PairKind::odd ? 2 : 0;
  Vector target(2);
  target << alpha, beta;

  TeleportReport report{kind, alpha, beta, in, s, {}};
  for (int input_bit = 0; input_bit < 2; ++input_bit) {
    for (int bell_bit = 0; bell_bit < 2; ++bell_bit) {
      // logical 0 means mode_i occupied for both kinds
      FockState post = s;
      double p = 1.0;
      const std::vector<int> measured_in =
          kind == PairKind::odd ? std::vector<int>{a3} : std::vector<int>{a3, a4};
      const std::vector<int> measured_bell =
          kind == PairKind::odd ? std::vector<int>{a1} : std::vector<int>{a1, a2};
      for (int m : measured_in) {
        Measurement r0 = measure_branch(post, m, 1 - input_bit);
        p *= r0.probability;
        post = r0.post_state;
      }
      for (int m : measured_bell) {
        Measurement r0 = measure_branch(post, m, 1 - bell_bit);
        p *= r0.probability;
        post = r0.post_state;
      }
      if (input_bit == 0) post = apply(z_fix, post);
      if (bell_bit == 0) post = apply(x_fix, post);

      const ReducedDensity rho = reduced_state(post, bob_side, Side::A);
      Matrix q(2, 2);
      q << rho.matrix(zero, zero), rho.matrix(zero, one), rho.matrix(one, zero),
          rho.matrix(one, one);
      const double inside = q.trace().real();
      const double fidelity = (target.adjoint() * q * target)(0, 0).real();
      report.branches.push_back(
          TeleportBranch{input_bit, bell_bit, p, fidelity, 1.0 - inside, q, post});
    }
  }
  return report;
}

FockState superdense_seed(SeedState seed) {
  const double h = 0.5;
  if (seed == SeedState::psi00) return make_state(4, {{5, h}, {10, h}, {15, h}, {0, h}});
  return make_state(4, {{5, h}, {10, h}, {15, h}, {0, -h}});
}

std::vector<std::string> superdense_messages() {
  return {"000", "010", "100", "110", "001", "011", "101", "111"};
}

FockState superdense_encode(const std::string& message, SeedState seed) {
  if (message.size() != 3 || message.find_first_not_of("01") != std::string::npos) {
    throw Error(ErrorCode::invalid_argument, "message must be three binary digits, got '" +
                                                 message + "'");
  }
  const QubitEncoding alice{0, 1, PairKind::odd};
  const Complex i(0.0, 1.0);
  FockState s = superdense_seed(seed);
  const std::string layer = message.substr(0, 2);
  if (layer == "01") {
    s = apply(pauli_gate(4, alice, {1.0, 0.0, 0.0}, true), s);
  } else if (layer == "10") {
    s = apply(pauli_gate(4, alice, {0.0, 0.0, 1.0}, true), s);
  } else if (layer == "11") {
    const FockOperator g = pauli_gate(4, alice, {0.0, 1.0, 0.0}, true);
    s = FockState::from_vector(FockVector(4, i * (g.matrix() * s.amplitudes())));
  }
  if (message[2] == '1') s = apply(parity_gate(4, {0, 1}), s);
  return s;
}

std::string superdense_decode(const FockState& state, SeedState seed) {
  if (state.n_modes() != 4) throw Error(ErrorCode::wrong_shape, "superdense states use four modes");
  std::string best;
  double best_weight = -1.0;
  for (const std::string& m : superdense_messages()) {
    const double w = std::norm(inner_product(superdense_encode(m, seed), state));
    if (w > best_weight) {
      best_weight = w;
      best = m;
    }
  }
  if (best_weight < 1.0 - tol::compare) {
    throw Error(ErrorCode::unknown_state,
                "largest code-state weight is " + std::to_string(best_weight));
  }
  return best;
}

}  // namespace fermient
