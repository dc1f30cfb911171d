#pragma once

#include "fermient/fock.hpp"
#include "fermient/fock_operator.hpp"

#include <array>
#include <cstdint>
#include <string>
#include <vector>

namespace fermient {

// Odd pairs hold one fermion (|0> = mode_i occupied); even pairs hold zero or
// two (|0> = both occupied, |1> = both empty).
enum class PairKind { odd, even };

struct QubitEncoding {
  int mode_i;
  int mode_j;
  PairKind kind;
};

enum class Axis { x, y, z };

std::string to_string(PairKind kind);

// Odd:  x = c+_i c_j + c+_j c_i,   y = -i(c+_i c_j - c+_j c_i),   z = n_i - n_j.
// Even: x = c+_i c+_j + c_j c_i,   y = -i(c+_i c+_j - c_j c_i),   z = n_i + n_j - 1.
Matrix pauli_matrix(int n_modes, const QubitEncoding& enc, Axis axis);
FockOperator pauli(int n_modes, const QubitEncoding& enc, Axis axis);

// z^2: projector onto the pair's code space.
Matrix code_projector(int n_modes, const QubitEncoding& enc);

// exp(i sum_j lambda_j P_j) with P = sigma of the encoding's kind, or sigma + tilde sigma
// when both_kinds is set.
FockOperator rotation(int n_modes, const QubitEncoding& enc, const std::array<double, 3>& lambda,
                      bool both_kinds = false);

// i exp(-i pi/2 P) with P = w_x x + w_y y + w_z z for a unit weight vector; this is P
// itself on the code space.
FockOperator pauli_gate(int n_modes, const QubitEncoding& enc, const std::array<double, 3>& w,
                        bool both_kinds = false);

// exp[i pi/4 (Q_c - z_c)(Q_t - x_t)] with Q the code projectors; equals the controlled
// NOT on the code space and the identity off it. Throws OverlappingPairs, InvalidArgument
// for mixed kinds.
FockOperator cnot(int n_modes, const QubitEncoding& control, const QubitEncoding& target);

// -(-1)^{N_side}
FockOperator parity_gate(int n_modes, const std::vector<int>& side);

struct Measurement {
  int outcome;
  double probability;
  FockState post_state;
};

// Deterministic branch; throws ImpossibleBranch below tol::zero.
Measurement measure_branch(const FockState& state, int mode, int outcome);
// Born-rule sampled branch.
Measurement measure_occupation(const FockState& state, int mode, std::uint64_t seed);

FockState apply(const FockOperator& op, const FockState& state);

// Teleportation layout: Alice A1..A4 = modes 0..3, Bob B1, B2 = modes 4, 5.
// The input qubit lives on (A3, A4), the shared pair on (A1, A2 | B1, B2).
struct TeleportBranch {
  int input_bit = 0;
  int bell_bit = 0;
  double probability = 0.0;
  double fidelity = 0.0;
  double leakage = 0.0;  // weight of Bob's state outside the code space
  Matrix bob_qubit;      // 2x2, logical basis
  FockState final_state;
};

struct TeleportReport {
  PairKind kind;
  Complex alpha;
  Complex beta;
  FockState input_state;
  FockState pre_measurement;  // after the entangling gate and Alice's single-pair gates
  std::vector<TeleportBranch> branches;
};

FockState teleport_input(Complex alpha, Complex beta, PairKind kind);
// Enumerates all four branches. Throws NotNormalized unless |alpha|^2 + |beta|^2 = 1.
TeleportReport run_teleportation(Complex alpha, Complex beta, PairKind kind);

// Superdense coding on A1, A2, B1, B2 = modes 0..3.
enum class SeedState { psi00, psi00_prime };

FockState superdense_seed(SeedState seed);
// message[0..1] selects the Pauli layer, message[2] == '1' applies the parity gate.
FockState superdense_encode(const std::string& message, SeedState seed = SeedState::psi00);
// Throws UnknownState if no code state has overlap above 1 - 1e-9.
std::string superdense_decode(const FockState& state, SeedState seed = SeedState::psi00);
std::vector<std::string> superdense_messages();

}  // namespace fermient
