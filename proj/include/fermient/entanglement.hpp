#pragma once

#include "fermient/correlations.hpp"
#include "fermient/fock.hpp"

#include <string>
#include <vector>

namespace fermient {

class ModePartition {
 public:
  // Throws InvalidArgument unless the sides are disjoint, non-empty and cover [0, n).
  ModePartition(int n_modes, std::vector<int> side_a, std::vector<int> side_b);
  // side B is the complement of side A, ascending.
  static ModePartition from_side_a(int n_modes, std::vector<int> side_a);

  int n_modes() const { return n_modes_; }
  const std::vector<int>& side_a() const { return side_a_; }
  const std::vector<int>& side_b() const { return side_b_; }

 private:
  int n_modes_;
  std::vector<int> side_a_;
  std::vector<int> side_b_;
};

enum class Side { A, B };

// Local basis: bit t of a local mask is the t-th mode of the side.
struct ReducedDensity {
  std::vector<int> modes;
  Matrix matrix;
  Eigen::Index dim() const { return matrix.rows(); }
};

struct LocalParitySplit {
  double p_minus = 0.0;  // odd local parity weight
  double p_plus = 0.0;   // even local parity weight
  double c_minus = 0.0;
  double c_plus = 0.0;
  double concurrence = 0.0;
  Matrix beta;        // beta(mu, nu): one fermion on each side
  Matrix beta_tilde;  // (0,0) empty, (1,1) full, (0,1) pair on B, (1,0) pair on A
  bool sandwich_holds = false;
};

struct EntropyBound {
  std::string name;
  double s_a = 0.0;
  double quarter_s_qsp = 0.0;
  bool holds = false;
};

struct MajorizationReport {
  double lambda_max = 0.0;
  double f_plus = 0.0;
  double f_minus = 0.0;
  std::vector<EntropyBound> entropies;
  bool holds = false;
};

// 2|a01 a23 - a02 a13 + a03 a12 - a0 a15| over the n = 4 even amplitudes.
double concurrence_even(const FockState& state);
// 2|sum_i beta_i tilde_beta_i| with beta_i = amp(1 << i), tilde_beta_i = (-1)^i amp(15 ^ (1 << i)).
double concurrence_odd(const FockState& state);
double concurrence(const FockState& state);

// f = (1 +- sqrt(1 - C^2)) / 2
double f_plus(double c);
double f_minus(double c);

// Amplitudes with the modes renumbered in the order `order`, including the
// permutation sign of the occupied creation operators.
FockVector reorder_modes(const FockVector& v, const std::vector<int>& order);

ReducedDensity reduced_state(const FockState& state, const ModePartition& part, Side side);

Eigen::VectorXd reduced_spectrum(const ReducedDensity& rho);

// S(rho_A); throws SideMismatch if S(rho_B) differs by more than 1e-9.
double bipartite_entropy(const FockState& state, const ModePartition& part,
                         const EntropyFunction& f);

// n = 4, even parity, two modes per side. Throws WrongShape / WrongParity.
LocalParitySplit local_parity_split(const FockState& state, const ModePartition& part);

MajorizationReport majorization_check(const FockState& state, const ModePartition& part);

// 2|b1 b2 + bt1 bt2|; throws NotNormalized if the squared moduli do not sum to 1.
double schmidt_concurrence(Complex b1, Complex b2, Complex bt1, Complex bt2);

// (b1 c+_{A1}c+_{B1} + b2 c+_{A2}c+_{B2} + bt1 + bt2 c+_{A1}c+_{A2}c+_{B1}c+_{B2})|0>
// with A1, A2, B1, B2 = modes 0..3.
FockState schmidt_state(Complex b1, Complex b2, Complex bt1, Complex bt2);

}  // namespace fermient
