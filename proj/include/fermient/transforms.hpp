#pragma once

#include "fermient/fock.hpp"
#include "fermient/fock_operator.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace fermient {

// Quasiparticle operators a_i = sum_k conj(U(k,i)) c_k + V(k,i) c+_k.
class BogoliubovMap {
 public:
  // Throws NotSymplectic with the largest constraint residual.
  static BogoliubovMap validate(const Matrix& u, const Matrix& v);

  int n_modes() const { return static_cast<int>(u_.rows()); }
  const Matrix& U() const { return u_; }
  const Matrix& V() const { return v_; }
  // [[U, V], [conj(V), conj(U)]]
  Matrix W() const;

 private:
  BogoliubovMap(Matrix u, Matrix v) : u_(std::move(u)), v_(std::move(v)) {}

  Matrix u_;
  Matrix v_;
};

inline BogoliubovMap validate_bogoliubov(const Matrix& u, const Matrix& v) {
  return BogoliubovMap::validate(u, v);
}

// Largest residual among UU+ + VV+ - I, UV^T + VU^T and W+W - I.
double symplectic_defect(const Matrix& u, const Matrix& v);

BogoliubovMap identity_map(int n_modes);
BogoliubovMap single_particle_map(const Matrix& u);
// c_k <-> c+_k on the listed modes.
BogoliubovMap particle_hole_map(int n_modes, const std::vector<int>& modes);

// W = W(first) W(second); lifts multiply in the same order.
BogoliubovMap compose(const BogoliubovMap& first, const BogoliubovMap& second);

// W = exp(iK) with K built from a random Hermitian h and antisymmetric delta.
BogoliubovMap random_bogoliubov(int n_modes, std::uint64_t seed, bool number_conserving = false);

// Fock-space unitary with U c_i U+ = a_i. The new vacuum's largest component is
// made real positive. Throws LiftFailure if no vacuum exists or the conjugation
// check fails at 1e-9.
FockOperator lift_to_fock(const BogoliubovMap& map);

// U psi: the state with the same quasiparticle coordinates as psi has in c modes.
FockState apply_map(const BogoliubovMap& map, const FockState& state);
// U+ psi: the amplitudes of psi on the basis a+_{i1}...a+_{ik}|vac>.
FockState quasiparticle_coordinates(const BogoliubovMap& map, const FockState& state);

FockState particle_hole(const FockState& state, const std::vector<int>& modes);

struct SchmidtForm {
  double alpha_plus = 1.0;
  double alpha_minus = 0.0;
  BogoliubovMap map;
  // amplitudes of the input on the quasiparticle basis; support on masks 3 and 12
  FockState coordinates;
  std::array<std::array<int, 2>, 2> odd_pairing{{{0, 2}, {1, 3}}};
  std::array<std::array<int, 2>, 2> even_pairing{{{0, 1}, {2, 3}}};
  double residual = 0.0;
};

// n = 4 only. Odd inputs are first mapped by a particle-hole transformation on mode 0.
SchmidtForm normal_form(const FockState& state);

struct TwoFermionSchmidt {
  // descending, strictly positive; pair k occupies quasiparticle modes 2k, 2k+1
  std::vector<double> coefficients;
  BogoliubovMap map;  // V = 0
  FockState coordinates;
  double residual = 0.0;
};

// Throws NotTwoFermion if any amplitude outside particle number two exceeds tol::zero.
TwoFermionSchmidt two_fermion_schmidt(const FockState& state);

}  // namespace fermient
