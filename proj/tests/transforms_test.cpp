#include "fermient/correlations.hpp"
#include "fermient/entanglement.hpp"
#include "fermient/errors.hpp"
#include "fermient/transforms.hpp"

#include <gtest/gtest.h>

#include <cmath>

using namespace fermient;

namespace {

const double r2 = 1.0 / std::sqrt(2.0);

double phase_free_distance(const Vector& a, const Vector& b) {
  const Complex ov = a.dot(b);
  if (std::abs(ov) < 1e-15) return (a - b).norm();
  return (a * (ov / std::abs(ov)) - b).norm();
}

}  // namespace

TEST(Transforms, ValidateBogoliubov) {
  EXPECT_NO_THROW(identity_map(4));
  EXPECT_NO_THROW(particle_hole_map(4, {2}));
  try {
    validate_bogoliubov(Matrix::Identity(4, 4), Matrix::Identity(4, 4));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_symplectic);
  }
}

TEST(Transforms, LiftIdentity) {
  const FockOperator u = lift_to_fock(identity_map(4));
  EXPECT_LT(max_abs(u.matrix() - Matrix::Identity(16, 16)), 1e-12);
}

TEST(Transforms, ParticleHoleOnVacuum) {
  const auto s = particle_hole(FockState::vacuum(4), {1});
  EXPECT_NEAR(std::abs(s[0b0010]), 1.0, 1e-12);
}

TEST(Transforms, ParticleHoleIsAnInvolution) {
  const auto s = random_state(4, Parity::even, 3);
  const auto once = particle_hole(s, {0, 2, 3});
  EXPECT_EQ(once.parity(), Parity::odd);
  const auto twice = particle_hole(once, {0, 2, 3});
  EXPECT_LT(phase_free_distance(twice.amplitudes(), s.amplitudes()), 1e-10);
  EXPECT_EQ(particle_hole(s, {1, 2}).parity(), Parity::even);
}

TEST(Transforms, ParticleHoleDictionaryForOddStates) {
  // alpha_0 = beta_1, alpha_4 = -tilde beta_1, alpha_{1j} = -beta_j, with modes
  // counted from 1 as in the odd-state expansion.
  const auto s = random_state(4, Parity::odd, 77);
  const auto e = particle_hole(s, {0});
  auto beta = [&](int i) { return s[Mask{1} << (i - 1)]; };
  auto beta_tilde = [&](int i) {
    const Mask one = Mask{1} << (i - 1);
    return ((i - 1) % 2 == 0 ? 1.0 : -1.0) * s[15 ^ one];
  };
  const Complex phase = e[0] / beta(1);
  EXPECT_NEAR(std::abs(phase), 1.0, 1e-10);
  EXPECT_LT(std::abs(e[15] - phase * -beta_tilde(1)), 1e-10);
  for (int j = 2; j <= 4; ++j) {
    EXPECT_LT(std::abs(e[1u | (1u << (j - 1))] - phase * -beta(j)), 1e-10);
  }
  EXPECT_NEAR(concurrence_even(e), concurrence_odd(s), 1e-10);
}

TEST(Transforms, RandomMapLiftSatisfiesConjugation) {
  for (std::uint64_t seed = 0; seed < 5; ++seed) {
    const auto map = random_bogoliubov(4, seed);
    const FockOperator u = lift_to_fock(map);
    EXPECT_LT(max_abs(u.matrix().adjoint() * u.matrix() - Matrix::Identity(16, 16)), 1e-10);
    for (int i = 0; i < 4; ++i) {
      Matrix a = Matrix::Zero(16, 16);
      for (int k = 0; k < 4; ++k) {
        a += std::conj(map.U()(k, i)) * annihilation_matrix(4, k) +
             map.V()(k, i) * creation_matrix(4, k);
      }
      EXPECT_LT(max_abs(u.matrix() * annihilation_matrix(4, i) * u.matrix().adjoint() - a), 1e-9);
    }
  }
}

TEST(Transforms, CompositionLiftsToProduct) {
  const auto m1 = random_bogoliubov(4, 10);
  const auto m2 = random_bogoliubov(4, 11);
  const Matrix lhs = lift_to_fock(compose(m1, m2)).matrix();
  const Matrix rhs = lift_to_fock(m1).matrix() * lift_to_fock(m2).matrix();
  const Complex ratio = (lhs.adjoint() * rhs).trace() / 16.0;
  EXPECT_NEAR(std::abs(ratio), 1.0, 1e-9);
  EXPECT_LT(max_abs(lhs * ratio - rhs), 1e-9);
}

TEST(Transforms, SpectrumTransformsWithW) {
  const auto s = random_state(4, Parity::even, 1);
  const auto map = random_bogoliubov(4, 2);
  const Matrix w = map.W();
  const Matrix expected = w.adjoint() * extended_density(s).m * w;
  const Matrix got = extended_density(quasiparticle_coordinates(map, s)).m;
  EXPECT_LT(max_abs(got - expected), 1e-10);
}

TEST(Transforms, NormalFormOfSchmidtState) {
  const auto s = make_state(4, {{3, 0.8}, {12, 0.6}});
  const SchmidtForm nf = normal_form(s);
  EXPECT_NEAR(nf.alpha_plus, 0.8, 1e-10);
  EXPECT_NEAR(nf.alpha_minus, 0.6, 1e-10);
  EXPECT_LT(nf.residual, 1e-8);
}

TEST(Transforms, NormalFormOfSlaterDeterminant) {
  const SchmidtForm nf = normal_form(FockState::basis(4, 0b0011));
  EXPECT_NEAR(nf.alpha_plus, 1.0, 1e-10);
  EXPECT_NEAR(nf.alpha_minus, 0.0, 1e-10);
  const SchmidtForm odd = normal_form(FockState::basis(4, 0b0100));
  EXPECT_NEAR(odd.alpha_plus, 1.0, 1e-10);
}

TEST(Transforms, NormalFormOfRandomStates) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const auto s = random_state(4, seed % 2 ? Parity::odd : Parity::even, 900 + seed);
    const SchmidtForm nf = normal_form(s);
    const Eigen::VectorXd ev = qsp_spectrum(s).eigenvalues;
    EXPECT_NEAR(nf.alpha_plus * nf.alpha_plus, ev[0], 1e-9);
    EXPECT_NEAR(nf.alpha_minus * nf.alpha_minus, ev[7], 1e-9);
    EXPECT_GE(nf.alpha_plus, nf.alpha_minus);
    EXPECT_NEAR(2 * nf.alpha_plus * nf.alpha_minus, concurrence(s), 1e-9);
    EXPECT_LT(nf.residual, 1e-8);
    EXPECT_NEAR(qsp_entropy(nf.coordinates), qsp_entropy(s), 1e-9);
    // odd reading: one quasiparticle on each side, sharp
    const auto n0 = one_body(nf.coordinates).rho;
    EXPECT_NEAR((n0(0, 0) + n0(2, 2)).real(), 1.0, 1e-9);
    EXPECT_NEAR((n0(1, 1) + n0(3, 3)).real(), 1.0, 1e-9);
  }
}

TEST(Transforms, TwoFermionSchmidt) {
  for (int n : {4, 5, 6}) {
    const auto s = random_state_with_number(n, 2, 40 + n);
    const TwoFermionSchmidt t = two_fermion_schmidt(s);
    double total = 0.0;
    for (double c : t.coefficients) total += c * c;
    EXPECT_NEAR(total, 1.0, 1e-10);
    EXPECT_LT(t.residual, 1e-8);
    const Eigen::VectorXd ev = sp_spectrum(s).eigenvalues;
    for (std::size_t k = 0; k < t.coefficients.size(); ++k) {
      const double f = t.coefficients[k] * t.coefficients[k];
      EXPECT_NEAR(ev[2 * k], f, 1e-9);
      EXPECT_NEAR(ev[2 * k + 1], f, 1e-9);
    }
  }
}

TEST(Transforms, TwoFermionSchmidtOfSlaterDeterminant) {
  const TwoFermionSchmidt t = two_fermion_schmidt(FockState::basis(5, 0b10010));
  ASSERT_EQ(t.coefficients.size(), 1u);
  EXPECT_NEAR(t.coefficients[0], 1.0, 1e-12);
}

TEST(Transforms, TwoFermionSchmidtOfProductBasisState) {
  // sum alpha_{mu nu} c+_{A mu} c+_{B nu}: coefficients are the singular values of alpha
  Eigen::Matrix2cd alpha;
  alpha << Complex(0.5, 0.1), Complex(0.2, -0.3), Complex(-0.4, 0.0), Complex(0.1, 0.6);
  alpha /= alpha.norm();
  const auto s = make_state(4, {{5, alpha(0, 0)}, {9, alpha(0, 1)}, {6, alpha(1, 0)}, {10, alpha(1, 1)}});
  const TwoFermionSchmidt t = two_fermion_schmidt(s);
  Eigen::JacobiSVD<Eigen::Matrix2cd> svd(alpha);
  ASSERT_EQ(t.coefficients.size(), 2u);
  EXPECT_NEAR(t.coefficients[0], svd.singularValues()[0], 1e-10);
  EXPECT_NEAR(t.coefficients[1], svd.singularValues()[1], 1e-10);
}

TEST(Transforms, TwoFermionSchmidtRejectsOtherNumbers) {
  try {
    two_fermion_schmidt(random_state(4, Parity::even, 1));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::not_two_fermion);
  }
}

TEST(Transforms, SingleParticleMapPreservesSpEntropy) {
  const auto s = random_state(4, Parity::even, 14);
  const auto map = random_bogoliubov(4, 15, true);
  EXPECT_NEAR(sp_entropy(apply_map(map, s)), sp_entropy(s), 1e-9);
}

TEST(Transforms, SymmetricStateNormalForm) {
  const auto s = make_state(4, {{3, r2}, {12, r2}});
  const SchmidtForm nf = normal_form(s);
  EXPECT_NEAR(nf.alpha_plus, r2, 1e-10);
  EXPECT_NEAR(nf.alpha_minus, r2, 1e-10);
}
