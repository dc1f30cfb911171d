#include "fermient/errors.hpp"
#include "fermient/fock.hpp"
#include "oracles.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <random>

using namespace fermient;

namespace {

ErrorCode code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  ADD_FAILURE() << "no exception";
  return ErrorCode::invalid_argument;
}

FockVector basis_vector(int n, Mask m) { return FockState::basis(n, m); }

}  // namespace

TEST(Fock, CreationSigns) {
  auto v = apply_creation(basis_vector(4, 0), 2);
  EXPECT_EQ(v[0b0100], Complex(1.0));
  v = apply_creation(basis_vector(4, 0b0011), 2);
  EXPECT_EQ(v[0b0111], Complex(1.0));
  v = apply_creation(basis_vector(4, 0b0001), 1);
  EXPECT_EQ(v[0b0011], Complex(-1.0));
  v = apply_creation(basis_vector(4, 0b0100), 2);
  EXPECT_DOUBLE_EQ(v.norm(), 0.0);
}

TEST(Fock, AnnihilationSigns) {
  auto v = apply_annihilation(basis_vector(4, 0b0100), 2);
  EXPECT_EQ(v[0], Complex(1.0));
  v = apply_annihilation(basis_vector(4, 0b0011), 0);
  EXPECT_EQ(v[0b0010], Complex(1.0));
  v = apply_annihilation(basis_vector(4, 0b0011), 1);
  EXPECT_EQ(v[0b0001], Complex(-1.0));
}

TEST(Fock, CreationOrderMatchesAnticommutation) {
  // c+_1 c+_0 |0> = -c+_0 c+_1 |0>
  const auto vac = basis_vector(3, 0);
  const auto a = apply_creation(apply_creation(vac, 0), 1);
  const auto b = apply_creation(apply_creation(vac, 1), 0);
  EXPECT_NEAR((a.amplitudes() + b.amplitudes()).norm(), 0.0, 1e-15);
  EXPECT_EQ(b[0b011], Complex(1.0));
}

TEST(Fock, MakeState) {
  const auto s = make_state(4, {{0b0011, 1.0}});
  EXPECT_EQ(s.parity(), Parity::even);
  EXPECT_EQ(s[3], Complex(1.0));

  const auto t = make_state(4, {{0b0011, 1.0}, {0b1100, 1.0}});
  EXPECT_NEAR(t[3].real(), 1.0 / std::sqrt(2.0), 1e-15);
  EXPECT_NEAR(t[12].real(), 1.0 / std::sqrt(2.0), 1e-15);

  EXPECT_EQ(code_of([] { make_state(4, {{0b0001, 1.0}, {0b0011, 1.0}}); }),
            ErrorCode::mixed_parity);
  EXPECT_EQ(code_of([] { make_state(4, {{0b0011, 0.0}}); }), ErrorCode::zero_norm);
  EXPECT_EQ(code_of([] { make_state(4, {{16, 1.0}}); }), ErrorCode::invalid_argument);
  EXPECT_EQ(code_of([] { make_state(13, {{0, 1.0}}); }), ErrorCode::invalid_argument);
}

TEST(Fock, TinyWrongParityAmplitudesAreDropped) {
  Vector a = Vector::Zero(16);
  a[3] = 1.0;
  a[1] = 1e-13;
  const auto s = FockState::from_vector(FockVector(4, a));
  EXPECT_EQ(s.parity(), Parity::even);
  EXPECT_EQ(s[1], Complex(0.0));
}

TEST(Fock, DenseMatricesMatchJordanWigner) {
  for (int n = 1; n <= 6; ++n) {
    for (int k = 0; k < n; ++k) {
      EXPECT_LT((annihilation_matrix(n, k) - oracle::jw_annihilation(n, k)).cwiseAbs().maxCoeff(),
                1e-15)
          << "n=" << n << " k=" << k;
    }
  }
}

TEST(Fock, AnticommutationRelations) {
  for (int n = 1; n <= 6; ++n) {
    const Eigen::Index dim = Eigen::Index{1} << n;
    for (int i = 0; i < n; ++i) {
      for (int j = 0; j < n; ++j) {
        const Matrix ci = annihilation_matrix(n, i), cj = annihilation_matrix(n, j);
        const Matrix cdj = creation_matrix(n, j);
        EXPECT_LT((ci * cj + cj * ci).cwiseAbs().maxCoeff(), 1e-15);
        const Matrix expected = (i == j ? 1.0 : 0.0) * Matrix::Identity(dim, dim);
        EXPECT_LT((ci * cdj + cdj * ci - expected).cwiseAbs().maxCoeff(), 1e-15);
      }
    }
  }
}

TEST(Fock, PrimitivesAgreeWithDenseMatrices) {
  std::mt19937_64 rng(11);
  const int n = 5;
  const FockVector v(n, oracle::random_vector(32, rng));
  for (int k = 0; k < n; ++k) {
    EXPECT_LT((apply_annihilation(v, k).amplitudes() - annihilation_matrix(n, k) * v.amplitudes())
                  .norm(),
              1e-14);
    EXPECT_LT((apply_creation(v, k).amplitudes() - creation_matrix(n, k) * v.amplitudes()).norm(),
              1e-14);
  }
}

TEST(Fock, CreationIsAdjointOfAnnihilation) {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const FockVector a(4, oracle::random_vector(16, rng));
    const FockVector b(4, oracle::random_vector(16, rng));
    for (int i = 0; i < 4; ++i) {
      const Complex lhs = inner_product(a, apply_creation(b, i));
      const Complex rhs = inner_product(apply_annihilation(a, i), b);
      EXPECT_LT(std::abs(lhs - rhs), 1e-14);
    }
  }
}

TEST(Fock, OperatorStringParity) {
  const auto s = random_state(4, Parity::even, 3);
  const OperatorString even_len({{1, true}, {3, false}});
  const OperatorString odd_len({{2, true}});
  EXPECT_EQ(FockState::from_vector(even_len.apply(s)).parity(), Parity::even);
  EXPECT_EQ(FockState::from_vector(odd_len.apply(s)).parity(), Parity::odd);

  // c+_0 c_1 on mask 0b0010 -> mask 0b0001 with sign +1
  const auto image = OperatorString({{0, true}, {1, false}}).act(0b0010);
  ASSERT_TRUE(image.has_value());
  EXPECT_EQ(image->first, 0b0001u);
  EXPECT_EQ(image->second, 1);
  EXPECT_FALSE(OperatorString({{0, false}}).act(0b0010).has_value());
}

TEST(Fock, OperatorStringMatchesDenseProduct) {
  std::mt19937_64 rng(9);
  const FockVector v(4, oracle::random_vector(16, rng));
  const OperatorString op({{3, true}, {0, false}, {2, true}, {1, false}});
  const Matrix dense = creation_matrix(4, 3) * annihilation_matrix(4, 0) * creation_matrix(4, 2) *
                       annihilation_matrix(4, 1);
  EXPECT_LT((op.apply(v).amplitudes() - dense * v.amplitudes()).norm(), 1e-14);
}

TEST(Fock, InnerProduct) {
  const auto psi = random_state(4, Parity::even, 1);
  EXPECT_NEAR(std::abs(inner_product(psi, psi) - 1.0), 0.0, 1e-14);
  const auto phi = random_state(4, Parity::odd, 1);
  EXPECT_EQ(inner_product(psi, phi), Complex(0.0));
  // Bell pair states on A1, A2, B1, B2 = modes 0..3
  const auto b00 = make_state(4, {{5, 1.0}, {10, 1.0}});
  const auto b10 = make_state(4, {{5, 1.0}, {10, -1.0}});
  EXPECT_LT(std::abs(inner_product(b00, b10)), 1e-15);
  EXPECT_EQ(code_of([] { inner_product(FockState::vacuum(3), FockState::vacuum(4)); }),
            ErrorCode::dimension_mismatch);
}

TEST(Fock, NumberParity) {
  EXPECT_EQ(number_parity(FockState::vacuum(4)), 1);
  EXPECT_EQ(number_parity(FockState::basis(4, 0b0010)), -1);
  EXPECT_EQ(number_parity(make_state(4, {{0, 0.3}, {3, 0.5}, {15, 0.2}})), 1);
}

TEST(Fock, RandomStateIsDeterministic) {
  const auto a = random_state(4, Parity::even, 42);
  const auto b = random_state(4, Parity::even, 42);
  EXPECT_EQ(a.amplitudes(), b.amplitudes());
  EXPECT_EQ(a.parity(), Parity::even);
  EXPECT_NEAR(a.amplitudes().norm(), 1.0, 1e-14);
  const auto c = random_state(4, Parity::even, 43);
  EXPECT_GT((a.amplitudes() - c.amplitudes()).norm(), 1e-3);
  for (Mask m = 0; m < 16; ++m) {
    if (parity_of(m) == Parity::odd) EXPECT_EQ(a[m], Complex(0.0));
  }
}

TEST(Fock, RandomStateWithNumber) {
  const auto s = random_state_with_number(6, 2, 8);
  for (Mask m = 0; m < s.dim(); ++m) {
    if (std::popcount(m) != 2) EXPECT_EQ(s[m], Complex(0.0));
  }
  EXPECT_NEAR(s.amplitudes().norm(), 1.0, 1e-14);
}

TEST(Fock, DeriveSeedSpreads) {
  EXPECT_NE(derive_seed(7, 0), derive_seed(7, 1));
  EXPECT_NE(derive_seed(7, 0), derive_seed(8, 0));
  EXPECT_EQ(derive_seed(7, 3), derive_seed(7, 3));
}
