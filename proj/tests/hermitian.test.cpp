//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/hermitian.test.cpp
//---------------------------------------------------------------------------//
#include "polcontrast/hermitian.hpp"

#include <cmath>
#include <numbers>

#include <gtest/gtest.h>

#include "polcontrast/errors.hpp"
#include "polcontrast/random.hpp"

namespace polcontrast
{
namespace test
{
namespace
{
//---------------------------------------------------------------------------//
HermitianMatrix2 const m{2, {1, 1}, 3};

HermitianMatrix2 random_positive_definite(RandomStream& rng)
{
    double const z11 = 0.1 + 4 * rng.uniform();
    double const z22 = 0.1 + 4 * rng.uniform();
    double const r = 0.99 * rng.uniform();
    double const phase = 2 * std::numbers::pi * rng.uniform();
    return {z11, std::polar(r * std::sqrt(z11 * z22), phase), z22};
}

void expect_matrix_near(HermitianMatrix2 const& expected,
                        HermitianMatrix2 const& actual,
                        double tol)
{
    EXPECT_NEAR(expected.z11, actual.z11, tol);
    EXPECT_NEAR(expected.z12.real(), actual.z12.real(), tol);
    EXPECT_NEAR(expected.z12.imag(), actual.z12.imag(), tol);
    EXPECT_NEAR(expected.z22, actual.z22, tol);
}

}  // namespace

//---------------------------------------------------------------------------//

TEST(HermitianTest, determinant)
{
    EXPECT_EQ(1, determinant(HermitianMatrix2::identity()));
    EXPECT_DOUBLE_EQ(4, determinant(m));
    EXPECT_EQ(0, determinant({1, {1, 0}, 1}));
}

TEST(HermitianTest, trace)
{
    EXPECT_EQ(2, trace(HermitianMatrix2::identity()));
    EXPECT_EQ(5, trace(m));
    EXPECT_EQ(0, trace(HermitianMatrix2{}));
}

TEST(HermitianTest, inverse)
{
    EXPECT_EQ(HermitianMatrix2::identity(),
              inverse(HermitianMatrix2::identity()));
    EXPECT_EQ(HermitianMatrix2::diagonal(0.5, 0.25),
              inverse(HermitianMatrix2::diagonal(2, 4)));
    expect_matrix_near({0.75, {-0.25, -0.25}, 0.5}, inverse(m), 1e-15);

    // Off-diagonal entries of M * inverse(M)
    auto const inv = inverse(m);
    Complex const upper = m.z11 * inv.z12 + m.z12 * inv.z22;
    Complex const lower = m.z21() * inv.z11 + m.z22 * inv.z21();
    EXPECT_NEAR(0, std::abs(upper), 1e-12);
    EXPECT_NEAR(0, std::abs(lower), 1e-12);
    EXPECT_NEAR(1, trace_of_product(m, inv) / 2, 1e-12);

    EXPECT_THROW(inverse({1, {1, 0}, 1}), SingularMatrix);
    EXPECT_THROW(inverse(HermitianMatrix2{}), SingularMatrix);
    EXPECT_THROW(inverse(HermitianMatrix2::diagonal(-1, -1)),
                 NotPositiveDefinite);
}

TEST(HermitianTest, cholesky)
{
    auto f = cholesky_factor(HermitianMatrix2::identity());
    EXPECT_EQ(1, f.l11);
    EXPECT_EQ(Complex{}, f.l21);
    EXPECT_EQ(1, f.l22);

    f = cholesky_factor(HermitianMatrix2::diagonal(4, 9));
    EXPECT_EQ(2, f.l11);
    EXPECT_EQ(3, f.l22);

    f = cholesky_factor(m);
    double const root2 = std::sqrt(2.0);
    EXPECT_NEAR(root2, f.l11, 1e-15);
    EXPECT_NEAR(1 / root2, f.l21.real(), 1e-15);
    EXPECT_NEAR(-1 / root2, f.l21.imag(), 1e-15);
    EXPECT_NEAR(root2, f.l22, 1e-15);
    expect_matrix_near(m, reconstruct(f), 1e-12);

    EXPECT_THROW(cholesky_factor({1, {1, 0}, 1}), NotPositiveDefinite);
    EXPECT_THROW(cholesky_factor({0, {}, 1}), NotPositiveDefinite);
    EXPECT_FALSE(is_positive_definite({1, {2, 0}, 1}));
    EXPECT_TRUE(is_positive_definite(m));
}

TEST(HermitianTest, outer_product)
{
    auto const z = outer_product({1, 2}, {3, -1});
    EXPECT_EQ(5, z.z11);
    EXPECT_EQ(10, z.z22);
    // y1 * conj(y2) = (1+2i)(3+i)
    EXPECT_EQ(Complex(1, 7), z.z12);
    EXPECT_NEAR(0, determinant(z), 1e-14);
}

TEST(HermitianTest, random_properties)
{
    RandomStream rng(20240611);
    for (int i = 0; i < 1000; ++i)
    {
        auto const a = random_positive_definite(rng);
        EXPECT_NEAR(1, determinant(inverse(a)) * determinant(a), 1e-10);
        expect_matrix_near(a, reconstruct(cholesky_factor(a)), 1e-12);

        HermitianMatrix2 conj_a = a;
        conj_a.z12 = std::conj(a.z12);
        EXPECT_EQ(determinant(a), determinant(conj_a));
    }
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace polcontrast
