//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/wishart.test.cpp
//---------------------------------------------------------------------------//
#include "polcontrast/wishart.hpp"

#include <cmath>
#include <limits>
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
double const log_pi = std::log(std::numbers::pi);
}

//---------------------------------------------------------------------------//

TEST(WishartTest, multivariate_gamma)
{
    EXPECT_NEAR(log_pi, log_multivariate_gamma2(Looks{2}), 1e-15);
    EXPECT_NEAR(log_pi + std::log(2.0), log_multivariate_gamma2(Looks{3}),
                1e-14);
    EXPECT_NEAR(log_pi + std::log(12.0), log_multivariate_gamma2(Looks{4}),
                1e-14);
    EXPECT_THROW(log_multivariate_gamma2(Looks{1}), DomainError);
}

TEST(WishartTest, log_density)
{
    WishartParams const unit{HermitianMatrix2::identity(), Looks{2}};
    double const expected = 4 * std::log(2.0) - 4 - log_pi;
    EXPECT_NEAR(expected, wishart_log_density(HermitianMatrix2::identity(), unit),
                1e-14);
    EXPECT_NEAR(-2.372141, expected, 5e-7);
    EXPECT_NEAR(4 * std::log(2.0) - 6 - log_pi,
                wishart_log_density(HermitianMatrix2::diagonal(2, 1), unit),
                1e-14);

    // Singular Z is admissible only at L = p
    HermitianMatrix2 const rank_one{1, {1, 0}, 1};
    EXPECT_TRUE(std::isfinite(wishart_log_density(rank_one, unit)));
    EXPECT_THROW(wishart_log_density(
                     rank_one, {HermitianMatrix2::identity(), Looks{3}}),
                 DomainError);
    EXPECT_THROW(
        wishart_log_density(HermitianMatrix2::identity(),
                            {HermitianMatrix2{1, {1, 0}, 1}, Looks{3}}),
        SingularMatrix);
}

TEST(WishartTest, density_matches_general_formula)
{
    // Term-by-term evaluation at real L for a non-trivial Sigma
    HermitianMatrix2 const sigma{2, {0.3, -0.4}, 1.5};
    HermitianMatrix2 const z{1.2, {0.1, 0.2}, 0.9};
    double const l = 3.5;
    double const expected = 2 * l * std::log(l)
                            + (l - 2) * std::log(determinant(z))
                            - l * std::log(determinant(sigma)) - log_pi
                            - std::lgamma(l) - std::lgamma(l - 1)
                            - l * trace_of_product(inverse(sigma), z);
    EXPECT_NEAR(expected, wishart_log_density(z, {sigma, Looks{l}}), 1e-12);
    EXPECT_EQ(WishartDensity({sigma, Looks{l}}).log_density(z),
              wishart_log_density(z, {sigma, Looks{l}}));
}

TEST(WishartTest, correlation_parametrization)
{
    EXPECT_EQ(HermitianMatrix2::identity(), covariance_from_correlation({}));

    auto s = covariance_from_correlation({1, 1, 0.5, 0});
    EXPECT_EQ(1, s.z11);
    EXPECT_NEAR(0.5, s.z12.real(), 1e-15);
    EXPECT_NEAR(0, s.z12.imag(), 1e-15);

    s = covariance_from_correlation({4, 9, 0.5, std::numbers::pi / 2});
    EXPECT_EQ(4, s.z11);
    EXPECT_EQ(9, s.z22);
    EXPECT_NEAR(0, s.z12.real(), 1e-15);
    EXPECT_NEAR(3, s.z12.imag(), 1e-15);

    // Complex rho with zero delta gives the same matrix
    auto const s_complex
        = covariance_from_correlation({4, 9, Complex{0, 0.5}, 0});
    EXPECT_NEAR(3, s_complex.z12.imag(), 1e-15);

    EXPECT_THROW(covariance_from_correlation({1, 1, 1.0, 0}), DomainError);
    EXPECT_THROW(covariance_from_correlation({0, 1, 0.1, 0}), DomainError);

    auto cp = correlation_from_covariance(HermitianMatrix2::identity());
    EXPECT_EQ(0, std::abs(cp.rho));
    EXPECT_EQ(0, cp.delta);

    cp = correlation_from_covariance({4, {0, 3}, 9});
    EXPECT_EQ(4, cp.sigma11);
    EXPECT_EQ(9, cp.sigma22);
    EXPECT_NEAR(0.5, std::abs(cp.rho), 1e-15);
    EXPECT_NEAR(std::numbers::pi / 2, cp.delta, 1e-15);

    EXPECT_THROW(correlation_from_covariance({0, {}, 1}), DomainError);
}

TEST(WishartTest, correlation_round_trip)
{
    RandomStream rng(7);
    for (int i = 0; i < 1000; ++i)
    {
        double const z11 = 0.1 + 5 * rng.uniform();
        double const z22 = 0.1 + 5 * rng.uniform();
        Complex const z12 = std::polar(0.95 * rng.uniform()
                                           * std::sqrt(z11 * z22),
                                       (2 * rng.uniform() - 1)
                                           * std::numbers::pi);
        HermitianMatrix2 const s{z11, z12, z22};
        auto const back
            = covariance_from_correlation(correlation_from_covariance(s));
        EXPECT_NEAR(s.z11, back.z11, 1e-12);
        EXPECT_NEAR(s.z22, back.z22, 1e-12);
        EXPECT_NEAR(0, std::abs(s.z12 - back.z12), 1e-12);
    }
}

TEST(WishartTest, joint_normalized_density)
{
    double const ln = joint_normalized_log_density({1, 1, 0.5, 1.3}, 0, 0,
                                                   Looks{2});
    EXPECT_NEAR(std::log(0.5 * std::exp(-2.0) / std::numbers::pi), ln, 1e-14);
    EXPECT_NEAR(-3.83787, ln, 1e-5);

    // 0.5 / (pi * 0.75^2) * exp(-1.5 / 0.75)
    double const expected
        = std::log(0.5 / (std::numbers::pi * 0.5625) * std::exp(-2.0));
    EXPECT_NEAR(expected,
                joint_normalized_log_density({1, 1, 0.5, 0}, 0.5, 0, Looks{2}),
                1e-14);

    EXPECT_EQ(-std::numeric_limits<double>::infinity(),
              joint_normalized_log_density({1, 1, 1.5, 0}, 0.5, 0, Looks{2}));
    EXPECT_THROW(joint_normalized_log_density({1, 1, 0.5, 0}, 1.0, 0, Looks{2}),
                 DomainError);
    EXPECT_THROW(
        joint_normalized_log_density({1, 1, 0.5, 0}, 0.5, 0, Looks{1.5}),
        DomainError);
}

TEST(WishartTest, joint_density_phase_behavior)
{
    NormalizedObservation obs{1.3, 0.8, 0.4, 0};
    double const flat = joint_normalized_log_density(obs, 0, 0.7, Looks{3});
    double const delta = 0.7;
    double best = -std::numeric_limits<double>::infinity();
    double best_phase = 0;
    for (int k = -180; k <= 180; ++k)
    {
        obs.phase = k * std::numbers::pi / 180;
        EXPECT_EQ(flat, joint_normalized_log_density(obs, 0, delta, Looks{3}));
        double const v = joint_normalized_log_density(obs, 0.6, delta, Looks{3});
        if (v > best)
        {
            best = v;
            best_phase = obs.phase;
        }
    }
    EXPECT_NEAR(delta, best_phase, std::numbers::pi / 180);
    obs.phase = delta;
    EXPECT_GE(joint_normalized_log_density(obs, 0.6, delta, Looks{3}), best);
}

TEST(WishartTest, sampler_determinism)
{
    WishartParams const params{unit_covariance(0.5), Looks{4}};
    RandomStream a(99, 3);
    RandomStream b(99, 3);
    for (int i = 0; i < 10; ++i)
    {
        EXPECT_EQ(sample_wishart(params, a), sample_wishart(params, b));
    }
    EXPECT_THROW(WishartSampler({HermitianMatrix2::identity(), Looks{2.5}}),
                 DomainError);
    EXPECT_THROW(WishartSampler({HermitianMatrix2::identity(), Looks{1}}),
                 DomainError);
    EXPECT_THROW(WishartSampler({HermitianMatrix2{1, {1, 0}, 1}, Looks{2}}),
                 NotPositiveDefinite);
}

TEST(WishartTest, sampler_moments)
{
    WishartParams const params{unit_covariance(0.5), Looks{4}};
    WishartSampler const sample(params);
    RandomStream rng(2024);
    constexpr int n = 100000;
    double s11 = 0, s22 = 0;
    Complex s12{};
    for (int i = 0; i < n; ++i)
    {
        auto const z = sample(rng);
        s11 += z.z11;
        s12 += z.z12;
        s22 += z.z22;
    }
    EXPECT_NEAR(1, s11 / n, 0.02);
    EXPECT_NEAR(1, s22 / n, 0.02);
    EXPECT_NEAR(0.5, s12.real() / n, 0.02);
    EXPECT_NEAR(0, s12.imag() / n, 0.02);
    EXPECT_NEAR(0.5, std::abs(s12) / std::sqrt(s11 * s22), 0.01);
}

TEST(WishartTest, sampler_positive_definite)
{
    RandomStream rng(5);
    for (double l : {2.0, 3.0, 8.0})
    {
        WishartSampler const sample(
            {HermitianMatrix2{2, {0.5, 0.9}, 1}, Looks{l}});
        for (int i = 0; i < 10000 / 3; ++i)
        {
            EXPECT_TRUE(is_positive_definite(sample(rng)));
        }
    }
}

TEST(WishartTest, importance_normalization)
{
    // E over W(S', L) of f(Z; I) / f(Z; S') equals 1
    WishartParams const target{HermitianMatrix2::identity(), Looks{2}};
    WishartParams const proposal{HermitianMatrix2{1.3, {0.1, 0}, 1.2},
                                 Looks{2}};
    WishartDensity const f(target);
    WishartDensity const g(proposal);
    WishartSampler const sample(proposal);
    RandomStream rng(31);
    constexpr int n = 100000;
    double sum = 0, sum_sq = 0;
    for (int i = 0; i < n; ++i)
    {
        auto const z = sample(rng);
        double const w = std::exp(f.log_density(z) - g.log_density(z));
        sum += w;
        sum_sq += w * w;
    }
    double const mean = sum / n;
    double const se = std::sqrt((sum_sq / n - mean * mean) / (n - 1));
    EXPECT_LT(std::fabs(mean - 1), 3 * se) << "mean " << mean << " se " << se;
}

//---------------------------------------------------------------------------//
}  // namespace test
}  // namespace polcontrast
