//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file polcontrast/monte_carlo.hpp
//! Stochastic oracles: divergences by sampling, empirical size and power.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <cstdint>

#include "contrast.hpp"
#include "decision.hpp"
#include "estimation.hpp"
#include "wishart.hpp"

namespace polcontrast
{
//---------------------------------------------------------------------------//
//! Draws handled by one random substream; fixes the partition layout.
inline constexpr std::size_t kDrawsPerBlock = 2048;

struct McEstimate
{
    double value{0};
    double std_error{0};
    std::size_t n_samples{0};
    std::uint64_t seed{0};
};

/*!
 * Estimate a symmetrized divergence between two Wishart laws by sampling.
 *
 * n matrices are drawn from each model. KL averages the log-density ratio
 * under both models; Renyi, Bhattacharyya and Hellinger estimate the
 * affinities E_1[(f2/f1)^a] and E_2[(f1/f2)^a] (a = 1 - beta or 1/2) in log
 * space with a running maximum shift. The standard error comes from the
 * same draws (delta method where the estimate is a transformed mean).
 *
 * The draws are split into blocks of kDrawsPerBlock, block b using
 * substreams 2b and 2b+1 of the seed; blocks are reduced in order, so the
 * result is bit-identical for any worker count.
 */
McEstimate mc_divergence(DistanceKind kind,
                         WishartParams const& p1,
                         WishartParams const& p2,
                         std::size_t n,
                         std::uint64_t seed,
                         unsigned workers = 0);

//---------------------------------------------------------------------------//
struct SimulationScenario
{
    Complex rho1{};
    Complex rho2{};
    Looks looks{4};
    std::size_t n{500};
};

struct SimulationOptions
{
    CorrelationEstimator estimator{CorrelationEstimator::unit_ml};
    unsigned workers{0};  //!< 0 selects the hardware concurrency
};

struct SizePowerResult
{
    double rejection_rate{0};  //!< Distinct verdicts of the KL criterion
    double hellinger_rejection_rate{0};
    double exceedance_rate{0};  //!< runs with S_KL > chi2 critical value
    std::size_t runs{0};
    std::size_t kl_rejections{0};
    std::size_t hellinger_rejections{0};
    std::size_t exceedances{0};
    RegionTestConfig config;
    SimulationScenario scenario;
    std::uint64_t seed{0};
};

/*!
 * Rejection rates of the decision rules for pairs of simulated regions.
 *
 * Each run draws two regions of n unit-power Wishart observations at rho1
 * and rho2 from substream `run` of the seed, estimates the correlations
 * and applies both criteria. The sizes and looks of `cfg` are replaced by
 * the scenario's; its level and conventions are kept.
 */
SizePowerResult simulate_rejections(SimulationScenario const& scenario,
                                    RegionTestConfig const& cfg,
                                    std::size_t runs,
                                    std::uint64_t seed,
                                    SimulationOptions const& options = {});

SizePowerResult empirical_test_size(Complex rho,
                                    Looks looks,
                                    std::size_t n,
                                    RegionTestConfig const& cfg,
                                    std::size_t runs,
                                    std::uint64_t seed,
                                    SimulationOptions const& options = {});

SizePowerResult empirical_power(Complex rho1,
                                Complex rho2,
                                Looks looks,
                                std::size_t n,
                                RegionTestConfig const& cfg,
                                std::size_t runs,
                                std::uint64_t seed,
                                SimulationOptions const& options = {});

//---------------------------------------------------------------------------//
}  // namespace polcontrast
