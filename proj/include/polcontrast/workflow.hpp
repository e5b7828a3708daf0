//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file polcontrast/workflow.hpp
//! Region comparison and sensitivity curves.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstddef>
#include <vector>

#include "contrast.hpp"
#include "decision.hpp"
#include "estimation.hpp"
#include "io.hpp"

namespace polcontrast
{
//---------------------------------------------------------------------------//
struct CompareOptions
{
    Looks looks{kChannels};
    double eta_level{0.05};
    double beta{0.5};
    QuantileConvention quantile{QuantileConvention::upper_tail};
    HellingerMode hellinger_mode{HellingerMode::paper};
    CorrelationEstimator estimator{CorrelationEstimator::sample};
};

struct RegionSummary
{
    std::size_t rows{0};  //!< records read (looks or covariances)
    std::size_t n{0};  //!< multilook observations entering the statistics
    Complex rho{};
    HermitianMatrix2 sigma;
};

struct MeasureRow
{
    DistanceKind kind{DistanceKind::kullback_leibler()};
    TestResult test;
};

struct ContrastReport
{
    CompareOptions options;
    RegionSummary region_a;
    RegionSummary region_b;
    std::array<MeasureRow, 4> measures;
    double xi1{0};
    double xi2{0};
    double t_kl{0};
    double t_h{0};
    Decision kl_decision;
    Decision hellinger_decision;
};

/*!
 * Estimate rho and Sigma for one region.
 *
 * Covariance files contribute one observation per row. Scattering-vector
 * files hold single looks, so they amount to floor(rows / L) multilook
 * observations.
 */
RegionSummary summarize_region(RegionData const& data,
                               CompareOptions const& options);

/*!
 * Compare two regions: estimated correlations, the four distances with
 * their statistics and p-values (one degree of freedom), the xi values and
 * thresholds, and both Similar/Distinct decisions.
 */
ContrastReport compare_regions(RegionData const& a,
                               RegionData const& b,
                               CompareOptions const& options);

//---------------------------------------------------------------------------//
struct CurvePoint
{
    double rho2_mod{0};
    std::array<double, 4> statistic{};  //!< KL, Renyi, Bhattacharyya, Hellinger
};

/*!
 * Test statistics against rho1 as |rho2| sweeps [0, 1 - 1e-6].
 *
 * The grid is anchored at rho1 (points rho1 + k * step), so it always
 * contains the zero of every curve.
 */
std::vector<CurvePoint> sensitivity_curve(double rho1_mod,
                                          Looks looks,
                                          double beta,
                                          std::size_t n1,
                                          std::size_t n2,
                                          double grid_step);

//---------------------------------------------------------------------------//
}  // namespace polcontrast
