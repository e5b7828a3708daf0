//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file workflow.cpp
//---------------------------------------------------------------------------//
#include "polcontrast/workflow.hpp"

#include <algorithm>
#include <cmath>

#include "polcontrast/errors.hpp"

namespace polcontrast
{
namespace
{
//---------------------------------------------------------------------------//
void validate(CompareOptions const& options)
{
    if (!(options.looks.value() >= kChannels)
        || !std::isfinite(options.looks.value()))
    {
        throw DomainError("comparison requires L >= 2");
    }
    if (!(options.eta_level > 0 && options.eta_level < 1))
    {
        throw DomainError("nominal level must lie in (0, 1)");
    }
    if (!(options.beta > 0 && options.beta < 1))
    {
        throw DomainError("Renyi order must lie in (0, 1)");
    }
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
RegionSummary summarize_region(RegionData const& data,
                               CompareOptions const& options)
{
    RegionSummary summary;
    if (auto const* covs = std::get_if<RegionSample>(&data))
    {
        summary.rows = covs->size();
        summary.n = covs->size();
        summary.sigma = estimate_covariance_ml(*covs);
        summary.rho = estimate_correlation(*covs, options.estimator);
        return summary;
    }

    auto const& looks = std::get<ScatteringVectorSample>(data);
    summary.rows = looks.size();
    summary.n = static_cast<std::size_t>(
        std::floor(static_cast<double>(looks.size()) / options.looks.value()));
    if (summary.n == 0)
    {
        throw DegenerateSample("fewer looks than one multilook observation");
    }
    summary.sigma = estimate_covariance_ml(looks);
    summary.rho = options.estimator == CorrelationEstimator::sample
                      ? estimate_correlation_from_looks(looks)
                      : estimate_correlation_unit_ml(summary.sigma);
    return summary;
}

ContrastReport compare_regions(RegionData const& a,
                               RegionData const& b,
                               CompareOptions const& options)
{
    validate(options);
    ContrastReport report;
    report.options = options;
    report.region_a = summarize_region(a, options);
    report.region_b = summarize_region(b, options);

    Complex const ra = report.region_a.rho;
    Complex const rb = report.region_b.rho;
    std::size_t const na = report.region_a.n;
    std::size_t const nb = report.region_b.n;

    auto const kinds = all_distance_kinds(options.beta);
    for (std::size_t i = 0; i < kinds.size(); ++i)
    {
        double const d = distance(kinds[i], ra, rb, options.looks);
        report.measures[i] = {kinds[i], p_value_for(kinds[i], d, na, nb)};
    }

    RegionTestConfig const cfg{na,
                               nb,
                               options.looks,
                               options.eta_level,
                               options.quantile,
                               options.hellinger_mode};
    report.xi1 = xi1(ra, rb);
    report.xi2 = xi2(ra, rb);
    report.t_kl = kl_threshold(cfg);
    report.t_h = hellinger_threshold(cfg);
    report.kl_decision = decide_kl(report.xi1, report.t_kl);
    report.hellinger_decision = decide_hellinger(report.xi2, report.t_h);
    return report;
}

//---------------------------------------------------------------------------//
std::vector<CurvePoint> sensitivity_curve(double rho1_mod,
                                          Looks looks,
                                          double beta,
                                          std::size_t n1,
                                          std::size_t n2,
                                          double grid_step)
{
    constexpr double upper = 1 - 1e-6;
    if (!(rho1_mod >= 0 && rho1_mod < kMaxCorrelationModulus))
    {
        throw DomainError("|rho1| must lie in [0, 1)");
    }
    if (!(grid_step > 0 && grid_step <= 0.05))
    {
        throw DomainError("grid step must lie in (0, 0.05]");
    }
    auto const kinds = all_distance_kinds(beta);

    // Points rho1 + k * step, k running from the lowest admissible index
    double const slack = 1e-9 * grid_step;
    auto const lowest = -static_cast<long>(
        std::floor((rho1_mod + slack) / grid_step));
    std::vector<CurvePoint> curve;
    for (long k = lowest;; ++k)
    {
        double rho2 = rho1_mod + static_cast<double>(k) * grid_step;
        if (rho2 > upper)
        {
            break;
        }
        rho2 = std::max(rho2, 0.0);
        CurvePoint point;
        point.rho2_mod = rho2;
        for (std::size_t i = 0; i < kinds.size(); ++i)
        {
            double const d = distance(kinds[i], rho1_mod, rho2, looks);
            point.statistic[i] = test_statistic(kinds[i], d, n1, n2);
        }
        curve.push_back(point);
    }
    return curve;
}

//---------------------------------------------------------------------------//
}  // namespace polcontrast
