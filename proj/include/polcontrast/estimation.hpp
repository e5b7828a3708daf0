//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file polcontrast/estimation.hpp
//! Region estimators: correlation coefficient, covariance, number of looks.
//---------------------------------------------------------------------------//
#pragma once

#include <optional>
#include <span>
#include <vector>

#include "hermitian.hpp"
#include "wishart.hpp"

namespace polcontrast
{
//---------------------------------------------------------------------------//
//! Single-look scattering vectors of one region.
struct ScatteringVectorSample
{
    std::vector<ScatteringLook> looks;

    std::size_t size() const { return looks.size(); }
};

//! Multilook covariance observations of one region.
struct RegionSample
{
    std::vector<HermitianMatrix2> observations;
    std::optional<double> looks_hint;

    std::size_t size() const { return observations.size(); }
};

enum class CorrelationEstimator
{
    sample,  //!< ratio of means, mean(z12) / sqrt(mean(z11) mean(z22))
    unit_ml,  //!< ML under unit channel powers (standardized data)
};

//---------------------------------------------------------------------------//
// Sum_k y1 conj(y2) / sqrt(Sum_k |y1|^2 Sum_k |y2|^2)
Complex estimate_correlation_from_looks(ScatteringVectorSample const& s);

Complex estimate_correlation_from_covariances(RegionSample const& r);

/*!
 * Maximum likelihood correlation when both channel powers are known to be 1.
 *
 * With s the mean channel power and c = |mean z12| the modulus solves
 * r^3 - c r^2 + (2s - 1) r - c = 0; when several roots lie in [0, 1) the
 * one with the largest likelihood is kept. The phase is that of mean z12.
 * For standardized data (s = 1) the root is r = c.
 */
Complex estimate_correlation_unit_ml(HermitianMatrix2 const& mean_covariance);
Complex estimate_correlation_unit_ml(RegionSample const& r);

Complex estimate_correlation(RegionSample const& r, CorrelationEstimator how);

//! Entrywise sample mean (the ML estimator of Sigma for known L).
HermitianMatrix2 estimate_covariance_ml(RegionSample const& r);

//! Mean of y y^H over the looks.
HermitianMatrix2 estimate_covariance_ml(ScatteringVectorSample const& s);

//! Coefficient-of-variation ENL, (mean / standard deviation)^2.
double estimate_enl(std::span<double const> intensities);

//---------------------------------------------------------------------------//
}  // namespace polcontrast
