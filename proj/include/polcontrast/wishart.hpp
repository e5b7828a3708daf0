//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file polcontrast/wishart.hpp
//! Scaled complex Wishart law for two polarization channels.
//---------------------------------------------------------------------------//
#pragma once

#include <compare>
#include <cstddef>
#include <vector>

#include "hermitian.hpp"
#include "random.hpp"

namespace polcontrast
{
//---------------------------------------------------------------------------//
//! Number of polarization channels handled throughout.
inline constexpr int kChannels = 2;

//! Correlation moduli at or above this are rejected (closed forms diverge).
inline constexpr double kMaxCorrelationModulus = 1.0 - 1e-9;

//---------------------------------------------------------------------------//
//! Number of looks (physical count or equivalent number of looks).
class Looks
{
  public:
    constexpr explicit Looks(double value) : value_(value) {}

    constexpr double value() const { return value_; }
    bool is_integral() const;

    friend constexpr auto operator<=>(Looks, Looks) = default;

  private:
    double value_;
};

struct WishartParams
{
    HermitianMatrix2 sigma;
    Looks looks{kChannels};
};

/*!
 * Covariance written through channel powers and the correlation coefficient.
 *
 * rho may be complex; the off-diagonal phase of the resulting covariance is
 * delta + arg(rho), so callers may pass either a modulus with an explicit
 * delta or a complex rho with delta = 0.
 */
struct CorrelationParametrization
{
    double sigma11{1};
    double sigma22{1};
    Complex rho{};
    double delta{0};
};

//! Normalized channel powers, magnitude and phase of one observation.
struct NormalizedObservation
{
    double b1{0};
    double b2{0};
    double eta_magnitude{0};
    double phase{0};
};

//! One single-look two-channel scattering vector.
struct ScatteringLook
{
    Complex y1;
    Complex y2;
};

//---------------------------------------------------------------------------//
// Densities
//---------------------------------------------------------------------------//

//! log Gamma_2(L) = log pi + log Gamma(L) + log Gamma(L - 1).
double log_multivariate_gamma2(Looks looks);

//! Scaled complex Wishart density with cached inverse and normalization.
class WishartDensity
{
  public:
    explicit WishartDensity(WishartParams const& params);

    double log_density(HermitianMatrix2 const& z) const;

    WishartParams const& params() const { return params_; }

  private:
    WishartParams params_;
    HermitianMatrix2 precision_;
    double log_normalization_;
};

double wishart_log_density(HermitianMatrix2 const& z, WishartParams const& params);

HermitianMatrix2 covariance_from_correlation(CorrelationParametrization const& cp);

// Returns a real rho (the modulus) with the phase carried in delta
CorrelationParametrization correlation_from_covariance(HermitianMatrix2 const& s);

//! Covariance with unit channel powers and correlation rho.
HermitianMatrix2 unit_covariance(Complex rho);

/*!
 * Joint log-density of (B1, B2, eta, Delta) for correlation modulus rho_mod
 * and population phase delta. Returns -infinity outside the support
 * (eta^2 >= B1 B2, or non-positive powers).
 */
double joint_normalized_log_density(NormalizedObservation const& obs,
                                    double rho_mod,
                                    double delta,
                                    Looks looks);

//---------------------------------------------------------------------------//
// Sampling
//---------------------------------------------------------------------------//
/*!
 * Draws multilook covariance matrices from W(Sigma, L).
 *
 * Each draw averages L outer products of circular complex Gaussian vectors
 * with covariance Sigma. Requires an integer number of looks, at least 2.
 */
class WishartSampler
{
  public:
    explicit WishartSampler(WishartParams const& params);

    HermitianMatrix2 operator()(RandomStream& rng) const;

    ScatteringLook draw_look(RandomStream& rng) const;
    std::vector<ScatteringLook>
    draw_looks(std::size_t count, RandomStream& rng) const;

  private:
    LowerTriangular2 factor_;
    int looks_;
};

HermitianMatrix2 sample_wishart(WishartParams const& params, RandomStream& rng);

//---------------------------------------------------------------------------//
}  // namespace polcontrast
