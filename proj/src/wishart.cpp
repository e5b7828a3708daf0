//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file wishart.cpp
//---------------------------------------------------------------------------//
#include "polcontrast/wishart.hpp"

#include <cmath>
#include <limits>
#include <numbers>

#include "polcontrast/errors.hpp"

namespace polcontrast
{
namespace
{
//---------------------------------------------------------------------------//
void check_density_looks(Looks looks)
{
    if (!(looks.value() >= kChannels) || !std::isfinite(looks.value()))
    {
        throw DomainError("Wishart density requires L >= 2");
    }
}

int checked_sampling_looks(Looks looks)
{
    if (!looks.is_integral() || looks.value() < kChannels
        || looks.value() > 1e6)
    {
        throw DomainError("sampling requires an integer number of looks >= 2");
    }
    return static_cast<int>(looks.value());
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
bool Looks::is_integral() const
{
    return std::isfinite(value_) && std::floor(value_) == value_;
}

double log_multivariate_gamma2(Looks looks)
{
    double const l = looks.value();
    if (!(l > 1))
    {
        throw DomainError("log_multivariate_gamma2 requires L > 1");
    }
    return std::log(std::numbers::pi) + std::lgamma(l) + std::lgamma(l - 1);
}

//---------------------------------------------------------------------------//
WishartDensity::WishartDensity(WishartParams const& params)
    : params_(params), precision_(inverse(params.sigma))
{
    check_density_looks(params.looks);
    double const l = params.looks.value();
    log_normalization_ = kChannels * l * std::log(l)
                         - l * std::log(determinant(params.sigma))
                         - log_multivariate_gamma2(params.looks);
}

double WishartDensity::log_density(HermitianMatrix2 const& z) const
{
    double const l = params_.looks.value();
    double log_det_term = 0;
    if (l > kChannels)
    {
        double const det = determinant(z);
        if (!(det > 0))
        {
            throw DomainError("Wishart density needs |Z| > 0 when L > 2");
        }
        log_det_term = (l - kChannels) * std::log(det);
    }
    return log_normalization_ + log_det_term
           - l * trace_of_product(precision_, z);
}

double wishart_log_density(HermitianMatrix2 const& z, WishartParams const& params)
{
    return WishartDensity(params).log_density(z);
}

//---------------------------------------------------------------------------//
HermitianMatrix2 covariance_from_correlation(CorrelationParametrization const& cp)
{
    if (!(cp.sigma11 > 0) || !(cp.sigma22 > 0))
    {
        throw DomainError("channel powers must be positive");
    }
    double const modulus = std::abs(cp.rho);
    if (!(modulus < kMaxCorrelationModulus))
    {
        throw DomainError("correlation modulus must be below 1 - 1e-9");
    }
    double const phase = cp.delta + std::arg(cp.rho);
    return {cp.sigma11,
            std::polar(std::sqrt(cp.sigma11 * cp.sigma22) * modulus, phase),
            cp.sigma22};
}

CorrelationParametrization correlation_from_covariance(HermitianMatrix2 const& s)
{
    if (!(s.z11 > 0) || !(s.z22 > 0))
    {
        throw DomainError("covariance diagonal must be positive");
    }
    double const modulus = std::abs(s.z12) / std::sqrt(s.z11 * s.z22);
    if (!(modulus < kMaxCorrelationModulus))
    {
        throw DomainError("covariance is too close to singular");
    }
    return {s.z11, s.z22, Complex{modulus, 0}, std::arg(s.z12)};
}

HermitianMatrix2 unit_covariance(Complex rho)
{
    return covariance_from_correlation({1, 1, rho, 0});
}

//---------------------------------------------------------------------------//
double joint_normalized_log_density(NormalizedObservation const& obs,
                                    double rho_mod,
                                    double delta,
                                    Looks looks)
{
    double const l = looks.value();
    if (!(l >= kChannels))
    {
        throw DomainError("joint density requires L >= 2");
    }
    if (!(rho_mod >= 0 && rho_mod < 1))
    {
        throw DomainError("joint density requires 0 <= |rho| < 1");
    }
    double const gap = obs.b1 * obs.b2 - obs.eta_magnitude * obs.eta_magnitude;
    if (!(obs.b1 > 0) || !(obs.b2 > 0) || !(obs.eta_magnitude >= 0)
        || !(gap > 0))
    {
        return -std::numeric_limits<double>::infinity();
    }
    double const one_minus = (1 - rho_mod) * (1 + rho_mod);
    double const exponent
        = (obs.b1 + obs.b2
           - 2 * obs.eta_magnitude * rho_mod * std::cos(obs.phase - delta))
          / one_minus;
    return std::log(obs.eta_magnitude) + (l - 2) * std::log(gap)
           - std::log(std::numbers::pi) - l * std::log(one_minus)
           - std::lgamma(l) - std::lgamma(l - 1) - exponent;
}

//---------------------------------------------------------------------------//
WishartSampler::WishartSampler(WishartParams const& params)
    : factor_(cholesky_factor(params.sigma))
    , looks_(checked_sampling_looks(params.looks))
{
}

ScatteringLook WishartSampler::draw_look(RandomStream& rng) const
{
    Complex const w1 = rng.circular_normal();
    Complex const w2 = rng.circular_normal();
    return {factor_.l11 * w1, factor_.l21 * w1 + factor_.l22 * w2};
}

std::vector<ScatteringLook>
WishartSampler::draw_looks(std::size_t count, RandomStream& rng) const
{
    std::vector<ScatteringLook> result;
    result.reserve(count);
    for (std::size_t i = 0; i < count; ++i)
    {
        result.push_back(this->draw_look(rng));
    }
    return result;
}

HermitianMatrix2 WishartSampler::operator()(RandomStream& rng) const
{
    HermitianMatrix2 sum;
    for (int k = 0; k < looks_; ++k)
    {
        auto const [y1, y2] = this->draw_look(rng);
        sum = sum + outer_product(y1, y2);
    }
    return (1.0 / looks_) * sum;
}

HermitianMatrix2 sample_wishart(WishartParams const& params, RandomStream& rng)
{
    return WishartSampler(params)(rng);
}

//---------------------------------------------------------------------------//
}  // namespace polcontrast
