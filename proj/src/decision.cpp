//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file decision.cpp
//---------------------------------------------------------------------------//
#include "polcontrast/decision.hpp"

#include <cmath>
#include <numbers>

#include "polcontrast/errors.hpp"
#include "polcontrast/gamma.hpp"

namespace polcontrast
{
namespace
{
//---------------------------------------------------------------------------//
void check_dof(int dof)
{
    if (dof < 1)
    {
        throw DomainError("degrees of freedom must be at least 1");
    }
}

double chi2_log_pdf(double x, int dof)
{
    double const k = 0.5 * dof;
    return (k - 1) * std::log(x) - 0.5 * x - k * std::numbers::ln2
           - std::lgamma(k);
}

double one_minus_square(double x)
{
    return (1 - x) * (1 + x);
}

double checked_modulus(Complex rho)
{
    double const m = std::abs(rho);
    if (!(m < kMaxCorrelationModulus))
    {
        throw DomainError("correlation modulus must be below 1 - 1e-9");
    }
    return m;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
double chi2_cdf(double x, int dof)
{
    check_dof(dof);
    if (!(x >= 0))
    {
        throw DomainError("chi-square argument must be non-negative");
    }
    return regularized_gamma_p(0.5 * dof, 0.5 * x);
}

double chi2_sf(double x, int dof)
{
    check_dof(dof);
    if (!(x >= 0))
    {
        throw DomainError("chi-square argument must be non-negative");
    }
    return regularized_gamma_q(0.5 * dof, 0.5 * x);
}

double chi2_quantile(double p, int dof)
{
    check_dof(dof);
    if (!(p >= 0 && p < 1))
    {
        throw DomainError("chi-square quantile needs 0 <= p < 1");
    }
    if (p == 0)
    {
        return 0;
    }

    // Residual is increasing in x for either tail formulation
    bool const upper = p > 0.5;
    double const target = upper ? 1 - p : p;
    auto residual = [&](double x) {
        return upper ? target - chi2_sf(x, dof) : chi2_cdf(x, dof) - target;
    };

    double lo = 0;
    double hi = static_cast<double>(dof);
    while (residual(hi) < 0)
    {
        lo = hi;
        hi *= 2;
    }

    double x = 0.5 * (lo + hi);
    for (int iter = 0; iter < 500; ++iter)
    {
        double const f = residual(x);
        if (f == 0)
        {
            return x;
        }
        (f < 0 ? lo : hi) = x;

        double next = x - f / std::exp(chi2_log_pdf(x, dof));
        if (!(next > lo && next < hi))
        {
            next = 0.5 * (lo + hi);
        }
        if (std::fabs(next - x) <= 1e-15 * x || hi - lo <= 1e-15 * hi)
        {
            return next;
        }
        x = next;
    }
    return x;
}

//---------------------------------------------------------------------------//
void validate(RegionTestConfig const& cfg)
{
    if (cfg.n1 == 0 || cfg.n2 == 0)
    {
        throw DomainError("sample sizes must be positive");
    }
    if (!(cfg.looks.value() > 0) || !std::isfinite(cfg.looks.value()))
    {
        throw DomainError("number of looks must be positive");
    }
    if (!(cfg.eta_level > 0 && cfg.eta_level < 1))
    {
        throw DomainError("nominal level must lie in (0, 1)");
    }
}

double critical_value(RegionTestConfig const& cfg)
{
    validate(cfg);
    double const p = cfg.quantile == QuantileConvention::upper_tail
                         ? 1 - cfg.eta_level
                         : cfg.eta_level;
    return chi2_quantile(p, 1);
}

double kl_threshold(RegionTestConfig const& cfg)
{
    double const q = critical_value(cfg);
    double const x1 = static_cast<double>(cfg.n1);
    double const x2 = static_cast<double>(cfg.n2);
    return (x1 + x2) / (2 * cfg.looks.value() * x1 * x2) * q + 2;
}

double hellinger_threshold(RegionTestConfig const& cfg)
{
    double const q = critical_value(cfg);
    double const x1 = static_cast<double>(cfg.n1);
    double const x2 = static_cast<double>(cfg.n2);
    double const l = cfg.looks.value();
    double const scale = cfg.hellinger_mode == HellingerMode::paper
                             ? (x1 + x2) / (2 * l * x1 * x2)
                             : (x1 + x2) / (8 * x1 * x2);
    double const shift = scale * q;
    if (!(shift < 1))
    {
        // Every pair lies inside the region
        return 0;
    }
    return 0.25 * std::exp(std::log1p(-shift) / l);
}

//---------------------------------------------------------------------------//
double xi1(Complex rho1, Complex rho2)
{
    double const a = checked_modulus(rho1);
    double const b = checked_modulus(rho2);
    double const diff = a - b;
    return 2
           + diff * diff * (1 + a * b)
                 / (one_minus_square(a) * one_minus_square(b));
}

double xi2(Complex rho1, Complex rho2)
{
    double const a = checked_modulus(rho1);
    double const b = checked_modulus(rho2);
    double const mid = 0.5 * (a + b);
    return std::sqrt(one_minus_square(a) * one_minus_square(b))
           / (4 * one_minus_square(mid));
}

Decision decide_kl(double xi1_value, double t_kl)
{
    return {xi1_value <= t_kl ? Verdict::similar : Verdict::distinct,
            xi1_value,
            t_kl,
            DecisionRule::kullback_leibler};
}

Decision decide_hellinger(double xi2_value, double t_h)
{
    return {xi2_value >= t_h ? Verdict::similar : Verdict::distinct,
            xi2_value,
            t_h,
            DecisionRule::hellinger};
}

TestResult p_value_for(DistanceKind kind,
                       double d,
                       std::size_t n1,
                       std::size_t n2,
                       int dof)
{
    check_dof(dof);
    TestResult result;
    result.distance = d;
    result.dof = dof;
    result.statistic = test_statistic(kind, d, n1, n2);
    result.p_value = chi2_sf(result.statistic, dof);
    return result;
}

//---------------------------------------------------------------------------//
std::string to_string(Verdict v)
{
    return v == Verdict::similar ? "Similar" : "Distinct";
}

std::string to_string(QuantileConvention c)
{
    return c == QuantileConvention::upper_tail ? "upper" : "lower";
}

std::string to_string(HellingerMode m)
{
    return m == HellingerMode::paper ? "paper" : "inverted";
}

//---------------------------------------------------------------------------//
}  // namespace polcontrast
