//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file polcontrast/decision.hpp
//! Chi-square tails, confidence-region thresholds and decision criteria.
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <string_view>

#include "contrast.hpp"
#include "hermitian.hpp"
#include "wishart.hpp"

namespace polcontrast
{
//---------------------------------------------------------------------------//
// Chi-square law
//---------------------------------------------------------------------------//

double chi2_cdf(double x, int dof);

//! P(chi2_dof > x); throws DomainError for x < 0.
double chi2_sf(double x, int dof);

/*!
 * Value q with P(chi2_dof <= q) = p, for 0 <= p < 1.
 *
 * Inverts the regularized incomplete gamma function by safeguarded Newton
 * iteration. The upper tail is inverted directly when p > 1/2 so critical
 * values at small levels keep full relative accuracy.
 */
double chi2_quantile(double p, int dof);

//---------------------------------------------------------------------------//
// Confidence regions
//---------------------------------------------------------------------------//

//! Which chi2_1 quantile the nominal level eta selects.
enum class QuantileConvention
{
    upper_tail,  //!< chi2_quantile(1 - eta, 1)
    lower_tail,  //!< chi2_quantile(eta, 1)
};

//! Scaling of the Hellinger threshold.
enum class HellingerMode
{
    paper,  //!< (N1 + N2) / (2 L N1 N2), as published
    inverted,  //!< (N1 + N2) / (8 N1 N2), exact inversion of S_H <= q
};

struct RegionTestConfig
{
    std::size_t n1{1};
    std::size_t n2{1};
    Looks looks{kChannels};
    double eta_level{0.05};
    QuantileConvention quantile{QuantileConvention::upper_tail};
    HellingerMode hellinger_mode{HellingerMode::paper};
};

// Throws DomainError on zero sizes, non-positive L or eta outside (0, 1)
void validate(RegionTestConfig const& cfg);

//! chi2_1 quantile selected by the level and convention.
double critical_value(RegionTestConfig const& cfg);

//! t_KL = (N1 + N2) / (2 L N1 N2) q + 2.
double kl_threshold(RegionTestConfig const& cfg);

//! t_H = [1 - c q]^(1/L) / 4, clamped to 0 when the bracket is not positive.
double hellinger_threshold(RegionTestConfig const& cfg);

double xi1(Complex rho1, Complex rho2);
double xi2(Complex rho1, Complex rho2);

//---------------------------------------------------------------------------//
// Decisions
//---------------------------------------------------------------------------//

enum class Verdict
{
    similar,
    distinct,
};

enum class DecisionRule
{
    kullback_leibler,
    hellinger,
};

struct Decision
{
    Verdict verdict;
    double xi;
    double threshold;
    DecisionRule rule;
};

//! Similar iff xi1 <= t_KL.
Decision decide_kl(double xi1_value, double t_kl);

//! Similar iff xi2 >= t_H.
Decision decide_hellinger(double xi2_value, double t_h);

TestResult p_value_for(DistanceKind kind,
                       double d,
                       std::size_t n1,
                       std::size_t n2,
                       int dof = 1);

std::string to_string(Verdict v);
std::string to_string(QuantileConvention c);
std::string to_string(HellingerMode m);

//---------------------------------------------------------------------------//
}  // namespace polcontrast
