//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file gamma.cpp
//! Series expansion below x = a + 1, modified Lentz continued fraction above.
//---------------------------------------------------------------------------//
#include "polcontrast/gamma.hpp"

#include <cmath>
#include <limits>

#include "polcontrast/errors.hpp"

namespace polcontrast
{
namespace
{
//---------------------------------------------------------------------------//
constexpr int kMaxIterations = 100000;
constexpr double kEpsilon = std::numeric_limits<double>::epsilon();
constexpr double kTiny = 1e-300;

void check_arguments(double a, double x)
{
    if (!(a > 0) || !(x >= 0) || std::isnan(x))
    {
        throw DomainError("incomplete gamma requires a > 0 and x >= 0");
    }
}

double log_prefactor(double a, double x)
{
    return a * std::log(x) - x - std::lgamma(a);
}

// P(a, x) by its power series
double lower_series(double a, double x)
{
    double term = 1 / a;
    double sum = term;
    double denom = a;
    for (int n = 0; n < kMaxIterations; ++n)
    {
        denom += 1;
        term *= x / denom;
        sum += term;
        if (std::fabs(term) < std::fabs(sum) * kEpsilon)
        {
            break;
        }
    }
    return sum * std::exp(log_prefactor(a, x));
}

// Q(a, x) by its continued fraction
double upper_fraction(double a, double x)
{
    double b = x + 1 - a;
    double c = 1 / kTiny;
    double d = 1 / b;
    double h = d;
    for (int i = 1; i < kMaxIterations; ++i)
    {
        double const an = -i * (i - a);
        b += 2;
        d = an * d + b;
        if (std::fabs(d) < kTiny)
            d = kTiny;
        c = b + an / c;
        if (std::fabs(c) < kTiny)
            c = kTiny;
        d = 1 / d;
        double const delta = d * c;
        h *= delta;
        if (std::fabs(delta - 1) < kEpsilon)
        {
            break;
        }
    }
    return std::exp(log_prefactor(a, x)) * h;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
double regularized_gamma_p(double a, double x)
{
    check_arguments(a, x);
    if (x == 0)
        return 0;
    if (std::isinf(x))
        return 1;
    if (x < a + 1)
        return lower_series(a, x);
    return 1 - upper_fraction(a, x);
}

double regularized_gamma_q(double a, double x)
{
    check_arguments(a, x);
    if (x == 0)
        return 1;
    if (std::isinf(x))
        return 0;
    if (x < a + 1)
        return 1 - lower_series(a, x);
    return upper_fraction(a, x);
}

//---------------------------------------------------------------------------//
}  // namespace polcontrast
