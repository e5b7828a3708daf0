//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file contrast.cpp
//---------------------------------------------------------------------------//
#include "polcontrast/contrast.hpp"

#include <algorithm>
#include <cmath>

#include "polcontrast/errors.hpp"

namespace polcontrast
{
namespace
{
//---------------------------------------------------------------------------//
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

double checked_looks(Looks looks)
{
    double const l = looks.value();
    if (!(l > 0) || !std::isfinite(l))
    {
        throw DomainError("number of looks must be positive");
    }
    return l;
}

/*!
 * log of the Bhattacharyya coefficient for one look,
 * log[ sqrt(A1 A2) / (1 - ((a + b) / 2)^2) ].
 *
 * Written so that a == b yields exactly zero.
 */
double log_affinity(double a, double b)
{
    double const mid = 0.5 * (a + b);
    return 0.5 * (std::log(one_minus_square(a)) + std::log(one_minus_square(b)))
           - std::log(one_minus_square(mid));
}

// log of A1^(1-beta) A2^beta / (1 - (a - beta (a - b))^2)
double log_renyi_term(double a, double b, double beta)
{
    double const la = std::log(one_minus_square(a));
    double const lb = std::log(one_minus_square(b));
    double const m = a - beta * (a - b);
    return (la - std::log(one_minus_square(m))) + beta * (lb - la);
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
DistanceKind DistanceKind::renyi(double beta)
{
    if (!(beta > 0 && beta < 1))
    {
        throw DomainError("Renyi order must lie in (0, 1)");
    }
    return DistanceKind{DistanceFamily::renyi, beta};
}

std::string_view DistanceKind::name() const
{
    switch (family_)
    {
        case DistanceFamily::kullback_leibler:
            return "kl";
        case DistanceFamily::renyi:
            return "renyi";
        case DistanceFamily::bhattacharyya:
            return "bhattacharyya";
        case DistanceFamily::hellinger:
            return "hellinger";
    }
    return "unknown";
}

std::array<DistanceKind, 4> all_distance_kinds(double renyi_beta)
{
    return {DistanceKind::kullback_leibler(),
            DistanceKind::renyi(renyi_beta),
            DistanceKind::bhattacharyya(),
            DistanceKind::hellinger()};
}

//---------------------------------------------------------------------------//
double d_kl(Complex rho1, Complex rho2, Looks looks)
{
    double const a = checked_modulus(rho1);
    double const b = checked_modulus(rho2);
    double const l = checked_looks(looks);
    // xi1 - 2 = (a - b)^2 (1 + ab) / (A1 A2)
    double const diff = a - b;
    return l * (diff * diff) * (1 + a * b)
           / (one_minus_square(a) * one_minus_square(b));
}

double d_renyi(Complex rho1, Complex rho2, Looks looks, double beta)
{
    if (!(beta > 0 && beta < 1))
    {
        throw DomainError("Renyi order must lie in (0, 1)");
    }
    double const a = checked_modulus(rho1);
    double const b = checked_modulus(rho2);
    double const l = checked_looks(looks);

    double const t1 = l * log_renyi_term(a, b, beta);
    double const t2 = l * log_renyi_term(b, a, beta);
    // log((e^t1 + e^t2) / 2), exact zero when t1 == t2 == 0
    double const hi = std::max(t1, t2);
    double const gap = std::fabs(t1 - t2);
    double const log_mean = hi + std::log1p(0.5 * std::expm1(-gap));
    return -log_mean / (1 - beta) + 0.0;
}

double d_bhattacharyya(Complex rho1, Complex rho2, Looks looks)
{
    double const a = checked_modulus(rho1);
    double const b = checked_modulus(rho2);
    return -checked_looks(looks) * log_affinity(a, b) + 0.0;
}

double d_hellinger(Complex rho1, Complex rho2, Looks looks)
{
    double const a = checked_modulus(rho1);
    double const b = checked_modulus(rho2);
    return -std::expm1(checked_looks(looks) * log_affinity(a, b)) + 0.0;
}

//---------------------------------------------------------------------------//
double distance(DistanceKind kind, Complex rho1, Complex rho2, Looks looks)
{
    switch (kind.family())
    {
        case DistanceFamily::kullback_leibler:
            return d_kl(rho1, rho2, looks);
        case DistanceFamily::renyi:
            return d_renyi(rho1, rho2, looks, kind.beta());
        case DistanceFamily::bhattacharyya:
            return d_bhattacharyya(rho1, rho2, looks);
        case DistanceFamily::hellinger:
            return d_hellinger(rho1, rho2, looks);
    }
    throw DomainError("unknown distance kind");
}

double distance(DistanceKind kind,
                CorrelationModel const& m1,
                CorrelationModel const& m2)
{
    if (m1.looks != m2.looks)
    {
        throw LooksMismatch("models must share the number of looks");
    }
    return distance(kind, m1.rho, m2.rho, m1.looks);
}

//---------------------------------------------------------------------------//
double statistic_scale(DistanceKind kind)
{
    switch (kind.family())
    {
        case DistanceFamily::kullback_leibler:
            return 1;
        case DistanceFamily::renyi:
            return 1 / kind.beta();
        case DistanceFamily::bhattacharyya:
        case DistanceFamily::hellinger:
            return 4;
    }
    throw DomainError("unknown distance kind");
}

double test_statistic(DistanceKind kind,
                      double d,
                      std::size_t n1,
                      std::size_t n2)
{
    if (n1 == 0 || n2 == 0)
    {
        throw DomainError("sample sizes must be positive");
    }
    if (!(d >= 0))
    {
        throw DomainError("distance must be non-negative");
    }
    double const x1 = static_cast<double>(n1);
    double const x2 = static_cast<double>(n2);
    return 2 * x1 * x2 / (x1 + x2) * statistic_scale(kind) * d;
}

//---------------------------------------------------------------------------//
}  // namespace polcontrast
