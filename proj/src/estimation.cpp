//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file estimation.cpp
//---------------------------------------------------------------------------//
#include "polcontrast/estimation.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>

#include "polcontrast/errors.hpp"
#include "polcontrast/exact_sum.hpp"

namespace polcontrast
{
namespace
{
//---------------------------------------------------------------------------//
struct MatrixSum
{
    ExactSum z11, re12, im12, z22;

    void add(HermitianMatrix2 const& m)
    {
        z11 += m.z11;
        re12 += m.z12.real();
        im12 += m.z12.imag();
        z22 += m.z22;
    }

    HermitianMatrix2 mean(std::size_t n) const
    {
        double const count = static_cast<double>(n);
        return {z11.value() / count,
                Complex{re12.value() / count, im12.value() / count},
                z22.value() / count};
    }
};

double bisect(auto&& f, double lo, double hi)
{
    double flo = f(lo);
    for (int i = 0; i < 200; ++i)
    {
        double const mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi)
        {
            break;
        }
        double const fmid = f(mid);
        if (fmid == 0)
        {
            return mid;
        }
        if ((fmid < 0) == (flo < 0))
        {
            lo = mid;
            flo = fmid;
        }
        else
        {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
Complex estimate_correlation_from_looks(ScatteringVectorSample const& s)
{
    if (s.looks.empty())
    {
        throw DegenerateSample("correlation needs at least one look");
    }
    ExactSum cross_re, cross_im, power1, power2;
    for (auto const& [y1, y2] : s.looks)
    {
        Complex const cross = y1 * std::conj(y2);
        cross_re += cross.real();
        cross_im += cross.imag();
        power1 += std::norm(y1);
        power2 += std::norm(y2);
    }
    double const p1 = power1.value();
    double const p2 = power2.value();
    if (!(p1 > 0) || !(p2 > 0))
    {
        throw DegenerateSample("a channel is identically zero");
    }
    return Complex{cross_re.value(), cross_im.value()} / std::sqrt(p1 * p2);
}

HermitianMatrix2 estimate_covariance_ml(RegionSample const& r)
{
    if (r.observations.empty())
    {
        throw DegenerateSample("region sample is empty");
    }
    MatrixSum sum;
    for (auto const& m : r.observations)
    {
        sum.add(m);
    }
    return sum.mean(r.size());
}

HermitianMatrix2 estimate_covariance_ml(ScatteringVectorSample const& s)
{
    if (s.looks.empty())
    {
        throw DegenerateSample("scattering sample is empty");
    }
    MatrixSum sum;
    for (auto const& [y1, y2] : s.looks)
    {
        sum.add(outer_product(y1, y2));
    }
    return sum.mean(s.size());
}

Complex estimate_correlation_from_covariances(RegionSample const& r)
{
    HermitianMatrix2 const mean = estimate_covariance_ml(r);
    if (!(mean.z11 > 0) || !(mean.z22 > 0))
    {
        throw DegenerateSample("mean channel power is not positive");
    }
    return mean.z12 / std::sqrt(mean.z11 * mean.z22);
}

//---------------------------------------------------------------------------//
Complex estimate_correlation_unit_ml(HermitianMatrix2 const& mean_covariance)
{
    if (!(mean_covariance.z11 > 0) || !(mean_covariance.z22 > 0))
    {
        throw DegenerateSample("mean channel power is not positive");
    }
    double const s = 0.5 * (mean_covariance.z11 + mean_covariance.z22);
    double const c = std::abs(mean_covariance.z12);

    auto cubic = [s, c](double r) {
        return ((r - c) * r + (2 * s - 1)) * r - c;
    };
    // Profile log-likelihood per look, up to constants
    auto loglik = [s, c](double r) {
        double const a = (1 - r) * (1 + r);
        return -std::log(a) - 2 * (s - r * c) / a;
    };

    // Split [0, 1] at the stationary points of the cubic so each piece is
    // monotone, then bisect every piece that brackets a root.
    std::array<double, 4> knots{0, 1, 1, 1};
    std::size_t nknots = 1;
    double const disc = c * c - 3 * (2 * s - 1);
    if (disc > 0)
    {
        double const root = std::sqrt(disc);
        for (double t : {(c - root) / 3, (c + root) / 3})
        {
            if (t > 0 && t < 1)
            {
                knots[nknots++] = t;
            }
        }
    }
    knots[nknots++] = 1;

    double best = 1;
    double best_ll = -std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i + 1 < nknots; ++i)
    {
        double const lo = knots[i];
        double const hi = knots[i + 1];
        double const glo = cubic(lo);
        double const ghi = cubic(hi);
        double root;
        if (glo == 0)
        {
            root = lo;
        }
        else if ((glo < 0) != (ghi < 0) || ghi == 0)
        {
            root = ghi == 0 ? hi : bisect(cubic, lo, hi);
        }
        else
        {
            continue;
        }
        if (root >= 1)
        {
            continue;
        }
        double const ll = loglik(root);
        if (ll > best_ll)
        {
            best_ll = ll;
            best = root;
        }
    }
    return std::polar(best, std::arg(mean_covariance.z12));
}

Complex estimate_correlation_unit_ml(RegionSample const& r)
{
    return estimate_correlation_unit_ml(estimate_covariance_ml(r));
}

Complex estimate_correlation(RegionSample const& r, CorrelationEstimator how)
{
    switch (how)
    {
        case CorrelationEstimator::sample:
            return estimate_correlation_from_covariances(r);
        case CorrelationEstimator::unit_ml:
            return estimate_correlation_unit_ml(r);
    }
    throw DomainError("unknown correlation estimator");
}

//---------------------------------------------------------------------------//
double estimate_enl(std::span<double const> intensities)
{
    if (intensities.size() < 2)
    {
        throw DegenerateSample("ENL needs at least two intensities");
    }
    double const n = static_cast<double>(intensities.size());
    double const mean = exact_sum(intensities) / n;
    if (!(mean > 0))
    {
        throw DegenerateSample("ENL needs a positive mean intensity");
    }
    ExactSum squares;
    for (double x : intensities)
    {
        squares += (x - mean) * (x - mean);
    }
    double const variance = squares.value() / (n - 1);
    if (!(variance > 0))
    {
        throw DegenerateSample("constant intensities have infinite ENL");
    }
    return mean * mean / variance;
}

//---------------------------------------------------------------------------//
}  // namespace polcontrast
