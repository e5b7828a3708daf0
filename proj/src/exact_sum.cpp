//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file exact_sum.cpp
//---------------------------------------------------------------------------//
#include "polcontrast/exact_sum.hpp"

#include <cmath>
#include <utility>

namespace polcontrast
{
//---------------------------------------------------------------------------//
void ExactSum::add(double x)
{
    if (!std::isfinite(x))
    {
        nonfinite_ += x;
        has_nonfinite_ = true;
        return;
    }
    std::size_t kept = 0;
    for (double y : partials_)
    {
        if (std::fabs(x) < std::fabs(y))
        {
            std::swap(x, y);
        }
        double const hi = x + y;
        double const lo = y - (hi - x);
        if (lo != 0)
        {
            partials_[kept++] = lo;
        }
        x = hi;
    }
    partials_.resize(kept);
    partials_.push_back(x);
}

double ExactSum::value() const
{
    if (has_nonfinite_)
    {
        return nonfinite_;
    }
    std::size_t n = partials_.size();
    if (n == 0)
    {
        return 0;
    }
    double hi = partials_[--n];
    double lo = 0;
    while (n > 0)
    {
        double const x = hi;
        double const y = partials_[--n];
        hi = x + y;
        lo = y - (hi - x);
        if (lo != 0)
        {
            break;
        }
    }
    // Round half to even when the discarded tail sits exactly on a tie
    if (n > 0
        && ((lo < 0 && partials_[n - 1] < 0)
            || (lo > 0 && partials_[n - 1] > 0)))
    {
        double const y = lo * 2;
        double const x = hi + y;
        if (y == x - hi)
        {
            hi = x;
        }
    }
    return hi;
}

double exact_sum(std::span<double const> values)
{
    ExactSum acc;
    for (double v : values)
    {
        acc.add(v);
    }
    return acc.value();
}

//---------------------------------------------------------------------------//
}  // namespace polcontrast
