//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file random.cpp
//---------------------------------------------------------------------------//
#include "polcontrast/random.hpp"

#include <cmath>
#include <numbers>

namespace polcontrast
{
//---------------------------------------------------------------------------//
std::uint64_t mix_seed(std::uint64_t x)
{
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

RandomStream::RandomStream(std::uint64_t seed, std::uint64_t stream)
    : engine_(mix_seed(mix_seed(seed) ^ mix_seed(~stream)))
{
}

double RandomStream::uniform()
{
    return static_cast<double>((engine_() >> 11) + 1) * 0x1.0p-53;
}

double RandomStream::standard_normal()
{
    if (has_cached_)
    {
        has_cached_ = false;
        return cached_normal_;
    }
    double const radius = std::sqrt(-2 * std::log(this->uniform()));
    double const angle = 2 * std::numbers::pi * this->uniform();
    cached_normal_ = radius * std::sin(angle);
    has_cached_ = true;
    return radius * std::cos(angle);
}

Complex RandomStream::circular_normal()
{
    double const re = this->standard_normal();
    double const im = this->standard_normal();
    return {re * std::numbers::sqrt2 / 2, im * std::numbers::sqrt2 / 2};
}

//---------------------------------------------------------------------------//
}  // namespace polcontrast
