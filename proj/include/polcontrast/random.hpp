//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file polcontrast/random.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <cstdint>
#include <random>

#include "hermitian.hpp"

namespace polcontrast
{
//---------------------------------------------------------------------------//
/*!
 * Seeded stream of random variates.
 *
 * A stream is identified by (seed, stream index); distinct indices give
 * independent substreams, so parallel tasks each own one and the results
 * do not depend on scheduling. Normal variates are produced by an explicit
 * Box-Muller transform so the output is identical across standard
 * libraries.
 */
class RandomStream
{
  public:
    explicit RandomStream(std::uint64_t seed, std::uint64_t stream = 0);

    std::uint64_t next_u64() { return engine_(); }

    //! Uniform on (0, 1] with 53 random bits.
    double uniform();

    double standard_normal();

    //! Circular complex Gaussian with E|w|^2 = 1.
    Complex circular_normal();

  private:
    std::mt19937_64 engine_;
    double cached_normal_{0};
    bool has_cached_{false};
};

//! SplitMix64 finalizer, used to derive substream seeds.
std::uint64_t mix_seed(std::uint64_t x);

//---------------------------------------------------------------------------//
}  // namespace polcontrast
