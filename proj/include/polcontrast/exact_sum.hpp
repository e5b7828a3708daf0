//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file polcontrast/exact_sum.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <span>
#include <vector>

namespace polcontrast
{
//---------------------------------------------------------------------------//
/*!
 * Correctly rounded floating-point summation.
 *
 * Keeps the running sum as a list of non-overlapping partials built from
 * error-free two-sum transforms (Shewchuk). The final value is the exact sum
 * rounded once (ties to even), so it does not depend on the order in which
 * terms were added.
 */
class ExactSum
{
  public:
    void add(double x);
    ExactSum& operator+=(double x)
    {
        this->add(x);
        return *this;
    }

    double value() const;

  private:
    std::vector<double> partials_;
    double nonfinite_{0};
    bool has_nonfinite_{false};
};

double exact_sum(std::span<double const> values);

//---------------------------------------------------------------------------//
}  // namespace polcontrast
