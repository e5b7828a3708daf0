//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file polcontrast/gamma.hpp
//---------------------------------------------------------------------------//
#pragma once

namespace polcontrast
{
//---------------------------------------------------------------------------//
//! Regularized lower incomplete gamma P(a, x), for a > 0 and x >= 0.
double regularized_gamma_p(double a, double x);

//! Regularized upper incomplete gamma Q(a, x) = 1 - P(a, x).
double regularized_gamma_q(double a, double x);

//---------------------------------------------------------------------------//
}  // namespace polcontrast
