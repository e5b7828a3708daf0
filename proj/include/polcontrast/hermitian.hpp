//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file polcontrast/hermitian.hpp
//! Complex 2x2 Hermitian algebra for covariance observations and parameters.
//---------------------------------------------------------------------------//
#pragma once

#include <complex>

namespace polcontrast
{
//---------------------------------------------------------------------------//
using Complex = std::complex<double>;

//! Pivot below which a matrix is not treated as positive definite.
inline constexpr double kPivotTolerance = 1e-12;

//! Determinant below which inversion is refused.
inline constexpr double kSingularTolerance = 1e-300;

//---------------------------------------------------------------------------//
/*!
 * 2x2 Hermitian matrix stored by its upper triangle.
 *
 * The (2,1) entry is always conj(z12). Positive-definiteness is not an
 * invariant of the type; operations that need it check it.
 */
struct HermitianMatrix2
{
    double z11{0};
    Complex z12{};
    double z22{0};

    static constexpr HermitianMatrix2 identity() { return {1, {}, 1}; }
    static constexpr HermitianMatrix2 diagonal(double a, double b)
    {
        return {a, {}, b};
    }

    Complex z21() const { return std::conj(z12); }

    friend bool
    operator==(HermitianMatrix2 const&, HermitianMatrix2 const&) = default;
};

//! Lower-triangular factor with a real, positive diagonal.
struct LowerTriangular2
{
    double l11{0};
    Complex l21{};
    double l22{0};
};

//---------------------------------------------------------------------------//
double determinant(HermitianMatrix2 const& m);
double trace(HermitianMatrix2 const& m);

// Requires positive definiteness; throws SingularMatrix or
// NotPositiveDefinite otherwise
HermitianMatrix2 inverse(HermitianMatrix2 const& m);

// Throws NotPositiveDefinite if a pivot is at or below kPivotTolerance
LowerTriangular2 cholesky_factor(HermitianMatrix2 const& m);

bool is_positive_definite(HermitianMatrix2 const& m);

//! tr(A B) for Hermitian A and B (always real).
double trace_of_product(HermitianMatrix2 const& a, HermitianMatrix2 const& b);

//! The rank-one matrix y y^H for y = [y1, y2]^T.
HermitianMatrix2 outer_product(Complex y1, Complex y2);

//! F F^H for a lower-triangular factor.
HermitianMatrix2 reconstruct(LowerTriangular2 const& f);

HermitianMatrix2 operator+(HermitianMatrix2 const& a, HermitianMatrix2 const& b);
HermitianMatrix2 operator*(double s, HermitianMatrix2 const& m);

//---------------------------------------------------------------------------//
}  // namespace polcontrast
