//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file hermitian.cpp
//---------------------------------------------------------------------------//
#include "polcontrast/hermitian.hpp"

#include <cmath>

#include "polcontrast/errors.hpp"

namespace polcontrast
{
//---------------------------------------------------------------------------//
double determinant(HermitianMatrix2 const& m)
{
    return m.z11 * m.z22 - std::norm(m.z12);
}

double trace(HermitianMatrix2 const& m)
{
    return m.z11 + m.z22;
}

//---------------------------------------------------------------------------//
HermitianMatrix2 inverse(HermitianMatrix2 const& m)
{
    double const det = determinant(m);
    if (!(det > kSingularTolerance))
    {
        throw SingularMatrix("inverse: determinant is not positive");
    }
    if (!(m.z11 > 0))
    {
        throw NotPositiveDefinite("inverse: matrix is not positive definite");
    }
    return {m.z22 / det, -m.z12 / det, m.z11 / det};
}

//---------------------------------------------------------------------------//
LowerTriangular2 cholesky_factor(HermitianMatrix2 const& m)
{
    if (!(m.z11 > kPivotTolerance))
    {
        throw NotPositiveDefinite("cholesky: first pivot is not positive");
    }
    LowerTriangular2 f;
    f.l11 = std::sqrt(m.z11);
    f.l21 = std::conj(m.z12) / f.l11;
    double const pivot = m.z22 - std::norm(f.l21);
    if (!(pivot > kPivotTolerance))
    {
        throw NotPositiveDefinite("cholesky: second pivot is not positive");
    }
    f.l22 = std::sqrt(pivot);
    return f;
}

bool is_positive_definite(HermitianMatrix2 const& m)
{
    return m.z11 > kPivotTolerance
           && m.z22 - std::norm(m.z12) / m.z11 > kPivotTolerance;
}

//---------------------------------------------------------------------------//
double trace_of_product(HermitianMatrix2 const& a, HermitianMatrix2 const& b)
{
    return a.z11 * b.z11 + a.z22 * b.z22
           + 2 * std::real(a.z12 * std::conj(b.z12));
}

HermitianMatrix2 outer_product(Complex y1, Complex y2)
{
    return {std::norm(y1), y1 * std::conj(y2), std::norm(y2)};
}

HermitianMatrix2 reconstruct(LowerTriangular2 const& f)
{
    // [l11 0; l21 l22] [l11 conj(l21); 0 l22]
    return {f.l11 * f.l11,
            f.l11 * std::conj(f.l21),
            std::norm(f.l21) + f.l22 * f.l22};
}

HermitianMatrix2 operator+(HermitianMatrix2 const& a, HermitianMatrix2 const& b)
{
    return {a.z11 + b.z11, a.z12 + b.z12, a.z22 + b.z22};
}

HermitianMatrix2 operator*(double s, HermitianMatrix2 const& m)
{
    return {s * m.z11, s * m.z12, s * m.z22};
}

//---------------------------------------------------------------------------//
}  // namespace polcontrast
