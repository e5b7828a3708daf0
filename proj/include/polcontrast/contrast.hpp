//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file polcontrast/contrast.hpp
//! Closed-form stochastic distances between correlation-parametrized
//! Wishart models and the scaled test statistic.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <cstddef>
#include <string_view>

#include "hermitian.hpp"
#include "wishart.hpp"

namespace polcontrast
{
//---------------------------------------------------------------------------//
enum class DistanceFamily
{
    kullback_leibler,
    renyi,
    bhattacharyya,
    hellinger,
};

//! A distance family plus its order (only meaningful for Renyi).
class DistanceKind
{
  public:
    static constexpr DistanceKind kullback_leibler()
    {
        return DistanceKind{DistanceFamily::kullback_leibler, 0};
    }
    // Throws DomainError unless 0 < beta < 1
    static DistanceKind renyi(double beta);
    static constexpr DistanceKind bhattacharyya()
    {
        return DistanceKind{DistanceFamily::bhattacharyya, 0};
    }
    static constexpr DistanceKind hellinger()
    {
        return DistanceKind{DistanceFamily::hellinger, 0};
    }

    constexpr DistanceFamily family() const { return family_; }
    constexpr double beta() const { return beta_; }

    //! Short lowercase name: kl, renyi, bhattacharyya, hellinger.
    std::string_view name() const;

    friend constexpr bool operator==(DistanceKind, DistanceKind) = default;

  private:
    constexpr DistanceKind(DistanceFamily f, double beta)
        : family_(f), beta_(beta)
    {
    }

    DistanceFamily family_;
    double beta_;
};

//! KL, Renyi(beta), Bhattacharyya, Hellinger, in that order.
std::array<DistanceKind, 4> all_distance_kinds(double renyi_beta);

//! Restricted model: unit channel powers, zero population phase.
struct CorrelationModel
{
    Complex rho;
    Looks looks;
};

struct TestResult
{
    double statistic{0};
    int dof{1};
    double p_value{1};
    double distance{0};
};

//---------------------------------------------------------------------------//
// Distances depend on the moduli of the correlations only. Each throws
// DomainError if a modulus reaches kMaxCorrelationModulus or L <= 0.
//---------------------------------------------------------------------------//

double d_kl(Complex rho1, Complex rho2, Looks looks);
double d_renyi(Complex rho1, Complex rho2, Looks looks, double beta);
double d_bhattacharyya(Complex rho1, Complex rho2, Looks looks);
double d_hellinger(Complex rho1, Complex rho2, Looks looks);

double distance(DistanceKind kind, Complex rho1, Complex rho2, Looks looks);

// Throws LooksMismatch if the models have different numbers of looks
double distance(DistanceKind kind,
                CorrelationModel const& m1,
                CorrelationModel const& m2);

//! The constant v_D: 1, 1/beta, 4, 4.
double statistic_scale(DistanceKind kind);

//! 2 N1 N2 v_D / (N1 + N2) * d.
double test_statistic(DistanceKind kind,
                      double d,
                      std::size_t n1,
                      std::size_t n2);

//---------------------------------------------------------------------------//
}  // namespace polcontrast
