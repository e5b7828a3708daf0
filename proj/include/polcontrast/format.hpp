//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file polcontrast/format.hpp
//! Report, curve and simulation output.
//
// Machine-readable output is `key=value` lines (CSV for curves) with numbers
// in shortest round-trip form, so parsed values equal the computed ones bit
// for bit. Human-readable tables use 6 significant digits.
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include "monte_carlo.hpp"
#include "workflow.hpp"

namespace polcontrast
{
//---------------------------------------------------------------------------//
//! Shortest decimal string that parses back to the same double.
std::string format_number(double x);

//! printf-style %.*g (round half to even on exact ties).
std::string format_significant(double x, int digits = 6);

void write_report_machine(std::ostream& out, ContrastReport const& report);
void write_report_table(std::ostream& out, ContrastReport const& report);

//! Header rho2,s_kl,s_renyi,s_bhattacharyya,s_hellinger.
void write_curve_csv(std::ostream& out, std::vector<CurvePoint> const& curve);

void write_size_power(std::ostream& out, SizePowerResult const& result);

struct OracleRow
{
    DistanceKind kind;
    McEstimate estimate;
    double closed_form;
};

void write_oracle(std::ostream& out,
                  SimulationScenario const& scenario,
                  std::vector<OracleRow> const& rows);

void write_estimate(std::ostream& out,
                    RegionData const& data,
                    std::string const& source);

//! Parse `key=value` lines; blank lines and '#' comments are skipped.
std::map<std::string, std::string> parse_key_values(std::istream& in);

//---------------------------------------------------------------------------//
}  // namespace polcontrast
