//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file polcontrast/cli.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace polcontrast
{
//---------------------------------------------------------------------------//
//! Process exit codes of the command-line tool.
enum ExitCode : int
{
    exit_success = 0,
    exit_internal = 1,
    exit_usage = 2,
    exit_data = 3,
    exit_domain = 4,
};

/*!
 * Run the command-line tool on `args` (without the program name).
 *
 * Subcommands: compare, sensitivity, simulate {size|power|oracle} and
 * estimate. Results go to `out` (or the files named by --out), diagnostics
 * to `err`.
 */
int run_cli(std::vector<std::string> const& args,
            std::ostream& out,
            std::ostream& err);

//---------------------------------------------------------------------------//
}  // namespace polcontrast
