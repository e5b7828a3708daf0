//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tools/polcontrast.cpp
//---------------------------------------------------------------------------//
#include <iostream>
#include <string>
#include <vector>

#include "polcontrast/cli.hpp"

int main(int argc, char* argv[])
{
    std::vector<std::string> args(argv + 1, argv + argc);
    return polcontrast::run_cli(args, std::cout, std::cerr);
}
