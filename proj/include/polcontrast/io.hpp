//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file polcontrast/io.hpp
//! Reading region samples from comma-separated text.
//---------------------------------------------------------------------------//
#pragma once

#include <array>
#include <filesystem>
#include <iosfwd>
#include <string_view>
#include <variant>

#include "estimation.hpp"

namespace polcontrast
{
//---------------------------------------------------------------------------//
enum class SampleFormat
{
    looks,  //!< re_y1,im_y1,re_y2,im_y2 per single-look scattering vector
    covariances,  //!< z11,re_z12,im_z12,z22 per multilook covariance
};

using RegionData = std::variant<RegionSample, ScatteringVectorSample>;

std::array<std::string_view, 4> header_columns(SampleFormat format);
std::string to_string(SampleFormat format);

/*!
 * Parse a region file.
 *
 * UTF-8 text, one record per line, comma-separated. Blank lines and lines
 * starting with '#' are skipped. The first remaining line must be the
 * header naming the four columns of the format. Errors carry the 1-based
 * line number: SchemaError for a wrong header or column count, ParseError
 * for values that are not finite numbers (or negative channel powers), and
 * EmptyFile when no data rows follow the header.
 */
RegionData parse_region_samples(std::istream& in, SampleFormat format);

RegionData
read_region_samples(std::filesystem::path const& path, SampleFormat format);

//---------------------------------------------------------------------------//
}  // namespace polcontrast
