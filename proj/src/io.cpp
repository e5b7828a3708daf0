//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file io.cpp
//---------------------------------------------------------------------------//
#include "polcontrast/io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <string>
#include <vector>

#include "polcontrast/errors.hpp"

namespace polcontrast
{
namespace
{
//---------------------------------------------------------------------------//
std::string_view trim(std::string_view s)
{
    constexpr std::string_view space = " \t\r\n";
    auto const first = s.find_first_not_of(space);
    if (first == std::string_view::npos)
    {
        return {};
    }
    auto const last = s.find_last_not_of(space);
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_fields(std::string_view line)
{
    std::vector<std::string_view> fields;
    std::size_t start = 0;
    while (true)
    {
        auto const comma = line.find(',', start);
        fields.push_back(trim(line.substr(start, comma - start)));
        if (comma == std::string_view::npos)
        {
            break;
        }
        start = comma + 1;
    }
    return fields;
}

double parse_number(std::string_view field, std::size_t line)
{
    // from_chars rejects a leading '+', which spreadsheets sometimes emit
    std::string_view digits = field;
    if (!digits.empty() && digits.front() == '+')
    {
        digits.remove_prefix(1);
    }
    double value = 0;
    auto const [end, ec] = std::from_chars(
        digits.data(), digits.data() + digits.size(), value);
    if (digits.empty() || ec != std::errc{}
        || end != digits.data() + digits.size() || !std::isfinite(value))
    {
        throw ParseError(line,
                         "cannot parse '" + std::string(field)
                             + "' as a finite number");
    }
    return value;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
std::array<std::string_view, 4> header_columns(SampleFormat format)
{
    if (format == SampleFormat::looks)
    {
        return {"re_y1", "im_y1", "re_y2", "im_y2"};
    }
    return {"z11", "re_z12", "im_z12", "z22"};
}

std::string to_string(SampleFormat format)
{
    return format == SampleFormat::looks ? "looks" : "covariances";
}

RegionData parse_region_samples(std::istream& in, SampleFormat format)
{
    auto const expected = header_columns(format);
    RegionSample covariances;
    ScatteringVectorSample looks;
    bool seen_header = false;

    std::string raw;
    std::size_t line_number = 0;
    while (std::getline(in, raw))
    {
        ++line_number;
        std::string_view line = raw;
        if (line_number == 1 && line.starts_with("\xEF\xBB\xBF"))
        {
            line.remove_prefix(3);
        }
        line = trim(line);
        if (line.empty() || line.front() == '#')
        {
            continue;
        }

        auto const fields = split_fields(line);
        if (!seen_header)
        {
            if (fields.size() != expected.size()
                || !std::equal(fields.begin(), fields.end(), expected.begin()))
            {
                throw SchemaError(line_number,
                                  "expected header '"
                                      + std::string(expected[0]) + ","
                                      + std::string(expected[1]) + ","
                                      + std::string(expected[2]) + ","
                                      + std::string(expected[3]) + "'");
            }
            seen_header = true;
            continue;
        }
        if (fields.size() != expected.size())
        {
            throw SchemaError(line_number,
                              "expected 4 columns, found "
                                  + std::to_string(fields.size()));
        }

        std::array<double, 4> v;
        for (std::size_t i = 0; i < v.size(); ++i)
        {
            v[i] = parse_number(fields[i], line_number);
        }
        if (format == SampleFormat::looks)
        {
            looks.looks.push_back({Complex{v[0], v[1]}, Complex{v[2], v[3]}});
        }
        else
        {
            if (v[0] < 0 || v[3] < 0)
            {
                throw ParseError(line_number, "negative channel power");
            }
            covariances.observations.push_back(
                {v[0], Complex{v[1], v[2]}, v[3]});
        }
    }

    if (!seen_header)
    {
        throw EmptyFile("no header row found");
    }
    if (format == SampleFormat::looks)
    {
        if (looks.looks.empty())
            throw EmptyFile("no data rows after the header");
        return looks;
    }
    if (covariances.observations.empty())
        throw EmptyFile("no data rows after the header");
    return covariances;
}

RegionData
read_region_samples(std::filesystem::path const& path, SampleFormat format)
{
    std::ifstream in(path);
    if (!in)
    {
        throw DataError("cannot open '" + path.string() + "'");
    }
    try
    {
        return parse_region_samples(in, format);
    }
    catch (LineError const& e)
    {
        // Name the file, keeping the concrete error type
        if (dynamic_cast<SchemaError const*>(&e))
            throw SchemaError(e.line(), e.detail(), path.string());
        throw ParseError(e.line(), e.detail(), path.string());
    }
    catch (EmptyFile const& e)
    {
        throw EmptyFile(path.string() + ": " + e.what());
    }
}

//---------------------------------------------------------------------------//
}  // namespace polcontrast
