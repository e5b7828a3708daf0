//---------------------------------*-C++-*-----------------------------------//
// Copyright polcontrast contributors
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file polcontrast/errors.hpp
//---------------------------------------------------------------------------//
#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace polcontrast
{
//---------------------------------------------------------------------------//
//! Base of every error raised by the library.
class Error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

//! A numeric argument lies outside the domain of an operation.
class DomainError : public Error
{
  public:
    using Error::Error;
};

class SingularMatrix : public DomainError
{
  public:
    using DomainError::DomainError;
};

class NotPositiveDefinite : public DomainError
{
  public:
    using DomainError::DomainError;
};

//! Two models compared with different numbers of looks.
class LooksMismatch : public Error
{
  public:
    using Error::Error;
};

//---------------------------------------------------------------------------//
//! Base for problems with input data (files or samples).
class DataError : public Error
{
  public:
    using Error::Error;
};

//! A sample that cannot support the requested estimate.
class DegenerateSample : public DataError
{
  public:
    using DataError::DataError;
};

class EmptyFile : public DataError
{
  public:
    using DataError::DataError;
};

//! Data error tied to a line of an input file (1-based).
class LineError : public DataError
{
  public:
    LineError(std::size_t line,
              std::string const& detail,
              std::string const& source = {})
        : DataError((source.empty() ? "line " : source + ":")
                    + std::to_string(line) + ": " + detail)
        , line_(line)
        , detail_(detail)
    {
    }

    std::size_t line() const noexcept { return line_; }
    std::string const& detail() const noexcept { return detail_; }

  private:
    std::size_t line_;
    std::string detail_;
};

class ParseError : public LineError
{
  public:
    using LineError::LineError;
};

class SchemaError : public LineError
{
  public:
    using LineError::LineError;
};

//---------------------------------------------------------------------------//
}  // namespace polcontrast
