/* ncfsym: nested canalyzing function symmetry toolkit
 * Copyright (C) 2026  ncfsym contributors
 *
 * Permission is hereby granted, free of charge, to any person
 * obtaining a copy of this software and associated documentation
 * files (the "Software"), to deal in the Software without
 * restriction, including without limitation the rights to use,
 * copy, modify, merge, publish, distribute, sublicense, and/or sell
 * copies of the Software, and to permit persons to whom the
 * Software is furnished to do so, subject to the following
 * conditions:
 *
 * The above copyright notice and this permission notice shall be
 * included in all copies or substantial portions of the Software.
 *
 * THE SOFTWARE IS PROVIDED "AS IS", WITHOUT WARRANTY OF ANY KIND,
 * EXPRESS OR IMPLIED, INCLUDING BUT NOT LIMITED TO THE WARRANTIES
 * OF MERCHANTABILITY, FITNESS FOR A PARTICULAR PURPOSE AND
 * NONINFRINGEMENT. IN NO EVENT SHALL THE AUTHORS OR COPYRIGHT
 * HOLDERS BE LIABLE FOR ANY CLAIM, DAMAGES OR OTHER LIABILITY,
 * WHETHER IN AN ACTION OF CONTRACT, TORT OR OTHERWISE, ARISING
 * FROM, OUT OF OR IN CONNECTION WITH THE SOFTWARE OR THE USE OR
 * OTHER DEALINGS IN THE SOFTWARE.
 */

/*!
  \file errors.hpp
  \brief Error types shared across the library
*/

#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace ncfsym
{

/*! \brief Input text could not be parsed; carries a 1-based line number. */
class parse_error : public std::runtime_error
{
public:
  parse_error( const std::string& what, uint32_t line )
      : std::runtime_error( what + " (line " + std::to_string( line ) + ")" ),
        line_( line )
  {
  }

  uint32_t line() const { return line_; }

private:
  uint32_t line_;
};

/*! \brief A rule list names the same variable twice. */
class duplicate_variable_error : public parse_error
{
public:
  using parse_error::parse_error;
};

/*! \brief The default line contradicts the last rule's canalyzed value. */
class inconsistent_default_error : public parse_error
{
public:
  using parse_error::parse_error;
};

/*! \brief Instance exceeds a documented size cap. */
class capacity_error : public std::runtime_error
{
public:
  using std::runtime_error::runtime_error;
};

/*! \brief A table is not symmetric under the given partition.

  Carries a witness pair of assignment indices with equal count
  tuples but different function values.
*/
class not_symmetric_error : public std::runtime_error
{
public:
  not_symmetric_error( const std::string& what, uint64_t first, uint64_t second )
      : std::runtime_error( what ), first_( first ), second_( second )
  {
  }

  uint64_t witness_first() const { return first_; }
  uint64_t witness_second() const { return second_; }

private:
  uint64_t first_;
  uint64_t second_;
};

/*! \brief An operation that requires a default-normalized representation got an un-normalized one. */
class normalization_required_error : public std::logic_error
{
public:
  using std::logic_error::logic_error;
};

} // namespace ncfsym
