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
  \file truth_table.hpp
  \brief Explicit truth tables, input permutations, and symmetry partitions

  A `truth_table` stores one bit per assignment of n Boolean variables
  x1..xn.  Assignment index encoding is fixed and bit-exact everywhere:
  bit position j-1 of index i holds the value of variable xj, so x1 is
  the least significant bit.  Variable indices are 1-based in the whole
  public interface.

  All types are immutable values after construction and all operations
  are pure, so any value may be shared across concurrent readers.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "errors.hpp"

namespace ncfsym
{

/*! \brief Hard cap on explicit table size (2^24 bits, 2 MiB bit-packed). */
inline constexpr uint32_t max_table_vars = 24u;

/*! \brief Explicit Boolean function on 1 <= n <= 24 variables. */
class truth_table
{
public:
  /*! \brief Creates the all-zero function on `num_vars` variables.

    \throws std::invalid_argument for num_vars == 0
    \throws capacity_error for num_vars > max_table_vars
  */
  explicit truth_table( uint32_t num_vars );

  /*! \brief Builds a table from its hex encoding.

    The hex string must have exactly ceil(2^n / 4) digits; assignment
    index 0 is the least significant bit of the least significant digit.
  */
  static truth_table from_hex( uint32_t num_vars, std::string_view hex );

  uint32_t num_vars() const { return num_vars_; }
  uint64_t num_bits() const { return uint64_t{ 1 } << num_vars_; }

  bool get_bit( uint64_t index ) const;
  void set_bit( uint64_t index, bool value );

  /*! \brief Hex encoding with exactly ceil(2^n / 4) uppercase digits. */
  std::string to_hex() const;

  const std::vector<uint64_t>& words() const { return words_; }

  bool operator==( const truth_table& other ) const = default;

private:
  uint32_t num_vars_;
  std::vector<uint64_t> words_;
};

/*! \brief Permutation pi of {1..n}; position i holds pi(i). */
class permutation
{
public:
  /*! \throws std::invalid_argument unless the mapping is a bijection on 1..n */
  explicit permutation( std::vector<uint32_t> mapping );

  static permutation identity( uint32_t n );

  uint32_t size() const { return static_cast<uint32_t>( mapping_.size() ); }

  /*! \brief pi(i) for 1-based i. */
  uint32_t operator()( uint32_t i ) const { return mapping_[i - 1]; }

  bool is_identity() const;
  permutation inverse() const;

  const std::vector<uint32_t>& mapping() const { return mapping_; }

  bool operator==( const permutation& other ) const = default;

private:
  std::vector<uint32_t> mapping_;
};

/*! \brief Partition of {1..n} into symmetry groups; the group count is the level r.

  Groups are kept in canonical order (members ascending, groups ordered
  by smallest member) so equality is set-of-sets equality.
*/
class symmetry_partition
{
public:
  /*! \throws std::invalid_argument unless groups are nonempty, disjoint and cover 1..n */
  symmetry_partition( uint32_t num_vars, std::vector<std::vector<uint32_t>> groups );

  static symmetry_partition singletons( uint32_t n );
  static symmetry_partition single_group( uint32_t n );

  uint32_t num_vars() const { return num_vars_; }
  uint32_t level() const { return static_cast<uint32_t>( groups_.size() ); }
  const std::vector<std::vector<uint32_t>>& groups() const { return groups_; }

  bool operator==( const symmetry_partition& other ) const = default;

private:
  uint32_t num_vars_;
  std::vector<std::vector<uint32_t>> groups_;
};

/*! \brief Value of the function at an assignment index.

  \throws std::out_of_range for index >= 2^n
*/
bool evaluate( const truth_table& tt, uint64_t index );

/*! \brief (n-1)-variable function obtained by fixing x_var = value.

  Remaining variables keep their relative order and are renumbered
  1..n-1; see restriction_var_map for the index translation.

  \throws std::domain_error for n == 1
  \throws std::out_of_range for var outside 1..n
*/
truth_table restrict_var( const truth_table& tt, uint32_t var, bool value );

/*! \brief Old-to-new variable index map for restrict_var.

  Element i (0-based) is the new 1-based index of old variable i+1, or 0
  for the dropped variable.
*/
std::vector<uint32_t> restriction_var_map( uint32_t num_vars, uint32_t var );

/*! \brief Table g with g(a1,...,an) = f(a_pi(1),...,a_pi(n)).

  \throws std::invalid_argument on size mismatch
*/
truth_table apply_permutation( const truth_table& tt, const permutation& perm );

/*! \brief The constant value if all bits are equal, absent otherwise. */
std::optional<bool> is_constant( const truth_table& tt );

/*! \brief Parses the bit-exact text format `n=<k> tt=<hex>`. */
truth_table parse_truth_table( std::string_view line );

/*! \brief Renders the bit-exact text format `n=<k> tt=<hex>`. */
std::string format_truth_table( const truth_table& tt );

} // namespace ncfsym
