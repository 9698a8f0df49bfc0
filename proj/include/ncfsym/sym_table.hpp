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
  \file sym_table.hpp
  \brief Count tables of r-symmetric functions and NCF recognition on them

  An r-symmetric function depends only on how many variables in each
  symmetry group are 1, so it is fully described by one value per count
  tuple (c1,...,cr) with 0 <= ci <= mi.  The table is stored densely in
  row-major order with mixed-radix indexing (radices mi+1, the last
  group varies fastest); rows appear in lexicographically ascending
  count-tuple order.

  `recognize_ncf` decides in O(r mu) time whether such a table is an
  NCF and, if so, rebuilds a rule-list representation.
*/

#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "ncf.hpp"
#include "truth_table.hpp"

namespace ncfsym
{

/*! \brief Cap on count-table rows (mu). */
inline constexpr uint64_t max_sym_table_rows = uint64_t{ 1 } << 26;

/*! \brief Count table: group sizes m1..mr plus one value per count tuple. */
class sym_table
{
public:
  /*! \brief All-zero table over the given group sizes (each mi >= 1). */
  explicit sym_table( std::vector<uint32_t> group_sizes );

  uint32_t num_groups() const { return static_cast<uint32_t>( group_sizes_.size() ); }
  const std::vector<uint32_t>& group_sizes() const { return group_sizes_; }
  uint64_t row_count() const { return static_cast<uint64_t>( values_.size() ); }

  /*! \brief Dense row index of a count tuple. */
  uint64_t row_index( std::span<const uint32_t> counts ) const;

  /*! \brief Count tuple of a dense row index. */
  std::vector<uint32_t> row_counts( uint64_t row ) const;

  bool value_at( uint64_t row ) const { return values_[row] != 0; }
  void set_value_at( uint64_t row, bool value ) { values_[row] = value ? 1 : 0; }

  bool value( std::span<const uint32_t> counts ) const { return value_at( row_index( counts ) ); }
  void set_value( std::span<const uint32_t> counts, bool v ) { set_value_at( row_index( counts ), v ); }

  bool operator==( const sym_table& other ) const = default;

private:
  std::vector<uint32_t> group_sizes_;
  std::vector<uint64_t> strides_;
  std::vector<uint8_t> values_;
};

/*! \brief A canalyzing group found in a count table. */
struct canalyzing_finding
{
  uint32_t group_index;  // 1-based
  bool canalyzing_value; // alpha
  bool canalyzed_value;  // beta

  bool operator==( const canalyzing_finding& other ) const = default;
};

/*! \brief Negative recognition verdict. */
struct not_ncf
{
  std::string reason;
};

/*! \brief Work counters for the recognizer (row reads and the mu sequence). */
struct recognize_stats
{
  uint64_t row_visits = 0;
  std::vector<uint64_t> mu_sequence; // table row counts across iterations
};

/*! \brief Builds the count table of `tt` under `partition`.

  \throws not_symmetric_error (with a witness assignment pair) when two
          assignments with equal count tuples disagree
*/
sym_table sym_table_from_truth_table( const truth_table& tt, const symmetry_partition& partition );

/*! \brief Expands a count table back to an explicit truth table.

  \throws std::invalid_argument when the partition's group sizes do not
          match the table's, in order
*/
truth_table sym_table_to_truth_table( const sym_table& st, const symmetry_partition& partition );

/*! \brief First canalyzing group, scanning groups in ascending index and
    testing canalyzing value 1 before 0 within a group.

  Canalyzing value 1 requires all rows with a nonzero count in the
  group to share one value; value 0 requires the same of all rows with
  count below the group size.
*/
std::optional<canalyzing_finding> find_canalyzing( const sym_table& st );

/*! \brief Tests whether the table is an NCF; on success returns a rule list
    whose truth table equals the expanded input.

  Iteratively finds a canalyzing group, appends one rule per group
  variable (ascending), and restricts the table to the all-complement
  row of that group; each restriction at least halves the row count.
  Rejected inputs yield a reason: either no canalyzing group remains or
  the function does not depend on all variables.
*/
std::variant<ncf_repr, not_ncf> recognize_ncf( const sym_table& st, const symmetry_partition& partition,
                                               recognize_stats* stats = nullptr );

/*! \brief Parses the count-table text format.

  Header `groups: m1,m2,...,mr`, then one line per row
  `c1,c2,...,cr: v`; `#` comments allowed.  Every count tuple must
  appear exactly once.
*/
sym_table parse_sym_table( std::string_view text );

/*! \brief Renders the count-table text format with rows in ascending order. */
std::string render_sym_table( const sym_table& st );

} // namespace ncfsym
