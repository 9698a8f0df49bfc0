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
  \file ncf.hpp
  \brief Nested canalyzing functions: rule lists, normalization, layers, symmetry

  An NCF is given as an ordered rule list, one rule per variable, plus a
  default value.  Evaluation scans the rules top-down and returns the
  canalyzed value of the first rule whose variable matches its
  canalyzing value; the default fires when no rule does.  The stored
  default is always the complement of the last rule's canalyzed value.

  A representation is default-normalized when its last two rules share a
  canalyzed value; the symmetry operations below require that form.
*/

#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "truth_table.hpp"

namespace ncfsym
{

/*! \brief One line of the rule list: tests `variable == canalyzing_value`, yields `canalyzed_value`. */
struct rule
{
  uint32_t variable;      // 1-based
  bool canalyzing_value;  // a
  bool canalyzed_value;   // b

  bool operator==( const rule& other ) const = default;
};

/*! \brief Ordered rule list plus default value. */
class ncf_repr
{
public:
  /*! \brief Validates that every variable 1..n appears in exactly one rule
      and that default_value complements the last canalyzed value. */
  ncf_repr( std::vector<rule> rules, bool default_value );

  uint32_t num_vars() const { return static_cast<uint32_t>( rules_.size() ); }
  const std::vector<rule>& rules() const { return rules_; }
  bool default_value() const { return default_value_; }

  bool operator==( const ncf_repr& other ) const = default;

private:
  std::vector<rule> rules_;
  bool default_value_;
};

/*! \brief Maximal run of consecutive rules sharing a canalyzed value. */
struct layer
{
  uint32_t first_rule; // 1-based, inclusive
  uint32_t last_rule;  // 1-based, inclusive
  bool canalyzed_value;
  std::array<uint32_t, 2> canalyzing_count; // rules with canalyzing value 0 / 1

  uint32_t size() const { return last_rule - first_rule + 1; }
  uint32_t distinct_canalyzing_values() const
  {
    return ( canalyzing_count[0] > 0 ) + ( canalyzing_count[1] > 0 );
  }

  bool operator==( const layer& other ) const = default;
};

/*! \brief Ordered layers with the r1/r2 classification (r1 + r2 = q). */
struct layer_decomposition
{
  std::vector<layer> layers;
  uint32_t r1 = 0; // layers with one distinct canalyzing value
  uint32_t r2 = 0; // layers with two distinct canalyzing values

  uint32_t layer_count() const { return static_cast<uint32_t>( layers.size() ); }
};

/*! \brief Parses the NCF text format.

  One rule per line `x<i>: <0|1> -> <0|1>`, final line `default: <0|1>`,
  `#` starts a comment, blank lines ignored, whitespace flexible.

  \throws duplicate_variable_error, inconsistent_default_error, parse_error
*/
ncf_repr parse_ncf( std::string_view text );

/*! \brief Renders the NCF text format (one rule per line plus the default line). */
std::string render_ncf( const ncf_repr& ncf );

/*! \brief Top-down rule evaluation at an assignment index. */
bool evaluate_ncf( const ncf_repr& ncf, uint64_t index );

/*! \brief Explicit table with bits[i] = evaluate_ncf(ncf, i). */
truth_table to_truth_table( const ncf_repr& ncf );

/*! \brief True when the last two rules share a canalyzed value (always true for n == 1). */
bool is_default_normalized( const ncf_repr& ncf );

/*! \brief Equivalent default-normalized representation.

  When the last two rules have complementary canalyzed values, the last
  rule's canalyzing and canalyzed values and the default are all
  complemented; the function is unchanged.  Identity on n == 1 and on
  already-normalized input.
*/
ncf_repr normalize( const ncf_repr& ncf );

/*! \brief Layer decomposition of the representation as given (normalize first for the
    symmetry semantics below). */
layer_decomposition layers( const ncf_repr& ncf );

/*! \brief Reorders the rules inside one layer; the function is unchanged.

  \param layer_index 1-based index into layers(ncf)
  \param perm permutation of the layer's rules; entry k names the source slot
  \throws std::invalid_argument on a size mismatch or bad layer index
*/
ncf_repr permute_within_layer( const ncf_repr& ncf, uint32_t layer_index, const permutation& perm );

/*! \brief Normalized form with rules inside each layer sorted by variable index. */
ncf_repr canonicalize( const ncf_repr& ncf );

/*! \brief Whether x_i and x_j are a symmetric pair: same layer, same canalyzing value.

  \throws normalization_required_error on un-normalized input
*/
bool symmetric_pair( const ncf_repr& normalized, uint32_t i, uint32_t j );

/*! \brief Proper symmetry partition: within each layer, variables sharing a
    canalyzing value form one group.  The level is r1 + 2 r2.

  \throws normalization_required_error on un-normalized input
*/
symmetry_partition symmetry_partition_ncf( const ncf_repr& normalized );

/*! \brief True iff the symmetry level equals the variable count. */
bool is_strongly_asymmetric_ncf( const ncf_repr& normalized );

/*! \brief The closed form n! * 2^(n-1) as an exact decimal string.

  \throws std::domain_error for n < 2
*/
std::string count_strongly_asymmetric( uint32_t n );

/*! \brief Exact count of strongly asymmetric n-variable NCFs.

  Sums over the normalized layer compositions that reach level n: t
  two-line layers with complementary canalyzing values (the last layer
  is one of them) plus n-2t single-line layers, giving
  sum over t of C(n-t-1, t-1) * n! * 2^(n+1-2t).  Agrees with
  exhaustive enumeration; the simpler n! * 2^(n-1) expression counts
  only the t = 1 compositions and undercounts from n = 4 on.

  \throws std::domain_error for n < 2
*/
std::string count_strongly_asymmetric_exact( uint32_t n );

/*! \brief The alternating family x1 or (not x2 and (x3 or ...)): rule i is
    `xi: 1 -> 1` for odd i and `xi: 1 -> 0` for even i.  Not normalized.

  The normalized form is properly n-symmetric for every n >= 2.

  \throws std::domain_error for n < 2
*/
ncf_repr make_fn_example( uint32_t n );

} // namespace ncfsym
