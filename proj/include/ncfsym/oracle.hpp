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
  \file oracle.hpp
  \brief Brute-force reference implementations on explicit truth tables

  Everything here is defined directly from first principles (swap
  tests, restrictions, permutation search, exhaustive enumeration) and
  serves as ground truth for the structural algorithms in ncf.hpp and
  sym_table.hpp.  All caps are runtime parameters with the documented
  defaults below.
*/

#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "ncf.hpp"
#include "truth_table.hpp"

namespace ncfsym
{

inline constexpr uint32_t default_symmetry_cap = 16u;    // pairwise scans, O(n^2 2^n)
inline constexpr uint32_t default_recognition_cap = 12u; // recursive NCF test
inline constexpr uint32_t default_permutation_cap = 8u;  // invariant-permutation search, O(n! 2^n)
inline constexpr uint32_t default_enumeration_cap = 6u;  // representation sweep, O(n! 4^n 2^n)

/*! \brief True iff swapping the values of x_i and x_j never changes the function. */
bool pairwise_symmetric_bf( const truth_table& tt, uint32_t i, uint32_t j );

/*! \brief Proper symmetry partition as equivalence classes of the pairwise swap relation.

  Transitivity holds because invariant permutations compose, so the
  classes are well defined.
*/
symmetry_partition symmetry_partition_bf( const truth_table& tt, uint32_t cap = default_symmetry_cap );

struct canalyzing_triple
{
  uint32_t variable;
  bool canalyzing_value;
  bool canalyzed_value;

  bool operator==( const canalyzing_triple& other ) const = default;
};

/*! \brief All (variable, a, b) with the restriction to x=a constant b.

  Variables ascending; for one variable, value 1 precedes value 0.
*/
std::vector<canalyzing_triple> canalyzing_triples_bf( const truth_table& tt, uint32_t cap = default_symmetry_cap );

/*! \brief Recursive NCF test; returns a rule-list representation on success.

  Picks the lowest canalyzing variable, trying value 1 before 0, and
  recurses on the complementary restriction.  Constant functions and
  functions that do not depend on all variables are rejected.
*/
std::optional<ncf_repr> is_ncf_bf( const truth_table& tt, uint32_t cap = default_recognition_cap );

/*! \brief First non-identity permutation (lexicographic order) leaving the function
    invariant, or absent when none exists. */
std::optional<permutation> find_invariant_permutation( const truth_table& tt,
                                                       uint32_t cap = default_permutation_cap );

/*! \brief True iff no non-identity permutation leaves the function invariant. */
bool is_strongly_asymmetric_bf( const truth_table& tt, uint32_t cap = default_permutation_cap );

/*! \brief Exhaustive enumeration summary over all n-variable NCFs. */
struct enumeration_report
{
  uint32_t num_vars = 0;
  uint64_t distinct_ncf_count = 0;
  uint64_t strongly_asymmetric_count = 0;
  std::map<uint32_t, uint64_t> level_histogram;

  /*! \brief Stable line `n=<n> ncfs=<c1> strong=<c2> levels=<l:k,...>`. */
  std::string machine_line() const;

  /*! \brief Multi-line human-readable summary. */
  std::string report_text() const;
};

/*! \brief Calls `fn(repr, bits)` once per distinct n-variable NCF.

  Sweeps all n! 2^n 2^n rule-list representations (variable order,
  canalyzing values, canalyzed values), deduplicating by truth table;
  `bits` is the table packed into a word.  Deterministic order.
*/
void for_each_distinct_ncf( uint32_t n, const std::function<void( const ncf_repr&, uint64_t )>& fn,
                            uint32_t cap = default_enumeration_cap );

/*! \brief Enumeration with per-function levels via normalize + partition.

  `num_jobs > 1` shards the sweep across threads; the merged report is
  deterministic.
*/
enumeration_report enumerate_ncfs( uint32_t n, uint32_t num_jobs = 1, uint32_t cap = default_enumeration_cap );

} // namespace ncfsym
