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
  \file test_helpers.hpp
  \brief Shared fixtures and random generators for the test suites
*/

#pragma once

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "ncfsym/ncf.hpp"
#include "ncfsym/truth_table.hpp"

namespace ncfsym::testing
{

inline ncf_repr random_ncf( uint32_t n, std::mt19937& rng )
{
  std::vector<uint32_t> order( n );
  std::iota( order.begin(), order.end(), 1 );
  std::shuffle( order.begin(), order.end(), rng );

  std::bernoulli_distribution coin( 0.5 );
  std::vector<rule> rules;
  rules.reserve( n );
  for ( uint32_t k = 0; k < n; ++k )
  {
    rules.push_back( rule{ order[k], coin( rng ), coin( rng ) } );
  }
  const bool default_value = !rules.back().canalyzed_value;
  return ncf_repr( std::move( rules ), default_value );
}

inline truth_table random_table( uint32_t n, std::mt19937& rng )
{
  truth_table tt( n );
  std::bernoulli_distribution coin( 0.5 );
  for ( uint64_t i = 0; i < tt.num_bits(); ++i )
  {
    tt.set_bit( i, coin( rng ) );
  }
  return tt;
}

inline permutation random_permutation( uint32_t n, std::mt19937& rng )
{
  std::vector<uint32_t> mapping( n );
  std::iota( mapping.begin(), mapping.end(), 1 );
  std::shuffle( mapping.begin(), mapping.end(), rng );
  return permutation( std::move( mapping ) );
}

/* Worked six-variable example: three layers before normalization. */
inline ncf_repr example4()
{
  return ncf_repr( { rule{ 1, true, false }, rule{ 2, false, false }, rule{ 3, false, false },
                     rule{ 4, true, true }, rule{ 5, true, true }, rule{ 6, true, false } },
                   true );
}

/* Worked three-variable example: not(x1) and (x2 or not(x3)), hex 45. */
inline ncf_repr example2()
{
  return ncf_repr( { rule{ 1, true, false }, rule{ 2, true, true }, rule{ 3, false, true } }, false );
}

/* Sixteen-row table that is properly 4-symmetric yet invariant under
   (a,b,c,d) -> (c,d,a,b); rejected by the recursive NCF test. */
inline truth_table quadrant_swap_table()
{
  return truth_table::from_hex( 4, "6AD2" );
}

inline ncf_repr or3()
{
  return ncf_repr( { rule{ 1, true, true }, rule{ 2, true, true }, rule{ 3, true, true } }, false );
}

} // namespace ncfsym::testing
