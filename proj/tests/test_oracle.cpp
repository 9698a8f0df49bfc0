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

#include <doctest.h>

#include "ncfsym/oracle.hpp"
#include "test_helpers.hpp"

using namespace ncfsym;

namespace
{

truth_table table_from_bits( uint32_t n, uint64_t bits )
{
  truth_table tt( n );
  for ( uint64_t i = 0; i < tt.num_bits(); ++i )
  {
    tt.set_bit( i, ( bits >> i ) & 1 );
  }
  return tt;
}

} // namespace

TEST_CASE( "pairwise swap symmetry" )
{
  const auto xor3 = truth_table::from_hex( 3, "96" );
  CHECK( pairwise_symmetric_bf( xor3, 1, 2 ) );
  CHECK( pairwise_symmetric_bf( xor3, 1, 3 ) );
  CHECK( pairwise_symmetric_bf( xor3, 2, 3 ) );

  // (x1 and x2) or not(x3)
  const auto f3 = truth_table::from_hex( 3, "8F" );
  CHECK( !pairwise_symmetric_bf( f3, 1, 3 ) );
  CHECK( pairwise_symmetric_bf( f3, 1, 2 ) );

  CHECK_THROWS_AS( pairwise_symmetric_bf( f3, 1, 1 ), std::invalid_argument );
}

TEST_CASE( "partition by swap symmetry" )
{
  const auto f3 = truth_table::from_hex( 3, "8F" );
  const auto partition = symmetry_partition_bf( f3 );
  CHECK( partition.groups() == std::vector<std::vector<uint32_t>>{ { 1, 2 }, { 3 } } );
  CHECK( partition.level() == 2 );

  CHECK( symmetry_partition_bf( testing::quadrant_swap_table() ).level() == 4 );
  CHECK( symmetry_partition_bf( truth_table( 3 ) ).level() == 1 ); // constant zero
}

TEST_CASE( "canalyzing triples by exhaustive restriction" )
{
  const auto ex1 = truth_table::from_hex( 3, "45" );
  const auto triples = canalyzing_triples_bf( ex1 );
  CHECK( std::find( triples.begin(), triples.end(), canalyzing_triple{ 1, true, false } ) != triples.end() );

  CHECK( canalyzing_triples_bf( truth_table::from_hex( 2, "6" ) ).empty() );
  CHECK( canalyzing_triples_bf( truth_table::from_hex( 2, "F" ) ).size() == 4 );
}

TEST_CASE( "recursive NCF recognition on explicit tables" )
{
  const auto found = is_ncf_bf( truth_table::from_hex( 3, "45" ) );
  REQUIRE( found.has_value() );
  CHECK( to_truth_table( *found ).to_hex() == "45" );

  CHECK( !is_ncf_bf( truth_table::from_hex( 3, "96" ) ).has_value() );
  CHECK( !is_ncf_bf( testing::quadrant_swap_table() ).has_value() );
  CHECK( !is_ncf_bf( truth_table::from_hex( 2, "F" ) ).has_value() );

  // x2 alone on two variables does not depend on x1
  CHECK( !is_ncf_bf( truth_table::from_hex( 2, "C" ) ).has_value() );
}

TEST_CASE( "recognized representations reproduce their tables" )
{
  for ( uint64_t bits = 0; bits < 256; ++bits )
  {
    const auto tt = table_from_bits( 3, bits );
    if ( const auto found = is_ncf_bf( tt ) )
    {
      REQUIRE( to_truth_table( *found ) == tt );
    }
  }
}

TEST_CASE( "invariant-permutation search" )
{
  const auto quad = testing::quadrant_swap_table();
  const auto witness = find_invariant_permutation( quad );
  REQUIRE( witness.has_value() );
  CHECK( witness->mapping() == std::vector<uint32_t>{ 3, 4, 1, 2 } );
  CHECK( !is_strongly_asymmetric_bf( quad ) );

  CHECK( is_strongly_asymmetric_bf( to_truth_table( make_fn_example( 6 ) ) ) );

  // any function with a repeated-canalyzing layer admits a swap
  const auto normalized = normalize( testing::example4() );
  CHECK( !is_strongly_asymmetric_bf( to_truth_table( normalized ) ) );
}

TEST_CASE( "levels below n rule out strong asymmetry" )
{
  std::mt19937 rng( 30 );
  for ( int k = 0; k < 100; ++k )
  {
    const auto normalized = normalize( testing::random_ncf( 2 + k % 5, rng ) );
    const auto tt = to_truth_table( normalized );
    if ( symmetry_partition_bf( tt ).level() < tt.num_vars() )
    {
      REQUIRE( !is_strongly_asymmetric_bf( tt ) );
    }
  }
}

TEST_CASE( "enumeration counts distinct functions" )
{
  const auto two = enumerate_ncfs( 2 );
  CHECK( two.distinct_ncf_count == 8 );
  CHECK( two.strongly_asymmetric_count == 4 );
  CHECK( two.level_histogram == std::map<uint32_t, uint64_t>{ { 1, 4 }, { 2, 4 } } );
  CHECK( two.machine_line() == "n=2 ncfs=8 strong=4 levels=1:4,2:4" );

  CHECK( enumerate_ncfs( 3 ).strongly_asymmetric_count == 24 );

  // 240, not n! * 2^(n-1) = 192: interior two-line layers with
  // complementary canalyzing values also reach level n
  CHECK( enumerate_ncfs( 4 ).strongly_asymmetric_count == 240 );
  CHECK( count_strongly_asymmetric_exact( 4 ) == "240" );

  // cross-check n=2 and n=4 against scans of all tables; the n=4 scan
  // independently confirms 240 via permutation search
  for ( const uint32_t n : { 2u, 4u } )
  {
    uint64_t ncf_count = 0, strong_count = 0;
    for ( uint64_t bits = 0; bits < ( uint64_t{ 1 } << ( 1u << n ) ); ++bits )
    {
      const auto tt = table_from_bits( n, bits );
      if ( is_ncf_bf( tt ) )
      {
        ++ncf_count;
        if ( is_strongly_asymmetric_bf( tt ) )
        {
          ++strong_count;
        }
      }
    }
    const auto report = enumerate_ncfs( n );
    CHECK( ncf_count == report.distinct_ncf_count );
    CHECK( strong_count == report.strongly_asymmetric_count );
  }
}

TEST_CASE( "sharded enumeration merges deterministically" )
{
  const auto serial = enumerate_ncfs( 4, 1 );
  const auto sharded = enumerate_ncfs( 4, 3 );
  CHECK( serial.distinct_ncf_count == sharded.distinct_ncf_count );
  CHECK( serial.strongly_asymmetric_count == sharded.strongly_asymmetric_count );
  CHECK( serial.level_histogram == sharded.level_histogram );
}

TEST_CASE( "enumerated levels agree with the swap-test partition" )
{
  for_each_distinct_ncf( 3, []( const ncf_repr& repr, uint64_t bits ) {
    const auto level = symmetry_partition_ncf( normalize( repr ) ).level();
    const auto reference = symmetry_partition_bf( table_from_bits( 3, bits ) );
    REQUIRE( level == reference.level() );
    REQUIRE( symmetry_partition_ncf( normalize( repr ) ) == reference );
  } );
}

TEST_CASE( "capacity caps are enforced" )
{
  CHECK_THROWS_AS( symmetry_partition_bf( truth_table( 17 ) ), capacity_error );
  CHECK_THROWS_AS( is_ncf_bf( truth_table( 13 ) ), capacity_error );
  CHECK_THROWS_AS( find_invariant_permutation( truth_table( 9 ) ), capacity_error );
  CHECK_THROWS_AS( enumerate_ncfs( 20 ), capacity_error );
  CHECK_THROWS_AS( enumerate_ncfs( 1 ), std::domain_error );
  CHECK_THROWS_AS( enumerate_ncfs( 4, 0 ), std::invalid_argument );

  // caps are parameters, not constants
  CHECK_THROWS_AS( symmetry_partition_bf( truth_table( 5 ), 4 ), capacity_error );
}
