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

#include "ncfsym/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <thread>
#include <unordered_map>
#include <unordered_set>

namespace ncfsym
{

namespace
{

void check_cap( const truth_table& tt, uint32_t cap, const char* what )
{
  if ( tt.num_vars() > cap )
  {
    throw capacity_error( std::string( what ) + " is capped at " + std::to_string( cap ) + " variables" );
  }
}

} // namespace

bool pairwise_symmetric_bf( const truth_table& tt, uint32_t i, uint32_t j )
{
  const auto n = tt.num_vars();
  if ( i < 1 || i > n || j < 1 || j > n || i == j )
  {
    throw std::invalid_argument( "need two distinct variables in 1..n" );
  }

  const uint64_t bi = uint64_t{ 1 } << ( i - 1 );
  const uint64_t bj = uint64_t{ 1 } << ( j - 1 );
  for ( uint64_t a = 0; a < tt.num_bits(); ++a )
  {
    const bool vi = a & bi;
    const bool vj = a & bj;
    if ( vi == vj )
    {
      continue;
    }
    if ( tt.get_bit( a ) != tt.get_bit( a ^ ( bi | bj ) ) )
    {
      return false;
    }
  }
  return true;
}

symmetry_partition symmetry_partition_bf( const truth_table& tt, uint32_t cap )
{
  check_cap( tt, cap, "pairwise symmetry scan" );
  const auto n = tt.num_vars();

  std::vector<uint32_t> parent( n );
  std::iota( parent.begin(), parent.end(), 0 );
  std::function<uint32_t( uint32_t )> find = [&]( uint32_t v ) {
    return parent[v] == v ? v : parent[v] = find( parent[v] );
  };

  for ( uint32_t i = 1; i <= n; ++i )
  {
    for ( uint32_t j = i + 1; j <= n; ++j )
    {
      if ( pairwise_symmetric_bf( tt, i, j ) )
      {
        parent[find( i - 1 )] = find( j - 1 );
      }
    }
  }

  std::vector<std::vector<uint32_t>> classes( n );
  for ( uint32_t v = 0; v < n; ++v )
  {
    classes[find( v )].push_back( v + 1 );
  }
  std::vector<std::vector<uint32_t>> groups;
  for ( auto& c : classes )
  {
    if ( !c.empty() )
    {
      groups.push_back( std::move( c ) );
    }
  }
  return symmetry_partition( n, std::move( groups ) );
}

std::vector<canalyzing_triple> canalyzing_triples_bf( const truth_table& tt, uint32_t cap )
{
  check_cap( tt, cap, "canalyzing scan" );
  const auto n = tt.num_vars();

  std::vector<canalyzing_triple> out;
  for ( uint32_t var = 1; var <= n; ++var )
  {
    for ( const bool a : { true, false } )
    {
      if ( n == 1 )
      {
        // the 0-variable restriction is the single value f(a)
        out.push_back( canalyzing_triple{ var, a, tt.get_bit( a ? 1 : 0 ) } );
        continue;
      }
      if ( const auto constant = is_constant( restrict_var( tt, var, a ) ) )
      {
        out.push_back( canalyzing_triple{ var, a, *constant } );
      }
    }
  }
  return out;
}

namespace
{

/* labels[k] is the original 1-based name of current variable k+1 */
std::optional<std::pair<std::vector<rule>, bool>> ncf_search( const truth_table& tt,
                                                              const std::vector<uint32_t>& labels )
{
  if ( is_constant( tt ) )
  {
    return std::nullopt;
  }
  if ( tt.num_vars() == 1 )
  {
    const bool b = tt.get_bit( 1 );
    return std::pair{ std::vector<rule>{ rule{ labels[0], true, b } }, !b };
  }

  for ( uint32_t var = 1; var <= tt.num_vars(); ++var )
  {
    for ( const bool a : { true, false } )
    {
      const auto constant = is_constant( restrict_var( tt, var, a ) );
      if ( !constant )
      {
        continue;
      }
      std::vector<uint32_t> sub_labels;
      for ( uint32_t k = 0; k < labels.size(); ++k )
      {
        if ( k + 1 != var )
        {
          sub_labels.push_back( labels[k] );
        }
      }
      auto sub = ncf_search( restrict_var( tt, var, !a ), sub_labels );
      if ( !sub )
      {
        return std::nullopt;
      }
      std::vector<rule> rules{ rule{ labels[var - 1], a, *constant } };
      rules.insert( rules.end(), sub->first.begin(), sub->first.end() );
      return std::pair{ std::move( rules ), sub->second };
    }
  }
  return std::nullopt;
}

} // namespace

std::optional<ncf_repr> is_ncf_bf( const truth_table& tt, uint32_t cap )
{
  check_cap( tt, cap, "recursive NCF test" );
  std::vector<uint32_t> labels( tt.num_vars() );
  std::iota( labels.begin(), labels.end(), 1 );
  auto found = ncf_search( tt, labels );
  if ( !found )
  {
    return std::nullopt;
  }
  return ncf_repr( std::move( found->first ), found->second );
}

std::optional<permutation> find_invariant_permutation( const truth_table& tt, uint32_t cap )
{
  check_cap( tt, cap, "invariant-permutation search" );
  const auto n = tt.num_vars();

  std::vector<uint32_t> mapping( n );
  std::iota( mapping.begin(), mapping.end(), 1 );
  while ( std::next_permutation( mapping.begin(), mapping.end() ) )
  {
    bool invariant = true;
    for ( uint64_t a = 0; a < tt.num_bits() && invariant; ++a )
    {
      uint64_t src = 0;
      for ( uint32_t k = 0; k < n; ++k )
      {
        src |= ( ( a >> ( mapping[k] - 1 ) ) & 1 ) << k;
      }
      invariant = tt.get_bit( a ) == tt.get_bit( src );
    }
    if ( invariant )
    {
      return permutation( mapping );
    }
  }
  return std::nullopt;
}

bool is_strongly_asymmetric_bf( const truth_table& tt, uint32_t cap )
{
  return !find_invariant_permutation( tt, cap ).has_value();
}

std::string enumeration_report::machine_line() const
{
  std::string levels;
  for ( const auto& [level, count] : level_histogram )
  {
    levels += ( levels.empty() ? "" : "," ) + std::to_string( level ) + ":" + std::to_string( count );
  }
  return "n=" + std::to_string( num_vars ) + " ncfs=" + std::to_string( distinct_ncf_count ) +
         " strong=" + std::to_string( strongly_asymmetric_count ) + " levels=" + levels;
}

std::string enumeration_report::report_text() const
{
  std::string out = "distinct NCFs on " + std::to_string( num_vars ) +
                    " variables: " + std::to_string( distinct_ncf_count ) + "\n";
  out += "strongly asymmetric: " + std::to_string( strongly_asymmetric_count ) + "\n";
  out += "symmetry level histogram:\n";
  for ( const auto& [level, count] : level_histogram )
  {
    out += "  level " + std::to_string( level ) + ": " + std::to_string( count ) + "\n";
  }
  return out;
}

namespace
{

void check_enumeration_args( uint32_t n, uint32_t cap )
{
  if ( n < 2 )
  {
    throw std::domain_error( "enumeration is defined for n >= 2" );
  }
  if ( n > cap || n > 6 )
  {
    throw capacity_error( "enumeration is capped at " + std::to_string( std::min( cap, 6u ) ) + " variables" );
  }
}

/* packed truth table of the representation (perm, canalyzing mask, canalyzed mask) */
uint64_t representation_bits( uint32_t n, const std::vector<uint32_t>& perm, uint32_t a_mask, uint32_t b_mask )
{
  const bool default_value = !( ( b_mask >> ( n - 1 ) ) & 1 );
  uint64_t bits = 0;
  for ( uint32_t index = 0; index < ( 1u << n ); ++index )
  {
    bool value = default_value;
    for ( uint32_t k = 0; k < n; ++k )
    {
      if ( ( ( index >> ( perm[k] - 1 ) ) & 1 ) == ( ( a_mask >> k ) & 1 ) )
      {
        value = ( b_mask >> k ) & 1;
        break;
      }
    }
    bits |= uint64_t{ value } << index;
  }
  return bits;
}

ncf_repr representation_of( uint32_t n, const std::vector<uint32_t>& perm, uint32_t a_mask, uint32_t b_mask )
{
  std::vector<rule> rules;
  rules.reserve( n );
  for ( uint32_t k = 0; k < n; ++k )
  {
    rules.push_back( rule{ perm[k], static_cast<bool>( ( a_mask >> k ) & 1 ),
                           static_cast<bool>( ( b_mask >> k ) & 1 ) } );
  }
  return ncf_repr( std::move( rules ), !( ( b_mask >> ( n - 1 ) ) & 1 ) );
}

using level_map = std::unordered_map<uint64_t, uint8_t>;

/* sweeps one block of variable orders; levels agree across shards for equal keys */
void sweep_block( uint32_t n, const std::vector<std::vector<uint32_t>>& perms, size_t begin, size_t end,
                  level_map& out )
{
  for ( size_t p = begin; p < end; ++p )
  {
    for ( uint32_t a_mask = 0; a_mask < ( 1u << n ); ++a_mask )
    {
      for ( uint32_t b_mask = 0; b_mask < ( 1u << n ); ++b_mask )
      {
        const uint64_t bits = representation_bits( n, perms[p], a_mask, b_mask );
        if ( out.contains( bits ) )
        {
          continue;
        }
        const auto repr = representation_of( n, perms[p], a_mask, b_mask );
        const auto level = symmetry_partition_ncf( normalize( repr ) ).level();
        out.emplace( bits, static_cast<uint8_t>( level ) );
      }
    }
  }
}

} // namespace

void for_each_distinct_ncf( uint32_t n, const std::function<void( const ncf_repr&, uint64_t )>& fn, uint32_t cap )
{
  check_enumeration_args( n, cap );

  std::vector<uint32_t> perm( n );
  std::iota( perm.begin(), perm.end(), 1 );
  std::unordered_set<uint64_t> seen;

  do
  {
    for ( uint32_t a_mask = 0; a_mask < ( 1u << n ); ++a_mask )
    {
      for ( uint32_t b_mask = 0; b_mask < ( 1u << n ); ++b_mask )
      {
        const uint64_t bits = representation_bits( n, perm, a_mask, b_mask );
        if ( seen.insert( bits ).second )
        {
          fn( representation_of( n, perm, a_mask, b_mask ), bits );
        }
      }
    }
  } while ( std::next_permutation( perm.begin(), perm.end() ) );
}

enumeration_report enumerate_ncfs( uint32_t n, uint32_t num_jobs, uint32_t cap )
{
  check_enumeration_args( n, cap );
  if ( num_jobs == 0 )
  {
    throw std::invalid_argument( "need at least one job" );
  }

  std::vector<std::vector<uint32_t>> perms;
  std::vector<uint32_t> perm( n );
  std::iota( perm.begin(), perm.end(), 1 );
  do
  {
    perms.push_back( perm );
  } while ( std::next_permutation( perm.begin(), perm.end() ) );

  level_map merged;
  if ( num_jobs == 1 )
  {
    sweep_block( n, perms, 0, perms.size(), merged );
  }
  else
  {
    const size_t jobs = std::min<size_t>( num_jobs, perms.size() );
    std::vector<level_map> partial( jobs );
    std::vector<std::thread> workers;
    const size_t chunk = ( perms.size() + jobs - 1 ) / jobs;
    for ( size_t w = 0; w < jobs; ++w )
    {
      const size_t begin = w * chunk;
      const size_t end = std::min( perms.size(), begin + chunk );
      workers.emplace_back( [&, begin, end, w]() { sweep_block( n, perms, begin, end, partial[w] ); } );
    }
    for ( auto& t : workers )
    {
      t.join();
    }
    for ( const auto& map : partial )
    {
      merged.insert( map.begin(), map.end() );
    }
  }

  enumeration_report report;
  report.num_vars = n;
  report.distinct_ncf_count = merged.size();
  for ( const auto& [bits, level] : merged )
  {
    ++report.level_histogram[level];
    if ( level == n )
    {
      ++report.strongly_asymmetric_count;
    }
  }
  return report;
}

} // namespace ncfsym
