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

#include "ncfsym/truth_table.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace ncfsym
{

namespace
{

uint64_t hex_digit_count( uint32_t num_vars )
{
  const uint64_t bits = uint64_t{ 1 } << num_vars;
  return ( bits + 3 ) / 4;
}

int hex_value( char c )
{
  if ( c >= '0' && c <= '9' )
    return c - '0';
  if ( c >= 'a' && c <= 'f' )
    return c - 'a' + 10;
  if ( c >= 'A' && c <= 'F' )
    return c - 'A' + 10;
  return -1;
}

} // namespace

truth_table::truth_table( uint32_t num_vars ) : num_vars_( num_vars )
{
  if ( num_vars == 0 )
  {
    throw std::invalid_argument( "truth table needs at least one variable" );
  }
  if ( num_vars > max_table_vars )
  {
    throw capacity_error( "explicit truth tables are capped at " + std::to_string( max_table_vars ) + " variables" );
  }
  const uint64_t bits = uint64_t{ 1 } << num_vars;
  words_.assign( ( bits + 63 ) / 64, 0u );
}

truth_table truth_table::from_hex( uint32_t num_vars, std::string_view hex )
{
  truth_table tt( num_vars );
  const uint64_t digits = hex_digit_count( num_vars );
  if ( hex.size() != digits )
  {
    throw std::invalid_argument( "hex string must have exactly " + std::to_string( digits ) + " digits" );
  }

  const uint64_t bits = tt.num_bits();
  for ( uint64_t d = 0; d < digits; ++d )
  {
    const int v = hex_value( hex[hex.size() - 1 - d] );
    if ( v < 0 )
    {
      throw std::invalid_argument( "invalid hex digit in truth table" );
    }
    for ( uint32_t b = 0; b < 4; ++b )
    {
      const uint64_t index = 4 * d + b;
      const bool bit = ( v >> b ) & 1;
      if ( index >= bits )
      {
        if ( bit )
        {
          throw std::invalid_argument( "hex value exceeds table size" );
        }
        continue;
      }
      if ( bit )
      {
        tt.words_[index >> 6] |= uint64_t{ 1 } << ( index & 63 );
      }
    }
  }
  return tt;
}

bool truth_table::get_bit( uint64_t index ) const
{
  assert( index < num_bits() );
  return ( words_[index >> 6] >> ( index & 63 ) ) & 1;
}

void truth_table::set_bit( uint64_t index, bool value )
{
  assert( index < num_bits() );
  if ( value )
  {
    words_[index >> 6] |= uint64_t{ 1 } << ( index & 63 );
  }
  else
  {
    words_[index >> 6] &= ~( uint64_t{ 1 } << ( index & 63 ) );
  }
}

std::string truth_table::to_hex() const
{
  static constexpr char digits[] = "0123456789ABCDEF";
  const uint64_t count = hex_digit_count( num_vars_ );
  std::string out( count, '0' );
  for ( uint64_t d = 0; d < count; ++d )
  {
    uint32_t v = 0;
    for ( uint32_t b = 0; b < 4; ++b )
    {
      const uint64_t index = 4 * d + b;
      if ( index < num_bits() && get_bit( index ) )
      {
        v |= 1u << b;
      }
    }
    out[count - 1 - d] = digits[v];
  }
  return out;
}

permutation::permutation( std::vector<uint32_t> mapping ) : mapping_( std::move( mapping ) )
{
  const uint32_t n = static_cast<uint32_t>( mapping_.size() );
  if ( n == 0 )
  {
    throw std::invalid_argument( "permutation must be nonempty" );
  }
  std::vector<bool> seen( n, false );
  for ( auto v : mapping_ )
  {
    if ( v < 1 || v > n || seen[v - 1] )
    {
      throw std::invalid_argument( "permutation mapping is not a bijection on 1..n" );
    }
    seen[v - 1] = true;
  }
}

permutation permutation::identity( uint32_t n )
{
  std::vector<uint32_t> mapping( n );
  for ( uint32_t i = 0; i < n; ++i )
  {
    mapping[i] = i + 1;
  }
  return permutation( std::move( mapping ) );
}

bool permutation::is_identity() const
{
  for ( uint32_t i = 0; i < size(); ++i )
  {
    if ( mapping_[i] != i + 1 )
    {
      return false;
    }
  }
  return true;
}

permutation permutation::inverse() const
{
  std::vector<uint32_t> inv( size() );
  for ( uint32_t i = 0; i < size(); ++i )
  {
    inv[mapping_[i] - 1] = i + 1;
  }
  return permutation( std::move( inv ) );
}

symmetry_partition::symmetry_partition( uint32_t num_vars, std::vector<std::vector<uint32_t>> groups )
    : num_vars_( num_vars ), groups_( std::move( groups ) )
{
  std::vector<bool> seen( num_vars_, false );
  uint32_t covered = 0;
  for ( auto& g : groups_ )
  {
    if ( g.empty() )
    {
      throw std::invalid_argument( "symmetry groups must be nonempty" );
    }
    std::sort( g.begin(), g.end() );
    for ( auto v : g )
    {
      if ( v < 1 || v > num_vars_ || seen[v - 1] )
      {
        throw std::invalid_argument( "symmetry groups must be disjoint subsets of 1..n" );
      }
      seen[v - 1] = true;
      ++covered;
    }
  }
  if ( covered != num_vars_ )
  {
    throw std::invalid_argument( "symmetry groups must cover all variables" );
  }
  std::sort( groups_.begin(), groups_.end(),
             []( const auto& a, const auto& b ) { return a.front() < b.front(); } );
}

symmetry_partition symmetry_partition::singletons( uint32_t n )
{
  std::vector<std::vector<uint32_t>> groups;
  groups.reserve( n );
  for ( uint32_t v = 1; v <= n; ++v )
  {
    groups.push_back( { v } );
  }
  return symmetry_partition( n, std::move( groups ) );
}

symmetry_partition symmetry_partition::single_group( uint32_t n )
{
  std::vector<uint32_t> g( n );
  for ( uint32_t v = 1; v <= n; ++v )
  {
    g[v - 1] = v;
  }
  return symmetry_partition( n, { std::move( g ) } );
}

bool evaluate( const truth_table& tt, uint64_t index )
{
  if ( index >= tt.num_bits() )
  {
    throw std::out_of_range( "assignment index out of range" );
  }
  return tt.get_bit( index );
}

truth_table restrict_var( const truth_table& tt, uint32_t var, bool value )
{
  if ( tt.num_vars() == 1 )
  {
    throw std::domain_error( "cannot restrict a one-variable table" );
  }
  if ( var < 1 || var > tt.num_vars() )
  {
    throw std::out_of_range( "variable index out of range" );
  }

  truth_table out( tt.num_vars() - 1 );
  const uint64_t low_mask = ( uint64_t{ 1 } << ( var - 1 ) ) - 1;
  for ( uint64_t i = 0; i < out.num_bits(); ++i )
  {
    const uint64_t low = i & low_mask;
    const uint64_t high = i >> ( var - 1 );
    const uint64_t src = low | ( uint64_t{ value } << ( var - 1 ) ) | ( high << var );
    out.set_bit( i, tt.get_bit( src ) );
  }
  return out;
}

std::vector<uint32_t> restriction_var_map( uint32_t num_vars, uint32_t var )
{
  if ( var < 1 || var > num_vars )
  {
    throw std::out_of_range( "variable index out of range" );
  }
  std::vector<uint32_t> map( num_vars );
  for ( uint32_t v = 1; v <= num_vars; ++v )
  {
    map[v - 1] = ( v == var ) ? 0 : ( v < var ? v : v - 1 );
  }
  return map;
}

truth_table apply_permutation( const truth_table& tt, const permutation& perm )
{
  if ( perm.size() != tt.num_vars() )
  {
    throw std::invalid_argument( "permutation size does not match table" );
  }

  truth_table out( tt.num_vars() );
  for ( uint64_t i = 0; i < tt.num_bits(); ++i )
  {
    uint64_t src = 0;
    for ( uint32_t k = 1; k <= tt.num_vars(); ++k )
    {
      src |= ( ( i >> ( perm( k ) - 1 ) ) & 1 ) << ( k - 1 );
    }
    out.set_bit( i, tt.get_bit( src ) );
  }
  return out;
}

std::optional<bool> is_constant( const truth_table& tt )
{
  const bool first = tt.get_bit( 0 );
  for ( uint64_t i = 1; i < tt.num_bits(); ++i )
  {
    if ( tt.get_bit( i ) != first )
    {
      return std::nullopt;
    }
  }
  return first;
}

truth_table parse_truth_table( std::string_view line )
{
  std::istringstream in{ std::string( line ) };
  std::string n_tok, tt_tok, extra;
  if ( !( in >> n_tok >> tt_tok ) || ( in >> extra ) )
  {
    throw parse_error( "expected 'n=<k> tt=<hex>'", 1 );
  }
  if ( n_tok.rfind( "n=", 0 ) != 0 || tt_tok.rfind( "tt=", 0 ) != 0 )
  {
    throw parse_error( "expected 'n=<k> tt=<hex>'", 1 );
  }

  unsigned long parsed = 0;
  try
  {
    parsed = std::stoul( n_tok.substr( 2 ) );
  }
  catch ( const std::logic_error& )
  {
    throw parse_error( "invalid variable count", 1 );
  }
  if ( parsed == 0 )
  {
    throw parse_error( "invalid variable count", 1 );
  }
  if ( parsed > max_table_vars )
  {
    throw capacity_error( "variable count outside 1.." + std::to_string( max_table_vars ) );
  }
  const auto num_vars = static_cast<uint32_t>( parsed );

  try
  {
    return truth_table::from_hex( num_vars, tt_tok.substr( 3 ) );
  }
  catch ( const std::invalid_argument& e )
  {
    throw parse_error( e.what(), 1 );
  }
}

std::string format_truth_table( const truth_table& tt )
{
  return "n=" + std::to_string( tt.num_vars() ) + " tt=" + tt.to_hex();
}

} // namespace ncfsym
