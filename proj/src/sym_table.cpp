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

#include "ncfsym/sym_table.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <cctype>
#include <sstream>

namespace ncfsym
{

sym_table::sym_table( std::vector<uint32_t> group_sizes ) : group_sizes_( std::move( group_sizes ) )
{
  if ( group_sizes_.empty() )
  {
    throw std::invalid_argument( "count table needs at least one group" );
  }
  uint64_t rows = 1;
  for ( auto m : group_sizes_ )
  {
    if ( m == 0 )
    {
      throw std::invalid_argument( "group sizes must be positive" );
    }
    if ( rows > max_sym_table_rows / ( m + 1 ) )
    {
      throw capacity_error( "count table exceeds the row cap" );
    }
    rows *= m + 1;
  }

  strides_.assign( group_sizes_.size(), 1 );
  for ( size_t g = group_sizes_.size(); g-- > 1; )
  {
    strides_[g - 1] = strides_[g] * ( group_sizes_[g] + 1 );
  }
  values_.assign( rows, 0 );
}

uint64_t sym_table::row_index( std::span<const uint32_t> counts ) const
{
  assert( counts.size() == group_sizes_.size() );
  uint64_t row = 0;
  for ( size_t g = 0; g < counts.size(); ++g )
  {
    assert( counts[g] <= group_sizes_[g] );
    row += counts[g] * strides_[g];
  }
  return row;
}

std::vector<uint32_t> sym_table::row_counts( uint64_t row ) const
{
  std::vector<uint32_t> counts( group_sizes_.size() );
  for ( size_t g = 0; g < group_sizes_.size(); ++g )
  {
    counts[g] = static_cast<uint32_t>( ( row / strides_[g] ) % ( group_sizes_[g] + 1 ) );
  }
  return counts;
}

sym_table sym_table_from_truth_table( const truth_table& tt, const symmetry_partition& partition )
{
  if ( partition.num_vars() != tt.num_vars() )
  {
    throw std::invalid_argument( "partition does not cover the table's variables" );
  }

  std::vector<uint32_t> sizes;
  std::vector<uint64_t> masks;
  for ( const auto& g : partition.groups() )
  {
    sizes.push_back( static_cast<uint32_t>( g.size() ) );
    uint64_t mask = 0;
    for ( auto v : g )
    {
      mask |= uint64_t{ 1 } << ( v - 1 );
    }
    masks.push_back( mask );
  }

  sym_table st( sizes );
  std::vector<uint8_t> seen( st.row_count(), 0 );
  std::vector<uint64_t> first_index( st.row_count(), 0 );
  std::vector<uint32_t> counts( st.num_groups() );

  for ( uint64_t i = 0; i < tt.num_bits(); ++i )
  {
    for ( uint32_t g = 0; g < st.num_groups(); ++g )
    {
      counts[g] = static_cast<uint32_t>( std::popcount( i & masks[g] ) );
    }
    const uint64_t row = st.row_index( counts );
    const bool value = tt.get_bit( i );
    if ( !seen[row] )
    {
      seen[row] = 1;
      first_index[row] = i;
      st.set_value_at( row, value );
    }
    else if ( st.value_at( row ) != value )
    {
      throw not_symmetric_error( "function is not symmetric under the partition: assignments " +
                                     std::to_string( first_index[row] ) + " and " + std::to_string( i ) +
                                     " share a count tuple but differ",
                                 first_index[row], i );
    }
  }
  return st;
}

truth_table sym_table_to_truth_table( const sym_table& st, const symmetry_partition& partition )
{
  if ( partition.level() != st.num_groups() )
  {
    throw std::invalid_argument( "partition group count does not match table" );
  }
  for ( uint32_t g = 0; g < st.num_groups(); ++g )
  {
    if ( partition.groups()[g].size() != st.group_sizes()[g] )
    {
      throw std::invalid_argument( "partition group sizes do not match table" );
    }
  }

  std::vector<uint64_t> masks;
  for ( const auto& g : partition.groups() )
  {
    uint64_t mask = 0;
    for ( auto v : g )
    {
      mask |= uint64_t{ 1 } << ( v - 1 );
    }
    masks.push_back( mask );
  }

  truth_table tt( partition.num_vars() );
  std::vector<uint32_t> counts( st.num_groups() );
  for ( uint64_t i = 0; i < tt.num_bits(); ++i )
  {
    for ( uint32_t g = 0; g < st.num_groups(); ++g )
    {
      counts[g] = static_cast<uint32_t>( std::popcount( i & masks[g] ) );
    }
    tt.set_bit( i, st.value( counts ) );
  }
  return tt;
}

namespace
{

/* One scan over the rows decides both candidate canalyzing values of one
   group: value 1 looks at rows with count >= 1, value 0 at rows with
   count < m. */
std::optional<canalyzing_finding> probe_group( const sym_table& st, uint32_t group, recognize_stats* stats )
{
  const uint32_t m = st.group_sizes()[group];
  bool ok1 = true, ok0 = true;
  bool seen1 = false, seen0 = false;
  bool val1 = false, val0 = false;

  const uint64_t rows = st.row_count();
  if ( stats )
  {
    stats->row_visits += rows;
  }
  for ( uint64_t row = 0; row < rows; ++row )
  {
    const uint32_t c = st.row_counts( row )[group];
    const bool v = st.value_at( row );
    if ( c >= 1 )
    {
      if ( !seen1 )
      {
        seen1 = true;
        val1 = v;
      }
      else if ( val1 != v )
      {
        ok1 = false;
      }
    }
    if ( c < m )
    {
      if ( !seen0 )
      {
        seen0 = true;
        val0 = v;
      }
      else if ( val0 != v )
      {
        ok0 = false;
      }
    }
    if ( !ok1 && !ok0 )
    {
      break;
    }
  }

  if ( ok1 )
  {
    return canalyzing_finding{ group + 1, true, val1 };
  }
  if ( ok0 )
  {
    return canalyzing_finding{ group + 1, false, val0 };
  }
  return std::nullopt;
}

/* Drops one group, keeping the rows where its count is fixed. */
sym_table restrict_group( const sym_table& st, uint32_t group, uint32_t fixed_count, recognize_stats* stats )
{
  std::vector<uint32_t> sizes;
  for ( uint32_t g = 0; g < st.num_groups(); ++g )
  {
    if ( g != group )
    {
      sizes.push_back( st.group_sizes()[g] );
    }
  }

  sym_table out( sizes );
  if ( stats )
  {
    stats->row_visits += out.row_count();
  }
  std::vector<uint32_t> counts( st.num_groups() );
  for ( uint64_t row = 0; row < out.row_count(); ++row )
  {
    const auto sub = out.row_counts( row );
    for ( uint32_t g = 0, s = 0; g < st.num_groups(); ++g )
    {
      counts[g] = ( g == group ) ? fixed_count : sub[s++];
    }
    out.set_value_at( row, st.value( counts ) );
  }
  return out;
}

} // namespace

std::optional<canalyzing_finding> find_canalyzing( const sym_table& st )
{
  for ( uint32_t g = 0; g < st.num_groups(); ++g )
  {
    if ( auto finding = probe_group( st, g, nullptr ) )
    {
      return finding;
    }
  }
  return std::nullopt;
}

std::variant<ncf_repr, not_ncf> recognize_ncf( const sym_table& st, const symmetry_partition& partition,
                                               recognize_stats* stats )
{
  if ( partition.level() != st.num_groups() )
  {
    throw std::invalid_argument( "partition group count does not match table" );
  }
  for ( uint32_t g = 0; g < st.num_groups(); ++g )
  {
    if ( partition.groups()[g].size() != st.group_sizes()[g] )
    {
      throw std::invalid_argument( "partition group sizes do not match table" );
    }
  }

  sym_table current = st;
  std::vector<uint32_t> active; // indices into partition.groups()
  for ( uint32_t g = 0; g < st.num_groups(); ++g )
  {
    active.push_back( g );
  }

  std::vector<rule> rules;
  if ( stats )
  {
    stats->mu_sequence.push_back( current.row_count() );
  }

  while ( true )
  {
    std::optional<canalyzing_finding> finding;
    for ( uint32_t g = 0; g < current.num_groups(); ++g )
    {
      if ( ( finding = probe_group( current, g, stats ) ) )
      {
        break;
      }
    }
    if ( !finding )
    {
      return not_ncf{ "no canalyzing variable in the remaining groups" };
    }

    const uint32_t local = finding->group_index - 1;
    const auto& members = partition.groups()[active[local]];
    for ( auto var : members )
    {
      rules.push_back( rule{ var, finding->canalyzing_value, finding->canalyzed_value } );
    }

    const uint32_t m = current.group_sizes()[local];
    const uint32_t fixed = finding->canalyzing_value ? 0 : m;

    if ( current.num_groups() == 1 )
    {
      // the single remaining row is the function's value when every rule fails
      std::vector<uint32_t> last{ fixed };
      const bool remaining = current.value( last );
      if ( stats )
      {
        stats->row_visits += 1;
      }
      if ( remaining == finding->canalyzed_value )
      {
        return not_ncf{ "function does not depend on all variables" };
      }
      return ncf_repr( std::move( rules ), remaining );
    }

    const uint64_t previous_rows = current.row_count();
    current = restrict_group( current, local, fixed, stats );
    active.erase( active.begin() + local );
    if ( stats )
    {
      stats->mu_sequence.push_back( current.row_count() );
    }
    if ( current.row_count() > previous_rows / 2 )
    {
      throw std::logic_error( "row count must at least halve per iteration" );
    }
  }
}

namespace
{

std::string_view strip_line( std::string_view line )
{
  if ( const auto hash = line.find( '#' ); hash != std::string_view::npos )
  {
    line = line.substr( 0, hash );
  }
  while ( !line.empty() && std::isspace( static_cast<unsigned char>( line.front() ) ) )
  {
    line.remove_prefix( 1 );
  }
  while ( !line.empty() && std::isspace( static_cast<unsigned char>( line.back() ) ) )
  {
    line.remove_suffix( 1 );
  }
  return line;
}

std::vector<uint32_t> parse_uint_list( std::string_view text, uint32_t line_no )
{
  std::vector<uint32_t> out;
  std::istringstream in{ std::string( text ) };
  std::string item;
  while ( std::getline( in, item, ',' ) )
  {
    size_t pos = 0;
    unsigned long v = 0;
    try
    {
      v = std::stoul( item, &pos );
    }
    catch ( const std::logic_error& )
    {
      throw parse_error( "expected a comma-separated integer list", line_no );
    }
    while ( pos < item.size() && std::isspace( static_cast<unsigned char>( item[pos] ) ) )
    {
      ++pos;
    }
    if ( pos != item.size() || v > 0xffffffffu )
    {
      throw parse_error( "expected a comma-separated integer list", line_no );
    }
    out.push_back( static_cast<uint32_t>( v ) );
  }
  if ( out.empty() )
  {
    throw parse_error( "expected a comma-separated integer list", line_no );
  }
  return out;
}

} // namespace

sym_table parse_sym_table( std::string_view text )
{
  std::optional<sym_table> st;
  std::vector<uint8_t> seen;
  uint64_t rows_seen = 0;

  uint32_t line_no = 0;
  size_t start = 0;
  while ( start <= text.size() )
  {
    const auto nl = text.find( '\n', start );
    const auto raw = text.substr( start, nl == std::string_view::npos ? text.size() - start : nl - start );
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto content = strip_line( raw );
    if ( content.empty() )
    {
      continue;
    }

    if ( !st )
    {
      if ( content.rfind( "groups", 0 ) != 0 )
      {
        throw parse_error( "expected header 'groups: m1,m2,...'", line_no );
      }
      auto rest = content.substr( 6 );
      while ( !rest.empty() && std::isspace( static_cast<unsigned char>( rest.front() ) ) )
      {
        rest.remove_prefix( 1 );
      }
      if ( rest.empty() || rest.front() != ':' )
      {
        throw parse_error( "expected header 'groups: m1,m2,...'", line_no );
      }
      const auto sizes = parse_uint_list( rest.substr( 1 ), line_no );
      for ( auto m : sizes )
      {
        if ( m == 0 )
        {
          throw parse_error( "group sizes must be positive", line_no );
        }
      }
      st.emplace( sizes );
      seen.assign( st->row_count(), 0 );
      continue;
    }

    const auto colon = content.rfind( ':' );
    if ( colon == std::string_view::npos )
    {
      throw parse_error( "expected 'c1,c2,...: <0|1>'", line_no );
    }
    auto value_text = strip_line( content.substr( colon + 1 ) );
    if ( value_text != "0" && value_text != "1" )
    {
      throw parse_error( "row value must be 0 or 1", line_no );
    }
    const auto counts = parse_uint_list( content.substr( 0, colon ), line_no );
    if ( counts.size() != st->num_groups() )
    {
      throw parse_error( "row has " + std::to_string( counts.size() ) + " counts, expected " +
                             std::to_string( st->num_groups() ),
                         line_no );
    }
    for ( uint32_t g = 0; g < st->num_groups(); ++g )
    {
      if ( counts[g] > st->group_sizes()[g] )
      {
        throw parse_error( "count exceeds group size", line_no );
      }
    }
    const uint64_t row = st->row_index( counts );
    if ( seen[row] )
    {
      throw parse_error( "duplicate row", line_no );
    }
    seen[row] = 1;
    ++rows_seen;
    st->set_value_at( row, value_text == "1" );
  }

  if ( !st )
  {
    throw parse_error( "missing 'groups:' header", line_no );
  }
  if ( rows_seen != st->row_count() )
  {
    throw parse_error( "table has " + std::to_string( rows_seen ) + " rows, expected " +
                           std::to_string( st->row_count() ),
                       line_no );
  }
  return *st;
}

std::string render_sym_table( const sym_table& st )
{
  std::string out = "groups: ";
  for ( uint32_t g = 0; g < st.num_groups(); ++g )
  {
    out += ( g ? "," : "" ) + std::to_string( st.group_sizes()[g] );
  }
  out += "\n";
  for ( uint64_t row = 0; row < st.row_count(); ++row )
  {
    const auto counts = st.row_counts( row );
    for ( uint32_t g = 0; g < st.num_groups(); ++g )
    {
      out += ( g ? "," : "" ) + std::to_string( counts[g] );
    }
    out += std::string( ": " ) + ( st.value_at( row ) ? "1" : "0" ) + "\n";
  }
  return out;
}

} // namespace ncfsym
