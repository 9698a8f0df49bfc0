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

#include "ncfsym/ncf.hpp"

#include <algorithm>
#include <cctype>
#include <gmpxx.h>

namespace ncfsym
{

ncf_repr::ncf_repr( std::vector<rule> rules, bool default_value )
    : rules_( std::move( rules ) ), default_value_( default_value )
{
  const auto n = static_cast<uint32_t>( rules_.size() );
  if ( n == 0 )
  {
    throw std::invalid_argument( "rule list must be nonempty" );
  }
  std::vector<bool> seen( n, false );
  for ( const auto& r : rules_ )
  {
    if ( r.variable < 1 || r.variable > n )
    {
      throw std::invalid_argument( "rule variable outside 1..n" );
    }
    if ( seen[r.variable - 1] )
    {
      throw std::invalid_argument( "duplicate variable in rule list" );
    }
    seen[r.variable - 1] = true;
  }
  if ( default_value_ == rules_.back().canalyzed_value )
  {
    throw std::invalid_argument( "default value must complement the last canalyzed value" );
  }
}

namespace
{

/* strips a '#' comment and surrounding whitespace */
std::string_view trimmed_content( std::string_view line )
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

struct token_cursor
{
  std::string_view text;
  size_t pos = 0;

  void skip_ws()
  {
    while ( pos < text.size() && std::isspace( static_cast<unsigned char>( text[pos] ) ) )
    {
      ++pos;
    }
  }

  bool accept( std::string_view literal )
  {
    skip_ws();
    if ( text.substr( pos, literal.size() ) == literal )
    {
      pos += literal.size();
      return true;
    }
    return false;
  }

  bool accept_bit( bool& out )
  {
    skip_ws();
    if ( pos < text.size() && ( text[pos] == '0' || text[pos] == '1' ) )
    {
      out = text[pos] == '1';
      ++pos;
      return true;
    }
    return false;
  }

  bool accept_uint( uint32_t& out )
  {
    skip_ws();
    size_t end = pos;
    while ( end < text.size() && std::isdigit( static_cast<unsigned char>( text[end] ) ) )
    {
      ++end;
    }
    if ( end == pos || end - pos > 9 )
    {
      return false;
    }
    out = 0;
    for ( size_t k = pos; k < end; ++k )
    {
      out = out * 10 + ( text[k] - '0' );
    }
    pos = end;
    return true;
  }

  bool at_end()
  {
    skip_ws();
    return pos == text.size();
  }
};

bool iequals( std::string_view a, std::string_view b )
{
  return a.size() == b.size() &&
         std::equal( a.begin(), a.end(), b.begin(), []( char x, char y ) {
           return std::tolower( static_cast<unsigned char>( x ) ) == std::tolower( static_cast<unsigned char>( y ) );
         } );
}

} // namespace

ncf_repr parse_ncf( std::string_view text )
{
  std::vector<rule> rules;
  std::vector<uint32_t> seen_lines; // source line of each rule, for error reports
  bool have_default = false;
  bool default_value = false;

  uint32_t line_no = 0;
  size_t start = 0;
  while ( start <= text.size() )
  {
    const auto nl = text.find( '\n', start );
    const auto raw = text.substr( start, nl == std::string_view::npos ? text.size() - start : nl - start );
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    const auto content = trimmed_content( raw );
    if ( content.empty() )
    {
      continue;
    }
    if ( have_default )
    {
      throw parse_error( "content after the default line", line_no );
    }

    token_cursor cur{ content };
    if ( content.size() >= 7 && iequals( content.substr( 0, 7 ), "default" ) )
    {
      cur.pos = 7;
      if ( !cur.accept( ":" ) || !cur.accept_bit( default_value ) || !cur.at_end() )
      {
        throw parse_error( "expected 'default: <0|1>'", line_no );
      }
      have_default = true;
      continue;
    }

    rule r{};
    if ( !cur.accept( "x" ) || !cur.accept_uint( r.variable ) || !cur.accept( ":" ) ||
         !cur.accept_bit( r.canalyzing_value ) || !cur.accept( "->" ) ||
         !cur.accept_bit( r.canalyzed_value ) || !cur.at_end() )
    {
      throw parse_error( "expected 'x<i>: <0|1> -> <0|1>'", line_no );
    }
    for ( const auto& prev : rules )
    {
      if ( prev.variable == r.variable )
      {
        throw duplicate_variable_error( "variable x" + std::to_string( r.variable ) + " appears twice", line_no );
      }
    }
    rules.push_back( r );
    seen_lines.push_back( line_no );
  }

  if ( !have_default )
  {
    throw parse_error( "missing default line", line_no );
  }
  if ( rules.empty() )
  {
    throw parse_error( "no rules before the default line", line_no );
  }
  if ( default_value == rules.back().canalyzed_value )
  {
    throw inconsistent_default_error( "default must complement the last canalyzed value", line_no );
  }

  const auto n = static_cast<uint32_t>( rules.size() );
  for ( size_t k = 0; k < rules.size(); ++k )
  {
    if ( rules[k].variable < 1 || rules[k].variable > n )
    {
      throw parse_error( "variable x" + std::to_string( rules[k].variable ) + " outside 1.." + std::to_string( n ),
                         seen_lines[k] );
    }
  }

  return ncf_repr( std::move( rules ), default_value );
}

std::string render_ncf( const ncf_repr& ncf )
{
  std::string out;
  for ( const auto& r : ncf.rules() )
  {
    out += "x" + std::to_string( r.variable ) + ": " + ( r.canalyzing_value ? "1" : "0" ) + " -> " +
           ( r.canalyzed_value ? "1" : "0" ) + "\n";
  }
  out += std::string( "default: " ) + ( ncf.default_value() ? "1" : "0" ) + "\n";
  return out;
}

bool evaluate_ncf( const ncf_repr& ncf, uint64_t index )
{
  if ( ncf.num_vars() > 63 )
  {
    throw capacity_error( "assignment indices cover at most 63 variables" );
  }
  if ( index >= uint64_t{ 1 } << ncf.num_vars() )
  {
    throw std::out_of_range( "assignment index out of range" );
  }
  for ( const auto& r : ncf.rules() )
  {
    if ( ( ( index >> ( r.variable - 1 ) ) & 1 ) == static_cast<uint64_t>( r.canalyzing_value ) )
    {
      return r.canalyzed_value;
    }
  }
  return ncf.default_value();
}

truth_table to_truth_table( const ncf_repr& ncf )
{
  truth_table tt( ncf.num_vars() );
  for ( uint64_t i = 0; i < tt.num_bits(); ++i )
  {
    tt.set_bit( i, evaluate_ncf( ncf, i ) );
  }
  return tt;
}

bool is_default_normalized( const ncf_repr& ncf )
{
  const auto n = ncf.num_vars();
  return n == 1 || ncf.rules()[n - 2].canalyzed_value == ncf.rules()[n - 1].canalyzed_value;
}

ncf_repr normalize( const ncf_repr& ncf )
{
  if ( is_default_normalized( ncf ) )
  {
    return ncf;
  }
  auto rules = ncf.rules();
  auto& last = rules.back();
  last.canalyzing_value = !last.canalyzing_value;
  last.canalyzed_value = !last.canalyzed_value;
  return ncf_repr( std::move( rules ), !ncf.default_value() );
}

layer_decomposition layers( const ncf_repr& ncf )
{
  layer_decomposition out;
  const auto& rules = ncf.rules();

  for ( uint32_t k = 0; k < rules.size(); ++k )
  {
    if ( out.layers.empty() || out.layers.back().canalyzed_value != rules[k].canalyzed_value )
    {
      out.layers.push_back( layer{ k + 1, k + 1, rules[k].canalyzed_value, { 0, 0 } } );
    }
    else
    {
      out.layers.back().last_rule = k + 1;
    }
    ++out.layers.back().canalyzing_count[rules[k].canalyzing_value ? 1 : 0];
  }

  for ( const auto& l : out.layers )
  {
    ( l.distinct_canalyzing_values() == 1 ? out.r1 : out.r2 )++;
  }
  return out;
}

ncf_repr permute_within_layer( const ncf_repr& ncf, uint32_t layer_index, const permutation& perm )
{
  const auto decomposition = layers( ncf );
  if ( layer_index < 1 || layer_index > decomposition.layer_count() )
  {
    throw std::invalid_argument( "layer index out of range" );
  }
  const auto& l = decomposition.layers[layer_index - 1];
  if ( perm.size() != l.size() )
  {
    throw std::invalid_argument( "permutation size does not match layer" );
  }

  auto rules = ncf.rules();
  for ( uint32_t k = 0; k < l.size(); ++k )
  {
    rules[l.first_rule - 1 + k] = ncf.rules()[l.first_rule - 1 + perm( k + 1 ) - 1];
  }
  return ncf_repr( std::move( rules ), ncf.default_value() );
}

ncf_repr canonicalize( const ncf_repr& ncf )
{
  const auto normalized = normalize( ncf );
  auto rules = normalized.rules();
  for ( const auto& l : layers( normalized ).layers )
  {
    std::sort( rules.begin() + l.first_rule - 1, rules.begin() + l.last_rule,
               []( const rule& a, const rule& b ) { return a.variable < b.variable; } );
  }
  return ncf_repr( std::move( rules ), normalized.default_value() );
}

namespace
{

void require_normalized( const ncf_repr& ncf )
{
  if ( !is_default_normalized( ncf ) )
  {
    throw normalization_required_error( "operation requires a default-normalized representation" );
  }
}

} // namespace

bool symmetric_pair( const ncf_repr& normalized, uint32_t i, uint32_t j )
{
  require_normalized( normalized );
  const auto n = normalized.num_vars();
  if ( i < 1 || i > n || j < 1 || j > n || i == j )
  {
    throw std::invalid_argument( "need two distinct variables in 1..n" );
  }

  const auto decomposition = layers( normalized );
  auto locate = [&]( uint32_t var ) {
    for ( uint32_t k = 0; k < n; ++k )
    {
      if ( normalized.rules()[k].variable == var )
      {
        for ( uint32_t li = 0; li < decomposition.layer_count(); ++li )
        {
          const auto& l = decomposition.layers[li];
          if ( k + 1 >= l.first_rule && k + 1 <= l.last_rule )
          {
            return std::pair<uint32_t, bool>{ li, normalized.rules()[k].canalyzing_value };
          }
        }
      }
    }
    throw std::logic_error( "variable not found" ); // unreachable on valid input
  };

  const auto [layer_i, value_i] = locate( i );
  const auto [layer_j, value_j] = locate( j );
  return layer_i == layer_j && value_i == value_j;
}

symmetry_partition symmetry_partition_ncf( const ncf_repr& normalized )
{
  require_normalized( normalized );

  std::vector<std::vector<uint32_t>> groups;
  for ( const auto& l : layers( normalized ).layers )
  {
    std::array<std::vector<uint32_t>, 2> by_value;
    for ( uint32_t k = l.first_rule; k <= l.last_rule; ++k )
    {
      const auto& r = normalized.rules()[k - 1];
      by_value[r.canalyzing_value ? 1 : 0].push_back( r.variable );
    }
    for ( auto& g : by_value )
    {
      if ( !g.empty() )
      {
        groups.push_back( std::move( g ) );
      }
    }
  }
  return symmetry_partition( normalized.num_vars(), std::move( groups ) );
}

bool is_strongly_asymmetric_ncf( const ncf_repr& normalized )
{
  return symmetry_partition_ncf( normalized ).level() == normalized.num_vars();
}

std::string count_strongly_asymmetric( uint32_t n )
{
  if ( n < 2 )
  {
    throw std::domain_error( "count is defined for n >= 2" );
  }
  mpz_class count;
  mpz_fac_ui( count.get_mpz_t(), n );
  mpz_mul_2exp( count.get_mpz_t(), count.get_mpz_t(), n - 1 );
  return count.get_str();
}

std::string count_strongly_asymmetric_exact( uint32_t n )
{
  if ( n < 2 )
  {
    throw std::domain_error( "count is defined for n >= 2" );
  }
  mpz_class factorial;
  mpz_fac_ui( factorial.get_mpz_t(), n );

  mpz_class total = 0;
  for ( uint32_t t = 1; 2 * t <= n; ++t )
  {
    mpz_class term;
    mpz_bin_uiui( term.get_mpz_t(), n - t - 1, t - 1 );
    term *= factorial;
    mpz_mul_2exp( term.get_mpz_t(), term.get_mpz_t(), n + 1 - 2 * t );
    total += term;
  }
  return total.get_str();
}

ncf_repr make_fn_example( uint32_t n )
{
  if ( n < 2 )
  {
    throw std::domain_error( "family is defined for n >= 2" );
  }
  std::vector<rule> rules;
  rules.reserve( n );
  for ( uint32_t i = 1; i <= n; ++i )
  {
    rules.push_back( rule{ i, true, i % 2 == 1 } );
  }
  const bool default_value = !rules.back().canalyzed_value;
  return ncf_repr( std::move( rules ), default_value );
}

} // namespace ncfsym
