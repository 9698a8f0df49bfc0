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

#include "ncfsym/cnf.hpp"

#include <cctype>
#include <sstream>

namespace ncfsym
{

cnf_formula parse_dimacs( std::string_view text )
{
  cnf_formula g;
  bool have_header = false;
  uint64_t expected_clauses = 0;

  uint32_t line_no = 0;
  size_t start = 0;
  while ( start <= text.size() )
  {
    const auto nl = text.find( '\n', start );
    auto raw = text.substr( start, nl == std::string_view::npos ? text.size() - start : nl - start );
    start = nl == std::string_view::npos ? text.size() + 1 : nl + 1;
    ++line_no;

    while ( !raw.empty() && std::isspace( static_cast<unsigned char>( raw.back() ) ) )
    {
      raw.remove_suffix( 1 );
    }
    size_t first = 0;
    while ( first < raw.size() && std::isspace( static_cast<unsigned char>( raw[first] ) ) )
    {
      ++first;
    }
    raw = raw.substr( first );
    if ( raw.empty() || raw.front() == 'c' )
    {
      continue;
    }

    if ( !have_header )
    {
      std::istringstream in{ std::string( raw ) };
      std::string p, cnf;
      long long vars = -1, clauses = -1;
      std::string extra;
      if ( !( in >> p >> cnf >> vars >> clauses ) || p != "p" || cnf != "cnf" || vars < 0 || clauses < 0 ||
           ( in >> extra ) )
      {
        throw parse_error( "expected header 'p cnf <vars> <clauses>'", line_no );
      }
      g.num_vars = static_cast<uint32_t>( vars );
      expected_clauses = static_cast<uint64_t>( clauses );
      have_header = true;
      continue;
    }

    if ( g.clauses.size() == expected_clauses )
    {
      throw parse_error( "more clauses than the header declares", line_no );
    }

    std::istringstream in{ std::string( raw ) };
    std::vector<int32_t> clause;
    long long lit = 0;
    bool terminated = false;
    while ( in >> lit )
    {
      if ( terminated )
      {
        throw parse_error( "tokens after the clause terminator", line_no );
      }
      if ( lit == 0 )
      {
        terminated = true;
        continue;
      }
      const long long var = lit < 0 ? -lit : lit;
      if ( var > g.num_vars )
      {
        throw parse_error( "literal " + std::to_string( lit ) + " outside 1.." + std::to_string( g.num_vars ),
                           line_no );
      }
      clause.push_back( static_cast<int32_t>( lit ) );
    }
    if ( !in.eof() )
    {
      throw parse_error( "invalid literal", line_no );
    }
    if ( !terminated )
    {
      throw parse_error( "missing clause terminator", line_no );
    }
    g.clauses.push_back( std::move( clause ) );
  }

  if ( !have_header )
  {
    throw parse_error( "missing 'p cnf' header", line_no );
  }
  if ( g.clauses.size() != expected_clauses )
  {
    throw parse_error( "file has " + std::to_string( g.clauses.size() ) + " clauses, header declares " +
                           std::to_string( expected_clauses ),
                       line_no );
  }
  return g;
}

std::string render_dimacs( const cnf_formula& g )
{
  std::string out = "p cnf " + std::to_string( g.num_vars ) + " " + std::to_string( g.clauses.size() ) + "\n";
  for ( const auto& clause : g.clauses )
  {
    for ( const auto lit : clause )
    {
      out += std::to_string( lit ) + " ";
    }
    out += "0\n";
  }
  return out;
}

bool evaluate_cnf( const cnf_formula& g, uint64_t assignment )
{
  if ( g.num_vars > 63 )
  {
    throw capacity_error( "assignment indices cover at most 63 variables" );
  }
  if ( assignment >= uint64_t{ 1 } << g.num_vars )
  {
    throw std::out_of_range( "assignment index out of range" );
  }
  for ( const auto& clause : g.clauses )
  {
    bool satisfied = false;
    for ( const auto lit : clause )
    {
      const uint32_t var = static_cast<uint32_t>( lit < 0 ? -lit : lit );
      const bool value = ( assignment >> ( var - 1 ) ) & 1;
      if ( value == ( lit > 0 ) )
      {
        satisfied = true;
        break;
      }
    }
    if ( !satisfied )
    {
      return false;
    }
  }
  return true;
}

bool is_satisfiable_bf( const cnf_formula& g, uint32_t cap )
{
  if ( g.num_vars > cap )
  {
    throw capacity_error( "exhaustive satisfiability test is capped at " + std::to_string( cap ) + " variables" );
  }
  const uint64_t count = uint64_t{ 1 } << g.num_vars;
  for ( uint64_t a = 0; a < count; ++a )
  {
    if ( evaluate_cnf( g, a ) )
    {
      return true;
    }
  }
  return false;
}

truth_table to_truth_table( const cnf_formula& g )
{
  if ( g.num_vars == 0 )
  {
    throw std::invalid_argument( "formula has no variables" );
  }
  truth_table tt( g.num_vars );
  for ( uint64_t a = 0; a < tt.num_bits(); ++a )
  {
    tt.set_bit( a, evaluate_cnf( g, a ) );
  }
  return tt;
}

reduction_instance::reduction_instance( cnf_formula base, uint32_t rho )
    : base_( std::move( base ) ), rho_( rho )
{
  if ( rho_ < 1 )
  {
    throw std::domain_error( "rho must be at least 1" );
  }

  result_ = base_;
  result_.num_vars = base_.num_vars + 2 * rho_ + 2;
  for ( uint32_t i = 1; i <= rho_ + 1; ++i )
  {
    const auto y = static_cast<int32_t>( base_.num_vars + i );
    const auto z = static_cast<int32_t>( base_.num_vars + rho_ + 1 + i );
    result_.clauses.push_back( { y, -z } );
  }
}

reduction_instance reduce_to_symmetry_gap( const cnf_formula& g, uint32_t rho )
{
  return reduction_instance( g, rho );
}

std::string claims_verdict::machine_line() const
{
  return std::string( "sat=" ) + ( g_satisfiable ? "1" : "0" ) + " level=" + std::to_string( level_of_f ) +
         " rho=" + std::to_string( rho ) + " ok=" + ( claims_hold ? "1" : "0" );
}

claims_verdict verify_claims( const reduction_instance& inst, uint32_t cap )
{
  if ( inst.result().num_vars > cap )
  {
    throw capacity_error( "instance has " + std::to_string( inst.result().num_vars ) +
                          " variables, cap is " + std::to_string( cap ) );
  }

  claims_verdict verdict;
  verdict.rho = inst.rho();
  verdict.g_satisfiable = is_satisfiable_bf( inst.base(), cap );

  const auto f_table = to_truth_table( inst.result() );
  verdict.level_of_f = symmetry_partition_bf( f_table, cap ).level();
  verdict.claims_hold = verdict.g_satisfiable ? verdict.level_of_f >= inst.rho() + 1 : verdict.level_of_f == 1;
  return verdict;
}

} // namespace ncfsym
