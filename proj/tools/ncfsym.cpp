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
  \file ncfsym.cpp
  \brief Command-line front end

  Exit codes: 0 success, 1 negative verdict (NOT-NCF, count mismatch,
  violated claims), 2 usage or parse error, 3 capacity exceeded.
*/

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ncfsym/cnf.hpp"
#include "ncfsym/ncf.hpp"
#include "ncfsym/oracle.hpp"
#include "ncfsym/sym_table.hpp"
#include "ncfsym/truth_table.hpp"

namespace
{

std::string slurp( const std::string& path )
{
  if ( path == "-" )
  {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in( path, std::ios::binary );
  if ( !in )
  {
    throw std::runtime_error( "cannot open '" + path + "'" );
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

std::string describe_groups( const ncfsym::symmetry_partition& partition )
{
  std::string out;
  for ( const auto& group : partition.groups() )
  {
    out += "{";
    for ( size_t k = 0; k < group.size(); ++k )
    {
      out += ( k ? "," : "" ) + ( "x" + std::to_string( group[k] ) );
    }
    out += "} ";
  }
  if ( !out.empty() )
  {
    out.pop_back();
  }
  return out;
}

int run_normalize( const std::string& path, bool canonical )
{
  const auto ncf = ncfsym::parse_ncf( slurp( path ) );
  std::cout << ncfsym::render_ncf( canonical ? ncfsym::canonicalize( ncf ) : ncfsym::normalize( ncf ) );
  return 0;
}

int run_analyze( const std::string& path )
{
  const auto ncf = ncfsym::normalize( ncfsym::parse_ncf( slurp( path ) ) );
  const auto decomposition = ncfsym::layers( ncf );
  const auto partition = ncfsym::symmetry_partition_ncf( ncf );
  const auto level = partition.level();
  const bool strong = level == ncf.num_vars();

  std::cout << "layers (q=" << decomposition.layer_count() << "):\n";
  for ( uint32_t li = 0; li < decomposition.layer_count(); ++li )
  {
    const auto& l = decomposition.layers[li];
    std::cout << "  layer " << li + 1 << ":";
    for ( uint32_t k = l.first_rule; k <= l.last_rule; ++k )
    {
      const auto& r = ncf.rules()[k - 1];
      std::cout << " x" << r.variable << "[" << r.canalyzing_value << "]";
    }
    std::cout << "  canalyzed=" << l.canalyzed_value << "\n";
  }
  std::cout << "symmetry groups: " << describe_groups( partition ) << "\n";
  std::cout << "symmetry level: " << level << "\n";
  std::cout << "strongly asymmetric: " << ( strong ? "yes" : "no" ) << "\n";
  std::cout << "truth table: " << ncfsym::format_truth_table( ncfsym::to_truth_table( ncf ) ) << "\n";
  std::cout << "n=" << ncf.num_vars() << " q=" << decomposition.layer_count() << " r1=" << decomposition.r1
            << " r2=" << decomposition.r2 << " level=" << level << " strong=" << ( strong ? 1 : 0 ) << "\n";
  return 0;
}

int run_eval( const std::string& path, const std::string& bits, int64_t index_flag )
{
  const auto ncf = ncfsym::parse_ncf( slurp( path ) );
  uint64_t index = 0;
  std::string shown;

  if ( index_flag >= 0 )
  {
    if ( !bits.empty() )
    {
      throw std::invalid_argument( "give either an assignment string or --index, not both" );
    }
    index = static_cast<uint64_t>( index_flag );
    shown = "index " + std::to_string( index );
  }
  else
  {
    if ( bits.empty() )
    {
      throw std::invalid_argument( "need an assignment string or --index" );
    }
    if ( bits.size() != ncf.num_vars() )
    {
      throw std::invalid_argument( "assignment must have exactly " + std::to_string( ncf.num_vars() ) +
                                   " characters (x1 first)" );
    }
    for ( size_t k = 0; k < bits.size(); ++k )
    {
      if ( bits[k] != '0' && bits[k] != '1' )
      {
        throw std::invalid_argument( "assignment characters must be 0 or 1" );
      }
      index |= uint64_t{ bits[k] == '1' } << k;
    }
    shown = bits;
  }

  const bool value = ncfsym::evaluate_ncf( ncf, index );
  std::cout << "f(" << shown << ") = " << value << "\n";
  std::cout << "value=" << value << "\n";
  return 0;
}

int run_to_table( const std::string& path )
{
  const auto ncf = ncfsym::parse_ncf( slurp( path ) );
  std::cout << ncfsym::format_truth_table( ncfsym::to_truth_table( ncf ) ) << "\n";
  return 0;
}

int run_recognize( const std::string& path )
{
  const auto st = ncfsym::parse_sym_table( slurp( path ) );

  // the file format names group sizes only: group i covers the next m_i variables
  std::vector<std::vector<uint32_t>> groups;
  uint32_t next = 1;
  for ( const auto m : st.group_sizes() )
  {
    std::vector<uint32_t> group( m );
    for ( uint32_t k = 0; k < m; ++k )
    {
      group[k] = next++;
    }
    groups.push_back( std::move( group ) );
  }
  const ncfsym::symmetry_partition partition( next - 1, std::move( groups ) );

  const auto result = ncfsym::recognize_ncf( st, partition );
  if ( std::holds_alternative<ncfsym::not_ncf>( result ) )
  {
    std::cout << "NOT-NCF " << std::get<ncfsym::not_ncf>( result ).reason << "\n";
    return 1;
  }
  std::cout << ncfsym::render_ncf( std::get<ncfsym::ncf_repr>( result ) );
  return 0;
}

int run_enumerate( uint32_t n, bool check, uint32_t jobs, uint32_t cap )
{
  const auto report = ncfsym::enumerate_ncfs( n, jobs, cap );
  std::cout << report.report_text();
  std::cout << report.machine_line() << "\n";

  if ( check )
  {
    const auto expected = ncfsym::count_strongly_asymmetric( n );
    if ( std::to_string( report.strongly_asymmetric_count ) != expected )
    {
      std::cerr << "strongly asymmetric count " << report.strongly_asymmetric_count
                << " does not match the closed form " << expected << "\n";
      return 1;
    }
  }
  return 0;
}

int run_hardness_gen( const std::string& path, uint32_t rho )
{
  const auto g = ncfsym::parse_dimacs( slurp( path ) );
  std::cout << ncfsym::render_dimacs( ncfsym::reduce_to_symmetry_gap( g, rho ).result() );
  return 0;
}

int run_hardness_verify( const std::string& path, uint32_t rho, uint32_t cap )
{
  const auto g = ncfsym::parse_dimacs( slurp( path ) );
  const auto inst = ncfsym::reduce_to_symmetry_gap( g, rho );
  const auto verdict = ncfsym::verify_claims( inst, cap );

  std::cout << "base formula: " << g.num_vars << " variables, " << g.clauses.size() << " clauses, "
            << ( verdict.g_satisfiable ? "satisfiable" : "unsatisfiable" ) << "\n";
  std::cout << "instance: " << inst.result().num_vars << " variables, " << inst.result().clauses.size()
            << " clauses\n";
  std::cout << "symmetry level: " << verdict.level_of_f << "\n";
  std::cout << verdict.machine_line() << "\n";
  return verdict.claims_hold ? 0 : 1;
}

} // namespace

int main( int argc, char** argv )
{
  CLI::App app{ "nested canalyzing function analysis toolkit" };
  app.require_subcommand( 1 );
  int rc = 0;

  std::string normalize_path;
  bool canonical = false;
  auto* normalize = app.add_subcommand( "normalize", "print the default-normalized representation" );
  normalize->add_option( "input", normalize_path, "NCF file ('-' for stdin)" )->required();
  normalize->add_flag( "--canonical", canonical, "also sort rules inside each layer by variable index" );
  normalize->callback( [&]() { rc = run_normalize( normalize_path, canonical ); } );

  std::string analyze_path;
  auto* analyze = app.add_subcommand( "analyze", "layers, symmetry groups, level, strong asymmetry, truth table" );
  analyze->add_option( "input", analyze_path, "NCF file ('-' for stdin)" )->required();
  analyze->callback( [&]() { rc = run_analyze( analyze_path ); } );

  std::string eval_path, eval_bits;
  int64_t eval_index = -1;
  auto* eval = app.add_subcommand( "eval", "evaluate an NCF at one assignment" );
  eval->add_option( "input", eval_path, "NCF file ('-' for stdin)" )->required();
  eval->add_option( "assignment", eval_bits, "assignment as a 0/1 string, x1 first" );
  eval->add_option( "--index", eval_index, "assignment index instead of a 0/1 string" );
  eval->callback( [&]() { rc = run_eval( eval_path, eval_bits, eval_index ); } );

  std::string table_path;
  auto* to_table = app.add_subcommand( "to-table", "print the truth table line 'n=<k> tt=<hex>'" );
  to_table->add_option( "input", table_path, "NCF file ('-' for stdin)" )->required();
  to_table->callback( [&]() { rc = run_to_table( table_path ); } );

  std::string recognize_path;
  auto* recognize = app.add_subcommand( "recognize", "test whether a count table is an NCF" );
  recognize->add_option( "input", recognize_path, "count-table file ('-' for stdin)" )->required();
  recognize->callback( [&]() { rc = run_recognize( recognize_path ); } );

  uint32_t enum_n = 0, enum_jobs = 1, enum_cap = ncfsym::default_enumeration_cap;
  bool enum_check = false;
  auto* enumerate = app.add_subcommand( "enumerate", "enumerate all distinct NCFs on n variables" );
  enumerate->add_option( "n", enum_n, "variable count" )->required();
  enumerate->add_flag( "--check", enum_check, "compare the strongly asymmetric count to the closed form" );
  enumerate->add_option( "--jobs", enum_jobs, "worker threads" )->check( CLI::PositiveNumber );
  enumerate->add_option( "--max-n", enum_cap, "enumeration cap" );
  enumerate->callback( [&]() { rc = run_enumerate( enum_n, enum_check, enum_jobs, enum_cap ); } );

  auto* hardness = app.add_subcommand( "hardness", "satisfiability-to-symmetry-gap instances" );
  hardness->require_subcommand( 1 );

  std::string gen_path;
  uint32_t gen_rho = 1;
  auto* gen = hardness->add_subcommand( "gen", "write the gap instance for a DIMACS formula" );
  gen->add_option( "input", gen_path, "DIMACS file ('-' for stdin)" )->required();
  gen->add_option( "--rho", gen_rho, "gap parameter (>= 1)" )->required();
  gen->callback( [&]() { rc = run_hardness_gen( gen_path, gen_rho ); } );

  std::string verify_path;
  uint32_t verify_rho = 1, verify_cap = ncfsym::default_symmetry_cap;
  auto* verify = hardness->add_subcommand( "verify", "check the gap behavior of an instance" );
  verify->add_option( "input", verify_path, "DIMACS file ('-' for stdin)" )->required();
  verify->add_option( "--rho", verify_rho, "gap parameter (>= 1)" )->required();
  verify->add_option( "--max-n", verify_cap, "total variable cap" );
  verify->callback( [&]() { rc = run_hardness_verify( verify_path, verify_rho, verify_cap ); } );

  try
  {
    app.parse( argc, argv );
  }
  catch ( const CLI::CallForHelp& e )
  {
    return app.exit( e );
  }
  catch ( const CLI::ParseError& e )
  {
    app.exit( e );
    return 2;
  }
  catch ( const ncfsym::capacity_error& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  }
  catch ( const std::exception& e )
  {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
