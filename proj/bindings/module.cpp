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

#include <pybind11/operators.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "ncfsym/cnf.hpp"
#include "ncfsym/ncf.hpp"
#include "ncfsym/oracle.hpp"
#include "ncfsym/sym_table.hpp"
#include "ncfsym/truth_table.hpp"

namespace py = pybind11;
using namespace ncfsym;

namespace
{

symmetry_partition partition_from_lists( uint32_t num_vars, std::vector<std::vector<uint32_t>> groups )
{
  return symmetry_partition( num_vars, std::move( groups ) );
}

py::object big_int( const std::string& decimal )
{
  return py::module_::import( "builtins" ).attr( "int" )( decimal );
}

} // namespace

PYBIND11_MODULE( _ncfsym, m )
{
  m.doc() = "nested canalyzing function symmetry toolkit";

  py::register_exception<parse_error>( m, "ParseError", PyExc_ValueError );
  py::register_exception<capacity_error>( m, "CapacityError", PyExc_ValueError );
  py::register_exception<not_symmetric_error>( m, "NotSymmetricError", PyExc_ValueError );
  py::register_exception<normalization_required_error>( m, "NormalizationRequiredError", PyExc_ValueError );

  py::class_<truth_table>( m, "TruthTable" )
      .def( py::init<uint32_t>(), py::arg( "num_vars" ) )
      .def_static( "from_hex", &truth_table::from_hex, py::arg( "num_vars" ), py::arg( "hex" ) )
      .def_property_readonly( "num_vars", &truth_table::num_vars )
      .def_property_readonly( "num_bits", &truth_table::num_bits )
      .def( "get_bit", &truth_table::get_bit, py::arg( "index" ) )
      .def( "set_bit", &truth_table::set_bit, py::arg( "index" ), py::arg( "value" ) )
      .def( "to_hex", &truth_table::to_hex )
      .def( py::self == py::self )
      .def( "__repr__", []( const truth_table& tt ) { return "TruthTable(" + format_truth_table( tt ) + ")"; } );

  m.def( "evaluate", &evaluate, py::arg( "table" ), py::arg( "index" ) );
  m.def( "restrict_var", &restrict_var, py::arg( "table" ), py::arg( "var" ), py::arg( "value" ) );
  m.def( "restriction_var_map", &restriction_var_map, py::arg( "num_vars" ), py::arg( "var" ) );
  m.def( "apply_permutation",
         []( const truth_table& tt, const std::vector<uint32_t>& mapping ) {
           return apply_permutation( tt, permutation( mapping ) );
         },
         py::arg( "table" ), py::arg( "mapping" ) );
  m.def( "is_constant", &is_constant, py::arg( "table" ) );
  m.def( "parse_truth_table", &parse_truth_table, py::arg( "line" ) );
  m.def( "format_truth_table", &format_truth_table, py::arg( "table" ) );

  py::class_<rule>( m, "Rule" )
      .def( py::init<uint32_t, bool, bool>(), py::arg( "variable" ), py::arg( "canalyzing_value" ),
            py::arg( "canalyzed_value" ) )
      .def_readonly( "variable", &rule::variable )
      .def_readonly( "canalyzing_value", &rule::canalyzing_value )
      .def_readonly( "canalyzed_value", &rule::canalyzed_value )
      .def( py::self == py::self )
      .def( "__repr__", []( const rule& r ) {
        return "Rule(x" + std::to_string( r.variable ) + ": " + std::to_string( r.canalyzing_value ) + " -> " +
               std::to_string( r.canalyzed_value ) + ")";
      } );

  py::class_<ncf_repr>( m, "NcfRepr" )
      .def( py::init<std::vector<rule>, bool>(), py::arg( "rules" ), py::arg( "default_value" ) )
      .def_property_readonly( "num_vars", &ncf_repr::num_vars )
      .def_property_readonly( "rules", &ncf_repr::rules )
      .def_property_readonly( "default_value", &ncf_repr::default_value )
      .def( py::self == py::self )
      .def( "__repr__", []( const ncf_repr& ncf ) { return render_ncf( ncf ); } );

  m.def( "parse_ncf", &parse_ncf, py::arg( "text" ) );
  m.def( "render_ncf", &render_ncf, py::arg( "ncf" ) );
  m.def( "evaluate_ncf", &evaluate_ncf, py::arg( "ncf" ), py::arg( "index" ) );
  m.def( "to_truth_table", py::overload_cast<const ncf_repr&>( &to_truth_table ), py::arg( "ncf" ) );
  m.def( "is_default_normalized", &is_default_normalized, py::arg( "ncf" ) );
  m.def( "normalize", &normalize, py::arg( "ncf" ) );
  m.def( "canonicalize", &ncfsym::canonicalize, py::arg( "ncf" ) );
  m.def( "layers",
         []( const ncf_repr& ncf ) {
           py::list out;
           for ( const auto& l : layers( ncf ).layers )
           {
             out.append( py::make_tuple( l.first_rule, l.last_rule, l.canalyzed_value,
                                         py::make_tuple( l.canalyzing_count[0], l.canalyzing_count[1] ) ) );
           }
           return out;
         },
         py::arg( "ncf" ), "Layers as (first_rule, last_rule, canalyzed_value, (zeros, ones)) tuples." );
  m.def( "permute_within_layer",
         []( const ncf_repr& ncf, uint32_t layer_index, const std::vector<uint32_t>& mapping ) {
           return permute_within_layer( ncf, layer_index, permutation( mapping ) );
         },
         py::arg( "ncf" ), py::arg( "layer_index" ), py::arg( "mapping" ) );
  m.def( "symmetric_pair", &symmetric_pair, py::arg( "ncf" ), py::arg( "i" ), py::arg( "j" ) );
  m.def( "symmetry_partition_ncf",
         []( const ncf_repr& ncf ) { return symmetry_partition_ncf( ncf ).groups(); }, py::arg( "ncf" ) );
  m.def( "symmetry_level_ncf",
         []( const ncf_repr& ncf ) { return symmetry_partition_ncf( ncf ).level(); }, py::arg( "ncf" ) );
  m.def( "is_strongly_asymmetric_ncf", &is_strongly_asymmetric_ncf, py::arg( "ncf" ) );
  m.def( "count_strongly_asymmetric",
         []( uint32_t n ) { return big_int( count_strongly_asymmetric( n ) ); }, py::arg( "n" ) );
  m.def( "count_strongly_asymmetric_exact",
         []( uint32_t n ) { return big_int( count_strongly_asymmetric_exact( n ) ); }, py::arg( "n" ) );
  m.def( "make_fn_example", &make_fn_example, py::arg( "n" ) );

  py::class_<sym_table>( m, "SymTable" )
      .def( py::init<std::vector<uint32_t>>(), py::arg( "group_sizes" ) )
      .def_property_readonly( "num_groups", &sym_table::num_groups )
      .def_property_readonly( "group_sizes", &sym_table::group_sizes )
      .def_property_readonly( "row_count", &sym_table::row_count )
      .def( "value_at", &sym_table::value_at, py::arg( "row" ) )
      .def( "set_value_at", &sym_table::set_value_at, py::arg( "row" ), py::arg( "value" ) )
      .def( "row_counts", &sym_table::row_counts, py::arg( "row" ) )
      .def( py::self == py::self );

  m.def( "sym_table_from_truth_table",
         []( const truth_table& tt, std::vector<std::vector<uint32_t>> groups ) {
           return sym_table_from_truth_table( tt, partition_from_lists( tt.num_vars(), std::move( groups ) ) );
         },
         py::arg( "table" ), py::arg( "groups" ) );
  m.def( "sym_table_to_truth_table",
         []( const sym_table& st, uint32_t num_vars, std::vector<std::vector<uint32_t>> groups ) {
           return sym_table_to_truth_table( st, partition_from_lists( num_vars, std::move( groups ) ) );
         },
         py::arg( "table" ), py::arg( "num_vars" ), py::arg( "groups" ) );
  m.def( "find_canalyzing",
         []( const sym_table& st ) -> py::object {
           const auto finding = find_canalyzing( st );
           if ( !finding )
           {
             return py::none();
           }
           return py::make_tuple( finding->group_index, finding->canalyzing_value, finding->canalyzed_value );
         },
         py::arg( "table" ) );
  m.def( "recognize_ncf",
         []( const sym_table& st, uint32_t num_vars, std::vector<std::vector<uint32_t>> groups ) -> py::object {
           const auto result = recognize_ncf( st, partition_from_lists( num_vars, std::move( groups ) ) );
           if ( std::holds_alternative<not_ncf>( result ) )
           {
             return py::make_tuple( py::none(), std::get<not_ncf>( result ).reason );
           }
           return py::make_tuple( std::get<ncf_repr>( result ), "" );
         },
         py::arg( "table" ), py::arg( "num_vars" ), py::arg( "groups" ),
         "Returns (NcfRepr, '') on success or (None, reason)." );
  m.def( "parse_sym_table", &parse_sym_table, py::arg( "text" ) );
  m.def( "render_sym_table", &render_sym_table, py::arg( "table" ) );

  m.def( "pairwise_symmetric_bf", &pairwise_symmetric_bf, py::arg( "table" ), py::arg( "i" ), py::arg( "j" ) );
  m.def( "symmetry_partition_bf",
         []( const truth_table& tt, uint32_t cap ) { return symmetry_partition_bf( tt, cap ).groups(); },
         py::arg( "table" ), py::arg( "cap" ) = default_symmetry_cap );
  m.def( "canalyzing_triples_bf",
         []( const truth_table& tt, uint32_t cap ) {
           py::list out;
           for ( const auto& t : canalyzing_triples_bf( tt, cap ) )
           {
             out.append( py::make_tuple( t.variable, t.canalyzing_value, t.canalyzed_value ) );
           }
           return out;
         },
         py::arg( "table" ), py::arg( "cap" ) = default_symmetry_cap );
  m.def( "is_ncf_bf", &is_ncf_bf, py::arg( "table" ), py::arg( "cap" ) = default_recognition_cap );
  m.def( "find_invariant_permutation",
         []( const truth_table& tt, uint32_t cap ) -> py::object {
           const auto perm = find_invariant_permutation( tt, cap );
           if ( !perm )
           {
             return py::none();
           }
           return py::cast( perm->mapping() );
         },
         py::arg( "table" ), py::arg( "cap" ) = default_permutation_cap );
  m.def( "is_strongly_asymmetric_bf", &is_strongly_asymmetric_bf, py::arg( "table" ),
         py::arg( "cap" ) = default_permutation_cap );

  py::class_<enumeration_report>( m, "EnumerationReport" )
      .def_readonly( "num_vars", &enumeration_report::num_vars )
      .def_readonly( "distinct_ncf_count", &enumeration_report::distinct_ncf_count )
      .def_readonly( "strongly_asymmetric_count", &enumeration_report::strongly_asymmetric_count )
      .def_readonly( "level_histogram", &enumeration_report::level_histogram )
      .def( "machine_line", &enumeration_report::machine_line )
      .def( "__repr__", []( const enumeration_report& r ) { return r.machine_line(); } );

  m.def( "enumerate_ncfs", &enumerate_ncfs, py::arg( "n" ), py::arg( "num_jobs" ) = 1,
         py::arg( "cap" ) = default_enumeration_cap );

  py::class_<cnf_formula>( m, "CnfFormula" )
      .def( py::init( []( uint32_t num_vars, std::vector<std::vector<int32_t>> clauses ) {
              return cnf_formula{ num_vars, std::move( clauses ) };
            } ),
            py::arg( "num_vars" ), py::arg( "clauses" ) )
      .def_readonly( "num_vars", &cnf_formula::num_vars )
      .def_readonly( "clauses", &cnf_formula::clauses )
      .def( py::self == py::self );

  m.def( "parse_dimacs", &parse_dimacs, py::arg( "text" ) );
  m.def( "render_dimacs", &render_dimacs, py::arg( "formula" ) );
  m.def( "evaluate_cnf", &evaluate_cnf, py::arg( "formula" ), py::arg( "assignment" ) );
  m.def( "is_satisfiable_bf", &is_satisfiable_bf, py::arg( "formula" ), py::arg( "cap" ) = default_symmetry_cap );
  m.def( "cnf_to_truth_table", py::overload_cast<const cnf_formula&>( &to_truth_table ), py::arg( "formula" ) );

  py::class_<reduction_instance>( m, "ReductionInstance" )
      .def( py::init<cnf_formula, uint32_t>(), py::arg( "base" ), py::arg( "rho" ) )
      .def_property_readonly( "base", &reduction_instance::base )
      .def_property_readonly( "rho", &reduction_instance::rho )
      .def_property_readonly( "result", &reduction_instance::result )
      .def_property_readonly( "y_begin", &reduction_instance::y_begin )
      .def_property_readonly( "z_begin", &reduction_instance::z_begin );

  m.def( "reduce_to_symmetry_gap", &reduce_to_symmetry_gap, py::arg( "formula" ), py::arg( "rho" ) );

  py::class_<claims_verdict>( m, "ClaimsVerdict" )
      .def_readonly( "g_satisfiable", &claims_verdict::g_satisfiable )
      .def_readonly( "level_of_f", &claims_verdict::level_of_f )
      .def_readonly( "rho", &claims_verdict::rho )
      .def_readonly( "claims_hold", &claims_verdict::claims_hold )
      .def( "machine_line", &claims_verdict::machine_line )
      .def( "__repr__", []( const claims_verdict& v ) { return v.machine_line(); } );

  m.def( "verify_claims", &verify_claims, py::arg( "instance" ), py::arg( "cap" ) = default_symmetry_cap );
}
