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
  \file cnf.hpp
  \brief DIMACS CNF handling and the satisfiability-to-symmetry-gap reduction

  The reduction appends clauses (y_i or not z_i), i = 1..rho+1, over
  fresh variable blocks to a base formula g on n variables.  The
  resulting formula f has symmetry level 1 when g is unsatisfiable and
  level at least rho+1 when g is satisfiable, which makes generated
  instances a gap corpus for symmetry-level computations.

  Variable block layout is fixed: X = 1..n, Y = n+1..n+rho+1,
  Z = n+rho+2..n+2rho+2.
*/

#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "oracle.hpp"
#include "truth_table.hpp"

namespace ncfsym
{

/*! \brief Clause list; positive literal = variable, negative = complement. */
struct cnf_formula
{
  uint32_t num_vars = 0;
  std::vector<std::vector<int32_t>> clauses;

  bool operator==( const cnf_formula& other ) const = default;
};

/*! \brief Parses DIMACS CNF: `p cnf <vars> <clauses>` header, one
    0-terminated clause per line, `c` comments. */
cnf_formula parse_dimacs( std::string_view text );

/*! \brief Renders DIMACS CNF. */
std::string render_dimacs( const cnf_formula& g );

/*! \brief Conjunction over clauses of disjunction over literals, with the
    truth-table bit encoding of assignments. */
bool evaluate_cnf( const cnf_formula& g, uint64_t assignment );

/*! \brief Exhaustive satisfiability test. */
bool is_satisfiable_bf( const cnf_formula& g, uint32_t cap = default_symmetry_cap );

/*! \brief Explicit table of the formula. */
truth_table to_truth_table( const cnf_formula& g );

/*! \brief A base formula together with its gap-instance formula. */
class reduction_instance
{
public:
  /*! \throws std::domain_error for rho < 1 */
  reduction_instance( cnf_formula base, uint32_t rho );

  const cnf_formula& base() const { return base_; }
  uint32_t rho() const { return rho_; }
  const cnf_formula& result() const { return result_; }

  uint32_t y_begin() const { return base_.num_vars + 1; }
  uint32_t z_begin() const { return base_.num_vars + rho_ + 2; }

private:
  cnf_formula base_;
  uint32_t rho_;
  cnf_formula result_;
};

/*! \brief Builds the gap instance for (g, rho). */
reduction_instance reduce_to_symmetry_gap( const cnf_formula& g, uint32_t rho );

/*! \brief Outcome of checking the gap behavior of one instance. */
struct claims_verdict
{
  bool g_satisfiable = false;
  uint32_t level_of_f = 0;
  uint32_t rho = 0;
  bool claims_hold = false;

  /*! \brief Stable line `sat=<0|1> level=<k> rho=<r> ok=<0|1>`. */
  std::string machine_line() const;
};

/*! \brief Decides g's satisfiability exhaustively, computes f's symmetry level
    with the brute-force partition, and checks: unsat implies level 1,
    sat implies level >= rho+1.

  \throws capacity_error when f has more than `cap` variables
*/
claims_verdict verify_claims( const reduction_instance& inst, uint32_t cap = default_symmetry_cap );

} // namespace ncfsym
