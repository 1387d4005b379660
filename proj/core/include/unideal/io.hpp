#pragma once

#include <iosfwd>
#include <string>

#include "unideal/certifier.hpp"
#include "unideal/circuit.hpp"
#include "unideal/graph.hpp"
#include "unideal/ideal.hpp"
#include "unideal/lowrank.hpp"
#include "unideal/matrix.hpp"
#include "unideal/reductions.hpp"

namespace unideal::io {

// Text formats. Blank lines and lines starting with '#' are ignored
// everywhere; malformed input throws ParseError with a line number.
//
// circuit:      "vars n", then nodes "in i" | "const a/b" | "add id..." |
//               "mul id..." | "lin c1..cn [+ c0]" (ids are 0-based node
//               positions), then "out id"
// ideal:        "var i : c0 c1 ... cd" per generator
// matrix:       one row per line
// low-rank:     circuit over r inputs, then r lines "form c1..cn [+ c0]" and
//               an optional "degree d" (default: the outer degree bound)
// graph:        "n m", then m lines "u v" (0-based)
// certificate:  one line "re im" per variable
// k-Lin-Eq:     "k n", k rows of A, then the k entries of b
// 1-in-3:       "vars clauses columns", then one line "a b c" per clause

Circuit read_circuit(std::istream& in, const Field& f = Field{});
void write_circuit(std::ostream& out, const Circuit& c);

UnivariateIdeal read_ideal(std::istream& in, const Field& f = Field{});
void write_ideal(std::ostream& out, const UnivariateIdeal& ideal);

Matrix read_matrix(std::istream& in, const Field& f = Field{});
void write_matrix(std::ostream& out, const Matrix& m);

LowRankInput read_lowrank(std::istream& in, const Field& f = Field{});
void write_lowrank(std::ostream& out, const LowRankInput& input);

Graph read_graph(std::istream& in);
void write_graph(std::ostream& out, const Graph& g);

Certificate read_certificate(std::istream& in);
void write_certificate(std::ostream& out, const Certificate& c);

KLinEqInstance read_klineq(std::istream& in);
void write_klineq(std::ostream& out, const KLinEqInstance& inst);

OneInThreeInstance read_one_in_three(std::istream& in);
void write_one_in_three(std::ostream& out, const OneInThreeInstance& inst);

/// Whole file contents; throws ParseError if it cannot be opened.
std::string read_file(const std::string& path);

}  // namespace unideal::io
