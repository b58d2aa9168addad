#pragma once

// Table file format: UTF-8 text, one "M[g,n] = <expression>" per line.
// '#' starts a comment running to the end of the line; blank lines are
// ignored. See expr.hpp for the expression grammar.

#include <string>
#include <string_view>
#include <vector>

#include "modserre/pipeline.hpp"

namespace modserre {

struct SourceRow {
    Slot slot;
    std::string expression;
    int line = 0;
    int column = 0; // column of the first expression character
};

struct SourceTable {
    std::vector<SourceRow> rows;
};

// Syntax of row headers, duplicate slots and stability. Throws ParseError.
SourceTable parse_source(std::string_view text);

// Parses and evaluates each row, checking homogeneity of weight n.
// Throws ParseError located at the offending row.
ModuliTable evaluate_source(const SourceTable& source);

inline ModuliTable parse_table(std::string_view text) { return evaluate_source(parse_source(text)); }

// One row per slot in slot order, each entry written in the Schur basis
// ("M[0,4] = q*s[4] - s[2,2]"). parse_table(render_table(t)) == t.
std::string render_table(const ModuliTable& table);

// Verbatim contents of data/moduli_serre.dat.
std::string_view embedded_dataset_text() noexcept;
ModuliTable embedded_dataset();

} // namespace modserre
