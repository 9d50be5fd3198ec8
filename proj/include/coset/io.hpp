#pragma once

#include "coset/characters.hpp"
#include "coset/conformal.hpp"
#include "coset/fusion.hpp"

#include <string>
#include <vector>

namespace coset {

// Line-oriented physics data files. '#' starts a comment, sections are
// bracketed, keys are fail-closed: anything unrecognized is a parse_error.

// sections [ambient] (algebra=, levels=, comma lists), [sub.N] (algebra=),
// [projection] (row = entries), optional [branching]
// (labels = ... | ..., mult = n, inside = true|false)
embedding_spec read_embedding_file(const std::string& path);

// section [product] (k1=, l1=, k2=, l2=), section [rows] with lines
// target=<l> ; coset=(p/q, mult), (p/q, mult), ...
branching_claim read_branching_claim(const std::string& path);

// one row per line: [vacuum] A: (label,h=p/q,d=float)[*mult] + ... | C: ...
std::vector<table_row> read_coupling_table(const std::string& path);

std::string format_float(double x); // fixed, 6 decimals

struct output_table {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;
};

// aligned columns; bold header when color is on
std::string render_table(const output_table& t, bool color);
// deterministic RFC-4180 style, \n line ends
std::string render_csv(const output_table& t);

// COSETKIT_COLOR=1 turns table color on, anything else leaves it off
bool color_enabled();

} // namespace coset
