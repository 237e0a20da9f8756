#pragma once

#include <iosfwd>
#include <string>

#include "divis/code.hpp"

namespace divis {

// Text format for generator matrices:
//
//   # comment lines and blank lines are skipped
//   q n k
//   <k rows, each exactly n digit characters, values 0-9 a-f, all < q>
//
// The stored code is the row span (RREF canonical form), so writing re-emits
// the RREF rows, not necessarily the parsed ones.

LinearCode parse_code(std::istream& in);
LinearCode parse_code_string(const std::string& text);
LinearCode read_code_file(const std::string& path);

void write_code(std::ostream& out, const LinearCode& C);
std::string code_to_string(const LinearCode& C);

char digit_char(felem v);
felem char_digit(char c); // throws ParseError on a non-digit

} // namespace divis
