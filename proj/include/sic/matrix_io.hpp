#pragma once

#include "sic/codes.hpp"

#include <iosfwd>
#include <string>

namespace sic {

// Text format:
//
//   SIC v1 N t [w]
//   N lines of exactly t characters from {0,1}
//   optional trailing lines starting with '#'
//
// When w is given every column must have weight w.

/// Throws MalformedFile, naming the offending line (1-based) or column.
BinaryCode read_matrix(std::istream& in);
BinaryCode read_matrix(const std::string& path);

/// Writes the header with w when the code carries a declared weight.
void write_matrix(const BinaryCode& code, std::ostream& out);
void write_matrix(const BinaryCode& code, const std::string& path);

}  // namespace sic
