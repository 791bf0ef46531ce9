#pragma once

#include <iosfwd>
#include <string>

#include "sbound/stiefel.hpp"

namespace sbound {

// Text format: a header line "n k" followed by n lines of k whitespace
// separated decimals. Output uses 17 significant digits so that a write/read
// cycle reproduces every double exactly.

DenseMatrix read_matrix(std::istream& in);
DenseMatrix read_matrix_file(const std::string& path);

void write_matrix(std::ostream& out, const DenseMatrix& m);
std::string matrix_to_string(const DenseMatrix& m);

/// A double printed with 17 significant digits, trailing zeros trimmed.
std::string format_double(double value);

}  // namespace sbound
