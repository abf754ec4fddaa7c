#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "vfap/parity_check.hpp"

namespace vfap {

struct AlistParseError : std::runtime_error {
    int line;
    AlistParseError(int line_no, const std::string& reason)
        : std::runtime_error("alist line " + std::to_string(line_no) + ": " + reason),
          line(line_no) {}
};

// alist layout: "n m", "max_col_degree max_row_degree", n column degrees,
// m row degrees, then n lines of 1-based check indices and m lines of
// 1-based variable indices. Zero padding is accepted on read, never written.
ParityCheckMatrix read_alist(std::istream& in);
ParityCheckMatrix read_alist(const std::string& text);
ParityCheckMatrix read_alist_file(const std::string& path);

void write_alist(const ParityCheckMatrix& h, std::ostream& out);
std::string write_alist(const ParityCheckMatrix& h);

}  // namespace vfap
