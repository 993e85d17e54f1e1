#pragma once

#include <string>

#include "decomp1d/norms.hpp"

namespace decomp1d {

/// Full double precision (17 significant digits), plain e-notation.
std::string format_csv(double value);

/// d.dddd(-ee) style, e.g. 1.2839(-02).
std::string format_parenthesized(double value);

inline constexpr const char* kErrorCsvHeader = "problem,N,M,method,l2_error,h1_error,reference";

std::string to_csv_row(const ErrorReport& report);

}  // namespace decomp1d
