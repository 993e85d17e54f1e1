#include "decomp1d/format.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>

namespace decomp1d {

std::string format_csv(double value) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", value);
  return buf;
}

std::string format_parenthesized(double value) {
  if (!std::isfinite(value)) return format_csv(value);
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.4e", value);
  // "1.2839e-02" -> "1.2839(-02)"
  std::string s = buf;
  const auto pos = s.find('e');
  if (pos == std::string::npos) return s;
  const int exponent = std::atoi(s.c_str() + pos + 1);
  char exp_buf[16];
  std::snprintf(exp_buf, sizeof exp_buf, "(%c%02d)", exponent < 0 ? '-' : '+', std::abs(exponent));
  return s.substr(0, pos) + exp_buf;
}

std::string to_csv_row(const ErrorReport& r) {
  return r.problem + "," + std::to_string(r.N) + "," + std::to_string(r.M) + "," +
         std::string(method_name(r.method)) + "," + format_csv(r.l2_error) + "," +
         format_csv(r.h1_error) + "," + std::string(reference_name(r.reference));
}

}  // namespace decomp1d
