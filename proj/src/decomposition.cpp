#include "decomp1d/decomposition.hpp"

namespace decomp1d {

std::string_view method_name(Method m) {
  switch (m) {
    case Method::Original: return "original";
    case Method::Improved: return "improved";
    case Method::DirectFEM: return "direct";
  }
  return "unknown";
}

Method parse_method(std::string_view name) {
  if (name == "original") return Method::Original;
  if (name == "improved") return Method::Improved;
  if (name == "direct") return Method::DirectFEM;
  throw InvalidArgument("unknown method '" + std::string(name) +
                        "' (valid: original, improved, direct)");
}

void MethodConfig::validate() const {
  if (M < 0) throw InvalidArgument("M must be nonnegative");
  if (N < 1) throw InvalidArgument("N must be at least 1");
  if (method != Method::DirectFEM && M < 1) {
    throw InvalidArgument("the decomposition methods need M >= 1");
  }
  if (quad_points < 2 || quad_points > 5) throw InvalidArgument("quadrature points must be in 2..5");
}

}  // namespace decomp1d
