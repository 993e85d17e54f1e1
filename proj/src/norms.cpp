#include "decomp1d/norms.hpp"

#include <cmath>

namespace decomp1d {

std::string_view reference_name(Reference r) {
  switch (r) {
    case Reference::ClosedForm: return "closed_form";
    case Reference::FluxOracle: return "flux_oracle";
    case Reference::FineGrid: return "fine_grid";
  }
  return "unknown";
}

void ErrorReport::validate() const {
  if (std::isnan(l2_error) || std::isnan(h1_error) || l2_error < 0 || h1_error < 0) {
    throw Error("error report for " + problem + " holds an invalid norm");
  }
}

}  // namespace decomp1d
