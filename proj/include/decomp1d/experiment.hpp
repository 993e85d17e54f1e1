#pragma once

#include <map>
#include <utility>

#include "decomp1d/decomposition.hpp"
#include "decomp1d/norms.hpp"
#include "decomp1d/problem.hpp"

namespace decomp1d {

/// Element count of the fine-grid reference used when no closed form exists.
inline constexpr Index kFineGridElements = Index(1) << 15;

/// Quadrature points used when measuring errors.
inline constexpr int kErrorQuadPoints = 5;

/// Fine-grid reference solutions, keyed by (method, M), reused across a table.
class ReferenceCache {
 public:
  const NodalFunction<double>& get(const Problem<double>& problem, const MethodConfig& config);

 private:
  std::map<std::pair<Method, int>, NodalFunction<double>> cache_;
};

/// Runs one (method, N, M) configuration and measures its L2 and H1-seminorm errors.
///
/// Problems with a closed-form solution are measured against it. Otherwise the
/// reference is the same method and M solved on kFineGridElements elements, or
/// the attached quadrature reference when N is not coarser than that grid.
ErrorReport evaluate_errors(const Problem<double>& problem, const MethodConfig& config,
                            ReferenceCache* cache = nullptr);

}  // namespace decomp1d
