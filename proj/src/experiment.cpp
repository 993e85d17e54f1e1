#include "decomp1d/experiment.hpp"

namespace decomp1d {

const NodalFunction<double>& ReferenceCache::get(const Problem<double>& problem,
                                                 const MethodConfig& config) {
  const auto key = std::make_pair(config.method, config.method == Method::DirectFEM ? 0 : config.M);
  auto it = cache_.find(key);
  if (it == cache_.end()) {
    MethodConfig fine = config;
    fine.N = kFineGridElements;
    it = cache_.emplace(key, run_method(problem, fine).U_M).first;
  }
  return it->second;
}

ErrorReport evaluate_errors(const Problem<double>& problem, const MethodConfig& config,
                            ReferenceCache* cache) {
  const auto result = run_method(problem, config);
  const auto quad = gauss_legendre<double>(kErrorQuadPoints);

  ErrorReport report;
  report.problem = problem.name;
  report.method = config.method;
  report.N = config.N;
  report.M = config.M;

  const bool fine_grid = !problem.closed_form && kFineGridElements % config.N == 0 &&
                         config.N < kFineGridElements;
  if (fine_grid) {
    ReferenceCache local;
    const auto& ref = (cache ? *cache : local).get(problem, config);
    report.l2_error = l2_error(result.U_M, ref, quad);
    report.h1_error = h1_seminorm_error(result.U_M, ref);
    report.reference = Reference::FineGrid;
  } else {
    if (!problem.exact || !problem.exact_derivative) {
      throw InvalidArgument("problem '" + problem.name + "' has no reference solution");
    }
    report.l2_error = l2_error(result.U_M, *problem.exact, quad);
    report.h1_error = h1_seminorm_error(result.U_M, *problem.exact_derivative, quad);
    report.reference = problem.closed_form ? Reference::ClosedForm : Reference::FluxOracle;
  }
  report.validate();
  return report;
}

}  // namespace decomp1d
