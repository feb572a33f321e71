// Conjugate gradients with diagonal preconditioning for the assembled SPD
// systems. Breakdown (nonpositive curvature) is reported as "matrix not SPD";
// for DG systems that usually means the penalty gamma is too small.

#ifndef CRDG_SOLVER_HPP
#define CRDG_SOLVER_HPP

#include <stdexcept>
#include <string>
#include <vector>

#include "crdg/assembly.hpp"

namespace crdg {

class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

struct PcgResult {
  std::vector<double> x;
  int iterations = 0;
  double relative_residual = 0.0;
};

/// Solves A x = b to ||Ax-b|| <= tol ||b||. max_iter <= 0 picks a size-based
/// default. Throws SolverError on breakdown or when the iteration cap is hit.
PcgResult solve_spd(const SparseSpdSystem& system, double tol = 1e-10,
                    int max_iter = 0);

}  // namespace crdg

#endif
