#include "crdg/solver.hpp"

#include <cmath>

namespace crdg {

PcgResult solve_spd(const SparseSpdSystem& system, double tol, int max_iter) {
  const CsrMatrix& A = system.matrix;
  const std::vector<double>& b = system.rhs;
  const int n = A.n;
  if (max_iter <= 0) max_iter = std::min(std::max(1000, 4 * n), 400000);

  PcgResult result;
  result.x.assign(n, 0.0);

  double bnorm = 0.0;
  for (double v : b) bnorm += v * v;
  bnorm = std::sqrt(bnorm);
  if (bnorm == 0.0) return result;  // zero load, zero solution

  std::vector<double> diag(n);
  for (int i = 0; i < n; ++i) {
    diag[i] = A.entry(i, i);
    if (!(diag[i] > 0.0)) throw SolverError("matrix not SPD: nonpositive diagonal");
  }

  std::vector<double> r = b, z(n), p(n), q(n);
  for (int i = 0; i < n; ++i) z[i] = r[i] / diag[i];
  p = z;
  double rz = 0.0;
  for (int i = 0; i < n; ++i) rz += r[i] * z[i];

  double rnorm = bnorm;
  for (int it = 1; it <= max_iter; ++it) {
    A.multiply(p, q);
    double pq = 0.0;
    for (int i = 0; i < n; ++i) pq += p[i] * q[i];
    if (!(pq > 0.0)) throw SolverError("matrix not SPD: nonpositive curvature");

    const double alpha = rz / pq;
    rnorm = 0.0;
    for (int i = 0; i < n; ++i) {
      result.x[i] += alpha * p[i];
      r[i] -= alpha * q[i];
      rnorm += r[i] * r[i];
    }
    rnorm = std::sqrt(rnorm);
    result.iterations = it;
    result.relative_residual = rnorm / bnorm;
    if (result.relative_residual <= tol) return result;

    double rz_new = 0.0;
    for (int i = 0; i < n; ++i) {
      z[i] = r[i] / diag[i];
      rz_new += r[i] * z[i];
    }
    const double beta = rz_new / rz;
    rz = rz_new;
    for (int i = 0; i < n; ++i) p[i] = z[i] + beta * p[i];
  }
  throw SolverError("no convergence within " + std::to_string(max_iter) +
                    " iterations (last relative residual " +
                    std::to_string(rnorm / bnorm) + ")");
}

}  // namespace crdg
