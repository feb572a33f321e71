// Piecewise-constant diffusion coefficient bound to a mesh, plus the face
// level coefficient algebra: harmonic/arithmetic averages, the weights
// w^+/- = alpha^-+/(alpha^- + alpha^+), and jump / weighted-average operators.

#ifndef CRDG_COEFFICIENT_HPP
#define CRDG_COEFFICIENT_HPP

#include <map>
#include <utility>
#include <vector>

#include "crdg/mesh.hpp"

namespace crdg {

/// 2 a b / (a + b). Symmetric, bounded by 2 min(a,b). Throws on nonpositive input.
double harmonic_average(double a_minus, double a_plus);

/// (w^-, w^+) with w^- = a^+/(a^- + a^+), w^+ = a^-/(a^- + a^+); sums to 1.
std::pair<double, double> face_weights(double a_minus, double a_plus);

/// [v] = v^- - v^+. Boundary faces use trace_plus = 0, so [v] is the trace.
inline double face_jump(double trace_minus, double trace_plus) {
  return trace_minus - trace_plus;
}

enum class AverageMode {
  flux,      // {v}_w = w^- v^- + w^+ v^+  (multiplies flux traces)
  conjugate  // {v}^w = w^+ v^- + w^- v^+
};

double weighted_average(double trace_minus, double trace_plus,
                        std::pair<double, double> weights, AverageMode mode);

struct FaceCoefficients {
  double minus = 1.0;       // alpha_F^- (trace from K^-)
  double plus = 1.0;        // alpha_F^+
  double arithmetic = 1.0;  // alpha_{F,A}
  double harmonic = 1.0;    // alpha_{F,H}
  double w_minus = 1.0;     // omega_F^-
  double w_plus = 0.0;      // omega_F^+
};

/// Per-subdomain coefficient bound to a mesh. Boundary faces carry the
/// single-sided value for both traces and w^- = 1. Immutable once built.
class CoefficientField {
 public:
  CoefficientField(const Mesh& mesh, const std::map<int, double>& alpha_by_subdomain);

  double element_alpha(int k) const { return elem_alpha_[k]; }
  const FaceCoefficients& face(int f) const { return face_[f]; }
  const std::map<int, double>& alpha_by_subdomain() const { return alpha_; }

 private:
  std::map<int, double> alpha_;
  std::vector<double> elem_alpha_;
  std::vector<FaceCoefficients> face_;
};

}  // namespace crdg

#endif
