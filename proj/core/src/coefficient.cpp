#include "crdg/coefficient.hpp"

#include <stdexcept>
#include <string>

namespace crdg {

double harmonic_average(double a_minus, double a_plus) {
  if (!(a_minus > 0.0) || !(a_plus > 0.0))
    throw std::invalid_argument("harmonic_average: inputs must be positive");
  return 2.0 * a_minus * a_plus / (a_minus + a_plus);
}

std::pair<double, double> face_weights(double a_minus, double a_plus) {
  if (!(a_minus > 0.0) || !(a_plus > 0.0))
    throw std::invalid_argument("face_weights: inputs must be positive");
  const double s = a_minus + a_plus;
  return {a_plus / s, a_minus / s};
}

double weighted_average(double trace_minus, double trace_plus,
                        std::pair<double, double> weights, AverageMode mode) {
  const auto [wm, wp] = weights;
  if (mode == AverageMode::flux) return wm * trace_minus + wp * trace_plus;
  return wp * trace_minus + wm * trace_plus;
}

CoefficientField::CoefficientField(const Mesh& mesh,
                                   const std::map<int, double>& alpha_by_subdomain)
    : alpha_(alpha_by_subdomain) {
  for (const auto& [id, a] : alpha_)
    if (!(a > 0.0))
      throw std::invalid_argument("coefficient for subdomain " +
                                  std::to_string(id) + " must be positive");

  elem_alpha_.resize(mesh.num_elements());
  for (int k = 0; k < mesh.num_elements(); ++k) {
    auto it = alpha_.find(mesh.elements[k].subdomain);
    if (it == alpha_.end())
      throw std::invalid_argument("no coefficient for subdomain " +
                                  std::to_string(mesh.elements[k].subdomain));
    elem_alpha_[k] = it->second;
  }

  face_.resize(mesh.num_faces());
  for (int f = 0; f < mesh.num_faces(); ++f) {
    const Face& face = mesh.faces[f];
    FaceCoefficients fc;
    fc.minus = elem_alpha_[face.left];
    if (face.boundary()) {
      fc.plus = fc.minus;
      fc.arithmetic = fc.minus;
      fc.harmonic = fc.minus;
      fc.w_minus = 1.0;
      fc.w_plus = 0.0;
    } else {
      fc.plus = elem_alpha_[face.right];
      fc.arithmetic = 0.5 * (fc.minus + fc.plus);
      fc.harmonic = harmonic_average(fc.minus, fc.plus);
      std::tie(fc.w_minus, fc.w_plus) = face_weights(fc.minus, fc.plus);
    }
    face_[f] = fc;
  }
}

}  // namespace crdg
