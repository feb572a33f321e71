// Quadrature rules: Gauss-Legendre on the unit segment and collapsed
// (Duffy) product rules on the reference triangle, each exact up to a
// requested polynomial degree.

#ifndef CRDG_QUADRATURE_HPP
#define CRDG_QUADRATURE_HPP

#include <functional>
#include <vector>

#include "crdg/geometry.hpp"
#include "crdg/mesh.hpp"

namespace crdg {

struct SegmentRule {
  int degree = 0;               // degree of exactness
  std::vector<double> points;   // in [0,1]
  std::vector<double> weights;  // sum to 1
};

struct TrianglePoint {
  Bary bary;
  double weight;  // reference weights sum to 1/2
};

struct TriangleRule {
  int degree = 0;
  std::vector<TrianglePoint> points;
};

SegmentRule segment_rule(int degree);
TriangleRule triangle_rule(int degree);

/// Integral of f over element k of the mesh.
double integrate(const Mesh& mesh, int k, const TriangleRule& rule,
                 const std::function<double(const Vec2&, const Bary&)>& f);

/// Integral of f over face `f_id` parameterized by s in [0,1].
double integrate_face(const Mesh& mesh, int f_id, const SegmentRule& rule,
                      const std::function<double(const Vec2&, double)>& f);

}  // namespace crdg

#endif
