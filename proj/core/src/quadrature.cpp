#include "crdg/quadrature.hpp"

#include <cmath>
#include <stdexcept>

namespace crdg {

namespace {

// Gauss-Legendre nodes/weights on [-1,1] by Newton iteration on P_n.
void gauss_legendre(int n, std::vector<double>& x, std::vector<double>& w) {
  x.resize(n);
  w.resize(n);
  for (int i = 0; i < n; ++i) {
    double t = std::cos(M_PI * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      // Legendre recurrence up to degree n, with derivative.
      double p0 = 1.0, p1 = t;
      for (int j = 2; j <= n; ++j) {
        double p2 = ((2.0 * j - 1.0) * t * p1 - (j - 1.0) * p0) / j;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (t * p1 - p0) / (t * t - 1.0);
      double dt = p1 / dp;
      t -= dt;
      if (std::abs(dt) < 1e-16) break;
    }
    x[i] = t;
    w[i] = 2.0 / ((1.0 - t * t) * dp * dp);
  }
}

}  // namespace

SegmentRule segment_rule(int degree) {
  if (degree < 0) throw std::invalid_argument("segment rule degree must be >= 0");
  const int n = degree / 2 + 1;  // exactness 2n-1 >= degree
  std::vector<double> x, w;
  gauss_legendre(n, x, w);
  SegmentRule rule;
  rule.degree = 2 * n - 1;
  rule.points.resize(n);
  rule.weights.resize(n);
  for (int i = 0; i < n; ++i) {
    rule.points[i] = 0.5 * (x[i] + 1.0);
    rule.weights[i] = 0.5 * w[i];
  }
  return rule;
}

TriangleRule triangle_rule(int degree) {
  if (degree < 0) throw std::invalid_argument("triangle rule degree must be >= 0");
  // Collapsed square: x = s(1-t), y = t; the Jacobian (1-t) raises the
  // t-degree by one, hence the extra point in that direction.
  const int ns = degree / 2 + 1;
  const int nt = (degree + 1) / 2 + 1;
  std::vector<double> xs, ws, xt, wt;
  gauss_legendre(ns, xs, ws);
  gauss_legendre(nt, xt, wt);
  TriangleRule rule;
  rule.degree = std::min(2 * ns - 1, 2 * nt - 2);
  rule.points.reserve(ns * nt);
  for (int i = 0; i < ns; ++i) {
    const double s = 0.5 * (xs[i] + 1.0);
    for (int j = 0; j < nt; ++j) {
      const double t = 0.5 * (xt[j] + 1.0);
      const double x = s * (1.0 - t);
      const double y = t;
      TrianglePoint p;
      p.bary = {1.0 - x - y, x, y};
      p.weight = 0.25 * ws[i] * wt[j] * (1.0 - t);
      rule.points.push_back(p);
    }
  }
  return rule;
}

double integrate(const Mesh& mesh, int k, const TriangleRule& rule,
                 const std::function<double(const Vec2&, const Bary&)>& f) {
  const double scale = 2.0 * mesh.area[k];
  double sum = 0.0;
  for (const TrianglePoint& p : rule.points)
    sum += p.weight * f(point_from_bary(mesh, k, p.bary), p.bary);
  return scale * sum;
}

double integrate_face(const Mesh& mesh, int f_id, const SegmentRule& rule,
                      const std::function<double(const Vec2&, double)>& f) {
  const double len = mesh.faces[f_id].length;
  double sum = 0.0;
  for (std::size_t q = 0; q < rule.points.size(); ++q)
    sum += rule.weights[q] * f(face_point(mesh, f_id, rule.points[q]), rule.points[q]);
  return len * sum;
}

}  // namespace crdg
