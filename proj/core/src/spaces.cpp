#include "crdg/spaces.hpp"

#include <cmath>
#include <stdexcept>

namespace crdg {

namespace {

// Dense solve by Gaussian elimination with partial pivoting; n <= 6 here.
void solve_dense(std::vector<double>& a, std::vector<double>& b, int n) {
  for (int col = 0; col < n; ++col) {
    int piv = col;
    for (int r = col + 1; r < n; ++r)
      if (std::abs(a[r * n + col]) > std::abs(a[piv * n + col])) piv = r;
    if (piv != col) {
      for (int c = 0; c < n; ++c) std::swap(a[col * n + c], a[piv * n + c]);
      std::swap(b[col], b[piv]);
    }
    const double d = a[col * n + col];
    if (d == 0.0) throw std::runtime_error("singular local mass matrix");
    for (int r = col + 1; r < n; ++r) {
      const double factor = a[r * n + col] / d;
      if (factor == 0.0) continue;
      for (int c = col; c < n; ++c) a[r * n + c] -= factor * a[col * n + c];
      b[r] -= factor * b[col];
    }
  }
  for (int r = n - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < n; ++c) s -= a[r * n + c] * b[c];
    b[r] = s / a[r * n + r];
  }
}

}  // namespace

int dg_local_dofs(int degree) {
  if (degree < 0 || degree > 2)
    throw std::invalid_argument("unsupported DG degree (supported: 0, 1, 2)");
  return (degree + 1) * (degree + 2) / 2;
}

DgSpace::DgSpace(const Mesh& m, int k) : mesh(&m), degree(k) {
  dg_local_dofs(k);  // validates
}

void cr_basis_eval(const Mesh& mesh, int k, const Bary& b,
                   std::array<double, 3>& values, std::array<Vec2, 3>& gradients) {
  const auto g = barycentric_gradients(mesh, k);
  for (int i = 0; i < 3; ++i) {
    values[i] = 1.0 - 2.0 * b[i];
    gradients[i] = -2.0 * g[i];
  }
}

void dg_basis_eval(const Mesh& mesh, int k, int degree, const Bary& b,
                   double* values, Vec2* gradients) {
  dg_local_dofs(degree);
  if (degree == 0) {
    values[0] = 1.0;
    gradients[0] = {0.0, 0.0};
    return;
  }
  const auto g = barycentric_gradients(mesh, k);
  if (degree == 1) {
    for (int i = 0; i < 3; ++i) {
      values[i] = b[i];
      gradients[i] = g[i];
    }
    return;
  }
  // degree 2: vertex functions then edge functions (edge i opposite vertex i)
  for (int i = 0; i < 3; ++i) {
    values[i] = b[i] * (2.0 * b[i] - 1.0);
    gradients[i] = (4.0 * b[i] - 1.0) * g[i];
  }
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, l = (i + 2) % 3;
    values[3 + i] = 4.0 * b[j] * b[l];
    gradients[3 + i] = 4.0 * (b[j] * g[l] + b[l] * g[j]);
  }
}

std::vector<double> dg_basis_laplacian(const Mesh& mesh, int k, int degree) {
  std::vector<double> lap(dg_local_dofs(degree), 0.0);
  if (degree < 2) return lap;
  const auto g = barycentric_gradients(mesh, k);
  for (int i = 0; i < 3; ++i) lap[i] = 4.0 * dot(g[i], g[i]);
  for (int i = 0; i < 3; ++i) {
    const int j = (i + 1) % 3, l = (i + 2) % 3;
    lap[3 + i] = 8.0 * dot(g[j], g[l]);
  }
  return lap;
}

DiscreteField DiscreteField::make_cr(const Mesh& mesh, std::vector<double> coef) {
  if (static_cast<int>(coef.size()) != mesh.num_faces())
    throw std::invalid_argument("CR coefficient vector must have one entry per face");
  DiscreteField f;
  f.kind_ = Kind::cr;
  f.degree_ = 1;
  f.mesh_ = &mesh;
  f.coef_ = std::move(coef);
  return f;
}

DiscreteField DiscreteField::make_dg(const Mesh& mesh, int degree,
                                     std::vector<double> coef) {
  if (static_cast<int>(coef.size()) != mesh.num_elements() * dg_local_dofs(degree))
    throw std::invalid_argument("DG coefficient vector has the wrong size");
  DiscreteField f;
  f.kind_ = Kind::dg;
  f.degree_ = degree;
  f.mesh_ = &mesh;
  f.coef_ = std::move(coef);
  return f;
}

double DiscreteField::value(int elem, const Bary& b) const {
  if (kind_ == Kind::cr) {
    const Element& e = mesh_->elements[elem];
    double s = 0.0;
    for (int i = 0; i < 3; ++i) s += coef_[e.face[i]] * (1.0 - 2.0 * b[i]);
    return s;
  }
  const int nl = dg_local_dofs(degree_);
  double values[6];
  Vec2 grads[6];
  dg_basis_eval(*mesh_, elem, degree_, b, values, grads);
  double s = 0.0;
  for (int i = 0; i < nl; ++i) s += coef_[elem * nl + i] * values[i];
  return s;
}

Vec2 DiscreteField::gradient(int elem, const Bary& b) const {
  if (kind_ == Kind::cr) {
    const Element& e = mesh_->elements[elem];
    const auto g = barycentric_gradients(*mesh_, elem);
    Vec2 s{0.0, 0.0};
    for (int i = 0; i < 3; ++i) s += coef_[e.face[i]] * (-2.0) * g[i];
    return s;
  }
  const int nl = dg_local_dofs(degree_);
  double values[6];
  Vec2 grads[6];
  dg_basis_eval(*mesh_, elem, degree_, b, values, grads);
  Vec2 s{0.0, 0.0};
  for (int i = 0; i < nl; ++i) s += coef_[elem * nl + i] * grads[i];
  return s;
}

double DiscreteField::laplacian(int elem) const {
  if (kind_ == Kind::cr || degree_ < 2) return 0.0;
  const auto lap = dg_basis_laplacian(*mesh_, elem, degree_);
  const int nl = dg_local_dofs(degree_);
  double s = 0.0;
  for (int i = 0; i < nl; ++i) s += coef_[elem * nl + i] * lap[i];
  return s;
}

double DiscreteField::value_at(int elem, const Vec2& p) const {
  return value(elem, barycentric_coords(*mesh_, elem, p));
}

Vec2 DiscreteField::gradient_at(int elem, const Vec2& p) const {
  return gradient(elem, barycentric_coords(*mesh_, elem, p));
}

DiscreteField cr_interpolate(const Mesh& mesh,
                             const std::function<double(const Vec2&, int)>& v,
                             int seg_quad_degree) {
  const SegmentRule rule = segment_rule(seg_quad_degree);
  std::vector<double> dofs(mesh.num_faces(), 0.0);
  for (int f = 0; f < mesh.num_faces(); ++f) {
    const int elem = mesh.faces[f].left;
    double mean = 0.0;
    for (std::size_t q = 0; q < rule.points.size(); ++q)
      mean += rule.weights[q] * v(face_point(mesh, f, rule.points[q]), elem);
    dofs[f] = mean;  // weights sum to 1, so this is the face mean
  }
  return DiscreteField::make_cr(mesh, std::move(dofs));
}

DiscreteField cr_interpolate(const Mesh& mesh,
                             const std::function<double(const Vec2&)>& v,
                             int seg_quad_degree) {
  return cr_interpolate(
      mesh, [&v](const Vec2& p, int) { return v(p); }, seg_quad_degree);
}

DiscreteField cell_average(const Mesh& mesh,
                           const std::function<double(const Vec2&, int)>& v,
                           int tri_quad_degree) {
  const TriangleRule rule = triangle_rule(tri_quad_degree);
  std::vector<double> avg(mesh.num_elements(), 0.0);
  for (int k = 0; k < mesh.num_elements(); ++k) {
    const double integral = integrate(
        mesh, k, rule, [&](const Vec2& p, const Bary&) { return v(p, k); });
    avg[k] = integral / mesh.area[k];
  }
  return DiscreteField::make_dg(mesh, 0, std::move(avg));
}

DiscreteField cell_average(const DiscreteField& v, int tri_quad_degree) {
  return cell_average(
      v.mesh(), [&v](const Vec2& p, int k) { return v.value_at(k, p); },
      tri_quad_degree);
}

DiscreteField l2_project_rhs(const Mesh& mesh,
                             const std::function<double(const Vec2&)>& f, int m,
                             int tri_quad_degree) {
  const int nl = dg_local_dofs(m);
  const TriangleRule rule = triangle_rule(std::max(tri_quad_degree, 2 * m));
  std::vector<double> coef(mesh.num_elements() * nl, 0.0);
  std::vector<double> mass(nl * nl), rhs(nl);
  double values[6];
  Vec2 grads[6];
  for (int k = 0; k < mesh.num_elements(); ++k) {
    std::fill(mass.begin(), mass.end(), 0.0);
    std::fill(rhs.begin(), rhs.end(), 0.0);
    const double scale = 2.0 * mesh.area[k];
    for (const TrianglePoint& p : rule.points) {
      dg_basis_eval(mesh, k, m, p.bary, values, grads);
      const double fx = f(point_from_bary(mesh, k, p.bary));
      for (int i = 0; i < nl; ++i) {
        rhs[i] += scale * p.weight * fx * values[i];
        for (int j = 0; j < nl; ++j)
          mass[i * nl + j] += scale * p.weight * values[i] * values[j];
      }
    }
    solve_dense(mass, rhs, nl);
    for (int i = 0; i < nl; ++i) coef[k * nl + i] = rhs[i];
  }
  return DiscreteField::make_dg(mesh, m, std::move(coef));
}

}  // namespace crdg
