#include "crdg/assembly.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "crdg/quadrature.hpp"

namespace crdg {

void CsrMatrix::multiply(const std::vector<double>& x, std::vector<double>& y) const {
  y.assign(n, 0.0);
  for (int i = 0; i < n; ++i) {
    double s = 0.0;
    for (int p = row_ptr[i]; p < row_ptr[i + 1]; ++p) s += val[p] * x[col[p]];
    y[i] = s;
  }
}

double CsrMatrix::entry(int i, int j) const {
  auto beg = col.begin() + row_ptr[i];
  auto end = col.begin() + row_ptr[i + 1];
  auto it = std::lower_bound(beg, end, j);
  if (it == end || *it != j) return 0.0;
  return val[it - col.begin()];
}

double CsrMatrix::max_abs() const {
  double m = 0.0;
  for (double v : val) m = std::max(m, std::abs(v));
  return m;
}

double CsrMatrix::symmetry_defect() const {
  double d = 0.0;
  for (int i = 0; i < n; ++i)
    for (int p = row_ptr[i]; p < row_ptr[i + 1]; ++p)
      d = std::max(d, std::abs(val[p] - entry(col[p], i)));
  return d;
}

CsrMatrix csr_from_triplets(int n, std::vector<Triplet>&& triplets) {
  std::sort(triplets.begin(), triplets.end(), [](const Triplet& a, const Triplet& b) {
    return a.row != b.row ? a.row < b.row : a.col < b.col;
  });
  CsrMatrix m;
  m.n = n;
  m.row_ptr.assign(n + 1, 0);
  for (std::size_t i = 0; i < triplets.size();) {
    std::size_t j = i;
    double s = 0.0;
    while (j < triplets.size() && triplets[j].row == triplets[i].row &&
           triplets[j].col == triplets[i].col)
      s += triplets[j++].value;
    m.col.push_back(triplets[i].col);
    m.val.push_back(s);
    ++m.row_ptr[triplets[i].row + 1];
    i = j;
  }
  for (int r = 0; r < n; ++r) m.row_ptr[r + 1] += m.row_ptr[r];
  return m;
}

namespace {

// Face mean of the Dirichlet data (zero for the homogeneous case).
std::vector<double> boundary_face_means(const Mesh& mesh, const ScalarFn& g,
                                        int seg_quad_degree) {
  std::vector<double> values(mesh.num_faces(), 0.0);
  if (!g) return values;
  const SegmentRule rule = segment_rule(seg_quad_degree);
  for (int f : mesh.boundary_faces) {
    double mean = 0.0;
    for (std::size_t q = 0; q < rule.points.size(); ++q)
      mean += rule.weights[q] * g(face_point(mesh, f, rule.points[q]));
    values[f] = mean;
  }
  return values;
}

}  // namespace

SparseSpdSystem assemble_cr(const Mesh& mesh, const CoefficientField& coeff,
                            const ScalarFn& f, int quad_degree,
                            const ScalarFn& dirichlet) {
  SparseSpdSystem sys;
  std::vector<int> dof_of_face(mesh.num_faces(), -1);
  for (int fi : mesh.interior_faces) {
    dof_of_face[fi] = static_cast<int>(sys.dof_to_face.size());
    sys.dof_to_face.push_back(fi);
  }
  const int n = static_cast<int>(sys.dof_to_face.size());
  sys.fixed_face_value =
      boundary_face_means(mesh, dirichlet, std::max(quad_degree, 10));
  sys.rhs.assign(n, 0.0);

  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(mesh.num_elements()) * 9);
  const TriangleRule rule = triangle_rule(quad_degree);

  std::array<double, 3> theta;
  std::array<Vec2, 3> grad;
  for (int k = 0; k < mesh.num_elements(); ++k) {
    const Element& e = mesh.elements[k];
    const double aK = coeff.element_alpha(k);
    cr_basis_eval(mesh, k, Bary{1.0 / 3, 1.0 / 3, 1.0 / 3}, theta, grad);

    double local[3][3];
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j)
        local[i][j] = aK * dot(grad[i], grad[j]) * mesh.area[k];

    double load[3] = {0.0, 0.0, 0.0};
    if (f) {
      const double scale = 2.0 * mesh.area[k];
      for (const TrianglePoint& p : rule.points) {
        const double fx = f(point_from_bary(mesh, k, p.bary));
        for (int i = 0; i < 3; ++i)
          load[i] += scale * p.weight * fx * (1.0 - 2.0 * p.bary[i]);
      }
    }

    for (int i = 0; i < 3; ++i) {
      const int di = dof_of_face[e.face[i]];
      if (di < 0) continue;
      sys.rhs[di] += load[i];
      for (int j = 0; j < 3; ++j) {
        const int dj = dof_of_face[e.face[j]];
        if (dj >= 0)
          trips.push_back({di, dj, local[i][j]});
        else
          sys.rhs[di] -= local[i][j] * sys.fixed_face_value[e.face[j]];
      }
    }
  }
  sys.matrix = csr_from_triplets(n, std::move(trips));
  return sys;
}

SparseSpdSystem assemble_dg(const Mesh& mesh, const CoefficientField& coeff,
                            const ScalarFn& f, int degree, double gamma,
                            int quad_degree, const ScalarFn& dirichlet) {
  if (!(gamma > 0.0)) throw std::invalid_argument("assemble_dg: gamma must be positive");
  const int nl = dg_local_dofs(degree);
  const int n = mesh.num_elements() * nl;

  SparseSpdSystem sys;
  sys.rhs.assign(n, 0.0);
  std::vector<Triplet> trips;
  trips.reserve(static_cast<std::size_t>(mesh.num_elements()) * nl * nl +
                static_cast<std::size_t>(mesh.num_faces()) * 4 * nl * nl);

  const TriangleRule vol_rule = triangle_rule(quad_degree);
  const SegmentRule face_rule = segment_rule(std::max(quad_degree, 2 * degree + 2));

  double values[6];
  Vec2 grads[6];

  for (int k = 0; k < mesh.num_elements(); ++k) {
    const double aK = coeff.element_alpha(k);
    const double scale = 2.0 * mesh.area[k];
    std::vector<double> local(nl * nl, 0.0), load(nl, 0.0);
    for (const TrianglePoint& p : vol_rule.points) {
      dg_basis_eval(mesh, k, degree, p.bary, values, grads);
      const double w = scale * p.weight;
      for (int i = 0; i < nl; ++i) {
        for (int j = 0; j < nl; ++j)
          local[i * nl + j] += w * aK * dot(grads[i], grads[j]);
        if (f) load[i] += w * f(point_from_bary(mesh, k, p.bary)) * values[i];
      }
    }
    for (int i = 0; i < nl; ++i) {
      sys.rhs[k * nl + i] += load[i];
      for (int j = 0; j < nl; ++j)
        trips.push_back({k * nl + i, k * nl + j, local[i * nl + j]});
    }
  }

  // Face terms. Rows/cols are the union of the dofs of the two incident
  // elements; traces from the opposite side are zero.
  std::vector<int> dofs(2 * nl);
  std::vector<double> jump_i(2 * nl);
  std::vector<double> wflux_i(2 * nl);
  for (int fi = 0; fi < mesh.num_faces(); ++fi) {
    const Face& face = mesh.faces[fi];
    const FaceCoefficients& fc = coeff.face(fi);
    const bool interior = !face.boundary();
    const int rows = interior ? 2 * nl : nl;
    const double penalty = gamma * fc.harmonic / face.length;

    for (int i = 0; i < nl; ++i) dofs[i] = face.left * nl + i;
    if (interior)
      for (int i = 0; i < nl; ++i) dofs[nl + i] = face.right * nl + i;

    std::vector<double> local(rows * rows, 0.0);
    std::vector<double> load(rows, 0.0);

    for (std::size_t q = 0; q < face_rule.points.size(); ++q) {
      const double s = face_rule.points[q];
      const Vec2 x = face_point(mesh, fi, s);
      const double w = face_rule.weights[q] * face.length;

      dg_basis_eval(mesh, face.left, degree, barycentric_coords(mesh, face.left, x),
                    values, grads);
      for (int i = 0; i < nl; ++i) {
        jump_i[i] = values[i];  // [phi] = phi^- for left-side basis
        wflux_i[i] = fc.w_minus * fc.minus * dot(grads[i], face.normal);
      }
      if (interior) {
        dg_basis_eval(mesh, face.right, degree,
                      barycentric_coords(mesh, face.right, x), values, grads);
        for (int i = 0; i < nl; ++i) {
          jump_i[nl + i] = -values[i];  // [phi] = -phi^+ for right-side basis
          wflux_i[nl + i] = fc.w_plus * fc.plus * dot(grads[i], face.normal);
        }
      }

      for (int i = 0; i < rows; ++i)
        for (int j = 0; j < rows; ++j)
          local[i * rows + j] += w * (penalty * jump_i[i] * jump_i[j] -
                                      wflux_i[j] * jump_i[i] -
                                      wflux_i[i] * jump_i[j]);

      if (!interior && dirichlet) {
        const double g = dirichlet(x);
        for (int i = 0; i < rows; ++i)
          load[i] += w * g * (penalty * jump_i[i] - wflux_i[i]);
      }
    }

    for (int i = 0; i < rows; ++i) {
      sys.rhs[dofs[i]] += load[i];
      for (int j = 0; j < rows; ++j)
        trips.push_back({dofs[i], dofs[j], local[i * rows + j]});
    }
  }

  sys.matrix = csr_from_triplets(n, std::move(trips));
  return sys;
}

DiscreteField cr_field_from_solution(const Mesh& mesh, const SparseSpdSystem& system,
                                     const std::vector<double>& x) {
  std::vector<double> coef = system.fixed_face_value;
  if (coef.empty()) coef.assign(mesh.num_faces(), 0.0);
  for (std::size_t d = 0; d < system.dof_to_face.size(); ++d)
    coef[system.dof_to_face[d]] = x[d];
  return DiscreteField::make_cr(mesh, std::move(coef));
}

DiscreteField dg_field_from_solution(const Mesh& mesh, int degree,
                                     std::vector<double> x) {
  return DiscreteField::make_dg(mesh, degree, std::move(x));
}

}  // namespace crdg
