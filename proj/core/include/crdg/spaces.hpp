// Finite element spaces and discrete fields: the Crouzeix-Raviart
// nonconforming P1 space (one dof per face, boundary dofs constrained),
// discontinuous P_k spaces for k <= 2, the CR face-mean interpolation,
// elementwise averaging, and local L2 projection of load data.

#ifndef CRDG_SPACES_HPP
#define CRDG_SPACES_HPP

#include <array>
#include <functional>
#include <vector>

#include "crdg/mesh.hpp"
#include "crdg/quadrature.hpp"

namespace crdg {

struct CrSpace {
  const Mesh* mesh = nullptr;

  explicit CrSpace(const Mesh& m) : mesh(&m) {}
  int dim() const { return mesh->num_faces(); }
  bool constrained(int face) const { return mesh->faces[face].boundary(); }
  int num_constrained() const { return static_cast<int>(mesh->boundary_faces.size()); }
};

int dg_local_dofs(int degree);

struct DgSpace {
  const Mesh* mesh = nullptr;
  int degree = 1;

  DgSpace(const Mesh& m, int k);
  int local_dofs() const { return dg_local_dofs(degree); }
  int dim() const { return mesh->num_elements() * local_dofs(); }
  int dof(int elem, int i) const { return elem * local_dofs() + i; }
};

/// CR basis on element k: theta_i = 1 - 2 lambda_i (associated with the face
/// opposite vertex i). Physical gradients are constant on the element.
void cr_basis_eval(const Mesh& mesh, int k, const Bary& b,
                   std::array<double, 3>& values, std::array<Vec2, 3>& gradients);

/// Lagrange P_k basis (k in {0,1,2}) on element k; values/gradients must hold
/// dg_local_dofs(degree) entries. Throws on unsupported degree.
void dg_basis_eval(const Mesh& mesh, int k, int degree, const Bary& b,
                   double* values, Vec2* gradients);

/// Per-basis Laplacians; constant on each element (nonzero only for k = 2).
std::vector<double> dg_basis_laplacian(const Mesh& mesh, int k, int degree);

/// A coefficient vector over a CR or DG space with element-local evaluation.
class DiscreteField {
 public:
  enum class Kind { cr, dg };

  static DiscreteField make_cr(const Mesh& mesh, std::vector<double> coef);
  static DiscreteField make_dg(const Mesh& mesh, int degree, std::vector<double> coef);

  Kind kind() const { return kind_; }
  int degree() const { return degree_; }
  const Mesh& mesh() const { return *mesh_; }
  const std::vector<double>& coefficients() const { return coef_; }
  std::vector<double>& coefficients() { return coef_; }

  double value(int elem, const Bary& b) const;
  Vec2 gradient(int elem, const Bary& b) const;  // broken gradient
  /// Elementwise Laplacian (constant per element; zero for P1 and CR).
  double laplacian(int elem) const;

  double value_at(int elem, const Vec2& p) const;
  Vec2 gradient_at(int elem, const Vec2& p) const;

 private:
  Kind kind_ = Kind::cr;
  int degree_ = 1;
  const Mesh* mesh_ = nullptr;
  std::vector<double> coef_;
};

/// Face-mean interpolation onto the CR space: the dof on face F is the mean
/// of v over F. The callable receives the quadrature point and the id of the
/// element the trace is taken from (the face's left element).
DiscreteField cr_interpolate(const Mesh& mesh,
                             const std::function<double(const Vec2&, int)>& v,
                             int seg_quad_degree = 10);
DiscreteField cr_interpolate(const Mesh& mesh,
                             const std::function<double(const Vec2&)>& v,
                             int seg_quad_degree = 10);

/// Elementwise averages as a degree-0 DG field.
DiscreteField cell_average(const Mesh& mesh,
                           const std::function<double(const Vec2&, int)>& v,
                           int tri_quad_degree = 10);
DiscreteField cell_average(const DiscreteField& v, int tri_quad_degree = 4);

/// Element-local L2 projection of f onto P_m, m in {0,1,2}.
DiscreteField l2_project_rhs(const Mesh& mesh,
                             const std::function<double(const Vec2&)>& f, int m,
                             int tri_quad_degree);

}  // namespace crdg

#endif
