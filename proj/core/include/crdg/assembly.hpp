// Assembly of the CR and interior-penalty DG linear systems into compressed
// sparse rows. Boundary conditions: CR eliminates boundary-face dofs (value 0
// or the face mean of the Dirichlet data); DG enforces them weakly through
// the single-sided penalty and flux terms.

#ifndef CRDG_ASSEMBLY_HPP
#define CRDG_ASSEMBLY_HPP

#include <functional>
#include <vector>

#include "crdg/coefficient.hpp"
#include "crdg/mesh.hpp"
#include "crdg/spaces.hpp"

namespace crdg {

struct Triplet {
  int row = 0;
  int col = 0;
  double value = 0.0;
};

struct CsrMatrix {
  int n = 0;
  std::vector<int> row_ptr;
  std::vector<int> col;
  std::vector<double> val;

  void multiply(const std::vector<double>& x, std::vector<double>& y) const;
  double entry(int i, int j) const;
  double max_abs() const;
  /// max over stored entries of |a_ij - a_ji|.
  double symmetry_defect() const;
};

/// Sums duplicate entries; rows end up sorted by column.
CsrMatrix csr_from_triplets(int n, std::vector<Triplet>&& triplets);

struct SparseSpdSystem {
  CsrMatrix matrix;
  std::vector<double> rhs;
  // CR only: free dof -> face id, and the eliminated value of every face
  // (nonzero on boundary faces with inhomogeneous data).
  std::vector<int> dof_to_face;
  std::vector<double> fixed_face_value;
};

using ScalarFn = std::function<double(const Vec2&)>;

SparseSpdSystem assemble_cr(const Mesh& mesh, const CoefficientField& coeff,
                            const ScalarFn& f, int quad_degree = 4,
                            const ScalarFn& dirichlet = {});

SparseSpdSystem assemble_dg(const Mesh& mesh, const CoefficientField& coeff,
                            const ScalarFn& f, int degree, double gamma,
                            int quad_degree = 6, const ScalarFn& dirichlet = {});

/// Expands the solved free dofs back to a full CR field (boundary faces take
/// the eliminated values).
DiscreteField cr_field_from_solution(const Mesh& mesh, const SparseSpdSystem& system,
                                     const std::vector<double>& x);

DiscreteField dg_field_from_solution(const Mesh& mesh, int degree,
                                     std::vector<double> x);

}  // namespace crdg

#endif
