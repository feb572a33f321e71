// Conforming 2D triangulations with face topology and newest-vertex-bisection
// refinement. Interfaces between coefficient subdomains must be resolved by
// element boundaries, so each element carries a subdomain id.

#ifndef CRDG_MESH_HPP
#define CRDG_MESH_HPP

#include <array>
#include <functional>
#include <iosfwd>
#include <string>
#include <vector>

#include "crdg/geometry.hpp"

namespace crdg {

struct Element {
  std::array<int, 3> v{-1, -1, -1};  // vertex ids, CCW
  int subdomain = 0;
  // Local index of the refinement edge; edge i is the edge opposite vertex i.
  int ref_edge = 0;
  // Element id in the mesh this element was refined from, -1 for a root mesh.
  int parent = -1;
  std::array<int, 3> face{-1, -1, -1};  // global face ids, face i opposite vertex i
};

struct Face {
  std::array<int, 2> v{-1, -1};  // endpoints, ordered as traversed CCW by the left element
  int left = -1;                 // K^-; always the incident element with the smaller id
  int right = -1;                // K^+; -1 on boundary faces
  int left_edge = -1;            // local edge index of this face within `left`
  int right_edge = -1;
  Vec2 normal;   // unit, points from K^- to K^+ (outward on boundary faces)
  Vec2 tangent;  // unit, normal rotated by +90 degrees
  double length = 0.0;

  bool boundary() const { return right < 0; }
};

class Mesh {
 public:
  std::vector<Vec2> vertices;
  std::vector<Element> elements;
  std::vector<Face> faces;
  std::vector<int> interior_faces;  // E_I
  std::vector<int> boundary_faces;  // E_D (whole boundary is Dirichlet)
  std::vector<double> area;         // per element
  std::vector<double> diameter;     // per element, h_K

  int num_vertices() const { return static_cast<int>(vertices.size()); }
  int num_elements() const { return static_cast<int>(elements.size()); }
  int num_faces() const { return static_cast<int>(faces.size()); }

  Vec2 element_vertex(int k, int i) const { return vertices[elements[k].v[i]]; }
  Vec2 centroid(int k) const;
  double domain_area() const;
  double max_diameter() const;
  /// Smallest interior angle over all elements, in radians.
  double min_angle() const;
};

/// Builds a mesh from raw vertex and connectivity data. Triangles may arrive
/// in either orientation and are normalized to CCW. Throws std::runtime_error
/// on degenerate triangles, duplicate triangles, dangling vertices, edges
/// shared by more than two triangles, overlapping orientation, or hanging
/// vertices ("nonconforming input").
Mesh build_mesh(const std::vector<Vec2>& points,
                const std::vector<std::array<int, 3>>& triangles,
                const std::vector<int>& subdomain_ids);

/// Newest-vertex bisection of all `marked` elements, plus the closure needed
/// to keep the result conforming. Children inherit the parent subdomain id.
Mesh refine(const Mesh& mesh, const std::vector<int>& marked);

/// One full generation pass: every edge is bisected, so every element is
/// bisected twice and the element count grows by a factor of 4.
Mesh uniform_refine(const Mesh& mesh);

/// Structured mesh of the square (lo,hi)^2: n x n cells, each split along the
/// (i,j)-(i+1,j+1) diagonal. Subdomain ids are assigned per element from the
/// classifier evaluated at the element centroid.
Mesh make_structured_square(double lo, double hi, int n,
                            const std::function<int(Vec2)>& subdomain_of = {});

// --- element-local geometry helpers -----------------------------------------

/// Gradients of the three barycentric coordinate functions of element k.
std::array<Vec2, 3> barycentric_gradients(const Mesh& mesh, int k);

Bary barycentric_coords(const Mesh& mesh, int k, const Vec2& p);
Vec2 point_from_bary(const Mesh& mesh, int k, const Bary& b);

/// Physical point at parameter s in [0,1] along face f (from v[0] to v[1]).
Vec2 face_point(const Mesh& mesh, int f, double s);

// --- mesh text format --------------------------------------------------------
// Line oriented: "vertices N" followed by N lines "x y", then "triangles M"
// followed by M lines "i j k subdomain_id". 0-based indices, ASCII decimal.

Mesh read_mesh_text(std::istream& in);
Mesh read_mesh_text_file(const std::string& path);
void write_mesh_text(const Mesh& mesh, std::ostream& out);

}  // namespace crdg

#endif
