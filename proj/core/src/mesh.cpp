#include "crdg/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <istream>
#include <limits>
#include <map>
#include <ostream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace crdg {

namespace {

using EdgeKey = std::pair<int, int>;

EdgeKey edge_key(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

double signed_area(const Vec2& a, const Vec2& b, const Vec2& c) {
  return 0.5 * cross(b - a, c - a);
}

// Local edge i of element k is the edge opposite vertex i, traversed CCW.
std::array<int, 2> local_edge(const Element& e, int i) {
  return {e.v[(i + 1) % 3], e.v[(i + 2) % 3]};
}

int longest_edge_index(const Mesh& m, const Element& e) {
  int best = 0;
  double best_len = -1.0;
  for (int i = 0; i < 3; ++i) {
    auto ev = local_edge(e, i);
    double len = norm(m.vertices[ev[1]] - m.vertices[ev[0]]);
    if (len > best_len) {
      best_len = len;
      best = i;
    }
  }
  return best;
}

// Builds face topology, measures, and derived lists. `assign_ref_edges`
// resets every refinement edge to the longest edge (initial assignment);
// refinement keeps the edges produced by bisection instead.
void finalize(Mesh& m, bool assign_ref_edges) {
  const int ne = m.num_elements();
  m.faces.clear();
  m.interior_faces.clear();
  m.boundary_faces.clear();
  m.area.assign(ne, 0.0);
  m.diameter.assign(ne, 0.0);

  std::map<EdgeKey, int> face_of_edge;
  for (int k = 0; k < ne; ++k) {
    Element& e = m.elements[k];
    if (assign_ref_edges) e.ref_edge = longest_edge_index(m, e);

    const Vec2 p0 = m.vertices[e.v[0]];
    const Vec2 p1 = m.vertices[e.v[1]];
    const Vec2 p2 = m.vertices[e.v[2]];
    m.area[k] = signed_area(p0, p1, p2);
    m.diameter[k] =
        std::max({norm(p1 - p0), norm(p2 - p1), norm(p0 - p2)});

    for (int i = 0; i < 3; ++i) {
      auto ev = local_edge(e, i);
      auto key = edge_key(ev[0], ev[1]);
      auto it = face_of_edge.find(key);
      if (it == face_of_edge.end()) {
        Face f;
        f.v = ev;  // CCW traversal of the first (smaller-id) incident element
        f.left = k;
        f.left_edge = i;
        Vec2 d = m.vertices[ev[1]] - m.vertices[ev[0]];
        f.length = norm(d);
        Vec2 t = d / f.length;
        f.tangent = t;
        f.normal = perp_cw(t);  // outward for the CCW left element
        int id = static_cast<int>(m.faces.size());
        m.faces.push_back(f);
        face_of_edge.emplace(key, id);
        e.face[i] = id;
      } else {
        Face& f = m.faces[it->second];
        if (f.right >= 0)
          throw std::runtime_error(
              "nonconforming input: edge shared by more than two triangles");
        if (f.v[0] != ev[1] || f.v[1] != ev[0])
          throw std::runtime_error(
              "inconsistent orientation: neighboring triangles traverse a "
              "shared edge in the same direction");
        f.right = k;
        f.right_edge = i;
        e.face[i] = it->second;
      }
    }
  }

  for (int f = 0; f < m.num_faces(); ++f) {
    if (m.faces[f].boundary())
      m.boundary_faces.push_back(f);
    else
      m.interior_faces.push_back(f);
  }
}

void validate_input(const Mesh& m) {
  const int nv = m.num_vertices();
  double xmin = std::numeric_limits<double>::max(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const Vec2& p : m.vertices) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double bbox_area = std::max((xmax - xmin) * (ymax - ymin), 1e-300);

  std::vector<char> referenced(nv, 0);
  std::set<std::array<int, 3>> seen;
  for (const Element& e : m.elements) {
    for (int i = 0; i < 3; ++i) {
      if (e.v[i] < 0 || e.v[i] >= nv)
        throw std::runtime_error("triangle vertex index out of range");
      referenced[e.v[i]] = 1;
    }
    std::array<int, 3> sorted = e.v;
    std::sort(sorted.begin(), sorted.end());
    if (sorted[0] == sorted[1] || sorted[1] == sorted[2])
      throw std::runtime_error("degenerate triangle: repeated vertex");
    if (!seen.insert(sorted).second)
      throw std::runtime_error("duplicate triangle");
  }
  for (int i = 0; i < nv; ++i)
    if (!referenced[i]) throw std::runtime_error("dangling vertex");

  for (const Element& e : m.elements) {
    double a = signed_area(m.vertices[e.v[0]], m.vertices[e.v[1]],
                           m.vertices[e.v[2]]);
    if (std::abs(a) < 1e-14 * bbox_area)
      throw std::runtime_error("degenerate triangle: zero area");
  }
}

// A vertex in the interior of a combinatorially-boundary edge is the classic
// T-junction; the purely combinatorial edge counting cannot see it.
void check_hanging_vertices(const Mesh& m) {
  double xmin = std::numeric_limits<double>::max(), xmax = -xmin;
  double ymin = xmin, ymax = -xmin;
  for (const Vec2& p : m.vertices) {
    xmin = std::min(xmin, p.x);
    xmax = std::max(xmax, p.x);
    ymin = std::min(ymin, p.y);
    ymax = std::max(ymax, p.y);
  }
  const double diag = std::hypot(xmax - xmin, ymax - ymin);
  const double tol = 1e-12 * diag;

  for (int fi : m.boundary_faces) {
    const Face& f = m.faces[fi];
    const Vec2 a = m.vertices[f.v[0]];
    const Vec2 b = m.vertices[f.v[1]];
    const Vec2 d = b - a;
    const double len2 = dot(d, d);
    for (int vi = 0; vi < m.num_vertices(); ++vi) {
      if (vi == f.v[0] || vi == f.v[1]) continue;
      const Vec2 p = m.vertices[vi];
      double t = dot(p - a, d) / len2;
      if (t < 1e-9 || t > 1.0 - 1e-9) continue;
      Vec2 proj = a + t * d;
      if (norm(p - proj) <= tol)
        throw std::runtime_error(
            "nonconforming input: vertex hangs on the interior of an edge");
    }
  }
}

// Bisects every element whose refinement edge appears in `split`, recursing
// into children whose own refinement edge is split too. `split` must already
// be closed: an element with any split edge has its refinement edge split.
Mesh bisect_with_edges(const Mesh& mesh, const std::set<EdgeKey>& split) {
  Mesh out;
  out.vertices = mesh.vertices;

  std::map<EdgeKey, int> midpoint;
  for (const EdgeKey& key : split) {
    Vec2 mid = 0.5 * (mesh.vertices[key.first] + mesh.vertices[key.second]);
    midpoint.emplace(key, static_cast<int>(out.vertices.size()));
    out.vertices.push_back(mid);
  }

  auto emit = [&out](int v0, int v1, int v2, int subdomain, int parent) {
    Element c;
    c.v = {v0, v1, v2};
    c.subdomain = subdomain;
    c.ref_edge = 0;  // new vertex is stored first; refinement edge is opposite
    c.parent = parent;
    out.elements.push_back(c);
  };

  for (int k = 0; k < mesh.num_elements(); ++k) {
    const Element& e = mesh.elements[k];
    auto rv = local_edge(e, e.ref_edge);
    auto rkey = edge_key(rv[0], rv[1]);
    if (!split.count(rkey)) {
      Element copy = e;
      copy.parent = k;
      copy.face = {-1, -1, -1};
      out.elements.push_back(copy);
      continue;
    }
    const int p = e.v[e.ref_edge];
    const int a = e.v[(e.ref_edge + 1) % 3];
    const int b = e.v[(e.ref_edge + 2) % 3];
    const int m = midpoint.at(rkey);

    // child (m, p, a), refinement edge (p, a)
    if (auto it = midpoint.find(edge_key(p, a)); it != midpoint.end()) {
      emit(it->second, m, p, e.subdomain, k);
      emit(it->second, a, m, e.subdomain, k);
    } else {
      emit(m, p, a, e.subdomain, k);
    }
    // child (m, b, p), refinement edge (b, p)
    if (auto it = midpoint.find(edge_key(b, p)); it != midpoint.end()) {
      emit(it->second, m, b, e.subdomain, k);
      emit(it->second, p, m, e.subdomain, k);
    } else {
      emit(m, b, p, e.subdomain, k);
    }
  }

  finalize(out, /*assign_ref_edges=*/false);
  return out;
}

}  // namespace

Vec2 Mesh::centroid(int k) const {
  const Element& e = elements[k];
  return (vertices[e.v[0]] + vertices[e.v[1]] + vertices[e.v[2]]) / 3.0;
}

double Mesh::domain_area() const {
  double s = 0.0;
  for (double a : area) s += a;
  return s;
}

double Mesh::max_diameter() const {
  double h = 0.0;
  for (double d : diameter) h = std::max(h, d);
  return h;
}

double Mesh::min_angle() const {
  double best = std::numeric_limits<double>::max();
  for (const Element& e : elements) {
    for (int i = 0; i < 3; ++i) {
      Vec2 u = vertices[e.v[(i + 1) % 3]] - vertices[e.v[i]];
      Vec2 w = vertices[e.v[(i + 2) % 3]] - vertices[e.v[i]];
      double ang = std::acos(
          std::clamp(dot(u, w) / (norm(u) * norm(w)), -1.0, 1.0));
      best = std::min(best, ang);
    }
  }
  return best;
}

Mesh build_mesh(const std::vector<Vec2>& points,
                const std::vector<std::array<int, 3>>& triangles,
                const std::vector<int>& subdomain_ids) {
  if (triangles.size() != subdomain_ids.size())
    throw std::runtime_error("one subdomain id per triangle required");
  Mesh m;
  m.vertices = points;
  m.elements.reserve(triangles.size());
  for (std::size_t t = 0; t < triangles.size(); ++t) {
    Element e;
    e.v = triangles[t];
    e.subdomain = subdomain_ids[t];
    e.parent = -1;
    m.elements.push_back(e);
  }
  validate_input(m);
  // Normalize to CCW; input may be "orientable", i.e. mixed.
  for (Element& e : m.elements) {
    if (signed_area(m.vertices[e.v[0]], m.vertices[e.v[1]],
                    m.vertices[e.v[2]]) < 0.0)
      std::swap(e.v[1], e.v[2]);
  }
  finalize(m, /*assign_ref_edges=*/true);
  check_hanging_vertices(m);
  return m;
}

Mesh refine(const Mesh& mesh, const std::vector<int>& marked) {
  std::set<EdgeKey> split;
  for (int k : marked) {
    if (k < 0 || k >= mesh.num_elements())
      throw std::runtime_error("marked element index out of range");
    const Element& e = mesh.elements[k];
    auto rv = local_edge(e, e.ref_edge);
    split.insert(edge_key(rv[0], rv[1]));
  }
  // Closure: an element with any split edge must have its refinement edge
  // split as well, so bisection terminates in a conforming mesh.
  bool changed = !split.empty();
  while (changed) {
    changed = false;
    for (const Element& e : mesh.elements) {
      auto rv = local_edge(e, e.ref_edge);
      auto rkey = edge_key(rv[0], rv[1]);
      if (split.count(rkey)) continue;
      for (int i = 0; i < 3; ++i) {
        auto ev = local_edge(e, i);
        if (split.count(edge_key(ev[0], ev[1]))) {
          split.insert(rkey);
          changed = true;
          break;
        }
      }
    }
  }
  return bisect_with_edges(mesh, split);
}

Mesh uniform_refine(const Mesh& mesh) {
  std::set<EdgeKey> split;
  for (const Face& f : mesh.faces) split.insert(edge_key(f.v[0], f.v[1]));
  return bisect_with_edges(mesh, split);
}

Mesh make_structured_square(double lo, double hi, int n,
                            const std::function<int(Vec2)>& subdomain_of) {
  if (n < 1) throw std::runtime_error("structured mesh needs n >= 1");
  Mesh m;
  const double h = (hi - lo) / n;
  auto vid = [n](int i, int j) { return j * (n + 1) + i; };
  for (int j = 0; j <= n; ++j)
    for (int i = 0; i <= n; ++i)
      m.vertices.push_back({lo + i * h, lo + j * h});

  for (int j = 0; j < n; ++j) {
    for (int i = 0; i < n; ++i) {
      for (auto tri : {std::array<int, 3>{vid(i, j), vid(i + 1, j), vid(i + 1, j + 1)},
                       std::array<int, 3>{vid(i, j), vid(i + 1, j + 1), vid(i, j + 1)}}) {
        Element e;
        e.v = tri;
        e.parent = -1;
        Vec2 c = (m.vertices[tri[0]] + m.vertices[tri[1]] + m.vertices[tri[2]]) / 3.0;
        e.subdomain = subdomain_of ? subdomain_of(c) : 0;
        m.elements.push_back(e);
      }
    }
  }
  finalize(m, /*assign_ref_edges=*/true);
  return m;
}

std::array<Vec2, 3> barycentric_gradients(const Mesh& mesh, int k) {
  const Element& e = mesh.elements[k];
  const double inv2A = 1.0 / (2.0 * mesh.area[k]);
  std::array<Vec2, 3> g;
  for (int i = 0; i < 3; ++i) {
    Vec2 d = mesh.vertices[e.v[(i + 2) % 3]] - mesh.vertices[e.v[(i + 1) % 3]];
    g[i] = perp_ccw(d) * inv2A;
  }
  return g;
}

Bary barycentric_coords(const Mesh& mesh, int k, const Vec2& p) {
  const Vec2 p0 = mesh.element_vertex(k, 0);
  const Vec2 p1 = mesh.element_vertex(k, 1);
  const Vec2 p2 = mesh.element_vertex(k, 2);
  const double denom = cross(p1 - p0, p2 - p0);
  Bary b;
  b.l1 = cross(p - p0, p2 - p0) / denom;
  b.l2 = cross(p1 - p0, p - p0) / denom;
  b.l0 = 1.0 - b.l1 - b.l2;
  return b;
}

Vec2 point_from_bary(const Mesh& mesh, int k, const Bary& b) {
  return b.l0 * mesh.element_vertex(k, 0) + b.l1 * mesh.element_vertex(k, 1) +
         b.l2 * mesh.element_vertex(k, 2);
}

Vec2 face_point(const Mesh& mesh, int f, double s) {
  const Face& face = mesh.faces[f];
  return mesh.vertices[face.v[0]] +
         s * (mesh.vertices[face.v[1]] - mesh.vertices[face.v[0]]);
}

Mesh read_mesh_text(std::istream& in) {
  std::string kw;
  int nv = 0;
  if (!(in >> kw >> nv) || kw != "vertices" || nv < 3)
    throw std::runtime_error("mesh format: expected 'vertices N'");
  std::vector<Vec2> pts(nv);
  for (int i = 0; i < nv; ++i)
    if (!(in >> pts[i].x >> pts[i].y))
      throw std::runtime_error("mesh format: bad vertex line");
  int nt = 0;
  if (!(in >> kw >> nt) || kw != "triangles" || nt < 1)
    throw std::runtime_error("mesh format: expected 'triangles M'");
  std::vector<std::array<int, 3>> tris(nt);
  std::vector<int> subs(nt);
  for (int t = 0; t < nt; ++t)
    if (!(in >> tris[t][0] >> tris[t][1] >> tris[t][2] >> subs[t]))
      throw std::runtime_error("mesh format: bad triangle line");
  return build_mesh(pts, tris, subs);
}

Mesh read_mesh_text_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open mesh file: " + path);
  try {
    return read_mesh_text(in);
  } catch (const std::exception& ex) {
    throw std::runtime_error(path + ": " + ex.what());
  }
}

void write_mesh_text(const Mesh& mesh, std::ostream& out) {
  char buf[128];
  out << "vertices " << mesh.num_vertices() << "\n";
  for (const Vec2& p : mesh.vertices) {
    std::snprintf(buf, sizeof(buf), "%.17g %.17g\n", p.x, p.y);
    out << buf;
  }
  out << "triangles " << mesh.num_elements() << "\n";
  for (const Element& e : mesh.elements)
    out << e.v[0] << " " << e.v[1] << " " << e.v[2] << " " << e.subdomain
        << "\n";
}

}  // namespace crdg
