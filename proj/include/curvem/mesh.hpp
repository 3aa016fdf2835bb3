#pragma once

#include <Eigen/Dense>
#include <utility>
#include <vector>

#include "curvem/curve.hpp"

namespace curvem {

// Oriented edge. The stored direction v0 -> v1 is the canonical one: every
// curve-bound edge satisfies gamma(t0) = position(v0), gamma(t1) = position(v1)
// with t0 < t1, so canonical traversal always runs with increasing parameter.
struct Edge {
  int v0 = -1;
  int v1 = -1;
  int curve = -1;  // index into Mesh::curves, -1 for a straight edge
  double t0 = 0.0;
  double t1 = 0.0;

  bool curved() const { return curve >= 0; }
};

// One step of an element's counterclockwise boundary walk.
struct ElementEdge {
  int edge = -1;
  bool reversed = false;  // true: the walk runs v1 -> v0 (decreasing parameter)
};

struct Element {
  std::vector<ElementEdge> edges;  // closed ccw cycle
  double kappa = 1.0;

  // Filled by Mesh::finalize(); zero until then.
  double area = 0.0;
  Eigen::Vector2d centroid{0.0, 0.0};
  double diameter = 0.0;
};

struct Mesh {
  std::vector<Eigen::Vector2d> vertices;
  std::vector<Curve> curves;
  std::vector<Edge> edges;
  std::vector<Element> elements;

  // Derived data, filled by finalize().
  std::vector<double> edge_length;      // |e|: arc length (chord if straight)
  std::vector<signed char> edge_marker; // 0 interior, 1 boundary
  bool finalized = false;

  // Validates structure, resolves chord curves, checks curve/vertex
  // consistency and ccw orientation, then caches edge lengths, markers and
  // element area/centroid/diameter. Throws MeshError on any defect.
  void finalize();

  bool boundary(int edge_id) const { return edge_marker[edge_id] != 0; }
  double mesh_size() const;  // max element diameter
};

// Canonical edge map: the bound curve restricted to [t0, t1], or the affine
// chord map on [0, 1] for straight edges. Traversal with increasing t always
// runs v0 -> v1.
class EdgeGeometry {
 public:
  EdgeGeometry(const Mesh& mesh, int edge_id);

  bool curved() const { return curve_ != nullptr; }
  double t0() const { return t0_; }
  double t1() const { return t1_; }
  CurveSample at(double t) const;

  const Eigen::Vector2d& a() const { return a_; }  // position(v0)
  const Eigen::Vector2d& b() const { return b_; }  // position(v1)
  double chord_length() const { return (b_ - a_).norm(); }
  double arc_length(int quad_pts = 32) const;

 private:
  const Curve* curve_ = nullptr;
  double t0_ = 0.0, t1_ = 1.0;
  Eigen::Vector2d a_, b_;
};

// First vertex of walk step `step` (ccw order).
int walk_start_vertex(const Mesh& mesh, const Element& el, int step);

// Walk vertices in ccw order: the polygon of chord-vertices.
std::vector<Eigen::Vector2d> chord_polygon(const Mesh& mesh, const Element& el);

// Chebyshev center and radius of a convex-constraint kernel of a ccw polygon:
// the largest inscribed ball of the set {x : x is left of every edge line}.
// Radius 0 when the kernel is empty or the polygon has fewer than 3 vertices.
std::pair<Eigen::Vector2d, double> polygon_kernel_chebyshev(
    const std::vector<Eigen::Vector2d>& poly);

// Geometry of a single element computed from the edge parametrizations by the
// divergence theorem (exact up to quadrature on curved edges).
double element_area(const Mesh& mesh, const Element& el);
Eigen::Vector2d element_centroid(const Mesh& mesh, const Element& el, double area);
double element_diameter(const Mesh& mesh, const Element& el);

struct ElementQuality {
  int element = -1;
  double edge_ratio = 0.0;    // min_e chord(e) / h_K
  double kernel_ratio = 0.0;  // chord-polygon kernel radius / h_K
  bool pass = false;
};

struct ValidationReport {
  double rho = 0.0;
  std::vector<ElementQuality> elements;
  double min_edge_ratio = 0.0;
  double min_kernel_ratio = 0.0;
  bool pass = false;
};

// Shape-regularity report: per element, min chord/diameter ratio and the
// star-shapedness proxy (chord-polygon kernel radius), both tested against
// rho * h_K. Structural defects throw MeshError listing the offenders.
ValidationReport mesh_validate(const Mesh& mesh, double rho);

// Unbind every curved edge so the mesh becomes its straight chord polygon.
// Vertices (which lie on the original curves) are untouched.
Mesh strip_curves(const Mesh& mesh);

}  // namespace curvem
