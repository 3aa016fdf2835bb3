#include "curvem/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <string>

#include "curvem/errors.hpp"
#include "curvem/gauss.hpp"

namespace curvem {

namespace {

constexpr int kGeometryQuadPts = 24;  // finalize-time quadrature on each edge
constexpr int kArcLengthQuadPts = 32;
constexpr int kDiameterSamplesPerCurvedEdge = 16;

int walk_end_vertex(const Mesh& mesh, const Element& el, int step) {
  const ElementEdge& s = el.edges[step];
  const Edge& e = mesh.edges[s.edge];
  return s.reversed ? e.v0 : e.v1;
}

// Structural defects detectable without evaluating any curve.
std::vector<std::string> structural_issues(const Mesh& mesh) {
  std::vector<std::string> issues;
  const int nv = static_cast<int>(mesh.vertices.size());
  const int nc = static_cast<int>(mesh.curves.size());
  const int ne = static_cast<int>(mesh.edges.size());

  auto complain = [&issues](const std::string& msg) { issues.push_back(msg); };

  for (int c = 0; c < nc; ++c) {
    const Curve& cv = mesh.curves[c];
    if (cv.kind != CurveKind::ChordOf) continue;
    if (cv.of < 0 || cv.of >= nc)
      complain("curve " + std::to_string(c) + ": chord of nonexistent curve " +
               std::to_string(cv.of));
    else if (cv.of == c)
      complain("curve " + std::to_string(c) + ": chord of itself");
    else if (mesh.curves[cv.of].kind == CurveKind::ChordOf)
      complain("curve " + std::to_string(c) + ": chord of a chord");
    else {
      const Curve& base = mesh.curves[cv.of];
      const double slack = 1e-12 * std::max(1.0, std::abs(base.t_hi - base.t_lo));
      if (cv.t_lo < base.t_lo - slack || cv.t_hi > base.t_hi + slack)
        complain("curve " + std::to_string(c) + ": chord interval exceeds the base curve domain");
    }
  }

  for (int i = 0; i < ne; ++i) {
    const Edge& e = mesh.edges[i];
    const std::string tag = "edge " + std::to_string(i);
    if (e.v0 < 0 || e.v0 >= nv || e.v1 < 0 || e.v1 >= nv) {
      complain(tag + ": vertex id out of range");
      continue;
    }
    if (e.v0 == e.v1) {
      complain(tag + ": endpoints coincide");
      continue;
    }
    if ((mesh.vertices[e.v1] - mesh.vertices[e.v0]).norm() <= 0.0)
      complain(tag + ": zero chord length");
    if (e.curve >= 0) {
      if (e.curve >= nc) {
        complain(tag + ": bound to nonexistent curve " + std::to_string(e.curve));
        continue;
      }
      if (!(e.t0 < e.t1)) complain(tag + ": parameter interval is not increasing");
      const Curve& cv = mesh.curves[e.curve];
      const double slack = 1e-12 * std::max(1.0, std::abs(cv.t_hi - cv.t_lo));
      if (e.t0 < cv.t_lo - slack || e.t1 > cv.t_hi + slack)
        complain(tag + ": parameter interval exceeds the curve domain");
    }
  }

  std::vector<int> forward_uses(ne, 0), backward_uses(ne, 0);
  for (size_t k = 0; k < mesh.elements.size(); ++k) {
    const Element& el = mesh.elements[k];
    const std::string tag = "element " + std::to_string(k);
    if (el.edges.empty()) {
      complain(tag + ": no edges");
      continue;
    }
    if (!(el.kappa > 0.0)) complain(tag + ": nonpositive coefficient");
    bool ids_ok = true;
    for (const ElementEdge& s : el.edges)
      if (s.edge < 0 || s.edge >= ne) {
        complain(tag + ": edge id out of range");
        ids_ok = false;
      }
    if (!ids_ok) continue;

    const int m = static_cast<int>(el.edges.size());
    std::vector<int> starts(m);
    for (int s = 0; s < m; ++s) starts[s] = walk_start_vertex(mesh, el, s);
    for (int s = 0; s < m; ++s)
      if (walk_end_vertex(mesh, el, s) != starts[(s + 1) % m])
        complain(tag + ": boundary walk is not closed at step " + std::to_string(s));
    std::vector<int> sorted = starts;
    std::sort(sorted.begin(), sorted.end());
    if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
      complain(tag + ": repeated vertex in the boundary walk");

    for (const ElementEdge& s : el.edges) (s.reversed ? backward_uses : forward_uses)[s.edge]++;
  }

  for (int i = 0; i < ne; ++i) {
    const int total = forward_uses[i] + backward_uses[i];
    const std::string tag = "edge " + std::to_string(i);
    if (total == 0)
      complain(tag + ": dangling (not referenced by any element)");
    else if (total > 2)
      complain(tag + ": referenced by " + std::to_string(total) + " element sides");
    else if (total == 2 && forward_uses[i] != 1)
      complain(tag + ": interior edge traversed twice in the same direction");
  }

  return issues;
}

void throw_if_issues(const std::vector<std::string>& issues) {
  if (issues.empty()) return;
  std::ostringstream os;
  os << "mesh has " << issues.size() << " structural defect(s):";
  for (const std::string& s : issues) os << "\n  - " << s;
  throw MeshError(os.str());
}

// ccw boundary integral of f(x) dy (or dx): sum over walk steps of
// sign * int f(gamma(t)) gamma'_component(t) dt on the canonical interval.
template <class F>
double boundary_integral(const Mesh& mesh, const Element& el, int component, int pts, F&& f) {
  double acc = 0.0;
  for (const ElementEdge& step : el.edges) {
    const EdgeGeometry geom(mesh, step.edge);
    const Gauss1D rule = gauss_on_interval(geom.t0(), geom.t1(), pts);
    double part = 0.0;
    for (int q = 0; q < rule.nodes.size(); ++q) {
      const CurveSample s = geom.at(rule.nodes[q]);
      part += rule.weights[q] * f(s.position) * s.tangent[component];
    }
    acc += step.reversed ? -part : part;
  }
  return acc;
}

}  // namespace

EdgeGeometry::EdgeGeometry(const Mesh& mesh, int edge_id) {
  const Edge& e = mesh.edges.at(static_cast<size_t>(edge_id));
  a_ = mesh.vertices.at(static_cast<size_t>(e.v0));
  b_ = mesh.vertices.at(static_cast<size_t>(e.v1));
  if (e.curved()) {
    curve_ = &mesh.curves.at(static_cast<size_t>(e.curve));
    t0_ = e.t0;
    t1_ = e.t1;
  }
}

CurveSample EdgeGeometry::at(double t) const {
  if (curve_) return curve_->eval(t);
  CurveSample s;
  s.position = a_ + t * (b_ - a_);
  s.tangent = b_ - a_;
  s.speed = s.tangent.norm();
  return s;
}

double EdgeGeometry::arc_length(int quad_pts) const {
  if (!curved()) return chord_length();
  const Gauss1D rule = gauss_on_interval(t0_, t1_, quad_pts);
  double len = 0.0;
  for (int q = 0; q < rule.nodes.size(); ++q) len += rule.weights[q] * at(rule.nodes[q]).speed;
  return len;
}

int walk_start_vertex(const Mesh& mesh, const Element& el, int step) {
  const ElementEdge& s = el.edges[static_cast<size_t>(step)];
  const Edge& e = mesh.edges[static_cast<size_t>(s.edge)];
  return s.reversed ? e.v1 : e.v0;
}

std::vector<Eigen::Vector2d> chord_polygon(const Mesh& mesh, const Element& el) {
  std::vector<Eigen::Vector2d> poly;
  poly.reserve(el.edges.size());
  for (int s = 0; s < static_cast<int>(el.edges.size()); ++s)
    poly.push_back(mesh.vertices[static_cast<size_t>(walk_start_vertex(mesh, el, s))]);
  return poly;
}

std::pair<Eigen::Vector2d, double> polygon_kernel_chebyshev(
    const std::vector<Eigen::Vector2d>& poly) {
  const int m = static_cast<int>(poly.size());
  if (m < 3) return {Eigen::Vector2d::Zero(), 0.0};

  std::vector<Eigen::Vector2d> n(static_cast<size_t>(m));
  Eigen::VectorXd d(m);
  double scale = 0.0;
  for (int i = 0; i < m; ++i) {
    const Eigen::Vector2d e = poly[static_cast<size_t>((i + 1) % m)] - poly[static_cast<size_t>(i)];
    const double len = e.norm();
    if (len <= 0.0) return {poly[static_cast<size_t>(i)], 0.0};
    n[static_cast<size_t>(i)] = Eigen::Vector2d(e.y(), -e.x()) / len;  // outward for ccw
    d(i) = n[static_cast<size_t>(i)].dot(poly[static_cast<size_t>(i)]);
    scale = std::max(scale, len);
  }
  const double tol = 1e-12 * std::max(1.0, scale);

  auto clearance = [&](const Eigen::Vector2d& x) {
    double r = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) r = std::min(r, d(i) - n[static_cast<size_t>(i)].dot(x));
    return r;
  };

  // Fallback candidate keeps the result meaningful when constraint triples
  // are degenerate (e.g. parallel opposite edges only).
  Eigen::Vector2d centroid = Eigen::Vector2d::Zero();
  for (const Eigen::Vector2d& p : poly) centroid += p;
  centroid /= m;
  Eigen::Vector2d best_x = centroid;
  double best_r = clearance(centroid);

  Eigen::Matrix3d A;
  Eigen::Vector3d rhs;
  for (int i = 0; i < m; ++i)
    for (int j = i + 1; j < m; ++j)
      for (int k = j + 1; k < m; ++k) {
        A << n[static_cast<size_t>(i)].x(), n[static_cast<size_t>(i)].y(), 1.0,
             n[static_cast<size_t>(j)].x(), n[static_cast<size_t>(j)].y(), 1.0,
             n[static_cast<size_t>(k)].x(), n[static_cast<size_t>(k)].y(), 1.0;
        rhs << d(i), d(j), d(k);
        const double det = A.determinant();
        if (std::abs(det) < 1e-14) continue;
        const Eigen::Vector3d sol = A.partialPivLu().solve(rhs);
        const Eigen::Vector2d x(sol[0], sol[1]);
        const double r = sol[2];
        if (r <= best_r) continue;
        if (clearance(x) >= r - tol) {
          best_x = x;
          best_r = r;
        }
      }

  if (best_r <= 0.0) return {best_x, 0.0};
  return {best_x, best_r};
}

double element_area(const Mesh& mesh, const Element& el) {
  return boundary_integral(mesh, el, 1, kGeometryQuadPts,
                           [](const Eigen::Vector2d& p) { return p.x(); });
}

Eigen::Vector2d element_centroid(const Mesh& mesh, const Element& el, double area) {
  const double mx = boundary_integral(mesh, el, 1, kGeometryQuadPts,
                                      [](const Eigen::Vector2d& p) { return 0.5 * p.x() * p.x(); });
  const double my = -boundary_integral(
      mesh, el, 0, kGeometryQuadPts, [](const Eigen::Vector2d& p) { return 0.5 * p.y() * p.y(); });
  return Eigen::Vector2d(mx / area, my / area);
}

double element_diameter(const Mesh& mesh, const Element& el) {
  std::vector<Eigen::Vector2d> pts = chord_polygon(mesh, el);
  for (const ElementEdge& step : el.edges) {
    if (!mesh.edges[static_cast<size_t>(step.edge)].curved()) continue;
    const EdgeGeometry geom(mesh, step.edge);
    for (int s = 1; s <= kDiameterSamplesPerCurvedEdge; ++s) {
      const double t =
          geom.t0() + (geom.t1() - geom.t0()) * s / (kDiameterSamplesPerCurvedEdge + 1.0);
      pts.push_back(geom.at(t).position);
    }
  }
  double diam = 0.0;
  for (size_t i = 0; i < pts.size(); ++i)
    for (size_t j = i + 1; j < pts.size(); ++j) diam = std::max(diam, (pts[j] - pts[i]).norm());
  return diam;
}

void Mesh::finalize() {
  throw_if_issues(structural_issues(*this));

  for (Curve& c : curves) {
    if (c.kind != CurveKind::ChordOf) continue;
    const Curve& base = curves[static_cast<size_t>(c.of)];
    c.p0 = base.eval(c.t_lo).position;
    c.p1 = base.eval(c.t_hi).position;
  }

  std::vector<std::string> issues;
  for (size_t i = 0; i < edges.size(); ++i) {
    const Edge& e = edges[i];
    if (!e.curved()) continue;
    const EdgeGeometry geom(*this, static_cast<int>(i));
    const double d0 = (geom.at(e.t0).position - vertices[static_cast<size_t>(e.v0)]).norm();
    const double d1 = (geom.at(e.t1).position - vertices[static_cast<size_t>(e.v1)]).norm();
    if (d0 > 1e-12 || d1 > 1e-12)
      issues.push_back("edge " + std::to_string(i) +
                       ": curve endpoints disagree with vertices (|gap| = " +
                       std::to_string(std::max(d0, d1)) + ")");
  }
  throw_if_issues(issues);

  for (size_t k = 0; k < elements.size(); ++k) {
    Element& el = elements[k];
    el.area = element_area(*this, el);
    if (!(el.area > 0.0))
      issues.push_back("element " + std::to_string(k) +
                       ": boundary walk is clockwise or degenerate (signed area = " +
                       std::to_string(el.area) + ")");
  }
  throw_if_issues(issues);

  for (Element& el : elements) {
    el.centroid = element_centroid(*this, el, el.area);
    el.diameter = element_diameter(*this, el);
  }

  edge_length.assign(edges.size(), 0.0);
  std::vector<int> uses(edges.size(), 0);
  for (const Element& el : elements)
    for (const ElementEdge& s : el.edges) uses[static_cast<size_t>(s.edge)]++;
  edge_marker.assign(edges.size(), 0);
  for (size_t i = 0; i < edges.size(); ++i) {
    edge_marker[i] = (uses[i] == 1) ? 1 : 0;
    edge_length[i] = EdgeGeometry(*this, static_cast<int>(i)).arc_length(kArcLengthQuadPts);
  }

  finalized = true;
}

double Mesh::mesh_size() const {
  if (!finalized) throw MeshError("mesh_size() requires a finalized mesh");
  double h = 0.0;
  for (const Element& el : elements) h = std::max(h, el.diameter);
  return h;
}

ValidationReport mesh_validate(const Mesh& mesh, double rho) {
  throw_if_issues(structural_issues(mesh));
  if (!mesh.finalized) throw MeshError("finalize() the mesh before geometric validation");

  ValidationReport report;
  report.rho = rho;
  report.min_edge_ratio = std::numeric_limits<double>::infinity();
  report.min_kernel_ratio = std::numeric_limits<double>::infinity();
  report.pass = true;
  for (size_t k = 0; k < mesh.elements.size(); ++k) {
    const Element& el = mesh.elements[k];
    ElementQuality q;
    q.element = static_cast<int>(k);
    double min_chord = std::numeric_limits<double>::infinity();
    for (const ElementEdge& s : el.edges)
      min_chord = std::min(min_chord, EdgeGeometry(mesh, s.edge).chord_length());
    q.edge_ratio = min_chord / el.diameter;
    q.kernel_ratio = polygon_kernel_chebyshev(chord_polygon(mesh, el)).second / el.diameter;
    q.pass = q.edge_ratio >= rho && q.kernel_ratio >= rho;
    report.min_edge_ratio = std::min(report.min_edge_ratio, q.edge_ratio);
    report.min_kernel_ratio = std::min(report.min_kernel_ratio, q.kernel_ratio);
    report.pass = report.pass && q.pass;
    report.elements.push_back(q);
  }
  return report;
}

Mesh strip_curves(const Mesh& mesh) {
  Mesh out = mesh;
  for (Edge& e : out.edges) {
    e.curve = -1;
    e.t0 = 0.0;
    e.t1 = 0.0;
  }
  out.finalized = false;
  out.finalize();
  return out;
}

}  // namespace curvem
