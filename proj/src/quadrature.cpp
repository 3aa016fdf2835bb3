#include "curvem/quadrature.hpp"

#include <cmath>
#include <string>

#include "curvem/basis.hpp"
#include "curvem/errors.hpp"

namespace curvem {

namespace {

double cross2(const Eigen::Vector2d& a, const Eigen::Vector2d& b) {
  return a.x() * b.y() - a.y() * b.x();
}

// Fan rule around a fixed star point; empty result when a Jacobian sign flip
// shows K is not star-shaped with respect to it.
bool try_bulk_rule(const Mesh& mesh, const Element& el, const Eigen::Vector2d& star, int pts_t_min,
                   int pts_s, int curved_extra, BulkRule& out) {
  std::vector<Eigen::Vector2d> points;
  std::vector<double> weights;
  for (const ElementEdge& step : el.edges) {
    const EdgeGeometry geom(mesh, step.edge);
    const double sigma = step.reversed ? -1.0 : 1.0;
    const int pts_t = pts_t_min + (geom.curved() ? curved_extra : 0);
    const Gauss1D trule = gauss_on_interval(geom.t0(), geom.t1(), pts_t);
    const Gauss1D srule = gauss_on_interval(0.0, 1.0, pts_s);
    for (int qt = 0; qt < trule.nodes.size(); ++qt) {
      const CurveSample cs = geom.at(trule.nodes[qt]);
      const double det_t = sigma * cross2(cs.tangent, star - cs.position);
      if (det_t <= 0.0) return false;  // fold: star point sees this arc from outside
      for (int qs = 0; qs < srule.nodes.size(); ++qs) {
        const double s = srule.nodes[qs];
        points.push_back((1.0 - s) * cs.position + s * star);
        weights.push_back(trule.weights[qt] * srule.weights[qs] * (1.0 - s) * det_t);
      }
    }
  }
  out.points = std::move(points);
  out.weights = Eigen::Map<Eigen::VectorXd>(weights.data(), static_cast<long>(weights.size()));
  return true;
}

}  // namespace

EdgeRule edge_rule(const EdgeGeometry& geom, int p) {
  return gauss_on_interval(geom.t0(), geom.t1(), p);
}

double edge_integral(const EdgeGeometry& geom, int p,
                     const std::function<double(const Eigen::Vector2d&)>& f) {
  const EdgeRule rule = edge_rule(geom, p);
  double acc = 0.0;
  for (int q = 0; q < rule.nodes.size(); ++q) {
    const CurveSample cs = geom.at(rule.nodes[q]);
    acc += rule.weights[q] * f(cs.position) * cs.speed;
  }
  return acc;
}

MomentTable monomial_moments_divergence(const Mesh& mesh, const Element& el, int degree,
                                        int pts_straight, int pts_curved) {
  const int dim = mono::dim2(degree);
  const double h = el.diameter;
  const Eigen::Vector2d xc = el.centroid;

  const int min_pts = gauss_points_for_degree(degree + 1);
  if (pts_straight <= 0) pts_straight = min_pts;
  pts_straight = std::max(pts_straight, min_pts);
  if (pts_curved <= 0) pts_curved = min_pts + 4;
  pts_curved = std::max(pts_curved, min_pts);

  // acc[idx(a,b)] accumulates the boundary integral of u^{a+1} v^b dy.
  Eigen::VectorXd acc = Eigen::VectorXd::Zero(dim);
  Eigen::VectorXd upow(degree + 2), vpow(degree + 1);
  for (const ElementEdge& step : el.edges) {
    const EdgeGeometry geom(mesh, step.edge);
    const double sigma = step.reversed ? -1.0 : 1.0;
    const Gauss1D rule =
        gauss_on_interval(geom.t0(), geom.t1(), geom.curved() ? pts_curved : pts_straight);
    for (int q = 0; q < rule.nodes.size(); ++q) {
      const CurveSample cs = geom.at(rule.nodes[q]);
      const double u = (cs.position.x() - xc.x()) / h;
      const double v = (cs.position.y() - xc.y()) / h;
      upow[0] = 1.0;
      for (int a = 1; a <= degree + 1; ++a) upow[a] = upow[a - 1] * u;
      vpow[0] = 1.0;
      for (int b = 1; b <= degree; ++b) vpow[b] = vpow[b - 1] * v;
      const double w = sigma * rule.weights[q] * cs.tangent.y();
      for (int d = 0; d <= degree; ++d)
        for (int b = 0; b <= d; ++b) acc[mono::index(d - b, b)] += w * upow[d - b + 1] * vpow[b];
    }
  }

  MomentTable table;
  table.degree = degree;
  table.mu = Eigen::VectorXd(dim);
  for (int d = 0; d <= degree; ++d)
    for (int b = 0; b <= d; ++b) {
      const int a = d - b;
      table.mu[mono::index(a, b)] = h / (a + 1) * acc[mono::index(a, b)];
    }
  return table;
}

BulkRule bulk_rule(const Mesh& mesh, const Element& el, int exactness_degree,
                   int curved_extra_pts) {
  // Straight patches are bilinear blends: f of degree d makes the (t,s)
  // integrand degree d+1 in each variable.
  const int pts = gauss_points_for_degree(std::max(exactness_degree, 0) + 1);
  BulkRule rule;
  if (try_bulk_rule(mesh, el, el.centroid, pts, pts, curved_extra_pts, rule)) return rule;
  const Eigen::Vector2d incenter = polygon_kernel_chebyshev(chord_polygon(mesh, el)).first;
  if (try_bulk_rule(mesh, el, incenter, pts, pts, curved_extra_pts, rule)) return rule;
  throw MeshError(
      "bulk_rule: element is star-shaped with respect to neither its centroid nor the "
      "chord-polygon incenter");
}

double bulk_integral(const BulkRule& rule,
                     const std::function<double(const Eigen::Vector2d&)>& f) {
  double acc = 0.0;
  for (size_t i = 0; i < rule.points.size(); ++i)
    acc += rule.weights[static_cast<long>(i)] * f(rule.points[i]);
  return acc;
}

}  // namespace curvem
